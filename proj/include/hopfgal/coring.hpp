#pragma once

// Corings over an algebra A: an A-A bimodule C with a coproduct into the
// balanced tensor C⊗_A C (stored as ambient lift plus induced map) and a
// counit C → A. Plus grouplike elements, right comodules and coinvariants.

#include "hopfgal/hommod.hpp"

namespace hopfgal {

struct Coring {
    Algebra base;
    Bimodule c;            // A-A bimodule
    BalancedTensor cc;     // C ⊗_A C
    Matrix delta_ambient;  // (dimC·dimC) × dimC
    Matrix counit;         // dimA × dimC

    int dim() const { return c.dim; }
    LinearMap delta() const { return LinearMap(cc.q.projection() * delta_ambient); }

    static Coring make(const Algebra& base, const Bimodule& c, Matrix delta_ambient, Matrix counit);
    static Coring trivial(const Algebra& a);  // C = A, Δ(a) = a⊗1, ε = id

    Report verify() const;

    // C⊗C⊗C with relations on both adjacent pairs
    QuotientSpace triple() const;
};

Report verify_grouplike(const Coring& c, const Vec& g);

// Verify the supplied candidates; over a prime field with dim C ≤ 8 an
// exhaustive search is run as well and the union returned.
std::vector<Vec> find_grouplikes(const Coring& c, const std::vector<Vec>& candidates);

struct Comodule {
    Bimodule m;          // right A-module (left side unused)
    Matrix tau_ambient;  // (m.dim · dimC) × m.dim

    BalancedTensor mc(const Coring& c) const;
};

Report comodule_verify(const Coring& c, const Comodule& m);
Subspace comodule_coinvariants(const Coring& c, const Vec& g, const Comodule& m);

}  // namespace hopfgal
