#pragma once

// Morita theory for corings with a grouplike element: the context
// (A^{*C}, *C, A, {^*C}^{^*C}, ν, μ), the Galois-coring check, the
// equivalence harness for its finitely-generated-projective case, and
// Frobenius systems with the context transport A ≅ {^*C}^{^*C}.

#include "hopfgal/dualring.hpp"

namespace hopfgal {

// {a : e·a = a·e}, the coinvariants of A as a comodule of C
Subspace coring_coinvariants(const Coring& c, const Vec& g);

struct MoritaContext {
    Subalgebra ring1;  // B = A^{*C} inside A
    DualRing ring2;    // *C
    Vec grouplike;
    Subspace qspace;        // {^*C}^{^*C} in ring coordinates
    Bimodule bim12;         // A as (B, *C)-bimodule
    Bimodule bim21;         // Q as (*C, B)-bimodule
    BalancedTensor a_q;     // A ⊗_{*C} Q
    BalancedTensor q_a;     // Q ⊗_B A
    LinearMap nu;           // A⊗Q-quotient → B coords
    LinearMap mu;           // Q⊗A-quotient → *C coords
    Report checks;

    Vec q_coords(const Vec& ring_coords) const;   // throws when outside Q
    Vec q_to_ring(const Vec& q_coords) const;
};

MoritaContext build_morita_context(const Coring& c, const Vec& g);

struct GaloisCoringCheck {
    Subalgebra b;
    BalancedTensor aba;  // A ⊗_B A
    LinearMap can;       // → C, a⊗a' ↦ a·g·a'
};

GaloisCoringCheck galois_coring_check(const Coring& c, const Vec& g, const Subalgebra& b);

// A as a one-sided module over a subalgebra
Bimodule base_as_left_module(const Subalgebra& b);
Bimodule base_as_right_module(const Subalgebra& b);

struct Thm24Result {
    bool a = false;  // μ surjective
    bool d = false;  // A projective over B + dual ring anti-isomorphic to _BEnd(A)
    bool e = false;  // A projective over B + Galois coring
    bool consistent = false;
    Report report;
};

Thm24Result thm24_harness(const Coring& c, const Vec& g);

struct FrobeniusSystem {
    Matrix psi;                              // S → A bimodule map
    std::vector<std::pair<Vec, Vec>> dual;   // Σ u_i⊗v_i in S⊗S
};

Report frobenius_verify(const AlgebraMap& i, const FrobeniusSystem& fs);
std::optional<FrobeniusSystem> frobenius_system_find(const AlgebraMap& i, std::uint64_t seed = 1, int attempts = 40);

struct FrobeniusTransport {
    FrobeniusSystem system;
    LinearMap beta;  // A → Q coords, a ↦ (c ↦ Σ v_i[c·(a·u_i(e))])
    Vec lambda;      // ring coords of β(1)
    Report checks;
};

FrobeniusTransport frobenius_context_transport(const MoritaContext& ctx, const FrobeniusSystem& fs);

struct FrobeniusMorita {
    FrobeniusTransport transport;
    BalancedTensor a_t_a;   // A ⊗_{*C} A, second factor structure through β
    BalancedTensor aba;     // A ⊗_B A
    LinearMap nu_prime;     // → B coords
    LinearMap mu_prime;     // → *C coords
    Report checks;          // includes the (ν,μ) ↔ (ν′,μ′) correspondence
};

FrobeniusMorita frobenius_morita_context(const MoritaContext& ctx, const FrobeniusTransport& ft);

// image of μ′ closed under left and right multiplication by *C
bool ideal_image_check(const MoritaContext& ctx, const FrobeniusMorita& fm, Report& report);

}  // namespace hopfgal
