#pragma once

// The left A-dual ring *C of an A-coring, with product
// (fg)(c) = g(c_(1)·f(c_(2))), the embedding a ↦ ε(—)a, and the invariants
// of right *C-modules taken with respect to a grouplike element.

#include "hopfgal/coring.hpp"

namespace hopfgal {

struct DualRing {
    Coring coring;
    HomModule hom;  // basis of *C = left A-linear maps C → A
    Algebra ring;   // structure constants on hom basis
    Matrix embed;   // hom coordinates of i(a) = ε(—)a, dim*C × dimA
    Vec unit_coords;

    int dim() const { return ring.dim(); }
    Matrix as_map(const Vec& ring_coords) const { return hom.from_coords(ring_coords); }
    Vec i_of(const Vec& a) const { return embed.apply(a); }

    Report verify() const;
};

DualRing dual_ring(const Coring& c);

// Right *C-action on A induced by a grouplike: a·f = f(e·a); one matrix per
// hom basis element.
std::vector<Matrix> dual_action_on_base(const DualRing& d, const Vec& g);

// Invariants of a right *C-module given per-basis action matrices:
// {m : m·f = m·i(f(e)) for all f}.
Subspace star_invariants(const DualRing& d, const Vec& g, int mdim, const std::vector<Matrix>& action);

// A^{*C} as a subspace and, when closed, a subalgebra of A.
Subspace a_star_invariants(const DualRing& d, const Vec& g);
Subalgebra a_ring_of_invariants(const DualRing& d, const Vec& g);

// {^*C}^{^*C}: invariants of the right regular *C-module.
Subspace dual_regular_invariants(const DualRing& d, const Vec& g);

}  // namespace hopfgal
