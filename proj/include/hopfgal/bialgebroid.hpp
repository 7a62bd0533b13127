#pragma once

// Left and right bialgebroids. A right bialgebroid is verified through its
// opposite transport (H^op, R, t, s, γ, π), which is a left bialgebroid;
// no separate right-handed axiom list exists in the artifact.

#include "hopfgal/coring.hpp"

namespace hopfgal {

struct RightBialgebroid;

struct LeftBialgebroid {
    Algebra h;
    Algebra l;
    AlgebraMap s;          // L → H homomorphism
    AlgebraMap t;          // L → H antihomomorphism
    Matrix gamma_ambient;  // (dimH²) × dimH
    Matrix pi;             // dimL × dimH

    Bimodule coring_bimodule() const;  // l·x·l' = s(l) t(l') x
    Coring as_coring() const;          // (H, γ, π) over L
    Report verify() const;

    LeftBialgebroid co_opposite() const;  // (H, L^op, t, s, γ^op, π)
    RightBialgebroid opposite() const;    // (H^op, L, t, s, γ, π)

    Vec s_of(int i) const { return s.apply(unit_vec(h.field(), l.dim(), i)); }
    Vec t_of(int i) const { return t.apply(unit_vec(h.field(), l.dim(), i)); }
};

struct RightBialgebroid {
    Algebra h;
    Algebra r;
    AlgebraMap s;          // R → H homomorphism
    AlgebraMap t;          // R → H antihomomorphism
    Matrix gamma_ambient;
    Matrix pi;

    LeftBialgebroid transport() const;  // the opposite left bialgebroid
    Bimodule coring_bimodule() const;   // r·x·r' = x t(r) s(r')
    Coring as_coring() const;           // (H, γ, π) over R
    Coring cop_coring() const;          // (H, γ^op, π) over R^op
    Report verify() const;

    Vec s_of(int i) const { return s.apply(unit_vec(h.field(), r.dim(), i)); }
    Vec t_of(int i) const { return t.apply(unit_vec(h.field(), r.dim(), i)); }
};

Matrix flip_matrix(const Field& f, int dim);  // h⊗h' ↦ h'⊗h on the ambient

}  // namespace hopfgal
