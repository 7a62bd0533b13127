#pragma once

// Hopf algebroids: a compatible left/right bialgebroid pair with an
// antipode, plus module algebras, integrals, nondegeneracy, and smash
// products with their Frobenius systems.

#include "hopfgal/bialgebroid.hpp"
#include "hopfgal/morita.hpp"

namespace hopfgal {

struct HopfAlgebroidData {
    LeftBialgebroid hl;
    RightBialgebroid hr;
    Matrix antipode;

    const Algebra& total() const { return hl.h; }
    Vec s_applied(const Vec& x) const { return antipode.apply(x); }

    Report verify() const;
    Classification antipode_classify() const { return classify_matrix(antipode); }

    Report base_anti_isomorphism_check() const;
    Report antipode_coring_morphism_check() const;

    // fgp status of H^R, ^RH, H_L and ₗH
    Report fgp_report() const;
};

// Coring morphism (f, σ): σ-bilinearity, counit and coproduct compatibility.
Report coring_morphism_check(const Coring& src, const Coring& dst, const Matrix& f, const Matrix& sigma,
                             const std::string& name);

struct ModuleAlgebra {
    Algebra a;
    std::vector<Matrix> act;  // one matrix per H basis element

    Matrix act_of(const Vec& hvec) const;
};

// Monoid in the module category of the left (right) bialgebroid.
Report verify_left_module_algebra(const LeftBialgebroid& b, const ModuleAlgebra& ma);
Report verify_right_module_algebra(const RightBialgebroid& b, const ModuleAlgebra& ma);
Subspace left_module_invariants(const LeftBialgebroid& b, const ModuleAlgebra& ma, Report* closure = nullptr);
Subspace right_module_invariants(const RightBialgebroid& b, const ModuleAlgebra& ma, Report* closure = nullptr);

// L (resp. R) as the monoidal-unit module algebra: h·l = π(h s(l)),
// r·h = π(t(r) h).
ModuleAlgebra unit_module_algebra_left(const LeftBialgebroid& b);
ModuleAlgebra unit_module_algebra_right(const RightBialgebroid& b);

// Integrals: ℒ(H) = { ℓ : hℓ = s_L(π_L(h))ℓ }
Subspace left_integrals(const HopfAlgebroidData& hd);
// { x : h x⁽¹⁾⊗S(x⁽²⁾) = x⁽¹⁾⊗S(x⁽²⁾) h for all h }
Subspace scholium_space(const HopfAlgebroidData& hd);
bool scholium_check(const HopfAlgebroidData& hd, const Vec& ell);

struct NondegeneracyMaps {
    HomModule h_star;   // Hom_R(H^R, R)
    HomModule star_h;   // _RHom(^RH, R)
    HomModule h_lower;  // Hom_L(H_L, L)
    HomModule lower_h;  // _LHom(ₗH, L)
    LinearMap ell_r, r_ell, ell_l, l_ell;
    bool nondegenerate = false;
    Report report;
};

NondegeneracyMaps nondegeneracy_maps(const HopfAlgebroidData& hd, const Vec& ell);

struct IntegralSearch {
    std::optional<Vec> found;
    bool exhaustive = false;  // search space fully enumerated
    int tried = 0;
};

IntegralSearch find_nondegenerate_integral(const HopfAlgebroidData& hd, std::uint64_t seed = 1, int attempts = 64);

// ρ* = ℓ_L⁻¹(1_H) in H_* coordinates; requires ℓ_L bijective
Vec rho_star(const HopfAlgebroidData& hd, const Vec& ell, const NondegeneracyMaps& nm);

struct SmashAlgebra {
    QuotientSpace space;  // quotient of H⊗A by t_L(l)h⊗a − h⊗s_L(l)·a
    Algebra alg;
    Matrix embed_a;  // A → smash, a ↦ 1⋉a
    Matrix embed_h;  // H → smash, h ↦ h⋉1
    Report report;
};

SmashAlgebra smash_left(const HopfAlgebroidData& hd, const ModuleAlgebra& ma);

struct SmashFrobenius {
    FrobeniusSystem system;  // Φ(h⋉a) = ρ*(h)·a with dual basis (S(ℓ⁽²⁾)⋉1)⊗(ℓ⁽¹⁾⋉1)
    Report report;
};

SmashFrobenius smash_frobenius(const HopfAlgebroidData& hd, const ModuleAlgebra& ma, const SmashAlgebra& sm,
                               const Vec& ell);

}  // namespace hopfgal
