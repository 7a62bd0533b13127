#include "hopfgal/dualring.hpp"

namespace hopfgal {

// (fg)(c) = g(c_(1)·f(c_(2))) on basis elements of *C
static Matrix dual_product_map(const Coring& c, const Matrix& f, const Matrix& g) {
    const Field& field = c.base.field();
    const int d = c.dim();
    Matrix out(field, c.base.dim(), d);
    for (int i = 0; i < d; ++i) {
        Vec dd = c.delta_ambient.col(i);
        Vec val = zero_vec(field, c.base.dim());
        for (int u = 0; u < d; ++u)
            for (int v = 0; v < d; ++v) {
                const Scalar& coeff = dd[static_cast<size_t>(u * d + v)];
                if (coeff.is_zero()) continue;
                Vec fv = f.apply(unit_vec(field, d, v));          // f(c_(2)) ∈ A
                Vec moved = c.c.right_action_of(fv).apply(unit_vec(field, d, u));
                val = add(val, scale(coeff, g.apply(moved)));
            }
        for (int r = 0; r < c.base.dim(); ++r) out.at(r, i) = val[static_cast<size_t>(r)];
    }
    return out;
}

DualRing dual_ring(const Coring& c) {
    DualRing d;
    d.coring = c;
    Bimodule cl = Bimodule::left_only(c.base, c.dim(), c.c.left_act);
    d.hom = hom_module(cl, Bimodule::left_only(c.base, c.base.dim(),
                                               [&] {
                                                   std::vector<Matrix> acts;
                                                   for (int i = 0; i < c.base.dim(); ++i) acts.push_back(c.base.basis_left_mult(i));
                                                   return acts;
                                               }()),
                       Side::left);
    const Field& f = c.base.field();
    const int n = d.hom.dim();
    std::vector<Scalar> constants(static_cast<size_t>(n) * n * n, Scalar::zero(f));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Matrix prod = dual_product_map(c, d.hom.basis[static_cast<size_t>(a)], d.hom.basis[static_cast<size_t>(b)]);
            auto coords = d.hom.coords(prod);
            if (!coords) throw Error("dual ring product does not close in the hom basis");
            for (int k = 0; k < n; ++k) constants[(static_cast<size_t>(a) * n + b) * n + k] = (*coords)[static_cast<size_t>(k)];
        }
    auto unit = d.hom.coords(c.counit);
    if (!unit) throw Error("coring counit is not left A-linear");
    d.unit_coords = *unit;
    d.ring = Algebra(f, n, std::move(constants), d.unit_coords);
    d.embed = Matrix(f, n, c.base.dim());
    for (int j = 0; j < c.base.dim(); ++j) {
        Matrix ia = c.base.right_mult(unit_vec(f, c.base.dim(), j)) * c.counit;  // ε(—)·a
        auto coords = d.hom.coords(ia);
        if (!coords) throw Error("embedding A → *C does not land in the hom basis");
        for (int r = 0; r < n; ++r) d.embed.at(r, j) = (*coords)[static_cast<size_t>(r)];
    }
    return d;
}

Report DualRing::verify() const {
    Report r("dual-ring");
    r.adopt(ring.verify());
    AlgebraMap i{coring.base, ring, embed, false};
    Report ir = i.verify();
    Report& sub = r.child("embedding");
    sub.check("algebra-homomorphism", ir.ok(), ir.first_failure());
    return r;
}

std::vector<Matrix> dual_action_on_base(const DualRing& d, const Vec& g) {
    const Field& f = d.coring.base.field();
    const int ad = d.coring.base.dim();
    std::vector<Matrix> acts;
    for (int b = 0; b < d.dim(); ++b) {
        Matrix m(f, ad, ad);
        for (int j = 0; j < ad; ++j) {
            Vec ga = d.coring.c.right_action_of(unit_vec(f, ad, j)).apply(g);  // e·a_j
            Vec val = d.hom.basis[static_cast<size_t>(b)].apply(ga);
            for (int rr = 0; rr < ad; ++rr) m.at(rr, j) = val[static_cast<size_t>(rr)];
        }
        acts.push_back(std::move(m));
    }
    return acts;
}

Subspace star_invariants(const DualRing& d, const Vec& g, int mdim, const std::vector<Matrix>& action) {
    const Field& f = d.coring.base.field();
    Matrix stacked(f, 0, mdim);
    for (int b = 0; b < d.dim(); ++b) {
        // i(f_b(e)) as an element of *C
        Vec fbg = d.hom.basis[static_cast<size_t>(b)].apply(g);
        Vec chi = d.embed.apply(fbg);
        Matrix rhs(f, mdim, mdim);
        for (int k = 0; k < d.dim(); ++k)
            if (!chi[static_cast<size_t>(k)].is_zero()) rhs = rhs + action[static_cast<size_t>(k)] * chi[static_cast<size_t>(k)];
        stacked = stacked.vstack(action[static_cast<size_t>(b)] - rhs);
    }
    return kernel_subspace(stacked);
}

Subspace a_star_invariants(const DualRing& d, const Vec& g) {
    return star_invariants(d, g, d.coring.base.dim(), dual_action_on_base(d, g));
}

Subalgebra a_ring_of_invariants(const DualRing& d, const Vec& g) {
    return make_subalgebra_or_throw(d.coring.base, a_star_invariants(d, g), "A^{*C}");
}

Subspace dual_regular_invariants(const DualRing& d, const Vec& g) {
    std::vector<Matrix> regular;
    for (int b = 0; b < d.dim(); ++b) regular.push_back(d.ring.basis_right_mult(b));
    return star_invariants(d, g, d.dim(), regular);
}

}  // namespace hopfgal
