#include "hopfgal/bialgebroid.hpp"

namespace hopfgal {

Matrix flip_matrix(const Field& f, int dim) {
    Matrix m(f, dim * dim, dim * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m.at(j * dim + i, i * dim + j) = Scalar::one(f);
    return m;
}

Bimodule LeftBialgebroid::coring_bimodule() const {
    Bimodule b;
    b.left_base = l;
    b.right_base = l;
    b.dim = h.dim();
    for (int i = 0; i < l.dim(); ++i) {
        b.left_act.push_back(h.left_mult(s_of(i)));
        b.right_act.push_back(h.left_mult(t_of(i)));
    }
    return b;
}

Coring LeftBialgebroid::as_coring() const { return Coring::make(l, coring_bimodule(), gamma_ambient, pi); }

Report LeftBialgebroid::verify() const {
    Report r("left-bialgebroid");
    {
        Report& sub = r.child("total-algebra");
        sub.adopt(h.verify());
    }
    {
        Report& sub = r.child("base-algebra");
        sub.adopt(l.verify());
    }
    if (s.anti || !t.anti) {
        r.fail("map-flags", "source must be a homomorphism and target an antihomomorphism");
        return r;
    }
    {
        Report& sub = r.child("source-map");
        sub.adopt(s.verify());
    }
    {
        Report& sub = r.child("target-map");
        sub.adopt(t.verify());
    }
    r.check("commuting-images", commuting_images(s, t), "");

    Coring coring = as_coring();
    r.adopt(coring.verify());

    const Field& f = h.field();
    const int d = h.dim();
    const QuotientSpace& hh = coring.cc.q;

    // Takeuchi membership: γ(h) satisfies h₍₁₎t(l)⊗h₍₂₎ = h₍₁₎⊗h₍₂₎s(l)
    {
        std::vector<Matrix> act1, act2;
        Matrix id = Matrix::identity(f, d);
        for (int i = 0; i < l.dim(); ++i) {
            act1.push_back(kron(h.right_mult(t_of(i)), id));
            act2.push_back(kron(id, h.right_mult(s_of(i))));
        }
        Subspace takeuchi = condition_subspace(hh, act1, act2);
        bool ok = true;
        int witness = -1;
        for (int i = 0; i < d; ++i)
            if (!takeuchi.contains(hh.project(gamma_ambient.col(i)))) {
                ok = false;
                witness = i;
                break;
            }
        r.check("coproduct-in-takeuchi-product", ok, ok ? "" : "basis " + std::to_string(witness));
    }

    r.check("coproduct-of-unit", hh.project(gamma_ambient.apply(h.unit())) == hh.project(vec_tensor(h.unit(), h.unit())),
            "");

    {
        bool ok = true;
        std::string witness;
        for (int i = 0; i < d && ok; ++i)
            for (int j = 0; j < d; ++j) {
                Vec gi = gamma_ambient.apply(unit_vec(f, d, i));
                Vec gj = gamma_ambient.apply(unit_vec(f, d, j));
                // componentwise product on the ambient tensor
                Vec prod = zero_vec(f, d * d);
                for (int u1 = 0; u1 < d; ++u1)
                    for (int v1 = 0; v1 < d; ++v1) {
                        const Scalar& x = gi[static_cast<size_t>(u1 * d + v1)];
                        if (x.is_zero()) continue;
                        for (int u2 = 0; u2 < d; ++u2)
                            for (int v2 = 0; v2 < d; ++v2) {
                                const Scalar& y = gj[static_cast<size_t>(u2 * d + v2)];
                                if (y.is_zero()) continue;
                                Vec uu = h.mul(unit_vec(f, d, u1), unit_vec(f, d, u2));
                                Vec vv = h.mul(unit_vec(f, d, v1), unit_vec(f, d, v2));
                                prod = add(prod, scale(x * y, vec_tensor(uu, vv)));
                            }
                    }
                Vec lhs = hh.project(gamma_ambient.apply(h.mul(unit_vec(f, d, i), unit_vec(f, d, j))));
                if (lhs != hh.project(prod)) {
                    ok = false;
                    witness = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
            }
        r.check("coproduct-multiplicative", ok, witness);
    }

    r.check("counit-of-unit", pi.apply(h.unit()) == l.unit(), vec_str(pi.apply(h.unit())));

    {
        bool ok = true;
        std::string witness;
        for (int i = 0; i < d && ok; ++i)
            for (int j = 0; j < d; ++j) {
                Vec mid = pi.apply(h.mul(unit_vec(f, d, i), unit_vec(f, d, j)));
                Vec lhs = pi.apply(h.mul(unit_vec(f, d, i), s.apply(pi.apply(unit_vec(f, d, j)))));
                Vec rhs = pi.apply(h.mul(unit_vec(f, d, i), t.apply(pi.apply(unit_vec(f, d, j)))));
                if (lhs != mid || rhs != mid) {
                    ok = false;
                    witness = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
            }
        r.check("counit-module-identities", ok, witness);
    }
    return r;
}

LeftBialgebroid LeftBialgebroid::co_opposite() const {
    LeftBialgebroid cop;
    cop.h = h;
    cop.l = l.opposite();
    cop.s = AlgebraMap{cop.l, h, t.m, false};  // antihom L→H = hom L^op→H
    cop.t = AlgebraMap{cop.l, h, s.m, true};
    cop.gamma_ambient = flip_matrix(h.field(), h.dim()) * gamma_ambient;
    cop.pi = pi;
    return cop;
}

RightBialgebroid LeftBialgebroid::opposite() const {
    RightBialgebroid op;
    op.h = h.opposite();
    op.r = l;
    op.s = AlgebraMap{l, op.h, t.m, false};  // antihom into H = hom into H^op
    op.t = AlgebraMap{l, op.h, s.m, true};
    op.gamma_ambient = gamma_ambient;
    op.pi = pi;
    return op;
}

LeftBialgebroid RightBialgebroid::transport() const {
    LeftBialgebroid lb;
    lb.h = h.opposite();
    lb.l = r;
    lb.s = AlgebraMap{r, lb.h, t.m, false};
    lb.t = AlgebraMap{r, lb.h, s.m, true};
    lb.gamma_ambient = gamma_ambient;
    lb.pi = pi;
    return lb;
}

Bimodule RightBialgebroid::coring_bimodule() const {
    Bimodule b;
    b.left_base = r;
    b.right_base = r;
    b.dim = h.dim();
    for (int i = 0; i < r.dim(); ++i) {
        b.left_act.push_back(h.right_mult(t_of(i)));
        b.right_act.push_back(h.right_mult(s_of(i)));
    }
    return b;
}

Coring RightBialgebroid::as_coring() const { return Coring::make(r, coring_bimodule(), gamma_ambient, pi); }

Coring RightBialgebroid::cop_coring() const {
    Bimodule b;
    b.left_base = r.opposite();
    b.right_base = r.opposite();
    b.dim = h.dim();
    for (int i = 0; i < r.dim(); ++i) {
        b.left_act.push_back(h.right_mult(s_of(i)));
        b.right_act.push_back(h.right_mult(t_of(i)));
    }
    return Coring::make(r.opposite(), b, flip_matrix(h.field(), h.dim()) * gamma_ambient, pi);
}

Report RightBialgebroid::verify() const { return transport().verify(); }

}  // namespace hopfgal
