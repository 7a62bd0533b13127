#include "hopfgal/coring.hpp"

namespace hopfgal {

Coring Coring::make(const Algebra& base, const Bimodule& c, Matrix delta_ambient, Matrix counit) {
    Coring k;
    k.base = base;
    k.c = c;
    k.cc = tensor_over(c, c, base);
    k.delta_ambient = std::move(delta_ambient);
    k.counit = std::move(counit);
    if (k.delta_ambient.rows() != c.dim * c.dim || k.delta_ambient.cols() != c.dim)
        throw Error("coring: coproduct lift shape mismatch");
    if (k.counit.rows() != base.dim() || k.counit.cols() != c.dim) throw Error("coring: counit shape mismatch");
    return k;
}

Coring Coring::trivial(const Algebra& a) {
    const Field& f = a.field();
    Matrix delta(f, a.dim() * a.dim(), a.dim());
    // a ↦ a⊗1
    for (int i = 0; i < a.dim(); ++i)
        for (int u = 0; u < a.dim(); ++u) delta.at(i * a.dim() + u, i) = a.unit()[static_cast<size_t>(u)];
    return make(a, Bimodule::regular(a), delta, Matrix::identity(f, a.dim()));
}

QuotientSpace Coring::triple() const {
    std::vector<Vec> rels = balanced_relations(c, c, base);
    return chain_quotient(base.field(), {c.dim, c.dim, c.dim}, {{0, rels}, {1, rels}});
}

// (ε⊗C)Δ contraction: ambient C⊗C → C, c'⊗c'' ↦ ε(c')·c''
static Matrix counit_contract_left(const Coring& k) {
    const Field& f = k.base.field();
    Matrix m(f, k.dim(), k.dim() * k.dim());
    for (int u = 0; u < k.dim(); ++u) {
        Matrix act = k.c.left_action_of(k.counit.col(u));
        for (int w = 0; w < k.dim(); ++w) {
            Vec v = act.col(w);
            for (int r = 0; r < k.dim(); ++r) m.at(r, u * k.dim() + w) = v[static_cast<size_t>(r)];
        }
    }
    return m;
}

// (C⊗ε)Δ contraction: c'⊗c'' ↦ c'·ε(c'')
static Matrix counit_contract_right(const Coring& k) {
    const Field& f = k.base.field();
    Matrix m(f, k.dim(), k.dim() * k.dim());
    for (int w = 0; w < k.dim(); ++w) {
        Matrix act = k.c.right_action_of(k.counit.col(w));
        for (int u = 0; u < k.dim(); ++u) {
            Vec v = act.col(u);
            for (int r = 0; r < k.dim(); ++r) m.at(r, u * k.dim() + w) = v[static_cast<size_t>(r)];
        }
    }
    return m;
}

Report Coring::verify() const {
    Report r("coring");
    r.adopt(c.verify());
    const Field& f = base.field();
    const Matrix proj = cc.q.projection();
    const Matrix delta_q = proj * delta_ambient;

    for (int a = 0; a < base.dim(); ++a) {
        // Δ and ε are A-A bimodule maps
        Matrix outer_left = proj * kron(c.left_act[static_cast<size_t>(a)], Matrix::identity(f, dim()));
        Matrix outer_right = proj * kron(Matrix::identity(f, dim()), c.right_act[static_cast<size_t>(a)]);
        r.check("coproduct-left-linear(" + std::to_string(a) + ")",
                delta_q * c.left_act[static_cast<size_t>(a)] == outer_left * delta_ambient, "");
        r.check("coproduct-right-linear(" + std::to_string(a) + ")",
                delta_q * c.right_act[static_cast<size_t>(a)] == outer_right * delta_ambient, "");
        r.check("counit-left-linear(" + std::to_string(a) + ")",
                counit * c.left_act[static_cast<size_t>(a)] ==
                    base.basis_left_mult(a) * counit, "");
        r.check("counit-right-linear(" + std::to_string(a) + ")",
                counit * c.right_act[static_cast<size_t>(a)] ==
                    base.basis_right_mult(a) * counit, "");
    }

    QuotientSpace t3 = triple();
    Matrix id = Matrix::identity(f, dim());
    Matrix lhs = t3.projection() * kron(delta_ambient, id) * delta_ambient;
    Matrix rhs = t3.projection() * kron(id, delta_ambient) * delta_ambient;
    r.check("coassociativity", lhs == rhs, "");

    r.check("counit-law-left", counit_contract_left(*this) * delta_ambient == id, "");
    r.check("counit-law-right", counit_contract_right(*this) * delta_ambient == id, "");
    return r;
}

Report verify_grouplike(const Coring& c, const Vec& g) {
    Report r("grouplike");
    Vec lhs = c.cc.q.project(c.delta_ambient.apply(g));
    Vec rhs = c.cc.q.project(vec_tensor(g, g));
    r.check("coproduct(g)=g⊗g", lhs == rhs, vec_str(sub(lhs, rhs)));
    Vec eps = c.counit.apply(g);
    r.check("counit(g)=1", eps == c.base.unit(), vec_str(eps));
    return r;
}

std::vector<Vec> find_grouplikes(const Coring& c, const std::vector<Vec>& candidates) {
    std::vector<Vec> found;
    auto push_unique = [&](const Vec& v) {
        for (const auto& w : found)
            if (w == v) return;
        found.push_back(v);
    };
    for (const auto& g : candidates)
        if (verify_grouplike(c, g).ok()) push_unique(g);
    const Field& f = c.base.field();
    if (f.is_prime_field() && c.dim() <= 8) {
        std::int64_t p = f.p;
        std::int64_t total = 1;
        for (int i = 0; i < c.dim(); ++i) total *= p;
        for (std::int64_t code = 0; code < total; ++code) {
            Vec v = zero_vec(f, c.dim());
            std::int64_t rem = code;
            for (int i = 0; i < c.dim(); ++i) {
                v[static_cast<size_t>(i)] = Scalar(f, rem % p);
                rem /= p;
            }
            if (verify_grouplike(c, v).ok()) push_unique(v);
        }
    }
    return found;
}

BalancedTensor Comodule::mc(const Coring& c) const {
    Bimodule cl = Bimodule::left_only(c.base, c.dim(), c.c.left_act);
    return tensor_over(m, cl, c.base);
}

Report comodule_verify(const Coring& c, const Comodule& mod) {
    Report r("comodule");
    const Field& f = c.base.field();
    const int md = mod.m.dim;
    BalancedTensor mc = mod.mc(c);
    Matrix tau_q = mc.q.projection() * mod.tau_ambient;

    for (int a = 0; a < c.base.dim(); ++a) {
        Matrix outer_right = mc.q.projection() * kron(Matrix::identity(f, md), c.c.right_act[static_cast<size_t>(a)]);
        r.check("coaction-right-linear(" + std::to_string(a) + ")",
                tau_q * mod.m.right_act[static_cast<size_t>(a)] == outer_right * mod.tau_ambient, "");
    }

    QuotientSpace t3 = chain_quotient(f, {md, c.dim(), c.dim()},
                                      {{0, balanced_relations(mod.m, Bimodule::left_only(c.base, c.dim(), c.c.left_act), c.base)},
                                       {1, balanced_relations(c.c, c.c, c.base)}});
    Matrix lhs = t3.projection() * kron(mod.tau_ambient, Matrix::identity(f, c.dim())) * mod.tau_ambient;
    Matrix rhs = t3.projection() * kron(Matrix::identity(f, md), c.delta_ambient) * mod.tau_ambient;
    r.check("coassociativity", lhs == rhs, "");

    // counit law: m_{(0)}·ε(m_{(1)}) = m
    Matrix contract(f, md, md * c.dim());
    for (int w = 0; w < c.dim(); ++w) {
        Matrix act = mod.m.right_action_of(c.counit.col(w));
        for (int u = 0; u < md; ++u) {
            Vec v = act.col(u);
            for (int rr = 0; rr < md; ++rr) contract.at(rr, u * c.dim() + w) = v[static_cast<size_t>(rr)];
        }
    }
    r.check("counit-law", contract * mod.tau_ambient == Matrix::identity(f, md), "");
    return r;
}

Subspace comodule_coinvariants(const Coring& c, const Vec& g, const Comodule& mod) {
    const Field& f = c.base.field();
    const int md = mod.m.dim;
    BalancedTensor mc = mod.mc(c);
    // m ↦ m⊗g on the ambient
    Matrix mg(f, md * c.dim(), md);
    for (int u = 0; u < md; ++u)
        for (int w = 0; w < c.dim(); ++w) mg.at(u * c.dim() + w, u) = g[static_cast<size_t>(w)];
    Matrix diff = mc.q.projection() * (mod.tau_ambient - mg);
    return kernel_subspace(diff);
}

}  // namespace hopfgal
