#include "hopfgal/tensor.hpp"

namespace hopfgal {

std::vector<Vec> balanced_relations(const Bimodule& m, const Bimodule& n, const Algebra& a) {
    if (!(m.right_base == a) || !(n.left_base == a)) throw Error("balanced_relations: base mismatch");
    const Field& f = a.field();
    const int ambient = m.dim * n.dim;
    std::vector<Vec> rels;
    rels.reserve(static_cast<size_t>(m.dim) * n.dim * a.dim());
    for (int k = 0; k < a.dim(); ++k) {
        const Matrix& ra = m.right_act[static_cast<size_t>(k)];
        const Matrix& la = n.left_act[static_cast<size_t>(k)];
        for (int i = 0; i < m.dim; ++i)
            for (int j = 0; j < n.dim; ++j) {
                Vec r = zero_vec(f, ambient);
                for (int u = 0; u < m.dim; ++u) {
                    const Scalar& s = ra.at(u, i);
                    if (!s.is_zero()) r[static_cast<size_t>(u * n.dim + j)] += s;
                }
                for (int v = 0; v < n.dim; ++v) {
                    const Scalar& s = la.at(v, j);
                    if (!s.is_zero()) r[static_cast<size_t>(i * n.dim + v)] -= s;
                }
                if (!is_zero_vec(r)) rels.push_back(std::move(r));
            }
    }
    return rels;
}

BalancedTensor tensor_over(const Bimodule& m, const Bimodule& n, const Algebra& a) {
    BalancedTensor t;
    t.left_factor = m;
    t.right_factor = n;
    t.middle = a;
    t.q = QuotientSpace::of(a.field(), m.dim * n.dim, balanced_relations(m, n, a));
    return t;
}

QuotientSpace chain_quotient(const Field& f, const std::vector<int>& dims,
                             const std::vector<std::pair<int, std::vector<Vec>>>& pair_relations) {
    const int n = static_cast<int>(dims.size());
    std::vector<int> stride(static_cast<size_t>(n), 1);
    for (int i = n - 2; i >= 0; --i) stride[static_cast<size_t>(i)] = stride[static_cast<size_t>(i + 1)] * dims[static_cast<size_t>(i + 1)];
    int ambient = n == 0 ? 1 : stride[0] * dims[0];

    std::vector<Vec> rels;
    for (const auto& [s, pr] : pair_relations) {
        if (s < 0 || s + 1 >= n) throw Error("chain_quotient: bad slot");
        // enumerate assignments of the remaining slots
        std::vector<int> other;
        for (int i = 0; i < n; ++i)
            if (i != s && i != s + 1) other.push_back(i);
        int combos = 1;
        for (int i : other) combos *= dims[static_cast<size_t>(i)];
        for (const Vec& r : pr) {
            for (int c = 0; c < combos; ++c) {
                int base = 0, rem = c;
                for (int i : other) {
                    base += (rem % dims[static_cast<size_t>(i)]) * stride[static_cast<size_t>(i)];
                    rem /= dims[static_cast<size_t>(i)];
                }
                Vec big = zero_vec(f, ambient);
                for (int a = 0; a < dims[static_cast<size_t>(s)]; ++a)
                    for (int b = 0; b < dims[static_cast<size_t>(s + 1)]; ++b) {
                        const Scalar& x = r[static_cast<size_t>(a * dims[static_cast<size_t>(s + 1)] + b)];
                        if (!x.is_zero())
                            big[static_cast<size_t>(base + a * stride[static_cast<size_t>(s)] + b * stride[static_cast<size_t>(s + 1)])] = x;
                    }
                rels.push_back(std::move(big));
            }
        }
    }
    return QuotientSpace::of(f, ambient, rels);
}

Bimodule BalancedTensor::as_bimodule() const {
    Bimodule b;
    b.left_base = left_factor.left_base;
    b.right_base = right_factor.right_base;
    b.dim = q.dim();
    const Field& f = middle.field();
    Matrix idm = Matrix::identity(f, left_factor.dim);
    Matrix idn = Matrix::identity(f, right_factor.dim);
    for (int i = 0; i < b.left_base.dim(); ++i)
        b.left_act.push_back(
            induce_or_throw(kron(left_factor.left_act[static_cast<size_t>(i)], idn), q, q, "outer left action").matrix());
    for (int i = 0; i < b.right_base.dim(); ++i)
        b.right_act.push_back(
            induce_or_throw(kron(idm, right_factor.right_act[static_cast<size_t>(i)]), q, q, "outer right action").matrix());
    return b;
}

Subspace condition_subspace(const QuotientSpace& q, const std::vector<Matrix>& ambient_act1,
                            const std::vector<Matrix>& ambient_act2) {
    if (ambient_act1.size() != ambient_act2.size()) throw Error("condition_subspace: action count mismatch");
    const Field& f = q.field();
    Matrix stacked(f, 0, q.dim());
    for (size_t l = 0; l < ambient_act1.size(); ++l) {
        Matrix a1 = induce_or_throw(ambient_act1[l], q, q, "condition action 1").matrix();
        Matrix a2 = induce_or_throw(ambient_act2[l], q, q, "condition action 2").matrix();
        stacked = stacked.vstack(a1 - a2);
    }
    return kernel_subspace(stacked);
}

TakeuchiProduct takeuchi_product(const Algebra& h, const AlgebraMap& s, const AlgebraMap& t, const Bimodule& m) {
    const Field& f = h.field();
    const Algebra& l = s.src;
    if (!(m.left_base == l) || !(m.right_base == l)) throw Error("takeuchi_product: M must be an L-L bimodule");
    std::vector<Matrix> upper;  // H^L: h·l = h s(l)
    for (int i = 0; i < l.dim(); ++i) upper.push_back(h.right_mult(s.apply(unit_vec(f, l.dim(), i))));
    Bimodule hl = Bimodule::right_only(l, h.dim(), upper);
    Bimodule mleft = Bimodule::left_only(l, m.dim, m.left_act);
    TakeuchiProduct tp;
    tp.tensor = tensor_over(hl, mleft, l);
    Matrix idh = Matrix::identity(f, h.dim());
    Matrix idm = Matrix::identity(f, m.dim);
    std::vector<Matrix> act1, act2;
    for (int i = 0; i < l.dim(); ++i) {
        act1.push_back(kron(idh, m.right_act[static_cast<size_t>(i)]));
        act2.push_back(kron(h.right_mult(t.apply(unit_vec(f, l.dim(), i))), idm));
    }
    tp.subspace = condition_subspace(tp.tensor.q, act1, act2);
    return tp;
}

}  // namespace hopfgal
