#include "hopfgal/hommod.hpp"

namespace hopfgal {

std::optional<Vec> HomModule::coords(const Matrix& f) const {
    const Field& field = source.left_base.field();
    const int rows = target.dim * source.dim;
    Matrix sys(field, rows, dim());
    for (int b = 0; b < dim(); ++b)
        for (int r = 0; r < target.dim; ++r)
            for (int c = 0; c < source.dim; ++c) sys.at(r * source.dim + c, b) = basis[static_cast<size_t>(b)].at(r, c);
    Vec rhs(static_cast<size_t>(rows), Scalar::zero(field));
    for (int r = 0; r < target.dim; ++r)
        for (int c = 0; c < source.dim; ++c) rhs[static_cast<size_t>(r * source.dim + c)] = f.at(r, c);
    return solve(sys, rhs);
}

Matrix HomModule::from_coords(const Vec& c) const {
    const Field& field = source.left_base.field();
    Matrix f = Matrix::zero(field, target.dim, source.dim);
    for (size_t b = 0; b < basis.size(); ++b)
        if (!c[b].is_zero()) f = f + basis[b] * c[b];
    return f;
}

HomModule hom_module(const Bimodule& m, const Bimodule& n, Side side) {
    const Algebra& base = side == Side::right ? m.right_base : m.left_base;
    const Algebra& base_n = side == Side::right ? n.right_base : n.left_base;
    if (!(base == base_n)) throw Error("hom_module: base mismatch on chosen side");
    const Field& f = base.field();
    const int ns = m.dim, nt = n.dim;
    const int unknowns = nt * ns;  // F[r][c] at r*ns + c
    std::vector<Vec> rows;
    for (int k = 0; k < base.dim(); ++k) {
        const Matrix& am = side == Side::right ? m.right_act[static_cast<size_t>(k)] : m.left_act[static_cast<size_t>(k)];
        const Matrix& an = side == Side::right ? n.right_act[static_cast<size_t>(k)] : n.left_act[static_cast<size_t>(k)];
        // F·am − an·F = 0
        for (int r = 0; r < nt; ++r)
            for (int c = 0; c < ns; ++c) {
                Vec row = zero_vec(f, unknowns);
                for (int v = 0; v < ns; ++v) row[static_cast<size_t>(r * ns + v)] += am.at(v, c);
                for (int u = 0; u < nt; ++u) row[static_cast<size_t>(u * ns + c)] -= an.at(r, u);
                if (!is_zero_vec(row)) rows.push_back(std::move(row));
            }
    }
    HomModule h;
    h.source = m;
    h.target = n;
    h.side = side;
    Matrix sys = Matrix::from_rows(f, rows, unknowns);
    for (const Vec& v : kernel_basis(sys)) {
        Matrix fm(f, nt, ns);
        for (int r = 0; r < nt; ++r)
            for (int c = 0; c < ns; ++c) fm.at(r, c) = v[static_cast<size_t>(r * ns + c)];
        h.basis.push_back(std::move(fm));
    }
    return h;
}

std::optional<DualBasis> fgp_check(const Bimodule& m, Side side) {
    const Algebra& base = side == Side::right ? m.right_base : m.left_base;
    const Field& f = base.field();
    const int n = m.dim, d = base.dim();
    if (n == 0) return DualBasis{};
    // unknowns: ξ_i (d×n) for i = 0..n−1, index (i, q, c) ↦ (i*d + q)*n + c
    const int unknowns = n * d * n;
    auto idx = [&](int i, int q, int c) { return (i * d + q) * n + c; };
    std::vector<Vec> rows;
    std::vector<Scalar> rhs;
    // side-linearity of each ξ_i: ξ_i·act^M_k = act^base_k·ξ_i
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < d; ++k) {
            const Matrix& am = side == Side::right ? m.right_act[static_cast<size_t>(k)] : m.left_act[static_cast<size_t>(k)];
            const Matrix& ab = side == Side::right ? base.basis_right_mult(k) : base.basis_left_mult(k);
            for (int q = 0; q < d; ++q)
                for (int c = 0; c < n; ++c) {
                    Vec row = zero_vec(f, unknowns);
                    for (int v = 0; v < n; ++v) row[static_cast<size_t>(idx(i, q, v))] += am.at(v, c);
                    for (int u = 0; u < d; ++u) row[static_cast<size_t>(idx(i, u, c))] -= ab.at(q, u);
                    rows.push_back(std::move(row));
                    rhs.push_back(Scalar::zero(f));
                }
        }
    // dual-basis identity on each basis vector e_j: Σ_i x_i·ξ_i(e_j) = e_j
    // (left side: Σ_i ξ_i(e_j)·x_i, i.e. coefficients act from the left)
    for (int j = 0; j < n; ++j)
        for (int out = 0; out < n; ++out) {
            Vec row = zero_vec(f, unknowns);
            for (int i = 0; i < n; ++i)
                for (int q = 0; q < d; ++q) {
                    const Matrix& act = side == Side::right ? m.right_act[static_cast<size_t>(q)] : m.left_act[static_cast<size_t>(q)];
                    row[static_cast<size_t>(idx(i, q, j))] += act.at(out, i);
                }
            rows.push_back(std::move(row));
            rhs.push_back(out == j ? Scalar::one(f) : Scalar::zero(f));
        }
    Matrix sys = Matrix::from_rows(f, rows, unknowns);
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    DualBasis db;
    for (int i = 0; i < n; ++i) {
        db.generators.push_back(unit_vec(f, n, i));
        Matrix xi(f, d, n);
        for (int q = 0; q < d; ++q)
            for (int c = 0; c < n; ++c) xi.at(q, c) = (*sol)[static_cast<size_t>(idx(i, q, c))];
        db.functionals.push_back(std::move(xi));
    }
    return db;
}

}  // namespace hopfgal
