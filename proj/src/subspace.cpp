#include "hopfgal/subspace.hpp"

namespace hopfgal {

Subspace Subspace::span(const Field& f, int ambient, const std::vector<Vec>& vectors) {
    Matrix m = Matrix::from_rows(f, vectors, ambient);
    Rref rr = rref(m);
    Subspace s;
    s.basis_ = Matrix(f, rr.rank, ambient);
    for (int i = 0; i < rr.rank; ++i)
        for (int j = 0; j < ambient; ++j) s.basis_.at(i, j) = rr.m.at(i, j);
    return s;
}

Subspace Subspace::full(const Field& f, int ambient) {
    Subspace s;
    s.basis_ = Matrix::identity(f, ambient);
    return s;
}

std::vector<Vec> Subspace::basis() const {
    std::vector<Vec> v;
    for (int i = 0; i < dim(); ++i) v.push_back(basis_.row(i));
    return v;
}

Vec Subspace::reduce(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_dim()) throw Error("subspace reduce: dimension mismatch");
    Vec r = v;
    for (int i = 0; i < dim(); ++i) {
        int lead = -1;
        for (int j = 0; j < ambient_dim(); ++j)
            if (!basis_.at(i, j).is_zero()) {
                lead = j;
                break;
            }
        if (lead < 0) continue;
        const Scalar c = r[static_cast<size_t>(lead)];  // by value: r[lead] is modified below
        if (c.is_zero()) continue;
        for (int j = 0; j < ambient_dim(); ++j) r[static_cast<size_t>(j)] -= c * basis_.at(i, j);
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    std::vector<Vec> vs = basis();
    for (const auto& v : other.basis()) vs.push_back(v);
    return span(basis_.field(), ambient_dim(), vs);
}

Subspace Subspace::intersect(const Subspace& other) const {
    // x in both spans: x = a·U = b·V; solve Uᵀa − Vᵀb = 0.
    if (ambient_dim() != other.ambient_dim()) throw Error("intersect: ambient mismatch");
    const Field& f = basis_.field();
    if (dim() == 0 || other.dim() == 0) return Subspace(f, ambient_dim());
    Matrix sys = basis_.transpose().hstack(other.basis_.transpose() * (-Scalar::one(f)));
    std::vector<Vec> vecs;
    for (const auto& k : kernel_basis(sys)) {
        Vec a(k.begin(), k.begin() + dim());
        Vec x = zero_vec(f, ambient_dim());
        for (int i = 0; i < dim(); ++i)
            if (!a[static_cast<size_t>(i)].is_zero()) x = add(x, scale(a[static_cast<size_t>(i)], basis_vector(i)));
        vecs.push_back(std::move(x));
    }
    return span(f, ambient_dim(), vecs);
}

Subspace Subspace::image_under(const Matrix& m) const {
    std::vector<Vec> vs;
    for (int i = 0; i < dim(); ++i) vs.push_back(m.apply(basis_vector(i)));
    return span(m.field(), m.rows(), vs);
}

std::string Subspace::str() const {
    std::string s = "{";
    for (int i = 0; i < dim(); ++i) {
        if (i) s += ", ";
        s += vec_str(basis_vector(i));
    }
    return s + "}";
}

Subspace kernel_subspace(const Matrix& m) { return Subspace::span(m.field(), m.cols(), kernel_basis(m)); }

Subspace image_subspace(const Matrix& m) {
    std::vector<Vec> cols;
    for (int c = 0; c < m.cols(); ++c) cols.push_back(m.col(c));
    return Subspace::span(m.field(), m.rows(), cols);
}

}  // namespace hopfgal
