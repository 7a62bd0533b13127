#include "hopfgal/matrix.hpp"

#include <sstream>

namespace hopfgal {

Vec zero_vec(const Field& f, int n) { return Vec(static_cast<size_t>(n), Scalar::zero(f)); }

Vec unit_vec(const Field& f, int n, int i) {
    Vec v = zero_vec(f, n);
    v[static_cast<size_t>(i)] = Scalar::one(f);
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("vector size mismatch");
    Vec r(a);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("vector size mismatch");
    Vec r(a);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Scalar& c, const Vec& a) {
    Vec r(a);
    for (auto& x : r) x = x * c;
    return r;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

Matrix::Matrix(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {
    if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
}

Matrix Matrix::identity(const Field& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows, int cols) {
    Matrix m(f, static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows_; ++r) {
        if (static_cast<int>(rows[r].size()) != cols) throw Error("row length mismatch");
        for (int c = 0; c < cols; ++c) m.at(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
    }
    return m;
}

Matrix Matrix::from_cols(const Field& f, const std::vector<Vec>& cols, int rows) {
    Matrix m(f, rows, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols_; ++c) {
        if (static_cast<int>(cols[c].size()) != rows) throw Error("column length mismatch");
        for (int r = 0; r < rows; ++r) m.at(r, c) = cols[static_cast<size_t>(c)][static_cast<size_t>(r)];
    }
    return m;
}

Vec Matrix::row(int r) const {
    Vec v;
    v.reserve(static_cast<size_t>(cols_));
    for (int c = 0; c < cols_; ++c) v.push_back(at(r, c));
    return v;
}

Vec Matrix::col(int c) const {
    Vec v;
    v.reserve(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in +");
    Matrix m(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in -");
    Matrix m(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix shape mismatch in *");
    Matrix m(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) m.at(i, j) += a * b;
            }
        }
    return m;
}

Matrix Matrix::operator*(const Scalar& c) const {
    Matrix m(*this);
    for (auto& x : m.data_) x = x * c;
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw Error("matrix/vector size mismatch");
    Vec r = zero_vec(field_, rows_);
    for (int j = 0; j < cols_; ++j) {
        if (v[static_cast<size_t>(j)].is_zero()) continue;
        for (int i = 0; i < rows_; ++i) {
            const Scalar& a = at(i, j);
            if (!a.is_zero()) r[static_cast<size_t>(i)] += a * v[static_cast<size_t>(j)];
        }
    }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (rows_ != o.rows_) throw Error("hstack row mismatch");
    Matrix m(field_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
    }
    return m;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (cols_ != o.cols_) throw Error("vstack column mismatch");
    Matrix m(field_, rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(rows_ + i, j) = o.at(i, j);
    return m;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

Rref rref(const Matrix& m) {
    Rref out;
    out.m = m;
    Matrix& a = out.m;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < a.rows(); ++i)
            if (!a.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(r, j));
        Scalar inv = a.at(r, c).inverse();
        for (int j = c; j < a.cols(); ++j) a.at(r, j) = a.at(r, j) * inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            Scalar f = a.at(i, c);
            for (int j = c; j < a.cols(); ++j) a.at(i, j) = a.at(i, j) - f * a.at(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

int rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vec> kernel_basis(const Matrix& m) {
    Rref rr = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : rr.pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        Vec v = zero_vec(m.field(), m.cols());
        v[static_cast<size_t>(c)] = Scalar::one(m.field());
        for (int i = 0; i < rr.rank; ++i) v[static_cast<size_t>(rr.pivots[static_cast<size_t>(i)])] = -rr.m.at(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw Error("solve: rhs dimension mismatch");
    Matrix aug = m.hstack(Matrix::from_cols(m.field(), {rhs}, m.rows()));
    Rref rr = rref(aug);
    for (int c : rr.pivots)
        if (c == m.cols()) return std::nullopt;  // inconsistent
    Vec x = zero_vec(m.field(), m.cols());
    for (int i = 0; i < rr.rank; ++i) x[static_cast<size_t>(rr.pivots[static_cast<size_t>(i)])] = rr.m.at(i, m.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    Matrix aug = m.hstack(Matrix::identity(m.field(), m.rows()));
    Rref rr = rref(aug);
    if (rr.rank != m.rows()) return std::nullopt;
    for (int i = 0; i < m.rows(); ++i)
        if (rr.pivots[static_cast<size_t>(i)] != i) return std::nullopt;
    Matrix inv(m.field(), m.rows(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j) inv.at(i, j) = rr.m.at(i, m.cols() + j);
    return inv;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Scalar& x = a.at(i, j);
            if (x.is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    const Scalar& y = b.at(k, l);
                    if (!y.is_zero()) m.at(i * b.rows() + k, j * b.cols() + l) = x * y;
                }
        }
    return m;
}

Vec vec_tensor(const Vec& a, const Vec& b) {
    Vec v;
    v.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) v.push_back(x * y);
    return v;
}

}  // namespace hopfgal
