#include "hopfgal/algebra.hpp"

namespace hopfgal {

Algebra::Algebra(const Field& f, int dim, std::vector<Scalar> constants, Vec unit)
    : field_(f), dim_(dim), constants_(std::move(constants)), unit_(std::move(unit)) {
    if (static_cast<int>(constants_.size()) != dim * dim * dim) throw Error("structure constant count mismatch");
    if (static_cast<int>(unit_.size()) != dim) throw Error("unit vector dimension mismatch");
}

Algebra Algebra::ground_field(const Field& f) {
    return Algebra(f, 1, {Scalar::one(f)}, {Scalar::one(f)});
}

Algebra Algebra::direct_product(const Algebra& a, const Algebra& b) {
    if (a.field() != b.field()) throw Error("direct_product: field mismatch");
    const Field& f = a.field();
    int n = a.dim() + b.dim();
    std::vector<Scalar> c(static_cast<size_t>(n) * n * n, Scalar::zero(f));
    auto put = [&](int i, int j, int k, const Scalar& v) { c[(static_cast<size_t>(i) * n + j) * n + k] = v; };
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (int k = 0; k < a.dim(); ++k) put(i, j, k, a.c(i, j, k));
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j)
            for (int k = 0; k < b.dim(); ++k) put(a.dim() + i, a.dim() + j, a.dim() + k, b.c(i, j, k));
    Vec unit = a.unit();
    for (const auto& x : b.unit()) unit.push_back(x);
    return Algebra(f, n, std::move(c), std::move(unit));
}

Algebra Algebra::matrix_algebra(const Field& f, int n) {
    // basis e_{ij} at index i*n+j; e_{ij}e_{kl} = δ_{jk} e_{il}
    int d = n * n;
    std::vector<Scalar> c(static_cast<size_t>(d) * d * d, Scalar::zero(f));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (j == k) c[(static_cast<size_t>(i * n + j) * d + (k * n + l)) * d + (i * n + l)] = Scalar::one(f);
    Vec unit = zero_vec(f, d);
    for (int i = 0; i < n; ++i) unit[static_cast<size_t>(i * n + i)] = Scalar::one(f);
    return Algebra(f, d, std::move(c), std::move(unit));
}

Vec Algebra::mul(const Vec& a, const Vec& b) const {
    if (static_cast<int>(a.size()) != dim_ || static_cast<int>(b.size()) != dim_)
        throw Error("algebra mul: dimension mismatch");
    Vec r = zero_vec(field_, dim_);
    for (int i = 0; i < dim_; ++i) {
        if (a[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (b[static_cast<size_t>(j)].is_zero()) continue;
            Scalar ab = a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
            for (int k = 0; k < dim_; ++k) {
                const Scalar& s = c(i, j, k);
                if (!s.is_zero()) r[static_cast<size_t>(k)] += ab * s;
            }
        }
    }
    return r;
}

Matrix Algebra::left_mult(const Vec& a) const {
    Matrix m(field_, dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
        if (a[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) {
                const Scalar& s = c(i, j, k);
                if (!s.is_zero()) m.at(k, j) += a[static_cast<size_t>(i)] * s;
            }
    }
    return m;
}

Matrix Algebra::right_mult(const Vec& a) const {
    Matrix m(field_, dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        if (a[static_cast<size_t>(j)].is_zero()) continue;
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) {
                const Scalar& s = c(i, j, k);
                if (!s.is_zero()) m.at(k, i) += a[static_cast<size_t>(j)] * s;
            }
    }
    return m;
}

Matrix Algebra::basis_left_mult(int i) const { return left_mult(unit_vec(field_, dim_, i)); }
Matrix Algebra::basis_right_mult(int i) const { return right_mult(unit_vec(field_, dim_, i)); }

Report Algebra::verify() const {
    Report r("algebra");
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) {
                Vec lhs = mul(mul(unit_vec(field_, dim_, i), unit_vec(field_, dim_, j)), unit_vec(field_, dim_, k));
                Vec rhs = mul(unit_vec(field_, dim_, i), mul(unit_vec(field_, dim_, j), unit_vec(field_, dim_, k)));
                if (lhs != rhs)
                    r.fail("associativity(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")",
                           vec_str(sub(lhs, rhs)));
            }
    for (int i = 0; i < dim_; ++i) {
        Vec e = unit_vec(field_, dim_, i);
        if (mul(unit_, e) != e) r.fail("left-unit(" + std::to_string(i) + ")", vec_str(mul(unit_, e)));
        if (mul(e, unit_) != e) r.fail("right-unit(" + std::to_string(i) + ")", vec_str(mul(e, unit_)));
    }
    if (r.ok()) r.pass("associativity-and-unit");
    return r;
}

Algebra Algebra::opposite() const {
    std::vector<Scalar> con(constants_.size(), Scalar::zero(field_));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                con[(static_cast<size_t>(i) * dim_ + j) * dim_ + k] = c(j, i, k);
    return Algebra(field_, dim_, std::move(con), unit_);
}

bool Algebra::is_commutative() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (c(i, j, k) != c(j, i, k)) return false;
    return true;
}

bool Algebra::operator==(const Algebra& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && constants_ == o.constants_ && unit_ == o.unit_;
}

Report AlgebraMap::verify() const {
    Report r(anti ? "antihomomorphism" : "homomorphism");
    if (m.rows() != dst.dim() || m.cols() != src.dim()) throw Error("algebra map shape mismatch");
    if (apply(src.unit()) != dst.unit()) r.fail("unital", vec_str(apply(src.unit())));
    for (int i = 0; i < src.dim(); ++i)
        for (int j = 0; j < src.dim(); ++j) {
            Vec ei = unit_vec(src.field(), src.dim(), i);
            Vec ej = unit_vec(src.field(), src.dim(), j);
            Vec lhs = apply(src.mul(ei, ej));
            Vec rhs = anti ? dst.mul(apply(ej), apply(ei)) : dst.mul(apply(ei), apply(ej));
            if (lhs != rhs)
                r.fail("multiplicative(" + std::to_string(i) + "," + std::to_string(j) + ")", vec_str(sub(lhs, rhs)));
        }
    if (r.ok()) r.pass("unital-and-multiplicative");
    return r;
}

AlgebraMap identity_map(const Algebra& a) { return AlgebraMap{a, a, Matrix::identity(a.field(), a.dim()), false}; }

AlgebraMap compose(const AlgebraMap& outer, const AlgebraMap& inner) {
    return AlgebraMap{inner.src, outer.dst, outer.m * inner.m, outer.anti != inner.anti};
}

bool commuting_images(const AlgebraMap& s, const AlgebraMap& t) {
    if (!(s.dst == t.dst)) throw Error("commuting_images: target mismatch");
    const Algebra& h = s.dst;
    for (int i = 0; i < s.src.dim(); ++i)
        for (int j = 0; j < t.src.dim(); ++j) {
            Vec a = s.apply(unit_vec(s.src.field(), s.src.dim(), i));
            Vec b = t.apply(unit_vec(t.src.field(), t.src.dim(), j));
            if (h.mul(a, b) != h.mul(b, a)) return false;
        }
    return true;
}

Vec Subalgebra::coords(const Vec& ambient_elt) const {
    auto x = solve(embed, ambient_elt);
    if (!x) throw Error("element is not in the subalgebra");
    return *x;
}

std::variant<Subalgebra, Vec> make_subalgebra(const Algebra& ambient, const Subspace& space) {
    const Field& f = ambient.field();
    const int n = space.dim();
    Matrix embed = space.basis_matrix().transpose();
    if (!space.contains(ambient.unit())) return ambient.unit();
    std::vector<Scalar> constants(static_cast<size_t>(n) * n * n, Scalar::zero(f));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec p = ambient.mul(space.basis_vector(i), space.basis_vector(j));
            if (!space.contains(p)) return p;
            auto coords = solve(embed, p);
            for (int k = 0; k < n; ++k) constants[(static_cast<size_t>(i) * n + j) * n + k] = (*coords)[static_cast<size_t>(k)];
        }
    Subalgebra s;
    s.ambient = ambient;
    s.space = space;
    s.embed = embed;
    s.alg = Algebra(f, n, std::move(constants), *solve(embed, ambient.unit()));
    return s;
}

Subalgebra make_subalgebra_or_throw(const Algebra& ambient, const Subspace& space, const std::string& what) {
    auto r = make_subalgebra(ambient, space);
    if (std::holds_alternative<Vec>(r))
        throw Error(what + ": span is not a unital subalgebra, witness " + vec_str(std::get<Vec>(r)));
    return std::get<Subalgebra>(r);
}

}  // namespace hopfgal
