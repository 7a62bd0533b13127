#include "doctest.h"
#include "hopfgal/linmap.hpp"
#include "hopfgal/quotient.hpp"
#include "hopfgal/rng.hpp"

using namespace hopfgal;

namespace {

Matrix random_matrix(Rng& rng, const Field& f, int rows, int cols, int span = 5) {
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (f.is_prime_field())
                m.at(i, j) = Scalar(f, static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(f.p))));
            else
                m.at(i, j) = Scalar(f, static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(2 * span + 1))) - span);
        }
    return m;
}

}  // namespace

TEST_CASE("scalar arithmetic canonical forms") {
    Field q = Field::rationals();
    Scalar a(q, 2, 4);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    CHECK((a + a).is_one());
    CHECK((Scalar(q, -3, -6)).str() == "1/2");
    CHECK(Scalar(q, 3, -6).str() == "-1/2");

    Field f5 = Field::prime(5);
    Scalar b(f5, 7);
    CHECK(b.str() == "2");
    CHECK((b.inverse() * b).is_one());
    CHECK(Scalar(f5, 1, 2).str() == "3");  // 1/2 = 3 mod 5
    CHECK_THROWS_AS(Field::prime(6), Error);
    CHECK_THROWS_AS(Scalar(q, 1) + Scalar(f5, 1), Error);
}

TEST_CASE("rref matches spec examples") {
    Field q = Field::rationals();
    SUBCASE("0x0 matrix") {
        Rref rr = rref(Matrix(q, 0, 0));
        CHECK(rr.rank == 0);
        CHECK(rr.pivots.empty());
    }
    SUBCASE("identity over F2") {
        Field f2 = Field::prime(2);
        Rref rr = rref(Matrix::identity(f2, 3));
        CHECK(rr.rank == 3);
        CHECK(rr.pivots == std::vector<int>{0, 1, 2});
        CHECK(rr.m == Matrix::identity(f2, 3));
    }
    SUBCASE("rank-1 matrix over Q") {
        // hand row-reduction: [[1,2],[2,4]] -> [[1,2],[0,0]]
        Matrix m(q, 2, 2);
        m.at(0, 0) = Scalar(q, 1);
        m.at(0, 1) = Scalar(q, 2);
        m.at(1, 0) = Scalar(q, 2);
        m.at(1, 1) = Scalar(q, 4);
        Rref rr = rref(m);
        CHECK(rr.rank == 1);
        CHECK(rr.pivots == std::vector<int>{0});
        CHECK(rr.m.at(0, 1) == Scalar(q, 2));
    }
}

TEST_CASE("kernel_basis matches spec examples") {
    Field q = Field::rationals();
    Field f2 = Field::prime(2);
    CHECK(kernel_basis(Matrix::identity(q, 4)).empty());
    auto kb = kernel_basis(Matrix(q, 2, 3));
    REQUIRE(kb.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(kb[static_cast<size_t>(i)] == unit_vec(q, 3, i));
    // [[1,1]] over F2: enumerate all 4 vectors of F2^2 -> null space {(0,0),(1,1)}
    Matrix m(f2, 1, 2);
    m.at(0, 0) = Scalar::one(f2);
    m.at(0, 1) = Scalar::one(f2);
    auto kb2 = kernel_basis(m);
    REQUIRE(kb2.size() == 1);
    CHECK(kb2[0] == Vec{Scalar::one(f2), Scalar::one(f2)});
}

TEST_CASE("classify matches spec examples") {
    Field q = Field::rationals();
    auto id = classify_matrix(Matrix::identity(q, 3));
    CHECK(id.bijective());
    CHECK(*id.inv == Matrix::identity(q, 3));

    Matrix incl(q, 2, 1);
    incl.at(0, 0) = Scalar::one(q);
    auto ci = classify_matrix(incl);
    CHECK(ci.injective);
    CHECK_FALSE(ci.surjective);

    Field f2 = Field::prime(2);
    Matrix two(f2, 1, 1);
    two.at(0, 0) = Scalar(f2, 2);  // = 0 in F2
    auto ct = classify_matrix(two);
    CHECK_FALSE(ct.injective);
    CHECK_FALSE(ct.surjective);
    CHECK(ct.label() == "neither");
}

TEST_CASE("solve matches spec examples") {
    Field q = Field::rationals();
    Matrix id = Matrix::identity(q, 3);
    Vec v{Scalar(q, 5), Scalar(q, -1), Scalar(q, 7, 3)};
    CHECK(*solve(id, v) == v);

    Matrix m(q, 1, 2);
    m.at(0, 0) = Scalar::one(q);
    m.at(0, 1) = Scalar::one(q);
    CHECK(*solve(m, {Scalar::one(q)}) == Vec{Scalar::one(q), Scalar::zero(q)});

    Matrix z(q, 1, 1);
    CHECK_FALSE(solve(z, {Scalar::one(q)}).has_value());
}

TEST_CASE("kernel invariants over random matrices") {
    Rng rng(7);
    for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(5)}) {
        for (int iter = 0; iter < 25; ++iter) {
            int rows = static_cast<int>(rng.below(5));
            int cols = static_cast<int>(rng.below(5));
            Matrix m = random_matrix(rng, f, rows, cols);
            int r = rank(m);
            CHECK(r == rank(m.transpose()));
            CHECK(r + static_cast<int>(kernel_basis(m).size()) == cols);
            // rref idempotent
            Rref rr = rref(m);
            CHECK(rref(rr.m).m == rr.m);
            // classify stable under composition with bijections
            Matrix b = random_matrix(rng, f, rows, rows);
            if (classify_matrix(b).bijective()) {
                auto c1 = classify_matrix(m);
                auto c2 = classify_matrix(b * m);
                CHECK(c1.injective == c2.injective);
                CHECK(c1.surjective == c2.surjective);
            }
        }
    }
}

TEST_CASE("kernel_basis spans the enumerated null space over F2, dims <= 4") {
    Field f2 = Field::prime(2);
    Rng rng(11);
    for (int iter = 0; iter < 30; ++iter) {
        int rows = 1 + static_cast<int>(rng.below(4));
        int cols = 1 + static_cast<int>(rng.below(4));
        Matrix m = random_matrix(rng, f2, rows, cols);
        Subspace span = kernel_subspace(m);
        // exhaustive enumeration oracle
        int count = 0;
        for (int mask = 0; mask < (1 << cols); ++mask) {
            Vec v = zero_vec(f2, cols);
            for (int j = 0; j < cols; ++j)
                if (mask & (1 << j)) v[static_cast<size_t>(j)] = Scalar::one(f2);
            bool in_kernel = is_zero_vec(m.apply(v));
            CHECK(in_kernel == span.contains(v));
            if (in_kernel) ++count;
        }
        CHECK(count == (1 << span.dim()));
    }
}

TEST_CASE("quotient projection and section") {
    Field q = Field::rationals();
    // Q^3 / span{(1,1,0)}: free columns {1,2}
    QuotientSpace qs = QuotientSpace::of(q, 3, {{Scalar(q, 1), Scalar(q, 1), Scalar(q, 0)}});
    CHECK(qs.dim() == 2);
    CHECK(qs.projection() * qs.section() == Matrix::identity(q, 2));
    Vec x{Scalar(q, 1), Scalar(q, 0), Scalar(q, 0)};
    Vec y{Scalar(q, 0), Scalar(q, -1), Scalar(q, 0)};
    CHECK(qs.project(x) == qs.project(y));

    Matrix p = qs.section() * qs.projection();
    CHECK(p * p == p);
    CHECK(rank(p) == 2);
}
