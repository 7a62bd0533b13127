#pragma once

// Finite-dimensional unital associative algebras given by structure
// constants c[i][j][k] (e_i·e_j = Σ_k c[i][j][k] e_k) and a unit vector,
// together with (anti)homomorphisms between them.

#include "hopfgal/linmap.hpp"
#include "hopfgal/report.hpp"
#include "hopfgal/subspace.hpp"

namespace hopfgal {

class Algebra {
public:
    Algebra() = default;
    Algebra(const Field& f, int dim, std::vector<Scalar> constants, Vec unit);

    static Algebra ground_field(const Field& f);          // k itself
    static Algebra direct_product(const Algebra& a, const Algebra& b);
    static Algebra matrix_algebra(const Field& f, int n);  // M_n(k), basis e_{ij} row-major

    const Field& field() const { return field_; }
    int dim() const { return dim_; }
    const Vec& unit() const { return unit_; }
    const Scalar& c(int i, int j, int k) const {
        return constants_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
    }
    const std::vector<Scalar>& constants() const { return constants_; }

    Vec mul(const Vec& a, const Vec& b) const;
    Matrix left_mult(const Vec& a) const;   // x ↦ a·x
    Matrix right_mult(const Vec& a) const;  // x ↦ x·a
    Matrix basis_left_mult(int i) const;
    Matrix basis_right_mult(int i) const;

    Report verify() const;
    Algebra opposite() const;
    bool is_commutative() const;

    bool operator==(const Algebra& o) const;

private:
    Field field_;
    int dim_ = 0;
    std::vector<Scalar> constants_;  // dim^3
    Vec unit_;
};

struct AlgebraMap {
    Algebra src;
    Algebra dst;
    Matrix m;          // dst.dim × src.dim
    bool anti = false;  // antihomomorphism when true

    Vec apply(const Vec& v) const { return m.apply(v); }
    Report verify() const;
    LinearMap linear() const { return LinearMap(m); }
};

AlgebraMap identity_map(const Algebra& a);
AlgebraMap compose(const AlgebraMap& outer, const AlgebraMap& inner);

// true iff s(e_i)t(e_j) = t(e_j)s(e_i) for all basis pairs; throws on target mismatch
bool commuting_images(const AlgebraMap& s, const AlgebraMap& t);

// Subalgebra spanned by an echelon subspace, with structure constants on
// that basis. Construction fails (with a witness product) when the span is
// not closed under multiplication or does not contain the unit.
struct Subalgebra {
    Algebra ambient;
    Subspace space;
    Algebra alg;
    Matrix embed;  // ambient.dim × alg.dim

    Vec coords(const Vec& ambient_elt) const;  // throws when not a member
};

std::variant<Subalgebra, Vec> make_subalgebra(const Algebra& ambient, const Subspace& space);
Subalgebra make_subalgebra_or_throw(const Algebra& ambient, const Subspace& space, const std::string& what);

}  // namespace hopfgal
