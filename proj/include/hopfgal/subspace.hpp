#pragma once

// Subspaces in echelon normal form: the unique RREF basis of the row span.
// Two subspaces are equal iff their normal forms are bitwise equal.

#include "hopfgal/matrix.hpp"

namespace hopfgal {

class Subspace {
public:
    Subspace() = default;
    Subspace(const Field& f, int ambient) : basis_(Matrix::zero(f, 0, ambient)) {}

    static Subspace span(const Field& f, int ambient, const std::vector<Vec>& vectors);
    static Subspace full(const Field& f, int ambient);

    int ambient_dim() const { return basis_.cols(); }
    int dim() const { return basis_.rows(); }
    const Matrix& basis_matrix() const { return basis_; }
    Vec basis_vector(int i) const { return basis_.row(i); }
    std::vector<Vec> basis() const;

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    // Residue of v after eliminating with the echelon basis; zero iff contained.
    Vec reduce(const Vec& v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    Subspace image_under(const Matrix& m) const;

    std::string str() const;

private:
    Matrix basis_;  // RREF rows, no zero rows
};

Subspace kernel_subspace(const Matrix& m);
Subspace image_subspace(const Matrix& m);

}  // namespace hopfgal
