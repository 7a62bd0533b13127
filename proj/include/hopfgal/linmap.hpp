#pragma once

// k-linear maps with rank classification. The matrix acts on column
// vectors; columns are images of domain basis vectors.

#include "hopfgal/matrix.hpp"

#include <memory>

namespace hopfgal {

struct Classification {
    int rank = 0;
    bool injective = false;
    bool surjective = false;
    std::optional<Matrix> inv;  // present when bijective

    bool bijective() const { return injective && surjective; }
    std::string label() const;
};

class LinearMap {
public:
    LinearMap() = default;
    explicit LinearMap(Matrix m) : m_(std::move(m)) {}

    int domain_dim() const { return m_.cols(); }
    int codomain_dim() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }

    Vec apply(const Vec& v) const { return m_.apply(v); }
    LinearMap compose(const LinearMap& inner) const { return LinearMap(m_ * inner.matrix()); }

    const Classification& classify() const;
    LinearMap inverse_map() const;

private:
    Matrix m_;
    mutable std::shared_ptr<const Classification> cls_;
};

Classification classify_matrix(const Matrix& m);

}  // namespace hopfgal
