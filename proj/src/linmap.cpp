#include "hopfgal/linmap.hpp"

namespace hopfgal {

std::string Classification::label() const {
    if (injective && surjective) return "bijective";
    if (injective) return "injective-not-surjective";
    if (surjective) return "surjective-not-injective";
    return "neither";
}

Classification classify_matrix(const Matrix& m) {
    Classification c;
    c.rank = rank(m);
    c.injective = c.rank == m.cols();
    c.surjective = c.rank == m.rows();
    if (c.injective && c.surjective) c.inv = inverse(m);
    return c;
}

const Classification& LinearMap::classify() const {
    if (!cls_) cls_ = std::make_shared<const Classification>(classify_matrix(m_));
    return *cls_;
}

LinearMap LinearMap::inverse_map() const {
    const Classification& c = classify();
    if (!c.bijective()) throw Error("inverse of a non-bijective map");
    return LinearMap(*c.inv);
}

}  // namespace hopfgal
