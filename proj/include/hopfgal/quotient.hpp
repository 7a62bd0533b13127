#pragma once

// Presented quotients V/rel with a fixed echelon normal form: the quotient
// basis is the set of non-pivot ambient coordinates, so projection and
// section are canonical and projection∘section = id.

#include "hopfgal/linmap.hpp"
#include "hopfgal/subspace.hpp"

#include <variant>

namespace hopfgal {

class QuotientSpace {
public:
    QuotientSpace() = default;

    static QuotientSpace of(const Field& f, int ambient, const std::vector<Vec>& relations);
    static QuotientSpace trivial(const Field& f, int ambient);  // no relations

    const Field& field() const { return proj_.field(); }
    int ambient_dim() const { return proj_.cols(); }
    int dim() const { return proj_.rows(); }

    const Subspace& relations() const { return relations_; }
    const Matrix& projection() const { return proj_; }
    const Matrix& section() const { return sect_; }

    Vec project(const Vec& ambient) const { return proj_.apply(ambient); }
    Vec lift(const Vec& qvec) const { return sect_.apply(qvec); }

private:
    Subspace relations_;
    Matrix proj_;  // dim × ambient
    Matrix sect_;  // ambient × dim
};

struct NotBalanced {
    Vec witness;  // relation vector whose image is not a relation
    std::string context;
};

using InducedMap = std::variant<LinearMap, NotBalanced>;

// Push an ambient-level map through two presented quotients.  Fails with a
// witness when the map does not send source relations into target relations.
InducedMap induce_map(const Matrix& ambient_map, const QuotientSpace& src, const QuotientSpace& dst,
                      const std::string& context = "");

LinearMap induce_or_throw(const Matrix& ambient_map, const QuotientSpace& src, const QuotientSpace& dst,
                          const std::string& context = "");

}  // namespace hopfgal
