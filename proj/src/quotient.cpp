#include "hopfgal/quotient.hpp"

namespace hopfgal {

QuotientSpace QuotientSpace::of(const Field& f, int ambient, const std::vector<Vec>& relations) {
    QuotientSpace q;
    q.relations_ = Subspace::span(f, ambient, relations);
    const Matrix& rel = q.relations_.basis_matrix();

    std::vector<bool> is_pivot(static_cast<size_t>(ambient), false);
    std::vector<int> pivot_row(static_cast<size_t>(ambient), -1);
    for (int i = 0; i < rel.rows(); ++i) {
        for (int j = 0; j < ambient; ++j)
            if (!rel.at(i, j).is_zero()) {
                is_pivot[static_cast<size_t>(j)] = true;
                pivot_row[static_cast<size_t>(j)] = i;
                break;
            }
    }
    std::vector<int> free_cols;
    for (int j = 0; j < ambient; ++j)
        if (!is_pivot[static_cast<size_t>(j)]) free_cols.push_back(j);

    const int qdim = static_cast<int>(free_cols.size());
    q.proj_ = Matrix(f, qdim, ambient);
    q.sect_ = Matrix(f, ambient, qdim);
    for (int a = 0; a < qdim; ++a) q.sect_.at(free_cols[static_cast<size_t>(a)], a) = Scalar::one(f);
    for (int j = 0; j < ambient; ++j) {
        if (!is_pivot[static_cast<size_t>(j)]) {
            for (int a = 0; a < qdim; ++a)
                if (free_cols[static_cast<size_t>(a)] == j) q.proj_.at(a, j) = Scalar::one(f);
        } else {
            // e_j ≡ −(pivot row minus its leading one) on the free coordinates
            int r = pivot_row[static_cast<size_t>(j)];
            for (int a = 0; a < qdim; ++a) q.proj_.at(a, j) = -rel.at(r, free_cols[static_cast<size_t>(a)]);
        }
    }
    return q;
}

QuotientSpace QuotientSpace::trivial(const Field& f, int ambient) { return of(f, ambient, {}); }

InducedMap induce_map(const Matrix& ambient_map, const QuotientSpace& src, const QuotientSpace& dst,
                      const std::string& context) {
    if (ambient_map.cols() != src.ambient_dim() || ambient_map.rows() != dst.ambient_dim())
        throw Error("induce_map: ambient shape mismatch" + (context.empty() ? "" : " in " + context));
    for (int i = 0; i < src.relations().dim(); ++i) {
        Vec r = src.relations().basis_vector(i);
        if (!dst.relations().contains(ambient_map.apply(r))) return NotBalanced{r, context};
    }
    return LinearMap(dst.projection() * ambient_map * src.section());
}

LinearMap induce_or_throw(const Matrix& ambient_map, const QuotientSpace& src, const QuotientSpace& dst,
                          const std::string& context) {
    InducedMap m = induce_map(ambient_map, src, dst, context);
    if (std::holds_alternative<NotBalanced>(m)) {
        const auto& nb = std::get<NotBalanced>(m);
        throw Error("not balanced" + (nb.context.empty() ? "" : " (" + nb.context + ")") + ": witness " +
                    vec_str(nb.witness));
    }
    return std::get<LinearMap>(m);
}

}  // namespace hopfgal
