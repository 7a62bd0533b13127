#pragma once

// Hom-modules of one-sided module maps, solved as linear constraint
// systems, and constructive finitely-generated-projective checks via
// splittings of free covers.

#include "hopfgal/tensor.hpp"

namespace hopfgal {

enum class Side { left, right };

struct HomModule {
    Bimodule source;
    Bimodule target;
    Side side = Side::right;
    std::vector<Matrix> basis;  // each target.dim × source.dim

    int dim() const { return static_cast<int>(basis.size()); }
    std::optional<Vec> coords(const Matrix& f) const;
    Matrix from_coords(const Vec& c) const;
};

HomModule hom_module(const Bimodule& m, const Bimodule& n, Side side);

struct DualBasis {
    std::vector<Vec> generators;      // x_i ∈ M
    std::vector<Matrix> functionals;  // ξ_i: M → base, side-linear
};

// Dual basis for M over its (side) base algebra, or absent when M is not
// projective (no splitting of the free cover exists).
std::optional<DualBasis> fgp_check(const Bimodule& m, Side side);

}  // namespace hopfgal
