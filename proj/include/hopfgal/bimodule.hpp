#pragma once

// Bimodules over a pair of base algebras, stored as one action matrix per
// base basis element. A one-sided module carries the trivial action of the
// ground field on its unused side.

#include "hopfgal/algebra.hpp"

#include <array>

namespace hopfgal {

struct Bimodule {
    Algebra left_base;
    Algebra right_base;
    int dim = 0;
    std::vector<Matrix> left_act;   // per left_base basis element
    std::vector<Matrix> right_act;  // per right_base basis element

    Matrix left_action_of(const Vec& p) const;
    Matrix right_action_of(const Vec& q) const;

    Report verify() const;

    static Bimodule regular(const Algebra& a);  // a as a-a bimodule
    static Bimodule left_only(const Algebra& p, int dim, std::vector<Matrix> acts);
    static Bimodule right_only(const Algebra& q, int dim, std::vector<Matrix> acts);
    static Bimodule zero_module(const Field& f);
};

// The four one-sided L-module structures on H carried by maps s, t with
// commuting images:  ₗH: l·h = s(l)h;  H_L: h·l = t(l)h;  H^L: h·l = h s(l);
// ^LH: l·h = h t(l).
struct FourModules {
    Bimodule lower_left;   // ₗH
    Bimodule lower_right;  // H_L
    Bimodule upper_right;  // H^L
    Bimodule upper_left;   // ^LH
};

FourModules four_modules(const Algebra& h, const AlgebraMap& s, const AlgebraMap& t);

}  // namespace hopfgal
