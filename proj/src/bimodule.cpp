#include "hopfgal/bimodule.hpp"

namespace hopfgal {

Matrix Bimodule::left_action_of(const Vec& p) const {
    Matrix m = Matrix::zero(left_base.field(), dim, dim);
    for (size_t i = 0; i < p.size(); ++i)
        if (!p[i].is_zero()) m = m + left_act[i] * p[i];
    return m;
}

Matrix Bimodule::right_action_of(const Vec& q) const {
    Matrix m = Matrix::zero(right_base.field(), dim, dim);
    for (size_t i = 0; i < q.size(); ++i)
        if (!q[i].is_zero()) m = m + right_act[i] * q[i];
    return m;
}

Report Bimodule::verify() const {
    Report r("bimodule");
    const Field& f = left_base.field();
    Matrix id = Matrix::identity(f, dim);
    if (left_action_of(left_base.unit()) != id) r.fail("left-unit", "1·m != m");
    if (right_action_of(right_base.unit()) != id) r.fail("right-unit", "m·1 != m");
    for (int i = 0; i < left_base.dim(); ++i)
        for (int j = 0; j < left_base.dim(); ++j) {
            Vec pij = left_base.mul(unit_vec(f, left_base.dim(), i), unit_vec(f, left_base.dim(), j));
            if (left_action_of(pij) != left_act[static_cast<size_t>(i)] * left_act[static_cast<size_t>(j)])
                r.fail("left-associative(" + std::to_string(i) + "," + std::to_string(j) + ")", "");
        }
    for (int i = 0; i < right_base.dim(); ++i)
        for (int j = 0; j < right_base.dim(); ++j) {
            Vec qij = right_base.mul(unit_vec(f, right_base.dim(), i), unit_vec(f, right_base.dim(), j));
            // right action is an anti-representation: m·(qq′) = (m·q)·q′
            if (right_action_of(qij) != right_act[static_cast<size_t>(j)] * right_act[static_cast<size_t>(i)])
                r.fail("right-associative(" + std::to_string(i) + "," + std::to_string(j) + ")", "");
        }
    for (int i = 0; i < left_base.dim(); ++i)
        for (int j = 0; j < right_base.dim(); ++j)
            if (left_act[static_cast<size_t>(i)] * right_act[static_cast<size_t>(j)] !=
                right_act[static_cast<size_t>(j)] * left_act[static_cast<size_t>(i)])
                r.fail("actions-commute(" + std::to_string(i) + "," + std::to_string(j) + ")", "");
    if (r.ok()) r.pass("bimodule-axioms");
    return r;
}

Bimodule Bimodule::regular(const Algebra& a) {
    Bimodule b;
    b.left_base = a;
    b.right_base = a;
    b.dim = a.dim();
    for (int i = 0; i < a.dim(); ++i) {
        b.left_act.push_back(a.basis_left_mult(i));
        b.right_act.push_back(a.basis_right_mult(i));
    }
    return b;
}

Bimodule Bimodule::left_only(const Algebra& p, int dim, std::vector<Matrix> acts) {
    Bimodule b;
    b.left_base = p;
    b.right_base = Algebra::ground_field(p.field());
    b.dim = dim;
    b.left_act = std::move(acts);
    b.right_act = {Matrix::identity(p.field(), dim)};
    return b;
}

Bimodule Bimodule::right_only(const Algebra& q, int dim, std::vector<Matrix> acts) {
    Bimodule b;
    b.left_base = Algebra::ground_field(q.field());
    b.right_base = q;
    b.dim = dim;
    b.left_act = {Matrix::identity(q.field(), dim)};
    b.right_act = std::move(acts);
    return b;
}

Bimodule Bimodule::zero_module(const Field& f) {
    Bimodule b;
    b.left_base = Algebra::ground_field(f);
    b.right_base = Algebra::ground_field(f);
    b.dim = 0;
    b.left_act = {Matrix::zero(f, 0, 0)};
    b.right_act = {Matrix::zero(f, 0, 0)};
    return b;
}

FourModules four_modules(const Algebra& h, const AlgebraMap& s, const AlgebraMap& t) {
    if (!commuting_images(s, t)) throw Error("four_modules: images of s and t do not commute");
    const Field& f = h.field();
    const Algebra& l = s.src;
    std::vector<Matrix> a1, a2, a3, a4;
    for (int i = 0; i < l.dim(); ++i) {
        Vec si = s.apply(unit_vec(f, l.dim(), i));
        Vec ti = t.apply(unit_vec(f, l.dim(), i));
        a1.push_back(h.left_mult(si));    // ₗH
        a2.push_back(h.left_mult(ti));    // H_L
        a3.push_back(h.right_mult(si));   // H^L
        a4.push_back(h.right_mult(ti));   // ^LH
    }
    FourModules fm{Bimodule::left_only(l, h.dim(), a1), Bimodule::right_only(l, h.dim(), a2),
                   Bimodule::right_only(l, h.dim(), a3), Bimodule::left_only(l, h.dim(), a4)};
    return fm;
}

}  // namespace hopfgal
