#pragma once

// Balanced tensor products M⊗_A N realized as presented quotients of the
// ambient tensor M⊗_k N, with relations (m·a)⊗n − m⊗(a·n). Ambient index
// convention: m_i⊗n_j ↦ i·dimN + j.

#include "hopfgal/bimodule.hpp"
#include "hopfgal/quotient.hpp"

namespace hopfgal {

struct BalancedTensor {
    Bimodule left_factor;
    Bimodule right_factor;
    Algebra middle;
    QuotientSpace q;

    int ambient_dim() const { return q.ambient_dim(); }
    int dim() const { return q.dim(); }

    // Outer bimodule structure over (left_factor.left_base, right_factor.right_base);
    // throws when an outer action fails to preserve the relations.
    Bimodule as_bimodule() const;
};

BalancedTensor tensor_over(const Bimodule& m, const Bimodule& n, const Algebra& a);

// Generating relation vectors (m·a)⊗n − m⊗(a·n) of M⊗_A N on the ambient.
std::vector<Vec> balanced_relations(const Bimodule& m, const Bimodule& n, const Algebra& a);

// Quotient of V_0⊗…⊗V_{n−1} by relations supported on adjacent slot pairs;
// pair_relations entries are (slot s, relation vectors on dims[s]·dims[s+1]).
QuotientSpace chain_quotient(const Field& f, const std::vector<int>& dims,
                             const std::vector<std::pair<int, std::vector<Vec>>>& pair_relations);

// Subspace of a quotient cut out by act1_l(x) = act2_l(x) for all basis l,
// where both ambient condition actions must descend to the quotient.
Subspace condition_subspace(const QuotientSpace& q, const std::vector<Matrix>& ambient_act1,
                            const std::vector<Matrix>& ambient_act2);

// Takeuchi product H×_L M inside H^L⊗_L M: the elements satisfying
// Σ h_i⊗m_i·l = Σ h_i t(l)⊗m_i for all l. M is an L-L bimodule.
struct TakeuchiProduct {
    BalancedTensor tensor;
    Subspace subspace;  // in quotient coordinates
};

TakeuchiProduct takeuchi_product(const Algebra& h, const AlgebraMap& s, const AlgebraMap& t, const Bimodule& m);

}  // namespace hopfgal
