#pragma once

#include "clusterforge/homology.hpp"

namespace cf {

// Finite-dimensional A-A-bimodule with basis graded by (left vertex, right
// vertex).  comp(u, v) carries e_u X e_v; the left action of an arrow a maps
// comp(t(a), v) -> comp(s(a), v), the right action maps comp(u, s(a)) ->
// comp(u, t(a)).
struct Bimodule {
    AlgebraPtr left_alg, right_alg;
    std::vector<std::vector<int>> comp_dims;
    std::vector<std::vector<Matrix>> left_act;   // [arrow][right vertex v]
    std::vector<std::vector<Matrix>> right_act;  // [arrow][left vertex u]

    int dim() const;
    int comp(int u, int v) const { return comp_dims[u][v]; }

    Matrix left_path_action(const Path& p, int right_v) const;
    Matrix right_path_action(int left_u, const Path& p) const;

    // Commuting actions and relation annihilation on both sides.
    void validate() const;
};

// DC as a C-C-bimodule; e_u DC e_v is the dual of e_v C e_u.
Bimodule dual_bimodule(const AlgebraPtr& c);

// Ext^2_C(DC, C) as a C-C-bimodule: e_u E e_v = Ext^2(I_v, P_u), the right
// action induced by chain-map lifting of the left multiplications on DC, the
// left action by postcomposition on the second argument.
// Throws if gl.dim C exceeds the cap ("resolution too long").
Bimodule ext2_bimodule(const AlgebraPtr& c, int cap = kDimensionCap);

// The injective e_l DC viewed as a right module (used by ext2 and tests).
Representation injective_summand_of_dual(const Bimodule& dc, int l);

}  // namespace cf
