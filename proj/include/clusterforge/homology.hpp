#pragma once

#include "clusterforge/decompose.hpp"
#include "clusterforge/rep.hpp"

namespace cf {

// Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0, kept as summand
// vertex lists plus differentials written as matrices of algebra elements
// (entry [j][i] lies in e_{vertices[k-1][i]} A e_{vertices[k][j]} and acts by
// left multiplication).
struct ProjResolution {
    std::vector<std::vector<int>> vertices;
    std::vector<std::vector<std::vector<SparseElem>>> diff;  // diff[k], k >= 1
    bool complete = true;  // kernel reached zero within the requested degree

    int length() const;
};

ProjResolution minimal_resolution(const Representation& m, int max_degree);

// Maps between direct sums of projectives, as element matrices.
VertexMaps projective_sum_map(const AlgebraPtr& a, const std::vector<int>& src_vertices,
                              const std::vector<int>& dst_vertices,
                              const std::vector<std::vector<SparseElem>>& elems);
std::vector<std::vector<SparseElem>> projective_map_elements(const AlgebraPtr& a,
                                                             const std::vector<int>& src_vertices,
                                                             const std::vector<int>& dst_vertices,
                                                             const VertexMaps& f);

// Solve F: ⊕P_src -> ⊕P_dst (element matrix) with vertex_maps(F) ∘ dst_map =
// rhs, where dst_map: ⊕P_dst -> Y and rhs: ⊕P_src -> Y.  Throws if no
// solution exists.
std::vector<std::vector<SparseElem>> lift_through(const AlgebraPtr& a,
                                                  const std::vector<int>& src_vertices,
                                                  const std::vector<int>& dst_vertices,
                                                  const Representation& y,
                                                  const VertexMaps& dst_map,
                                                  const VertexMaps& rhs);

// Ext^k(M, N) computed as homology of Hom(P_•(M), N).
struct ExtGroup {
    int dim = 0;
    // representative cocycles (rows) in ⊕_j N(vertices[k][j]) coordinates
    Matrix cocycles;
    Matrix boundaries;       // echelon basis of the coboundary space
    std::vector<int> block_offsets;
};

ExtGroup ext_group(const Representation& m, const Representation& n, int k,
                   int resolution_cap = 16);
int ext_dim(const Representation& m, const Representation& n, int k);

// Syzygy and cosyzygy with projective (resp. injective) summands stripped.
Representation syzygy(const Representation& m, int i = 1);
Representation cosyzygy(const Representation& m, int i = 1);

struct HomDim {
    int value = 0;
    bool at_least = false;  // true: the resolution did not terminate, >= value

    std::string to_string() const;
    bool finite() const { return !at_least; }
};

inline constexpr int kDimensionCap = 12;

HomDim proj_dim(const Representation& m, int cap = kDimensionCap);
HomDim inj_dim(const Representation& m, int cap = kDimensionCap);
HomDim global_dim(const AlgebraPtr& a, int cap = kDimensionCap);

}  // namespace cf
