#pragma once

#include "clusterforge/homology.hpp"

namespace cf {

// tau = D Tr from a minimal projective presentation; tau^{-1} = Tr D.
// Defined for indecomposable non-projective (resp. non-injective) modules.
Representation ar_translate(const Representation& m);
Representation ar_translate_inverse(const Representation& m);

// Maps ⊕_j P_{vertices[j]} -> N corresponding to a row in ⊕_j N(vertices[j]).
VertexMaps hom_vector_to_map(const AlgebraPtr& a, const std::vector<int>& vertices,
                             const Representation& n, const Matrix& coords);

// Radical of End(M) via the trace form (characteristic 0).
std::vector<VertexMaps> end_radical_basis(const Representation& m);

struct AlmostSplitSequence {
    Representation tau_m;
    Representation middle;
    Representation m;
    VertexMaps left;   // tau_m -> middle, kernel side
    VertexMaps right;  // middle -> m, cokernel side
    std::vector<Representation> middle_summands;
};

// 0 -> tau M -> E -> M -> 0, the class generating the socle of
// Ext^1(M, tau M) over End(M).
AlmostSplitSequence almost_split_sequence(const Representation& m);

}  // namespace cf
