#pragma once

#include <optional>

#include "clusterforge/rep.hpp"

namespace cf {

// Basis of the radical of End(M), via the trace form tr_M(f g) (valid in
// characteristic 0; over small prime fields a brute-force idempotent search
// replaces it where possible).
int end_radical_codim(const Representation& m);

bool is_indecomposable(const Representation& m);

std::optional<VertexMaps> find_isomorphism(const Representation& m, const Representation& n);
bool is_isomorphic(const Representation& m, const Representation& n);

// Splits M into indecomposable direct summands.  Deterministic for a fixed
// input.  Throws if a splitting idempotent cannot be realized (never returns a
// wrong decomposition).
std::vector<Representation> decompose(const Representation& m);

// Groups a list of representations by isomorphism class, preserving first
// occurrence order.
struct IsoClass {
    Representation rep;
    int multiplicity;
};
std::vector<IsoClass> group_by_iso(const std::vector<Representation>& reps);

// Dimension-vector key, used to bucket candidates before real iso tests.
std::string dim_vector_key(const Representation& m);

}  // namespace cf
