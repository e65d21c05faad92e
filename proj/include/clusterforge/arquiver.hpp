#pragma once

#include <optional>
#include <string>

#include "clusterforge/artrans.hpp"

namespace cf {

struct TQVertex {
    Representation rep;
    bool projective = false;
    bool injective = false;
    bool removal_marker = false;  // circled in the surgery pictures
    int tau = -1;                 // vertex id of tau(this), -1 if projective
    int tau_inv = -1;
};

struct TQArrow {
    int src, dst, mult;
};

// The Auslander-Reiten quiver of a representation-finite algebra (or a capped
// part of it).
struct TranslationQuiver {
    AlgebraPtr algebra;
    std::vector<TQVertex> vertices;
    std::vector<TQArrow> arrows;
    bool complete = true;

    int n() const { return (int)vertices.size(); }
    int find_iso_class(const Representation& m) const;  // -1 if absent
    std::vector<std::vector<std::pair<int, int>>> in_adjacency() const;   // [dst] -> (src, mult)
    std::vector<std::vector<std::pair<int, int>>> out_adjacency() const;  // [src] -> (dst, mult)
    bool is_acyclic() const;
};

// Builds the AR quiver by closing the projectives and injectives under
// tau, tau^{-1} and mesh middles.  Every almost split sequence is computed
// honestly; the result is complete for representation-finite algebras
// (flagged partial when the cap is exceeded).
TranslationQuiver knit(const AlgebraPtr& a, int cap = 2000);

// Verifies dim additivity + middle/arrow agreement at every non-projective
// vertex; throws on violation.
void verify_mesh_conditions(const TranslationQuiver& g);

struct OrderingVerdict {
    bool acyclic;           // reachability order is a genuine partial order
    bool s2_covered;        // every module of S2 has a predecessor in S1
    bool s1_covered;        // every module of S1 has a successor in S2
    bool no_back_succ;      // no nontrivial path S2 -> S1 (clause 3)
    bool no_back_pred;      // clause 4 (same paths, kept separate for audit)
    bool leq() const { return s2_covered && s1_covered && no_back_succ && no_back_pred; }
};

OrderingVerdict reachability(const TranslationQuiver& g, const std::vector<int>& s1,
                             const std::vector<int>& s2);
std::vector<bool> successors_of(const TranslationQuiver& g, const std::vector<int>& seeds);
std::vector<bool> predecessors_of(const TranslationQuiver& g, const std::vector<int>& seeds);

struct SliceVerdict {
    bool valid = true;
    std::string violation;  // first violation witness
};

SliceVerdict validate_slice(const TranslationQuiver& g, const std::vector<int>& candidate);

// All complete slices (as vertex id sets) found by transversal search over
// the tau-orbits.
std::vector<std::vector<int>> find_complete_slices(const TranslationQuiver& g);

// Induced translation quiver on the complement of a vertex set: arrows
// between survivors kept, tau kept when both endpoints survive.
TranslationQuiver delete_vertices(const TranslationQuiver& g, const std::vector<int>& removed);

// Abstract translation-quiver isomorphism (arrows with multiplicity + tau);
// vertex markers are ignored.  Returns a vertex mapping when isomorphic.
std::optional<std::vector<int>> tq_isomorphism(const TranslationQuiver& a,
                                               const TranslationQuiver& b);

// Deterministic DOT output; diamonds mark projective-injectives, circles mark
// removal-set vertices, dashed edges show tau.
std::string tq_to_dot(const TranslationQuiver& g, const std::string& name);

}  // namespace cf
