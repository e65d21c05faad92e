#pragma once

#include <vector>

#include "clusterforge/algebra.hpp"

namespace cf {

// A right module over a bound quiver algebra, given as vertex spaces (rows)
// and one matrix per arrow, acting along the arrow direction.
struct Representation {
    AlgebraPtr algebra;
    std::vector<int> dims;           // per vertex
    std::vector<Matrix> arrow_mats;  // per arrow: dims[from] x dims[to]

    int dim_at(int v) const { return dims[v]; }
    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    std::vector<int> dim_vector() const { return dims; }

    Matrix act_path(const Path& p) const;
    // Action of a graded element of e_u A e_v: a map M(u) -> M(v).
    Matrix act_elem(int u, int v, const SparseElem& elem) const;

    // Throws unless every relation of the algebra evaluates to zero and all
    // shapes match.
    void validate() const;
};

// A morphism of representations: one matrix per vertex, of shape
// src.dims[v] x dst.dims[v].
using VertexMaps = std::vector<Matrix>;

Representation rep_zero(const AlgebraPtr& a);
Representation rep_simple(const AlgebraPtr& a, int vertex);
Representation rep_projective(const AlgebraPtr& a, int vertex);
Representation rep_injective(const AlgebraPtr& a, int vertex);
Representation rep_dual(const Representation& m, const AlgebraPtr& op);

bool maps_equal(const VertexMaps& f, const VertexMaps& g);
VertexMaps maps_compose(const Representation& a, const VertexMaps& f, const VertexMaps& g);
VertexMaps maps_identity(const Representation& m);
VertexMaps maps_zero(const Representation& src, const Representation& dst);
bool is_module_map(const Representation& src, const Representation& dst, const VertexMaps& f);

// Basis of Hom(M, N), solved from the naturality equations.
std::vector<VertexMaps> hom_basis(const Representation& m, const Representation& n);
int hom_dim(const Representation& m, const Representation& n);

struct SubQuotient {
    Representation rep;
    VertexMaps map;  // inclusion (for kernels) or projection (for quotients)
};

SubQuotient kernel_rep(const Representation& src, const Representation& dst, const VertexMaps& f);
SubQuotient cokernel_rep(const Representation& src, const Representation& dst,
                         const VertexMaps& f);
SubQuotient image_rep(const Representation& src, const Representation& dst, const VertexMaps& f);

// Submodule spanned by given row spaces (closed under the action or not: the
// action closure is taken).
SubQuotient submodule_closure(const Representation& m, const std::vector<Matrix>& generators);

struct DirectSum {
    Representation rep;
    std::vector<int> offsets_at;     // [summand * n_vertices + v]: row offset
    std::vector<Representation> summands;
    VertexMaps embedding(std::size_t summand) const;
    VertexMaps projection(std::size_t summand) const;
};

DirectSum direct_sum(const AlgebraPtr& a, const std::vector<Representation>& summands);

// top(M) = M / rad M, with the projection.
SubQuotient top_rep(const Representation& m);

struct ProjectiveCover {
    std::vector<int> vertices;  // P = ⊕ P_{vertices[i]}, in order
    Representation p;
    VertexMaps map;  // P -> M, surjective with superfluous kernel
};

ProjectiveCover projective_cover(const Representation& m);
bool is_projective(const Representation& m);
bool is_injective(const Representation& m);

struct ProjPresentation {
    std::vector<int> p1_vertices, p0_vertices;
    Representation p1, p0;
    VertexMaps d;      // P1 -> P0
    VertexMaps cover;  // P0 -> M
    // d as a matrix of algebra elements: d_elems[j][i] in e_{p1_vertices[j]} A
    // e'??  -- entry in e_{p0_vertices[i]} A e_{p1_vertices[j]} acting by left
    // multiplication P_{p1_vertices[j]} -> P_{p0_vertices[i]}.
    std::vector<std::vector<SparseElem>> d_elems;
};

ProjPresentation minimal_projective_presentation(const Representation& m);

// Generator row of P_v inside rep_projective(a, v) (the unit path position).
int projective_generator_position(const AlgebraPtr& a, int vertex);

}  // namespace cf
