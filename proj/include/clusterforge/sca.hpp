#pragma once

#include <optional>

#include "clusterforge/algebra.hpp"

namespace cf {

// A finite-dimensional basic algebra given by structure constants on a basis
// graded by pairs of primitive orthogonal idempotents.  Basis element i lies
// in e_{left[i]} Λ e_{right[i]}; the idempotents themselves are basis
// elements.
struct StructureConstantAlgebra {
    Field field;
    std::vector<std::string> vertex_names;
    std::vector<int> left, right;    // grading of each basis element
    std::vector<int> idempotent;     // basis index of e_v per vertex
    // table[i * dim + j]: sparse product b_i * b_j
    std::vector<std::vector<std::pair<int, Scalar>>> table;
    // optional: basis indices spanning the radical (verified when present)
    std::optional<std::vector<int>> radical_elems;

    int dim() const { return static_cast<int>(left.size()); }
    int n_vertices() const { return static_cast<int>(vertex_names.size()); }

    Matrix mul_rows(const Matrix& x, const Matrix& y) const;  // 1×dim rows
    void validate() const;  // grading, idempotent laws, associativity
};

struct ArrowHint {
    int from, to;
    std::string name;
    Matrix lift;  // 1×dim row in the structure-constant basis
};

struct PresentResult {
    AlgebraPtr algebra;
    // evaluation of each basis path of `algebra` in the input basis (1×dim)
    std::vector<Matrix> basis_eval;
};

// Extract a bound-quiver presentation: quiver from rad/rad^2, relations as a
// minimal generating system of the kernel of the path evaluation.  When arrow
// hints are given they are verified and used as the arrow lifts (keeping
// caller-chosen names); otherwise lifts are chosen deterministically.
PresentResult present(const StructureConstantAlgebra& sca,
                      const std::vector<ArrowHint>& hints = {});

}  // namespace cf
