#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "clusterforge/matrix.hpp"
#include "clusterforge/quiver.hpp"

namespace cf {

// Sparse element of a bound quiver algebra: coefficients on basis paths.
using SparseElem = std::map<int, Scalar>;

// Bound quiver algebra kQ/I with a computed path basis and multiplication
// closed on it.  Basis paths are the length-lex smallest representatives of
// their residue classes.
class BoundQuiverAlgebra {
  public:
    static constexpr std::size_t kDefaultLengthCap = 30;

    static std::shared_ptr<const BoundQuiverAlgebra> compute_basis(
        Quiver quiver, std::vector<Relation> relations, Field field,
        std::size_t length_cap = kDefaultLengthCap);

    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    const Field& field() const { return field_; }

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Path>& basis() const { return basis_; }
    const Path& basis_path(int i) const { return basis_[i]; }
    int basis_source(int i) const { return basis_[i].source(quiver_); }
    int basis_target(int i) const { return basis_[i].target(quiver_); }

    // Basis indices of e_u * A * e_v.
    const std::vector<int>& pair_basis(int u, int v) const {
        return pair_basis_[u * quiver_.n_vertices() + v];
    }
    int idempotent_index(int v) const { return idempotent_[v]; }

    // Largest basis path length + 1 (rad^N = 0).
    std::size_t nilpotency_bound() const { return nilpotency_; }

    // Normal form of an arbitrary path of the quiver.
    SparseElem path_element(const Path& p) const;
    // Right multiplication of a normal-form element by an arrow / path / element.
    SparseElem mul_arrow(const SparseElem& x, int arrow) const;
    SparseElem mul(const SparseElem& x, const SparseElem& y) const;
    SparseElem add(SparseElem x, const SparseElem& y, const Scalar& c = Scalar(1)) const;

    // Matrix of right multiplication by `elem` from e_u A e_v-coordinates to
    // e_u A e_w-coordinates, where elem lies in e_v A e_w.
    Matrix right_mult_matrix(int u, int v, int w, const SparseElem& elem) const;
    // Matrix of left multiplication by `elem` in e_u A e_v on e_v A e_w.
    Matrix left_mult_matrix(const SparseElem& elem, int u, int v, int w) const;

    std::shared_ptr<const BoundQuiverAlgebra> opposite() const;
    // Index map: basis path i of this algebra -> its element in the opposite.
    SparseElem opposite_element(int basis_index, const BoundQuiverAlgebra& op) const;

    bool is_hereditary() const { return relations_.empty(); }

  private:
    BoundQuiverAlgebra() = default;

    Quiver quiver_;
    std::vector<Relation> relations_;
    Field field_;
    std::vector<Path> basis_;
    std::vector<std::vector<int>> pair_basis_;
    std::vector<int> idempotent_;
    std::size_t nilpotency_ = 1;
    // rmul_[b][a]: normal form of basis path b times arrow a (empty if not
    // composable or zero).
    std::vector<std::vector<SparseElem>> rmul_;
    std::map<std::string, int> basis_lookup_;  // path key -> basis index
    mutable std::once_flag op_once_;
    mutable std::shared_ptr<const BoundQuiverAlgebra> op_cache_;

    static std::string path_key(const Path& p);
    friend class AlgebraBuilder;
};

using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

// True if no relation lies in the ideal generated by the others.
bool relation_system_is_minimal(const Quiver& q, const std::vector<Relation>& rels, Field field,
                                std::size_t length_cap = BoundQuiverAlgebra::kDefaultLengthCap);

}  // namespace cf
