#include "clusterforge/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace cf {

namespace {
constexpr std::size_t kPathCountGuard = 500000;
}

std::string BoundQuiverAlgebra::path_key(const Path& p) {
    std::ostringstream os;
    if (p.arrows.empty()) {
        os << "e" << p.base;
    } else {
        for (int a : p.arrows) os << a << ",";
    }
    return os.str();
}

// Shared state of the basis computation.
class AlgebraBuilder {
  public:
    AlgebraBuilder(Quiver q, std::vector<Relation> rels, Field f, std::size_t cap)
        : quiver_(std::move(q)), relations_(std::move(rels)), field_(f), cap_(cap) {}

    std::shared_ptr<const BoundQuiverAlgebra> build();

  private:
    using Elem = std::map<int, Scalar>;  // path id -> coeff, id order == path order

    Quiver quiver_;
    std::vector<Relation> relations_;
    Field field_;
    std::size_t cap_;

    std::vector<Path> paths_;
    std::map<std::string, int> path_ids_;
    std::vector<std::vector<int>> by_length_;
    std::map<int, Elem> pivots_;  // leading path id -> monic element

    int register_path(const Path& p);
    void enumerate_length(std::size_t len);
    void add_generators(std::size_t len);
    Elem reduce(Elem e) const;
    void add_generator(Elem e);
};

int AlgebraBuilder::register_path(const Path& p) {
    auto key = BoundQuiverAlgebra::path_key(p);
    auto it = path_ids_.find(key);
    if (it != path_ids_.end()) return it->second;
    int id = static_cast<int>(paths_.size());
    paths_.push_back(p);
    path_ids_[key] = id;
    if (by_length_.size() <= p.length()) by_length_.resize(p.length() + 1);
    by_length_[p.length()].push_back(id);
    if (paths_.size() > kPathCountGuard)
        throw BadInput("ideal not admissible: path enumeration exceeded " +
                       std::to_string(kPathCountGuard) + " paths");
    return id;
}

void AlgebraBuilder::enumerate_length(std::size_t len) {
    if (len == 0) {
        for (int v = 0; v < quiver_.n_vertices(); ++v) register_path(Path::trivial(v));
        return;
    }
    if (len == 1) {
        // arrows in alphabetical order, so that ids are monotone in path order
        std::vector<int> idx(quiver_.n_arrows());
        for (int a = 0; a < quiver_.n_arrows(); ++a) idx[a] = a;
        const auto& rk = quiver_.name_ranks();
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return rk[a] < rk[b]; });
        for (int a : idx) register_path(Path{-1, {a}});
        return;
    }
    if (by_length_.size() <= len) by_length_.resize(len + 1);
    const auto& rk = quiver_.name_ranks();
    std::vector<int> arrow_order(quiver_.n_arrows());
    for (int a = 0; a < quiver_.n_arrows(); ++a) arrow_order[a] = a;
    std::sort(arrow_order.begin(), arrow_order.end(), [&](int a, int b) { return rk[a] < rk[b]; });
    auto prev = by_length_[len - 1];  // copy: register_path appends to by_length_
    for (int pid : prev) {
        const Path p = paths_[pid];
        int t = p.target(quiver_);
        for (int a : arrow_order) {
            if (quiver_.arrow(a).from != t) continue;
            Path ext = p;
            ext.arrows.push_back(a);
            register_path(ext);
        }
    }
}

AlgebraBuilder::Elem AlgebraBuilder::reduce(Elem e) const {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = e.rbegin(); it != e.rend(); ++it) {
            auto piv = pivots_.find(it->first);
            if (piv == pivots_.end()) continue;
            Scalar c = it->second;
            for (const auto& [pid, pc] : piv->second) {
                Scalar& slot = e[pid];
                slot = field_.sub(slot, field_.mul(c, pc));
                if (slot == 0) e.erase(pid);
            }
            changed = true;
            break;
        }
    }
    return e;
}

void AlgebraBuilder::add_generator(Elem e) {
    e = reduce(std::move(e));
    if (e.empty()) return;
    int lead = e.rbegin()->first;
    Scalar inv = field_.inv(e.rbegin()->second);
    for (auto& [pid, c] : e) c = field_.mul(c, inv);
    pivots_[lead] = std::move(e);
}

void AlgebraBuilder::add_generators(std::size_t len) {
    for (const auto& rel : relations_) {
        int src = relation_source(rel, quiver_);
        int tgt = relation_target(rel, quiver_);
        std::size_t d = 0;
        for (const auto& term : rel) d = std::max(d, term.path.length());
        if (d > len) continue;
        std::size_t budget = len - d;
        for (std::size_t lp = 0; lp <= budget; ++lp) {
            std::size_t lq = budget - lp;
            if (by_length_.size() <= lp || by_length_.size() <= lq) continue;
            for (int ppid : by_length_[lp]) {
                const Path& p = paths_[ppid];
                if (p.target(quiver_) != src) continue;
                for (int qpid : by_length_[lq]) {
                    const Path& q = paths_[qpid];
                    if (q.source(quiver_) != tgt) continue;
                    Elem gen;
                    for (const auto& term : rel) {
                        Path full = p.then(term.path, quiver_).then(q, quiver_);
                        int id = register_path(full);
                        Scalar& slot = gen[id];
                        slot = field_.add(slot, term.coeff);
                        if (slot == 0) gen.erase(id);
                    }
                    add_generator(std::move(gen));
                }
            }
        }
    }
}

std::shared_ptr<const BoundQuiverAlgebra> AlgebraBuilder::build() {
    for (auto& rel : relations_) {
        Relation cleaned;
        for (auto& term : rel) {
            Scalar c = field_.reduce(term.coeff);
            if (c == 0) continue;
            if (term.path.length() < 2)
                throw BadInput("inconsistent relation: term '" + term.path.to_string(quiver_) +
                               "' has length < 2");
            cleaned.push_back(RelationTerm{c, term.path});
        }
        if (cleaned.empty()) throw BadInput("relation is zero");
        relation_source(cleaned, quiver_);
        relation_target(cleaned, quiver_);
        rel = std::move(cleaned);
    }

    enumerate_length(0);
    enumerate_length(1);
    std::size_t stop = 0;
    bool terminated = quiver_.n_arrows() == 0;
    for (std::size_t len = 2; !terminated && len <= cap_; ++len) {
        enumerate_length(len);
        add_generators(len);
        bool all_reducible = true;
        if (by_length_.size() > len)
            for (int pid : by_length_[len])
                if (!pivots_.count(pid)) { all_reducible = false; break; }
        if (all_reducible) {
            stop = len;
            terminated = true;
        }
    }
    if (!terminated)
        throw BadInput("ideal not admissible: irreducible paths persist at length cap " +
                       std::to_string(cap_));

    auto alg = std::shared_ptr<BoundQuiverAlgebra>(new BoundQuiverAlgebra());
    alg->quiver_ = quiver_;
    alg->relations_ = relations_;
    alg->field_ = field_;

    std::map<int, int> basis_of_path;  // path id -> basis index
    for (std::size_t len = 0; len < std::max<std::size_t>(stop, 2) && len < by_length_.size();
         ++len) {
        if (stop > 0 && len >= stop) break;
        for (int pid : by_length_[len]) {
            if (pivots_.count(pid)) continue;
            int b = static_cast<int>(alg->basis_.size());
            basis_of_path[pid] = b;
            alg->basis_.push_back(paths_[pid]);
        }
    }

    int n = quiver_.n_vertices();
    alg->pair_basis_.assign(n * n, {});
    alg->idempotent_.assign(n, -1);
    alg->nilpotency_ = 1;
    for (int b = 0; b < alg->dim(); ++b) {
        const Path& p = alg->basis_[b];
        alg->pair_basis_[p.source(quiver_) * n + p.target(quiver_)].push_back(b);
        alg->basis_lookup_[BoundQuiverAlgebra::path_key(p)] = b;
        if (p.length() == 0) alg->idempotent_[p.base] = b;
        alg->nilpotency_ = std::max(alg->nilpotency_, p.length() + 1);
    }

    // right-multiplication-by-arrow table
    alg->rmul_.assign(alg->dim(), std::vector<SparseElem>(quiver_.n_arrows()));
    for (int b = 0; b < alg->dim(); ++b) {
        const Path& p = alg->basis_[b];
        int t = p.target(quiver_);
        for (int a = 0; a < quiver_.n_arrows(); ++a) {
            if (quiver_.arrow(a).from != t) continue;
            Path ext = p;
            if (ext.arrows.empty()) ext.base = -1;
            ext.arrows.push_back(a);
            auto it = path_ids_.find(BoundQuiverAlgebra::path_key(ext));
            if (it == path_ids_.end()) continue;  // beyond stop length: zero
            Elem nf = reduce(Elem{{it->second, field_.one()}});
            SparseElem out;
            for (const auto& [pid, c] : nf) out[basis_of_path.at(pid)] = c;
            alg->rmul_[b][a] = std::move(out);
        }
    }

    // The length filtration above can terminate while the arrow ideal is still
    // not nilpotent in the quotient (non-homogeneous relations can create
    // idempotents, e.g. x^3 - x^2).  Verify rad^N = 0 by powering the span of
    // non-trivial basis paths, and record the exact nilpotency.
    {
        Matrix power(0, alg->dim(), field_);
        for (int b = 0; b < alg->dim(); ++b) {
            if (alg->basis_[b].length() == 0) continue;
            Matrix row(1, alg->dim(), field_);
            row.at(0, b) = 1;
            power = power.vstack(row);
        }
        std::size_t nil = 1;
        std::size_t prev_dim = alg->dim() + 1;
        while (power.rows() > 0) {
            if (power.rows() >= prev_dim)
                throw BadInput("ideal not admissible: arrow ideal is not nilpotent");
            prev_dim = power.rows();
            Matrix next(0, alg->dim(), field_);
            for (std::size_t r = 0; r < power.rows(); ++r) {
                SparseElem x;
                for (int b = 0; b < alg->dim(); ++b)
                    if (power.at(r, b) != 0) x[b] = power.at(r, b);
                for (int g = 0; g < alg->dim(); ++g) {
                    if (alg->basis_[g].length() == 0) continue;
                    SparseElem prod = alg->mul(x, SparseElem{{g, field_.one()}});
                    if (prod.empty()) continue;
                    Matrix row(1, alg->dim(), field_);
                    for (const auto& [b, c] : prod) row.at(0, b) = c;
                    next = next.vstack(row);
                }
            }
            power = Subspace::from_rows(alg->dim(), next).basis();
            ++nil;
        }
        alg->nilpotency_ = std::max(alg->nilpotency_, nil);
    }
    return alg;
}

std::shared_ptr<const BoundQuiverAlgebra> BoundQuiverAlgebra::compute_basis(
    Quiver quiver, std::vector<Relation> relations, Field field, std::size_t length_cap) {
    AlgebraBuilder builder(std::move(quiver), std::move(relations), field, length_cap);
    return builder.build();
}

SparseElem BoundQuiverAlgebra::path_element(const Path& p) const {
    SparseElem x{{idempotent_[p.source(quiver_)], field_.one()}};
    for (int a : p.arrows) x = mul_arrow(x, a);
    return x;
}

SparseElem BoundQuiverAlgebra::mul_arrow(const SparseElem& x, int arrow) const {
    SparseElem out;
    for (const auto& [b, c] : x) {
        for (const auto& [b2, c2] : rmul_[b][arrow]) {
            Scalar& slot = out[b2];
            slot = field_.add(slot, field_.mul(c, c2));
            if (slot == 0) out.erase(b2);
        }
    }
    return out;
}

SparseElem BoundQuiverAlgebra::mul(const SparseElem& x, const SparseElem& y) const {
    SparseElem out;
    for (const auto& [b, c] : y) {
        const Path& q = basis_[b];
        // x * (c * q): restrict x to paths ending at q's source, then extend
        SparseElem cur;
        int qs = q.source(quiver_);
        for (const auto& [bx, cx] : x)
            if (basis_target(bx) == qs) cur[bx] = cx;
        for (int a : q.arrows) cur = mul_arrow(cur, a);
        for (const auto& [bz, cz] : cur) {
            Scalar& slot = out[bz];
            slot = field_.add(slot, field_.mul(c, cz));
            if (slot == 0) out.erase(bz);
        }
    }
    return out;
}

SparseElem BoundQuiverAlgebra::add(SparseElem x, const SparseElem& y, const Scalar& c) const {
    for (const auto& [b, cy] : y) {
        Scalar& slot = x[b];
        slot = field_.add(slot, field_.mul(c, cy));
        if (slot == 0) x.erase(b);
    }
    return x;
}

Matrix BoundQuiverAlgebra::right_mult_matrix(int u, int v, int w, const SparseElem& elem) const {
    const auto& dom = pair_basis(u, v);
    const auto& cod = pair_basis(u, w);
    std::map<int, int> cod_pos;
    for (std::size_t i = 0; i < cod.size(); ++i) cod_pos[cod[i]] = static_cast<int>(i);
    Matrix m(dom.size(), cod.size(), field_);
    for (std::size_t i = 0; i < dom.size(); ++i) {
        SparseElem prod = mul(SparseElem{{dom[i], field_.one()}}, elem);
        for (const auto& [b, c] : prod) m.at(i, cod_pos.at(b)) = c;
    }
    return m;
}

Matrix BoundQuiverAlgebra::left_mult_matrix(const SparseElem& elem, int u, int v, int w) const {
    const auto& dom = pair_basis(v, w);
    const auto& cod = pair_basis(u, w);
    std::map<int, int> cod_pos;
    for (std::size_t i = 0; i < cod.size(); ++i) cod_pos[cod[i]] = static_cast<int>(i);
    Matrix m(dom.size(), cod.size(), field_);
    for (std::size_t i = 0; i < dom.size(); ++i) {
        SparseElem prod = mul(elem, SparseElem{{dom[i], field_.one()}});
        for (const auto& [b, c] : prod) m.at(i, cod_pos.at(b)) = c;
    }
    return m;
}

std::shared_ptr<const BoundQuiverAlgebra> BoundQuiverAlgebra::opposite() const {
    std::call_once(op_once_, [this] {
        Quiver rq = quiver_.reversed();
        std::vector<Relation> rrels;
        for (const auto& rel : relations_) {
            Relation rr;
            for (const auto& term : rel)
                rr.push_back(RelationTerm{term.coeff, term.path.reversed()});
            rrels.push_back(std::move(rr));
        }
        op_cache_ = compute_basis(std::move(rq), std::move(rrels), field_);
    });
    return op_cache_;
}

SparseElem BoundQuiverAlgebra::opposite_element(int basis_index, const BoundQuiverAlgebra& op) const {
    return op.path_element(basis_[basis_index].reversed());
}

bool relation_system_is_minimal(const Quiver& q, const std::vector<Relation>& rels, Field field,
                                std::size_t length_cap) {
    for (std::size_t skip = 0; skip < rels.size(); ++skip) {
        std::vector<Relation> subset;
        for (std::size_t i = 0; i < rels.size(); ++i)
            if (i != skip) subset.push_back(rels[i]);
        AlgebraPtr partial;
        try {
            partial = BoundQuiverAlgebra::compute_basis(q, subset, field, length_cap);
        } catch (const BadInput&) {
            continue;  // quotient infinite without this relation: certainly needed
        }
        SparseElem value;
        for (const auto& term : rels[skip])
            value = partial->add(value, partial->path_element(term.path), term.coeff);
        if (value.empty()) return false;
    }
    return true;
}

}  // namespace cf
