#include "clusterforge/sca.hpp"

#include <algorithm>

namespace cf {

Matrix StructureConstantAlgebra::mul_rows(const Matrix& x, const Matrix& y) const {
    Matrix out(1, dim(), field);
    for (int i = 0; i < dim(); ++i) {
        if (x.at(0, i) == 0) continue;
        for (int j = 0; j < dim(); ++j) {
            if (y.at(0, j) == 0) continue;
            Scalar c = field.mul(x.at(0, i), y.at(0, j));
            for (const auto& [k, s] : table[i * dim() + j])
                out.at(0, k) = field.add(out.at(0, k), field.mul(c, s));
        }
    }
    return out;
}

void StructureConstantAlgebra::validate() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            for (const auto& [k, s] : table[i * dim() + j]) {
                (void)s;
                if (right[i] != left[j] || left[k] != left[i] || right[k] != right[j])
                    throw std::logic_error("structure constants break the idempotent grading");
            }
            if (right[i] != left[j] && !table[i * dim() + j].empty())
                throw std::logic_error("non-composable product is non-zero");
        }
    for (int v = 0; v < n_vertices(); ++v) {
        int e = idempotent[v];
        for (int i = 0; i < dim(); ++i) {
            Matrix xi(1, dim(), field);
            xi.at(0, i) = 1;
            Matrix ei(1, dim(), field);
            ei.at(0, e) = 1;
            Matrix le = mul_rows(ei, xi), re = mul_rows(xi, ei);
            Matrix expect_l(1, dim(), field), expect_r(1, dim(), field);
            if (left[i] == v) expect_l.at(0, i) = 1;
            if (right[i] == v) expect_r.at(0, i) = 1;
            if (le != expect_l || re != expect_r)
                throw std::logic_error("idempotents do not act as units on the grading");
        }
    }
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            for (int k = 0; k < dim(); ++k) {
                Matrix xi(1, dim(), field), xj(1, dim(), field), xk(1, dim(), field);
                xi.at(0, i) = 1;
                xj.at(0, j) = 1;
                xk.at(0, k) = 1;
                if (mul_rows(mul_rows(xi, xj), xk) != mul_rows(xi, mul_rows(xj, xk)))
                    throw std::logic_error("structure constants are not associative");
            }
}

namespace {

struct Graded {
    // spanning rows of a subspace of the algebra, restricted per component
    std::vector<Matrix> comp;  // [u * n + v]: rows are 1×dim but supported in comp
};

Matrix project_component(const StructureConstantAlgebra& sca, const Matrix& rows, int u, int v) {
    Matrix out(rows.rows(), sca.dim(), sca.field);
    for (std::size_t r = 0; r < rows.rows(); ++r)
        for (int i = 0; i < sca.dim(); ++i)
            if (sca.left[i] == u && sca.right[i] == v) out.at(r, i) = rows.at(r, i);
    return out;
}

Matrix radical_rows(const StructureConstantAlgebra& sca) {
    const Field& fld = sca.field;
    if (sca.radical_elems) {
        Matrix rows(sca.radical_elems->size(), sca.dim(), fld);
        for (std::size_t r = 0; r < sca.radical_elems->size(); ++r)
            rows.at(r, (*sca.radical_elems)[r]) = 1;
        return Subspace::from_rows(sca.dim(), rows).basis();
    }
    if (!fld.is_rational())
        throw BadInput("radical computation over F_p requires an explicit radical basis");
    // Dickson: rad = radical of the trace form of the regular representation
    auto trace_of_left_mult = [&](const Matrix& y) {
        Scalar t(0);
        for (int k = 0; k < sca.dim(); ++k) {
            Matrix bk(1, sca.dim(), fld);
            bk.at(0, k) = 1;
            Matrix prod = sca.mul_rows(y, bk);
            t += prod.at(0, k);
        }
        return t;
    };
    Matrix gram(sca.dim(), sca.dim(), fld);
    for (int i = 0; i < sca.dim(); ++i)
        for (int j = 0; j < sca.dim(); ++j) {
            Matrix xi(1, sca.dim(), fld), xj(1, sca.dim(), fld);
            xi.at(0, i) = 1;
            xj.at(0, j) = 1;
            gram.at(i, j) = trace_of_left_mult(sca.mul_rows(xi, xj));
        }
    return kernel_basis(gram).basis();
}

// spanning rows used to multiply: the supplied basis elements when available
// (cheap singletons), otherwise the echelon rows
std::vector<Matrix> radical_generators(const StructureConstantAlgebra& sca, const Matrix& rad) {
    std::vector<Matrix> gens;
    if (sca.radical_elems) {
        for (int i : *sca.radical_elems) {
            Matrix g(1, sca.dim(), sca.field);
            g.at(0, i) = 1;
            gens.push_back(std::move(g));
        }
    } else {
        for (std::size_t r = 0; r < rad.rows(); ++r) gens.push_back(rad.row(r));
    }
    return gens;
}

// nilpotency degree of the span; throws if the span is not nilpotent
std::size_t nilpotency_of(const StructureConstantAlgebra& sca, const Matrix& rad) {
    std::vector<Matrix> gens = radical_generators(sca, rad);
    Matrix power = rad;
    std::size_t nil = 1;
    std::size_t prev = sca.dim() + 1;
    while (power.rows() > 0) {
        if (power.rows() >= prev)
            throw BadInput("supplied radical is not nilpotent");
        prev = power.rows();
        RowEchelon next(sca.dim(), sca.field);
        for (std::size_t r = 0; r < power.rows(); ++r)
            for (const auto& g : gens) next.add(sca.mul_rows(power.row(r), g));
        power = next.basis();
        ++nil;
    }
    return nil;
}

bool in_ideal(const Quiver& q, const std::vector<Relation>& rels, const Relation& candidate,
              Field field) {
    if (rels.empty()) return false;
    AlgebraPtr partial;
    try {
        partial = BoundQuiverAlgebra::compute_basis(q, rels, field);
    } catch (const BadInput&) {
        return false;  // quotient not yet finite: treat as not generated (re-checked later)
    }
    SparseElem value;
    for (const auto& term : candidate)
        value = partial->add(value, partial->path_element(term.path), term.coeff);
    return value.empty();
}

}  // namespace

PresentResult present(const StructureConstantAlgebra& sca, const std::vector<ArrowHint>& hints) {
    const Field& fld = sca.field;
    int n = sca.n_vertices();
    Matrix rad = radical_rows(sca);
    if ((int)rad.rows() != sca.dim() - n)
        throw BadInput("not basic: radical has codimension " +
                       std::to_string(sca.dim() - rad.rows()) + ", expected " + std::to_string(n));
    for (int v = 0; v < n; ++v) {
        Matrix comp = Subspace::from_rows(sca.dim(), project_component(sca, rad, v, v)).basis();
        int full = 0;
        for (int i = 0; i < sca.dim(); ++i)
            if (sca.left[i] == v && sca.right[i] == v) ++full;
        if (full - (int)comp.rows() != 1)
            throw BadInput("not basic: e_" + sca.vertex_names[v] + " Λ e_" + sca.vertex_names[v] +
                           " is not local");
    }
    std::size_t nil = nilpotency_of(sca, rad);

    // rad^2 and the arrow spaces
    std::vector<Matrix> gens = radical_generators(sca, rad);
    RowEchelon rad2_acc(sca.dim(), fld);
    for (const auto& g1 : gens)
        for (const auto& g2 : gens) rad2_acc.add(sca.mul_rows(g1, g2));
    Matrix rad2 = rad2_acc.basis();

    Quiver quiver;
    for (int v = 0; v < n; ++v) quiver.add_vertex(sca.vertex_names[v]);
    std::vector<Matrix> arrow_lifts;
    int anon_counter = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            Matrix ruv = Subspace::from_rows(sca.dim(), project_component(sca, rad, u, v)).basis();
            Matrix r2uv =
                Subspace::from_rows(sca.dim(), project_component(sca, rad2, u, v)).basis();
            std::size_t k = ruv.rows() - r2uv.rows();
            std::vector<const ArrowHint*> here;
            for (const auto& h : hints)
                if (h.from == u && h.to == v) here.push_back(&h);
            if (!here.empty()) {
                if (here.size() != k)
                    throw BadInput("arrow hints for component (" + sca.vertex_names[u] + "," +
                                   sca.vertex_names[v] + ") have wrong count");
                Matrix stack = r2uv;
                for (const auto* h : here) {
                    Matrix cand = stack.vstack(h->lift);
                    if (cand.rank() != stack.rank() + 1)
                        throw BadInput("arrow hint '" + h->name +
                                       "' is not independent modulo rad^2");
                    stack = cand;
                    quiver.add_arrow(h->name, sca.vertex_names[u], sca.vertex_names[v]);
                    arrow_lifts.push_back(h->lift);
                }
            } else {
                Matrix stack = r2uv;
                for (std::size_t r = 0; r < ruv.rows() && stack.rows() < r2uv.rows() + k; ++r) {
                    Matrix cand = stack.vstack(ruv.row(r));
                    if (cand.rank() == stack.rank() + 1) {
                        stack = cand;
                        quiver.add_arrow("x" + std::to_string(anon_counter++),
                                         sca.vertex_names[u], sca.vertex_names[v]);
                        arrow_lifts.push_back(ruv.row(r));
                    }
                }
            }
        }

    // enumerate paths by length, with path ids and evaluations
    struct PathRec {
        Path path;
        Matrix eval;
    };
    std::vector<PathRec> paths;
    std::map<std::string, int> path_id;
    auto key_of = [&](const Path& p) {
        std::string k = p.arrows.empty() ? "e" + std::to_string(p.base) : "";
        for (int a : p.arrows) k += std::to_string(a) + ",";
        return k;
    };
    std::vector<std::vector<int>> by_len(1);
    for (int v = 0; v < n; ++v) {
        Matrix e(1, sca.dim(), fld);
        e.at(0, sca.idempotent[v]) = 1;
        path_id[key_of(Path::trivial(v))] = (int)paths.size();
        by_len[0].push_back((int)paths.size());
        paths.push_back(PathRec{Path::trivial(v), e});
    }
    for (std::size_t len = 1; len <= nil; ++len) {
        by_len.emplace_back();
        for (int pid : by_len[len - 1]) {
            int t = paths[pid].path.target(quiver);
            for (int a = 0; a < quiver.n_arrows(); ++a) {
                if (quiver.arrow(a).from != t) continue;
                Path ext = paths[pid].path;
                if (ext.arrows.empty()) ext.base = -1;
                ext.arrows.push_back(a);
                Matrix ev = sca.mul_rows(paths[pid].eval, arrow_lifts[a]);
                path_id[key_of(ext)] = (int)paths.size();
                by_len[len].push_back((int)paths.size());
                paths.push_back(PathRec{ext, std::move(ev)});
            }
        }
        if (paths.size() > 200000) throw BadInput("present: path explosion");
    }

    // kernel of the evaluation per component, over all paths of length 2..nil
    using IdealElem = std::map<int, Scalar>;  // path id -> coeff
    std::vector<IdealElem> candidates;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            std::vector<int> comp_paths;
            for (std::size_t l = 2; l <= nil; ++l)
                for (int pid : by_len[l])
                    if (paths[pid].path.source(quiver) == u &&
                        paths[pid].path.target(quiver) == v)
                        comp_paths.push_back(pid);
            if (comp_paths.empty()) continue;
            Matrix ev(comp_paths.size(), sca.dim(), fld);
            for (std::size_t i = 0; i < comp_paths.size(); ++i)
                for (int j = 0; j < sca.dim(); ++j)
                    ev.at(i, j) = paths[comp_paths[i]].eval.at(0, j);
            Subspace ker = kernel_basis(ev);
            for (std::size_t r = 0; r < ker.dim(); ++r) {
                IdealElem rel;
                for (std::size_t i = 0; i < comp_paths.size(); ++i)
                    if (ker.basis().at(r, i) != 0) rel[comp_paths[i]] = ker.basis().at(r, i);
                candidates.push_back(std::move(rel));
            }
        }
    auto maxdeg = [&](const IdealElem& e) {
        std::size_t d = 0;
        for (const auto& [pid, c] : e) {
            (void)c;
            d = std::max(d, paths[pid].path.length());
        }
        return d;
    };
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const IdealElem& x, const IdealElem& y) { return maxdeg(x) < maxdeg(y); });

    // incremental span of the ideal generated so far (truncated at length nil)
    std::map<int, IdealElem> pivots;  // leading path id -> monic element
    auto reduce = [&](IdealElem e) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = e.rbegin(); it != e.rend(); ++it) {
                auto piv = pivots.find(it->first);
                if (piv == pivots.end()) continue;
                Scalar c = it->second;
                for (const auto& [pid, pc] : piv->second) {
                    Scalar& slot = e[pid];
                    slot = fld.sub(slot, fld.mul(c, pc));
                    if (slot == 0) e.erase(pid);
                }
                changed = true;
                break;
            }
        }
        return e;
    };
    auto span_add = [&](IdealElem e) {
        e = reduce(std::move(e));
        if (e.empty()) return;
        Scalar inv = fld.inv(e.rbegin()->second);
        int lead = e.rbegin()->first;
        for (auto& [pid, c] : e) c = fld.mul(c, inv);
        pivots[lead] = std::move(e);
    };
    std::vector<Relation> relations;
    for (const auto& cand : candidates) {
        IdealElem red = reduce(cand);
        if (red.empty()) continue;
        Relation rel;
        for (const auto& [pid, c] : red) rel.push_back(RelationTerm{c, paths[pid].path});
        int src = relation_source(rel, quiver), tgt = relation_target(rel, quiver);
        std::size_t d = maxdeg(red);
        relations.push_back(std::move(rel));
        // extend the span by all p·cand·q that stay within the length budget
        for (std::size_t lp = 0; lp + d <= nil; ++lp)
            for (int ppid : by_len[lp]) {
                if (paths[ppid].path.target(quiver) != src) continue;
                for (std::size_t lq = 0; lp + d + lq <= nil; ++lq)
                    for (int qpid : by_len[lq]) {
                        if (paths[qpid].path.source(quiver) != tgt) continue;
                        IdealElem prod;
                        for (const auto& [mid, c] : red) {
                            Path full = paths[ppid]
                                            .path.then(paths[mid].path, quiver)
                                            .then(paths[qpid].path, quiver);
                            auto it = path_id.find(key_of(full));
                            if (it == path_id.end()) throw std::logic_error("path id missing");
                            Scalar& slot = prod[it->second];
                            slot = fld.add(slot, c);
                            if (slot == 0) prod.erase(it->second);
                        }
                        span_add(std::move(prod));
                    }
            }
    }
    bool dropped = true;
    while (dropped) {
        dropped = false;
        for (std::size_t i = 0; i < relations.size(); ++i) {
            std::vector<Relation> rest;
            for (std::size_t j = 0; j < relations.size(); ++j)
                if (j != i) rest.push_back(relations[j]);
            if (in_ideal(quiver, rest, relations[i], fld)) {
                relations = std::move(rest);
                dropped = true;
                break;
            }
        }
    }

    PresentResult out;
    out.algebra = BoundQuiverAlgebra::compute_basis(quiver, relations, fld);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int got = (int)out.algebra->pair_basis(u, v).size();
            int want = 0;
            for (int i = 0; i < sca.dim(); ++i)
                if (sca.left[i] == u && sca.right[i] == v) ++want;
            if (got != want)
                throw std::logic_error("present: dimension mismatch on component (" +
                                       sca.vertex_names[u] + "," + sca.vertex_names[v] +
                                       "): presented " + std::to_string(got) + ", input " +
                                       std::to_string(want));
        }
    for (int b = 0; b < out.algebra->dim(); ++b) {
        const Path& p = out.algebra->basis_path(b);
        Matrix ev(1, sca.dim(), fld);
        ev.at(0, sca.idempotent[p.source(out.algebra->quiver())]) = 1;
        for (int a : p.arrows) ev = sca.mul_rows(ev, arrow_lifts[a]);
        out.basis_eval.push_back(std::move(ev));
    }
    return out;
}

}  // namespace cf
