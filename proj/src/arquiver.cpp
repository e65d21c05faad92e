#include "clusterforge/arquiver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace cf {

int TranslationQuiver::find_iso_class(const Representation& m) const {
    for (int i = 0; i < n(); ++i)
        if (vertices[i].rep.dims == m.dims && is_isomorphic(vertices[i].rep, m)) return i;
    return -1;
}

std::vector<std::vector<std::pair<int, int>>> TranslationQuiver::in_adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> in(n());
    for (const auto& a : arrows) in[a.dst].push_back({a.src, a.mult});
    return in;
}

std::vector<std::vector<std::pair<int, int>>> TranslationQuiver::out_adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> out(n());
    for (const auto& a : arrows) out[a.src].push_back({a.dst, a.mult});
    return out;
}

bool TranslationQuiver::is_acyclic() const {
    std::vector<int> indeg(n(), 0);
    for (const auto& a : arrows) ++indeg[a.dst];
    std::deque<int> q;
    for (int i = 0; i < n(); ++i)
        if (indeg[i] == 0) q.push_back(i);
    int seen = 0;
    auto out = out_adjacency();
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        ++seen;
        for (auto [w, m] : out[v]) {
            (void)m;
            if (--indeg[w] == 0) q.push_back(w);
        }
    }
    return seen == n();
}

namespace {

SubQuotient radical_subrep(const Representation& m) {
    const Quiver& q = m.algebra->quiver();
    std::vector<Matrix> gens;
    for (int v = 0; v < q.n_vertices(); ++v) {
        Matrix rows(0, m.dims[v], m.algebra->field());
        for (int a : q.arrows_into(v)) rows = rows.vstack(m.arrow_mats[a]);
        gens.push_back(Subspace::from_rows(m.dims[v], rows).basis());
    }
    return submodule_closure(m, gens);
}

SubQuotient socle_quotient(const Representation& m) {
    const Quiver& q = m.algebra->quiver();
    Representation soc;
    VertexMaps incl;
    std::vector<Matrix> soc_basis;
    for (int v = 0; v < q.n_vertices(); ++v) {
        Matrix outmats(m.dims[v], 0, m.algebra->field());
        for (int a : q.arrows_from(v)) outmats = outmats.hstack(m.arrow_mats[a]);
        Subspace k = q.arrows_from(v).empty()
                         ? image_basis(Matrix::identity(m.dims[v], m.algebra->field()))
                         : kernel_basis(outmats);
        soc_basis.push_back(k.basis());
    }
    // quotient by the socle
    Representation quo;
    quo.algebra = m.algebra;
    quo.dims.resize(q.n_vertices());
    VertexMaps proj;
    for (int v = 0; v < q.n_vertices(); ++v) {
        Matrix p = quotient_map(m.dims[v], Subspace::from_rows(m.dims[v], soc_basis[v]));
        quo.dims[v] = (int)p.cols();
        proj.push_back(std::move(p));
    }
    for (int a = 0; a < q.n_arrows(); ++a) {
        int s = q.arrow(a).from, t = q.arrow(a).to;
        Matrix rhs = m.arrow_mats[a] * proj[t];
        Matrix ct;
        if (!solve_row_system(proj[s].transpose(), rhs.transpose(), ct))
            throw std::logic_error("socle quotient map not well defined");
        quo.arrow_mats.push_back(ct.transpose());
    }
    return SubQuotient{std::move(quo), std::move(proj)};
}

}  // namespace

TranslationQuiver knit(const AlgebraPtr& a, int cap) {
    TranslationQuiver g;
    g.algebra = a;
    std::map<std::string, std::vector<int>> buckets;
    std::deque<int> work;

    auto add_vertex = [&](const Representation& m) -> int {
        std::string key = dim_vector_key(m);
        for (int i : buckets[key])
            if (is_isomorphic(g.vertices[i].rep, m)) return i;
        TQVertex v;
        v.rep = m;
        v.projective = is_projective(m);
        v.injective = is_injective(m);
        int id = g.n();
        g.vertices.push_back(std::move(v));
        buckets[key].push_back(id);
        work.push_back(id);
        return id;
    };

    const Quiver& q = a->quiver();
    for (int v = 0; v < q.n_vertices(); ++v) add_vertex(rep_projective(a, v));
    for (int v = 0; v < q.n_vertices(); ++v) add_vertex(rep_injective(a, v));

    std::set<int> meshed;  // vertices whose in-arrows are recorded
    while (!work.empty()) {
        if (g.n() > cap) {
            g.complete = false;
            return g;
        }
        int id = work.front();
        work.pop_front();
        Representation m = g.vertices[id].rep;  // copy: vector may reallocate
        if (g.vertices[id].projective) {
            if (meshed.insert(id).second) {
                SubQuotient rad = radical_subrep(m);
                std::map<int, int> mult;
                for (const auto& s : decompose(rad.rep)) ++mult[add_vertex(s)];
                for (const auto& [src, k] : mult) g.arrows.push_back(TQArrow{src, id, k});
            }
        } else {
            AlmostSplitSequence ass = almost_split_sequence(m);
            int tid = add_vertex(ass.tau_m);
            g.vertices[id].tau = tid;
            g.vertices[tid].tau_inv = id;
            if (meshed.insert(id).second) {
                std::map<int, int> mult;
                for (const auto& s : ass.middle_summands) ++mult[add_vertex(s)];
                for (const auto& [src, k] : mult) g.arrows.push_back(TQArrow{src, id, k});
            }
        }
        if (!g.vertices[id].injective) {
            Representation ti = ar_translate_inverse(m);
            int iid = add_vertex(ti);
            g.vertices[id].tau_inv = iid;
            g.vertices[iid].tau = id;
        } else {
            SubQuotient quo = socle_quotient(m);
            for (const auto& s : decompose(quo.rep)) add_vertex(s);
        }
    }
    std::stable_sort(g.arrows.begin(), g.arrows.end(), [](const TQArrow& x, const TQArrow& y) {
        return x.src != y.src ? x.src < y.src : x.dst < y.dst;
    });
    return g;
}

void verify_mesh_conditions(const TranslationQuiver& g) {
    auto in = g.in_adjacency();
    auto out = g.out_adjacency();
    for (int i = 0; i < g.n(); ++i) {
        const TQVertex& v = g.vertices[i];
        if (v.projective) continue;
        if (v.tau < 0) throw std::logic_error("non-projective vertex without tau");
        // arrows X -> i match arrows tau(i) -> X with equal multiplicity
        std::map<int, int> into, from_tau;
        for (auto [s, m] : in[i]) into[s] += m;
        for (auto [d, m] : out[v.tau]) from_tau[d] += m;
        if (into != from_tau) throw std::logic_error("mesh condition violated");
        // dim additivity of the almost split sequence
        std::vector<int> sum = g.vertices[v.tau].rep.dims;
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += v.rep.dims[k];
        std::vector<int> middle(sum.size(), 0);
        for (auto [s, m] : in[i])
            for (std::size_t k = 0; k < middle.size(); ++k)
                middle[k] += m * g.vertices[s].rep.dims[k];
        if (middle != sum) throw std::logic_error("mesh dimension additivity violated");
    }
}

std::vector<bool> successors_of(const TranslationQuiver& g, const std::vector<int>& seeds) {
    std::vector<bool> seen(g.n(), false);
    std::deque<int> q(seeds.begin(), seeds.end());
    for (int s : seeds) seen[s] = true;
    auto out = g.out_adjacency();
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (auto [w, m] : out[v]) {
            (void)m;
            if (!seen[w]) { seen[w] = true; q.push_back(w); }
        }
    }
    return seen;
}

std::vector<bool> predecessors_of(const TranslationQuiver& g, const std::vector<int>& seeds) {
    std::vector<bool> seen(g.n(), false);
    std::deque<int> q(seeds.begin(), seeds.end());
    for (int s : seeds) seen[s] = true;
    auto in = g.in_adjacency();
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (auto [w, m] : in[v]) {
            (void)m;
            if (!seen[w]) { seen[w] = true; q.push_back(w); }
        }
    }
    return seen;
}

OrderingVerdict reachability(const TranslationQuiver& g, const std::vector<int>& s1,
                             const std::vector<int>& s2) {
    if (!g.complete) throw BadInput("quiver incomplete");
    OrderingVerdict v;
    v.acyclic = g.is_acyclic();
    std::vector<bool> succ1 = successors_of(g, s1), pred2 = predecessors_of(g, s2);
    v.s2_covered = true;
    for (int x : s2)
        if (!succ1[x]) v.s2_covered = false;
    v.s1_covered = true;
    for (int x : s1)
        if (!pred2[x]) v.s1_covered = false;
    // nontrivial paths S2 -> S1: a path through at least one arrow
    std::vector<bool> strict_succ2(g.n(), false);
    {
        auto out = g.out_adjacency();
        std::deque<int> q;
        for (int x : s2)
            for (auto [w, m] : out[x]) {
                (void)m;
                if (!strict_succ2[w]) { strict_succ2[w] = true; q.push_back(w); }
            }
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (auto [w, m] : out[x]) {
                (void)m;
                if (!strict_succ2[w]) { strict_succ2[w] = true; q.push_back(w); }
            }
        }
    }
    v.no_back_succ = true;
    for (int x : s1)
        if (strict_succ2[x]) v.no_back_succ = false;
    v.no_back_pred = v.no_back_succ;  // identical on path reachability, kept for audit
    return v;
}

SliceVerdict validate_slice(const TranslationQuiver& g, const std::vector<int>& candidate) {
    SliceVerdict out;
    if (!g.complete) return {false, "quiver incomplete"};
    // sincerity
    std::vector<int> total(g.algebra->quiver().n_vertices(), 0);
    for (int x : candidate)
        for (std::size_t k = 0; k < total.size(); ++k) total[k] += g.vertices[x].rep.dims[k];
    for (std::size_t k = 0; k < total.size(); ++k)
        if (total[k] == 0)
            return {false, "not sincere: vertex " + g.algebra->quiver().vertex_name((int)k)};
    // convexity: paths between slice members stay in the slice
    std::set<int> members(candidate.begin(), candidate.end());
    std::vector<bool> succ = successors_of(g, candidate), pred = predecessors_of(g, candidate);
    for (int x = 0; x < g.n(); ++x)
        if (succ[x] && pred[x] && !members.count(x))
            return {false, "not convex: vertex " + std::to_string(x) + " lies between slice members"};
    // one per tau-orbit it meets
    for (int x : candidate) {
        int y = g.vertices[x].tau;
        while (y >= 0) {
            if (members.count(y)) return {false, "two members in one tau-orbit"};
            y = g.vertices[y].tau;
        }
        y = g.vertices[x].tau_inv;
        while (y >= 0) {
            if (members.count(y)) return {false, "two members in one tau-orbit"};
            y = g.vertices[y].tau_inv;
        }
    }
    // Hom(S, tau S') = 0
    for (int x : candidate)
        for (int y : candidate) {
            int t = g.vertices[y].tau;
            if (t < 0) continue;
            if (hom_dim(g.vertices[x].rep, g.vertices[t].rep) > 0)
                return {false, "Hom(slice, tau slice) non-zero"};
        }
    return out;
}

std::vector<std::vector<int>> find_complete_slices(const TranslationQuiver& g) {
    // tau-orbits
    std::vector<int> orbit(g.n(), -1);
    int orbits = 0;
    for (int i = 0; i < g.n(); ++i) {
        if (orbit[i] >= 0) continue;
        int root = i;
        while (g.vertices[root].tau >= 0 && orbit[g.vertices[root].tau] < 0)
            root = g.vertices[root].tau;
        int id = orbits++;
        int x = root;
        while (x >= 0 && orbit[x] < 0) {
            orbit[x] = id;
            x = g.vertices[x].tau_inv;
        }
    }
    std::vector<std::vector<int>> members(orbits);
    for (int i = 0; i < g.n(); ++i) members[orbit[i]].push_back(i);
    std::vector<std::vector<int>> found;
    std::vector<int> choice;
    auto recurse = [&](auto&& self, int k) -> void {
        if (k == orbits) {
            std::vector<int> cand = choice;
            std::sort(cand.begin(), cand.end());
            if (validate_slice(g, cand).valid) found.push_back(cand);
            return;
        }
        for (int x : members[k]) {
            choice.push_back(x);
            self(self, k + 1);
            choice.pop_back();
        }
    };
    if (g.complete) recurse(recurse, 0);
    return found;
}

TranslationQuiver delete_vertices(const TranslationQuiver& g, const std::vector<int>& removed) {
    std::set<int> gone(removed.begin(), removed.end());
    std::vector<int> new_id(g.n(), -1);
    TranslationQuiver out;
    out.algebra = g.algebra;
    out.complete = g.complete;
    for (int i = 0; i < g.n(); ++i) {
        if (gone.count(i)) continue;
        new_id[i] = out.n();
        TQVertex v;
        v.rep = g.vertices[i].rep;
        v.projective = g.vertices[i].projective;
        v.injective = g.vertices[i].injective;
        out.vertices.push_back(std::move(v));
    }
    for (const auto& a : g.arrows)
        if (new_id[a.src] >= 0 && new_id[a.dst] >= 0)
            out.arrows.push_back(TQArrow{new_id[a.src], new_id[a.dst], a.mult});
    for (int i = 0; i < g.n(); ++i) {
        if (new_id[i] < 0) continue;
        int t = g.vertices[i].tau;
        if (t >= 0 && new_id[t] >= 0) {
            out.vertices[new_id[i]].tau = new_id[t];
            out.vertices[new_id[t]].tau_inv = new_id[i];
        }
    }
    return out;
}

namespace {

std::string vertex_signature(const TranslationQuiver& g, int i,
                             const std::vector<std::vector<std::pair<int, int>>>& in,
                             const std::vector<std::vector<std::pair<int, int>>>& out,
                             const std::vector<int>& colors) {
    std::ostringstream os;
    os << (g.vertices[i].tau >= 0) << (g.vertices[i].tau_inv >= 0) << ";";
    std::vector<int> a, b;
    for (auto [s, m] : in[i]) a.push_back(colors[s] * 100 + m);
    for (auto [d, m] : out[i]) b.push_back(colors[d] * 100 + m);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int x : a) os << x << ",";
    os << ";";
    for (int x : b) os << x << ",";
    if (g.vertices[i].tau >= 0) os << ";t" << colors[g.vertices[i].tau];
    if (g.vertices[i].tau_inv >= 0) os << ";u" << colors[g.vertices[i].tau_inv];
    return os.str();
}

std::vector<int> refine_colors(const TranslationQuiver& g) {
    auto in = g.in_adjacency();
    auto out = g.out_adjacency();
    std::vector<int> colors(g.n(), 0);
    for (int round = 0; round < g.n(); ++round) {
        std::vector<std::string> sigs(g.n());
        for (int i = 0; i < g.n(); ++i)
            sigs[i] = std::to_string(colors[i]) + "|" + vertex_signature(g, i, in, out, colors);
        // canonical ids: rank of the signature in sorted order, so that color
        // values are comparable across different quivers
        std::map<std::string, int> ids;
        for (const auto& s : sigs) ids[s] = 0;
        int rank = 0;
        for (auto& [s, id] : ids) id = rank++;
        std::vector<int> next(g.n());
        for (int i = 0; i < g.n(); ++i) next[i] = ids[sigs[i]];
        if (next == colors) break;
        colors = next;
    }
    return colors;
}

bool extend_iso(const TranslationQuiver& a, const TranslationQuiver& b,
                const std::vector<int>& ca, const std::vector<int>& cb, std::vector<int>& map,
                std::vector<bool>& used,
                const std::vector<std::vector<std::pair<int, int>>>& ina,
                const std::vector<std::vector<std::pair<int, int>>>& outa,
                const std::vector<std::vector<std::pair<int, int>>>& inb,
                const std::vector<std::vector<std::pair<int, int>>>& outb) {
    int next = -1;
    for (int i = 0; i < a.n(); ++i)
        if (map[i] < 0) { next = i; break; }
    if (next < 0) return true;
    for (int j = 0; j < b.n(); ++j) {
        if (used[j] || cb[j] != ca[next]) continue;
        // local consistency with already-mapped neighbours and tau
        auto ok = [&]() {
            auto check_adj = [&](const std::vector<std::pair<int, int>>& xs,
                                 const std::vector<std::pair<int, int>>& ys) {
                for (auto [x, m] : xs) {
                    if (map[x] < 0) continue;
                    int found = 0;
                    for (auto [y, m2] : ys)
                        if (y == map[x]) found = m2;
                    if (found != m) return false;
                }
                return true;
            };
            if (!check_adj(ina[next], inb[j])) return false;
            if (!check_adj(outa[next], outb[j])) return false;
            int ta = a.vertices[next].tau, tb = b.vertices[j].tau;
            if ((ta >= 0) != (tb >= 0)) return false;
            if (ta >= 0 && map[ta] >= 0 && map[ta] != tb) return false;
            int ia = a.vertices[next].tau_inv, ib = b.vertices[j].tau_inv;
            if ((ia >= 0) != (ib >= 0)) return false;
            if (ia >= 0 && map[ia] >= 0 && map[ia] != ib) return false;
            return true;
        };
        if (!ok()) continue;
        map[next] = j;
        used[j] = true;
        if (extend_iso(a, b, ca, cb, map, used, ina, outa, inb, outb)) return true;
        map[next] = -1;
        used[j] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> tq_isomorphism(const TranslationQuiver& a,
                                               const TranslationQuiver& b) {
    if (a.n() != b.n() || a.arrows.size() != b.arrows.size()) return std::nullopt;
    std::vector<int> ca = refine_colors(a), cb = refine_colors(b);
    std::multiset<int> ma(ca.begin(), ca.end()), mb(cb.begin(), cb.end());
    if (ma != mb) return std::nullopt;
    std::vector<int> map(a.n(), -1);
    std::vector<bool> used(b.n(), false);
    auto ina = a.in_adjacency(), outa = a.out_adjacency();
    auto inb = b.in_adjacency(), outb = b.out_adjacency();
    if (extend_iso(a, b, ca, cb, map, used, ina, outa, inb, outb)) {
        // final full check
        std::map<std::pair<int, int>, int> ea, eb;
        for (const auto& ar : a.arrows) ea[{map[ar.src], map[ar.dst]}] += ar.mult;
        for (const auto& ar : b.arrows) eb[{ar.src, ar.dst}] += ar.mult;
        if (ea != eb) return std::nullopt;
        for (int i = 0; i < a.n(); ++i) {
            int ta = a.vertices[i].tau;
            int tb = b.vertices[map[i]].tau;
            if ((ta >= 0) != (tb >= 0)) return std::nullopt;
            if (ta >= 0 && map[ta] != tb) return std::nullopt;
        }
        return map;
    }
    return std::nullopt;
}

std::string tq_to_dot(const TranslationQuiver& g, const std::string& name) {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n  rankdir=LR;\n";
    for (int i = 0; i < g.n(); ++i) {
        const TQVertex& v = g.vertices[i];
        std::string label;
        for (std::size_t k = 0; k < v.rep.dims.size(); ++k)
            label += (k ? " " : "") + std::to_string(v.rep.dims[k]);
        std::string shape = "box";
        if (v.projective && v.injective)
            shape = "diamond";
        else if (v.removal_marker)
            shape = "circle";
        os << "  n" << i << " [label=\"" << label << "\", shape=" << shape;
        if (v.projective) os << ", color=blue";
        if (v.injective && !v.projective) os << ", color=red";
        os << "];\n";
    }
    for (const auto& a : g.arrows)
        for (int k = 0; k < a.mult; ++k) os << "  n" << a.src << " -> n" << a.dst << ";\n";
    for (int i = 0; i < g.n(); ++i)
        if (g.vertices[i].tau >= 0)
            os << "  n" << i << " -> n" << g.vertices[i].tau
               << " [style=dashed, constraint=false, color=gray];\n";
    os << "}\n";
    return os.str();
}

}  // namespace cf
