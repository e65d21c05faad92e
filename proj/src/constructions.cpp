#include "clusterforge/constructions.hpp"

namespace cf {

std::vector<NewArrowSpec> bimodule_top(const Bimodule& x, const std::string& prefix) {
    const AlgebraPtr& c = x.left_alg;
    const Quiver& q = c->quiver();
    const Field& fld = c->field();
    int n = q.n_vertices();
    std::vector<NewArrowSpec> out;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int d = x.comp(u, v);
            if (d == 0) continue;
            // rad·X + X·rad inside component (u,v)
            Matrix sub(0, d, fld);
            for (int a = 0; a < q.n_arrows(); ++a) {
                if (q.arrow(a).from == u)  // a: u -> w, image of left action
                    sub = sub.vstack(x.left_act[a][v]);
                if (q.arrow(a).to == v)  // b: w -> v, image of right action
                    sub = sub.vstack(x.right_act[a][u]);
            }
            Subspace s = Subspace::from_rows(d, sub);
            Matrix stack = s.basis();
            for (int i = 0; i < d && (int)stack.rows() < d; ++i) {
                Matrix e(1, d, fld);
                e.at(0, i) = 1;
                Matrix cand = stack.vstack(e);
                if (cand.rank() == stack.rank() + 1) {
                    stack = cand;
                    out.push_back(NewArrowSpec{u, v, "", e});
                }
            }
        }
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i].name = out.size() == 1 ? prefix : prefix + std::to_string(i);
    return out;
}

namespace {

// Builds the structure constants of C ⋉ X on basis(C) ++ basis(X); X-basis
// elements are enumerated per component in (u,v) order.
struct ExtensionSca {
    StructureConstantAlgebra sca;
    std::vector<int> x_offset;  // [u * n + v]: global index of the component start
    int c_dim = 0;
};

ExtensionSca extension_sca(const AlgebraPtr& c, const Bimodule& x) {
    const Quiver& q = c->quiver();
    const Field& fld = c->field();
    int n = q.n_vertices();
    ExtensionSca out;
    StructureConstantAlgebra& s = out.sca;
    s.field = fld;
    for (int v = 0; v < n; ++v) s.vertex_names.push_back(q.vertex_name(v));
    out.c_dim = c->dim();
    for (int b = 0; b < c->dim(); ++b) {
        s.left.push_back(c->basis_source(b));
        s.right.push_back(c->basis_target(b));
    }
    out.x_offset.assign(n * n, -1);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            out.x_offset[u * n + v] = s.dim();
            for (int k = 0; k < x.comp(u, v); ++k) {
                s.left.push_back(u);
                s.right.push_back(v);
            }
        }
    s.idempotent.resize(n);
    for (int v = 0; v < n; ++v) s.idempotent[v] = c->idempotent_index(v);
    int dim = s.dim();
    s.table.assign(dim * dim, {});
    auto set_product = [&](int i, int j, const std::vector<std::pair<int, Scalar>>& val) {
        s.table[i * dim + j] = val;
    };
    // C x C
    for (int i = 0; i < c->dim(); ++i)
        for (int j = 0; j < c->dim(); ++j) {
            SparseElem prod = c->mul(SparseElem{{i, fld.one()}}, SparseElem{{j, fld.one()}});
            std::vector<std::pair<int, Scalar>> row(prod.begin(), prod.end());
            set_product(i, j, row);
        }
    // C x X (left action) and X x C (right action); X x X = 0
    for (int i = 0; i < c->dim(); ++i) {
        int cu = c->basis_source(i), cv = c->basis_target(i);
        const Path& p = c->basis_path(i);
        for (int u2 = 0; u2 < n; ++u2)
            for (int v2 = 0; v2 < n; ++v2) {
                int d = x.comp(u2, v2);
                if (d == 0) continue;
                int off = out.x_offset[u2 * n + v2];
                if (u2 == cv) {
                    // p · x: comp(cv, v2) -> comp(cu, v2)
                    Matrix act = x.left_path_action(p, v2);
                    int off_dst = out.x_offset[cu * n + v2];
                    for (int k = 0; k < d; ++k) {
                        std::vector<std::pair<int, Scalar>> row;
                        for (std::size_t m2 = 0; m2 < act.cols(); ++m2)
                            if (act.at(k, m2) != 0)
                                row.emplace_back(off_dst + (int)m2, act.at(k, m2));
                        set_product(i, off + k, row);
                    }
                }
                if (v2 == cu) {
                    // x · p: comp(u2, cu) -> comp(u2, cv)
                    Matrix act = x.right_path_action(u2, p);
                    int off_dst = out.x_offset[u2 * n + cv];
                    for (int k = 0; k < d; ++k) {
                        std::vector<std::pair<int, Scalar>> row;
                        for (std::size_t m2 = 0; m2 < act.cols(); ++m2)
                            if (act.at(k, m2) != 0)
                                row.emplace_back(off_dst + (int)m2, act.at(k, m2));
                        set_product(off + k, i, row);
                    }
                }
            }
    }
    std::vector<int> radical;
    for (int i = 0; i < c->dim(); ++i)
        if (c->basis_path(i).length() > 0) radical.push_back(i);
    for (int i = c->dim(); i < dim; ++i) radical.push_back(i);
    s.radical_elems = radical;
    return out;
}

}  // namespace

TrivialExtensionAlgebra trivial_extension(const AlgebraPtr& c, const Bimodule& e) {
    if (e.left_alg != c || e.right_alg != c)
        throw BadInput("trivial_extension: bimodule is not over the given algebra");
    const Quiver& q = c->quiver();
    ExtensionSca ext = extension_sca(c, e);
    std::vector<NewArrowSpec> new_arrows = bimodule_top(e, "d");
    std::vector<ArrowHint> hints;
    for (int a = 0; a < q.n_arrows(); ++a) {
        Matrix lift(1, ext.sca.dim(), c->field());
        SparseElem elem = c->path_element(Path{-1, {a}});
        for (const auto& [b, coeff] : elem) lift.at(0, b) = coeff;
        hints.push_back(ArrowHint{q.arrow(a).from, q.arrow(a).to, q.arrow(a).name, lift});
    }
    int n = q.n_vertices();
    for (const auto& na : new_arrows) {
        Matrix lift(1, ext.sca.dim(), c->field());
        int off = ext.x_offset[na.left_vertex * n + na.right_vertex];
        for (std::size_t k = 0; k < na.rep.cols(); ++k) lift.at(0, off + k) = na.rep.at(0, k);
        hints.push_back(ArrowHint{na.left_vertex, na.right_vertex, na.name, lift});
    }
    TrivialExtensionAlgebra out;
    out.base = c;
    out.algebra = present(ext.sca, hints).algebra;
    out.new_arrows = std::move(new_arrows);
    if (out.algebra->dim() != c->dim() + e.dim())
        throw std::logic_error("trivial extension dimension mismatch");
    return out;
}

namespace {

std::string level_name(const std::string& base, int level) {
    return "(" + base + "," + std::to_string(level) + ")";
}

WindowedAlgebra build_window(WindowKind kind, const AlgebraPtr& c, const Bimodule& glue,
                             const std::string& arrow_prefix, int lo, int hi) {
    if (lo > hi) throw BadInput("window: empty level range");
    const Quiver& q = c->quiver();
    const Field& fld = c->field();
    int n = q.n_vertices();
    int levels = hi - lo + 1;
    std::vector<NewArrowSpec> new_arrows = bimodule_top(glue, arrow_prefix);

    StructureConstantAlgebra s;
    s.field = fld;
    WindowedAlgebra w;
    w.kind = kind;
    w.base = c;
    w.level_lo = lo;
    w.level_hi = hi;
    w.new_arrows = new_arrows;

    for (int i = lo; i <= hi; ++i)
        for (int v = 0; v < n; ++v) {
            w.base_vertex_of.push_back(v);
            w.level_of.push_back(i);
            s.vertex_names.push_back(level_name(q.vertex_name(v), i));
        }
    // basis: per level the C-basis, then per level pair (i, i-1) the glue
    // basis by component
    struct Tag {
        bool is_glue;
        int level;   // level of a C-element; source level of a glue element
        int index;   // C basis index, or component-offset glue index
    };
    std::vector<Tag> tags;
    std::vector<int> c_offset(levels, 0);
    std::vector<int> glue_offset((std::size_t)levels * n * n, -1);
    auto wv = [&](int v, int i) { return (i - lo) * n + v; };
    for (int i = lo; i <= hi; ++i) {
        c_offset[i - lo] = (int)tags.size();
        for (int b = 0; b < c->dim(); ++b) {
            tags.push_back(Tag{false, i, b});
            s.left.push_back(wv(c->basis_source(b), i));
            s.right.push_back(wv(c->basis_target(b), i));
        }
    }
    for (int i = lo + 1; i <= hi; ++i)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                glue_offset[((i - lo) * n + u) * n + v] = (int)tags.size();
                for (int k = 0; k < glue.comp(u, v); ++k) {
                    tags.push_back(Tag{true, i, 0});
                    s.left.push_back(wv(u, i));
                    s.right.push_back(wv(v, i - 1));
                }
            }
    int dim = (int)tags.size();
    s.idempotent.resize(levels * n);
    for (int i = lo; i <= hi; ++i)
        for (int v = 0; v < n; ++v)
            s.idempotent[wv(v, i)] = c_offset[i - lo] + c->idempotent_index(v);
    s.table.assign((std::size_t)dim * dim, {});
    auto put = [&](int i, int j, int dst_base, const Matrix& act, int row) {
        std::vector<std::pair<int, Scalar>> out;
        for (std::size_t m2 = 0; m2 < act.cols(); ++m2)
            if (act.at(row, m2) != 0) out.emplace_back(dst_base + (int)m2, act.at(row, m2));
        s.table[(std::size_t)i * dim + j] = std::move(out);
    };
    // C_i x C_i
    for (int i = lo; i <= hi; ++i)
        for (int b1 = 0; b1 < c->dim(); ++b1)
            for (int b2 = 0; b2 < c->dim(); ++b2) {
                SparseElem prod =
                    c->mul(SparseElem{{b1, fld.one()}}, SparseElem{{b2, fld.one()}});
                std::vector<std::pair<int, Scalar>> row;
                for (const auto& [k, coeff] : prod)
                    row.emplace_back(c_offset[i - lo] + k, coeff);
                s.table[(std::size_t)(c_offset[i - lo] + b1) * dim + (c_offset[i - lo] + b2)] =
                    std::move(row);
            }
    // C_i x Glue_i (left action) and Glue_i x C_{i-1} (right action)
    for (int i = lo + 1; i <= hi; ++i)
        for (int b = 0; b < c->dim(); ++b) {
            const Path& p = c->basis_path(b);
            int cu = c->basis_source(b), cv = c->basis_target(b);
            for (int u2 = 0; u2 < n; ++u2)
                for (int v2 = 0; v2 < n; ++v2) {
                    int d = glue.comp(u2, v2);
                    if (d == 0) continue;
                    int off = glue_offset[((i - lo) * n + u2) * n + v2];
                    if (u2 == cv) {
                        Matrix act = glue.left_path_action(p, v2);
                        int dst = glue_offset[((i - lo) * n + cu) * n + v2];
                        for (int k = 0; k < d; ++k)
                            put(c_offset[i - lo] + b, off + k, dst, act, k);
                    }
                    if (v2 == cu) {
                        Matrix act = glue.right_path_action(u2, p);
                        int dst = glue_offset[((i - lo) * n + u2) * n + cv];
                        for (int k = 0; k < d; ++k)
                            put(off + k, c_offset[i - lo - 1] + b, dst, act, k);
                    }
                }
        }
    std::vector<int> radical;
    for (int t = 0; t < dim; ++t)
        if (tags[t].is_glue || c->basis_path(tags[t].index).length() > 0) radical.push_back(t);
    s.radical_elems = radical;

    std::vector<ArrowHint> hints;
    for (int i = lo; i <= hi; ++i)
        for (int a = 0; a < q.n_arrows(); ++a) {
            Matrix lift(1, dim, fld);
            for (const auto& [b, coeff] : c->path_element(Path{-1, {a}}))
                lift.at(0, c_offset[i - lo] + b) = coeff;
            hints.push_back(ArrowHint{wv(q.arrow(a).from, i), wv(q.arrow(a).to, i),
                                      level_name(q.arrow(a).name, i), lift});
        }
    for (int i = lo + 1; i <= hi; ++i)
        for (const auto& na : new_arrows) {
            Matrix lift(1, dim, fld);
            int off = glue_offset[((i - lo) * n + na.left_vertex) * n + na.right_vertex];
            for (std::size_t k = 0; k < na.rep.cols(); ++k) lift.at(0, off + k) = na.rep.at(0, k);
            hints.push_back(ArrowHint{wv(na.left_vertex, i), wv(na.right_vertex, i - 1),
                                      level_name(na.name, i), lift});
        }
    w.algebra = present(s, hints).algebra;

    // arrow bookkeeping, matched by name
    const Quiver& wq = w.algebra->quiver();
    w.arrow_kind_of.assign(wq.n_arrows(), -1);
    w.arrow_level_of.assign(wq.n_arrows(), 0);
    for (int i = lo; i <= hi; ++i) {
        for (int a = 0; a < q.n_arrows(); ++a) {
            int wa = wq.arrow_index(level_name(q.arrow(a).name, i));
            w.arrow_kind_of[wa] = a;
            w.arrow_level_of[wa] = i;
        }
        if (i > lo)
            for (std::size_t k = 0; k < new_arrows.size(); ++k) {
                int wa = wq.arrow_index(level_name(new_arrows[k].name, i));
                w.arrow_kind_of[wa] = q.n_arrows() + (int)k;
                w.arrow_level_of[wa] = i;
            }
    }
    return w;
}

}  // namespace

int WindowedAlgebra::window_vertex(int base_vertex, int level) const {
    if (!level_in_window(level)) return -1;
    return (level - level_lo) * base->quiver().n_vertices() + base_vertex;
}

int WindowedAlgebra::window_arrow(int kind_id, int level) const {
    for (std::size_t a = 0; a < arrow_kind_of.size(); ++a)
        if (arrow_kind_of[a] == kind_id && arrow_level_of[a] == level) return (int)a;
    return -1;
}

WindowedAlgebra cluster_repetitive_window(const AlgebraPtr& c, const Bimodule& e, int lo, int hi) {
    return build_window(WindowKind::ClusterRepetitive, c, e, "d", lo, hi);
}

WindowedAlgebra repetitive_window(const AlgebraPtr& c, int lo, int hi) {
    Bimodule dc = dual_bimodule(c);
    return build_window(WindowKind::Repetitive, c, dc, "q", lo, hi);
}

ClusterDuplicatedAlgebra cluster_duplicated(const AlgebraPtr& c, const Bimodule& e) {
    ClusterDuplicatedAlgebra out;
    out.window = cluster_repetitive_window(c, e, 0, 1);
    int n = c->quiver().n_vertices();
    for (int v = 0; v < n; ++v) {
        out.e0_vertices.push_back(out.window.window_vertex(v, 1));
        out.e1_vertices.push_back(out.window.window_vertex(v, 0));
    }
    return out;
}

std::pair<int, int> support_levels(const WindowedAlgebra& w, const Representation& m) {
    int lo = w.level_hi + 1, hi = w.level_lo - 1;
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        if (m.dims[v] > 0) {
            lo = std::min(lo, w.level_of[v]);
            hi = std::max(hi, w.level_of[v]);
        }
    return {lo, hi};  // lo > hi for the zero module
}

Representation shift_twist(const WindowedAlgebra& w, const Representation& m, int k) {
    auto [lo, hi] = support_levels(w, m);
    if (lo <= hi && (!w.level_in_window(lo + k) || !w.level_in_window(hi + k)))
        throw BadInput("support leaves window under shift by " + std::to_string(k));
    Representation out = rep_zero(w.algebra);
    const Quiver& wq = w.algebra->quiver();
    for (int v = 0; v < wq.n_vertices(); ++v) {
        int src = w.window_vertex(w.base_vertex_of[v], w.level_of[v] - k);
        if (src >= 0) out.dims[v] = m.dims[src];
    }
    for (int a = 0; a < wq.n_arrows(); ++a) {
        int src_arrow = w.window_arrow(w.arrow_kind_of[a], w.arrow_level_of[a] - k);
        if (src_arrow >= 0)
            out.arrow_mats[a] = m.arrow_mats[src_arrow];
        else
            out.arrow_mats[a] =
                Matrix(out.dims[wq.arrow(a).from], out.dims[wq.arrow(a).to], w.algebra->field());
    }
    return out;
}

Representation embed_at_level(const WindowedAlgebra& w, const Representation& m, int level) {
    if (m.algebra != w.base) throw BadInput("embed_at_level: module is not over the base algebra");
    if (!w.level_in_window(level)) throw BadInput("embed_at_level: level outside window");
    Representation out = rep_zero(w.algebra);
    const Quiver& q = w.base->quiver();
    for (int v = 0; v < q.n_vertices(); ++v) out.dims[w.window_vertex(v, level)] = m.dims[v];
    const Quiver& wq = w.algebra->quiver();
    for (int a = 0; a < wq.n_arrows(); ++a) {
        if (w.arrow_level_of[a] == level && w.arrow_kind_of[a] < q.n_arrows())
            out.arrow_mats[a] = m.arrow_mats[w.arrow_kind_of[a]];
        else
            out.arrow_mats[a] =
                Matrix(out.dims[wq.arrow(a).from], out.dims[wq.arrow(a).to], w.algebra->field());
    }
    return out;
}

Representation restrict_to_level(const WindowedAlgebra& w, const Representation& m, int level) {
    auto [lo, hi] = support_levels(w, m);
    if (lo <= hi && (lo != level || hi != level))
        throw BadInput("restrict_to_level: module is not concentrated on the level");
    Representation out = rep_zero(w.base);
    const Quiver& q = w.base->quiver();
    for (int v = 0; v < q.n_vertices(); ++v) out.dims[v] = m.dims[w.window_vertex(v, level)];
    for (int a = 0; a < q.n_arrows(); ++a) {
        int wa = w.window_arrow(a, level);
        out.arrow_mats[a] = wa >= 0 ? m.arrow_mats[wa]
                                    : Matrix(out.dims[q.arrow(a).from], out.dims[q.arrow(a).to],
                                             w.base->field());
    }
    return out;
}

}  // namespace cf
