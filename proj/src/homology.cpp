#include "clusterforge/homology.hpp"

namespace cf {

int ProjResolution::length() const {
    for (int k = (int)vertices.size() - 1; k >= 0; --k)
        if (!vertices[k].empty()) return k;
    return -1;  // zero module
}

namespace {

Representation projective_sum(const AlgebraPtr& a, const std::vector<int>& vertices) {
    std::vector<Representation> s;
    for (int v : vertices) s.push_back(rep_projective(a, v));
    return direct_sum(a, s).rep;
}

}  // namespace

ProjResolution minimal_resolution(const Representation& m, int max_degree) {
    ProjResolution res;
    if (m.is_zero()) return res;
    ProjectiveCover cover = projective_cover(m);
    res.vertices.push_back(cover.vertices);
    res.diff.emplace_back();  // placeholder for degree 0
    // `ker` is a submodule of the last projective, with its inclusion map.
    SubQuotient ker = kernel_rep(cover.p, m, cover.map);
    for (int k = 1; k <= max_degree; ++k) {
        if (ker.rep.is_zero()) return res;
        ProjectiveCover next = projective_cover(ker.rep);
        VertexMaps d = maps_compose(next.p, next.map, ker.map);  // P_k -> P_{k-1}
        res.diff.push_back(projective_map_elements(m.algebra, next.vertices,
                                                   res.vertices.back(), d));
        res.vertices.push_back(next.vertices);
        ker = kernel_rep(next.p, ker.rep, next.map);
    }
    res.complete = ker.rep.is_zero();
    return res;
}

VertexMaps projective_sum_map(const AlgebraPtr& a, const std::vector<int>& src_vertices,
                              const std::vector<int>& dst_vertices,
                              const std::vector<std::vector<SparseElem>>& elems) {
    const Quiver& q = a->quiver();
    int nv = q.n_vertices();
    Representation src = projective_sum(a, src_vertices);
    Representation dst = projective_sum(a, dst_vertices);
    std::vector<int> src_off(src_vertices.size() * nv, 0), dst_off(dst_vertices.size() * nv, 0);
    {
        std::vector<int> acc(nv, 0);
        for (std::size_t j = 0; j < src_vertices.size(); ++j)
            for (int v = 0; v < nv; ++v) {
                src_off[j * nv + v] = acc[v];
                acc[v] += (int)a->pair_basis(src_vertices[j], v).size();
            }
        acc.assign(nv, 0);
        for (std::size_t i = 0; i < dst_vertices.size(); ++i)
            for (int v = 0; v < nv; ++v) {
                dst_off[i * nv + v] = acc[v];
                acc[v] += (int)a->pair_basis(dst_vertices[i], v).size();
            }
    }
    VertexMaps f;
    for (int v = 0; v < nv; ++v) f.emplace_back(src.dims[v], dst.dims[v], a->field());
    for (std::size_t j = 0; j < src_vertices.size(); ++j)
        for (std::size_t i = 0; i < dst_vertices.size(); ++i) {
            const SparseElem& e = elems[j][i];
            if (e.empty()) continue;
            for (int v = 0; v < nv; ++v) {
                Matrix blk = a->left_mult_matrix(e, dst_vertices[i], src_vertices[j], v);
                for (std::size_t r = 0; r < blk.rows(); ++r)
                    for (std::size_t c = 0; c < blk.cols(); ++c)
                        f[v].at(src_off[j * nv + v] + r, dst_off[i * nv + v] + c) = blk.at(r, c);
            }
        }
    return f;
}

std::vector<std::vector<SparseElem>> projective_map_elements(const AlgebraPtr& a,
                                                             const std::vector<int>& src_vertices,
                                                             const std::vector<int>& dst_vertices,
                                                             const VertexMaps& f) {
    const Quiver& q = a->quiver();
    int nv = q.n_vertices();
    std::vector<std::vector<SparseElem>> elems(src_vertices.size(),
                                               std::vector<SparseElem>(dst_vertices.size()));
    std::vector<int> src_off(src_vertices.size() * nv, 0), dst_off(dst_vertices.size() * nv, 0);
    std::vector<int> acc(nv, 0);
    for (std::size_t j = 0; j < src_vertices.size(); ++j)
        for (int v = 0; v < nv; ++v) {
            src_off[j * nv + v] = acc[v];
            acc[v] += (int)a->pair_basis(src_vertices[j], v).size();
        }
    acc.assign(nv, 0);
    for (std::size_t i = 0; i < dst_vertices.size(); ++i)
        for (int v = 0; v < nv; ++v) {
            dst_off[i * nv + v] = acc[v];
            acc[v] += (int)a->pair_basis(dst_vertices[i], v).size();
        }
    for (std::size_t j = 0; j < src_vertices.size(); ++j) {
        int vj = src_vertices[j];
        int gen_row = src_off[j * nv + vj] + projective_generator_position(a, vj);
        for (std::size_t i = 0; i < dst_vertices.size(); ++i) {
            int ui = dst_vertices[i];
            const auto& paths = a->pair_basis(ui, vj);
            SparseElem e;
            for (std::size_t t = 0; t < paths.size(); ++t) {
                const Scalar& c = f[vj].at(gen_row, dst_off[i * nv + vj] + t);
                if (c != 0) e[paths[t]] = c;
            }
            elems[j][i] = std::move(e);
        }
    }
    return elems;
}

std::vector<std::vector<SparseElem>> lift_through(const AlgebraPtr& a,
                                                  const std::vector<int>& src_vertices,
                                                  const std::vector<int>& dst_vertices,
                                                  const Representation& y,
                                                  const VertexMaps& dst_map,
                                                  const VertexMaps& rhs) {
    const Field& fld = a->field();
    // unknowns: for each (j, i): coefficients over pair_basis(dst_j?? ...)
    struct Slot {
        std::size_t j, i;
        int basis_elem;
    };
    std::vector<Slot> slots;
    for (std::size_t j = 0; j < src_vertices.size(); ++j)
        for (std::size_t i = 0; i < dst_vertices.size(); ++i)
            for (int b : a->pair_basis(dst_vertices[i], src_vertices[j]))
                slots.push_back(Slot{j, i, b});

    // equation space: all entries of the composed map P_src -> Y
    const Quiver& q = a->quiver();
    int nv = q.n_vertices();
    std::vector<int> src_off(src_vertices.size() * nv, 0);
    std::vector<int> acc(nv, 0);
    for (std::size_t j = 0; j < src_vertices.size(); ++j)
        for (int v = 0; v < nv; ++v) {
            src_off[j * nv + v] = acc[v];
            acc[v] += (int)a->pair_basis(src_vertices[j], v).size();
        }
    std::vector<int> eq_off(nv + 1, 0);
    Representation src = projective_sum(a, src_vertices);
    for (int v = 0; v < nv; ++v) eq_off[v + 1] = eq_off[v] + src.dims[v] * y.dims[v];
    int n_eq = eq_off[nv];

    Matrix sys(slots.size(), n_eq, fld);
    for (std::size_t s = 0; s < slots.size(); ++s) {
        std::vector<std::vector<SparseElem>> e(src_vertices.size(),
                                               std::vector<SparseElem>(dst_vertices.size()));
        e[slots[s].j][slots[s].i] = SparseElem{{slots[s].basis_elem, fld.one()}};
        VertexMaps fm = projective_sum_map(a, src_vertices, dst_vertices, e);
        for (int v = 0; v < nv; ++v) {
            Matrix comp = fm[v] * dst_map[v];
            for (std::size_t r = 0; r < comp.rows(); ++r)
                for (std::size_t c = 0; c < comp.cols(); ++c)
                    sys.at(s, eq_off[v] + r * y.dims[v] + c) = comp.at(r, c);
        }
    }
    Matrix target(1, n_eq, fld);
    for (int v = 0; v < nv; ++v)
        for (std::size_t r = 0; r < rhs[v].rows(); ++r)
            for (std::size_t c = 0; c < rhs[v].cols(); ++c)
                target.at(0, eq_off[v] + r * y.dims[v] + c) = rhs[v].at(r, c);
    Matrix x;
    if (!solve_row_system(sys, target, x)) throw std::logic_error("lift_through: no lift exists");
    std::vector<std::vector<SparseElem>> elems(src_vertices.size(),
                                               std::vector<SparseElem>(dst_vertices.size()));
    for (std::size_t s = 0; s < slots.size(); ++s)
        if (x.at(0, s) != 0) elems[slots[s].j][slots[s].i][slots[s].basis_elem] = x.at(0, s);
    return elems;
}

ExtGroup ext_group(const Representation& m, const Representation& n, int k, int resolution_cap) {
    if (k < 0) throw BadInput("ext: negative degree");
    ProjResolution res = minimal_resolution(m, std::min(resolution_cap, k + 1));
    const AlgebraPtr& a = m.algebra;
    const Field& fld = a->field();
    auto hom_space_dim = [&](int deg) {
        if (deg >= (int)res.vertices.size()) return 0;
        int d = 0;
        for (int v : res.vertices[deg]) d += n.dims[v];
        return d;
    };
    auto delta = [&](int deg) {  // Hom(P_{deg-1}, N) -> Hom(P_deg, N)
        int rows = hom_space_dim(deg - 1), cols = hom_space_dim(deg);
        Matrix d(rows, cols, fld);
        if (rows == 0 || cols == 0 || deg >= (int)res.diff.size()) return d;
        const auto& elems = res.diff[deg];
        int coff = 0;
        for (std::size_t j = 0; j < res.vertices[deg].size(); ++j) {
            int roff = 0;
            int u = res.vertices[deg][j];
            for (std::size_t i = 0; i < res.vertices[deg - 1].size(); ++i) {
                int w = res.vertices[deg - 1][i];
                if (!elems[j][i].empty()) {
                    Matrix blk = n.act_elem(w, u, elems[j][i]);
                    for (std::size_t r = 0; r < blk.rows(); ++r)
                        for (std::size_t c = 0; c < blk.cols(); ++c)
                            d.at(roff + r, coff + c) = blk.at(r, c);
                }
                roff += n.dims[w];
            }
            coff += n.dims[u];
        }
        return d;
    };
    ExtGroup out;
    int dk = hom_space_dim(k);
    if (dk == 0) return out;
    out.block_offsets.assign(res.vertices[k].size() + 1, 0);
    for (std::size_t j = 0; j < res.vertices[k].size(); ++j)
        out.block_offsets[j + 1] = out.block_offsets[j] + n.dims[res.vertices[k][j]];

    Matrix dnext = delta(k + 1);
    Subspace z = dnext.cols() == 0 ? image_basis(Matrix::identity(dk, fld)) : kernel_basis(dnext);
    Subspace b = k == 0 ? Subspace(dk, Matrix(0, dk, fld)) : image_basis(delta(k));
    out.boundaries = b.basis();
    // complement of B inside Z
    Matrix reps(0, dk, fld);
    Matrix stack = b.basis();
    for (std::size_t r = 0; r < z.dim(); ++r) {
        Matrix cand = stack.vstack(z.basis().row(r));
        if (cand.rank() > stack.rank()) {
            stack = cand;
            reps = reps.vstack(z.basis().row(r));
        }
    }
    out.cocycles = reps;
    out.dim = (int)reps.rows();
    return out;
}

int ext_dim(const Representation& m, const Representation& n, int k) {
    return ext_group(m, n, k).dim;
}

namespace {

Representation strip_projective_summands(const Representation& m) {
    if (m.is_zero()) return m;
    std::vector<Representation> keep;
    for (const auto& s : decompose(m))
        if (!is_projective(s)) keep.push_back(s);
    if (keep.empty()) return rep_zero(m.algebra);
    return direct_sum(m.algebra, keep).rep;
}

}  // namespace

Representation syzygy(const Representation& m, int i) {
    if (i < 0) throw BadInput("syzygy: negative index");
    Representation cur = m;
    for (int k = 0; k < i; ++k) {
        if (cur.is_zero()) return cur;
        ProjectiveCover cover = projective_cover(cur);
        cur = strip_projective_summands(kernel_rep(cover.p, cur, cover.map).rep);
    }
    return cur;
}

Representation cosyzygy(const Representation& m, int i) {
    if (i < 0) throw BadInput("cosyzygy: negative index");
    if (m.is_zero()) return m;
    AlgebraPtr op = m.algebra->opposite();
    Representation dual = rep_dual(m, op);
    Representation s = syzygy(dual, i);
    return rep_dual(s, m.algebra);
}

std::string HomDim::to_string() const {
    return at_least ? (">= " + std::to_string(value)) : std::to_string(value);
}

HomDim proj_dim(const Representation& m, int cap) {
    if (m.is_zero()) return HomDim{0, false};
    ProjResolution res = minimal_resolution(m, cap);
    if (!res.complete) return HomDim{cap, true};
    return HomDim{res.length(), false};
}

HomDim inj_dim(const Representation& m, int cap) {
    if (m.is_zero()) return HomDim{0, false};
    AlgebraPtr op = m.algebra->opposite();
    return proj_dim(rep_dual(m, op), cap);
}

HomDim global_dim(const AlgebraPtr& a, int cap) {
    HomDim best{0, false};
    for (int v = 0; v < a->quiver().n_vertices(); ++v) {
        HomDim d = proj_dim(rep_simple(a, v), cap);
        if (d.at_least) return d;
        best.value = std::max(best.value, d.value);
    }
    return best;
}

}  // namespace cf
