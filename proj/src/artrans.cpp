#include "clusterforge/artrans.hpp"

namespace cf {

namespace {

SparseElem to_opposite(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& op,
                       const SparseElem& e) {
    SparseElem out;
    for (const auto& [b, c] : e)
        for (const auto& [ob, oc] : a.opposite_element(b, op)) {
            Scalar& slot = out[ob];
            slot = a.field().add(slot, a.field().mul(c, oc));
            if (slot == 0) out.erase(ob);
        }
    return out;
}

// coker over `target` of Hom(d, Λ) for a presentation differential d given by
// elements; vertices carry over unchanged (reversed() preserves the order).
Representation transpose_cokernel(const AlgebraPtr& a, const AlgebraPtr& target,
                                  const std::vector<int>& p1_vertices,
                                  const std::vector<int>& p0_vertices,
                                  const std::vector<std::vector<SparseElem>>& d_elems) {
    // Hom(P_v, Λ) = Λ e_v is the projective over the opposite at the same
    // vertex; precomposition with d becomes the transposed element matrix.
    std::vector<std::vector<SparseElem>> op_elems(p0_vertices.size(),
                                                  std::vector<SparseElem>(p1_vertices.size()));
    for (std::size_t j = 0; j < p1_vertices.size(); ++j)
        for (std::size_t i = 0; i < p0_vertices.size(); ++i)
            op_elems[i][j] = to_opposite(*a, *target, d_elems[j][i]);
    VertexMaps f = projective_sum_map(target, p0_vertices, p1_vertices, op_elems);
    std::vector<Representation> src_summands, dst_summands;
    for (int v : p0_vertices) src_summands.push_back(rep_projective(target, v));
    for (int v : p1_vertices) dst_summands.push_back(rep_projective(target, v));
    Representation src = direct_sum(target, src_summands).rep;
    Representation dst = direct_sum(target, dst_summands).rep;
    return cokernel_rep(src, dst, f).rep;
}

}  // namespace

Representation ar_translate(const Representation& m) {
    if (m.is_zero()) throw BadInput("projective has no translate");
    ProjPresentation pres = minimal_projective_presentation(m);
    if (pres.p1_vertices.empty()) throw BadInput("projective has no translate");
    AlgebraPtr op = m.algebra->opposite();
    Representation tr = transpose_cokernel(m.algebra, op, pres.p1_vertices, pres.p0_vertices,
                                           pres.d_elems);
    return rep_dual(tr, m.algebra);
}

Representation ar_translate_inverse(const Representation& m) {
    if (m.is_zero()) throw BadInput("injective has no inverse translate");
    AlgebraPtr op = m.algebra->opposite();
    Representation dual = rep_dual(m, op);
    ProjPresentation pres = minimal_projective_presentation(dual);
    if (pres.p1_vertices.empty()) throw BadInput("injective has no inverse translate");
    return transpose_cokernel(op, m.algebra, pres.p1_vertices, pres.p0_vertices, pres.d_elems);
}

VertexMaps hom_vector_to_map(const AlgebraPtr& a, const std::vector<int>& vertices,
                             const Representation& n, const Matrix& coords) {
    const Quiver& q = a->quiver();
    int nv = q.n_vertices();
    std::vector<Representation> summands;
    for (int v : vertices) summands.push_back(rep_projective(a, v));
    DirectSum ds = direct_sum(a, summands);
    VertexMaps f;
    for (int v = 0; v < nv; ++v) f.emplace_back(ds.rep.dims[v], n.dims[v], a->field());
    int off = 0;
    for (std::size_t j = 0; j < vertices.size(); ++j) {
        int w = vertices[j];
        Matrix x(1, n.dims[w], a->field());
        for (int k = 0; k < n.dims[w]; ++k) x.at(0, k) = coords.at(0, off + k);
        // basis path p of P_w (w -> v) maps to x * act(p)
        for (int v = 0; v < nv; ++v) {
            const auto& paths = a->pair_basis(w, v);
            for (std::size_t t = 0; t < paths.size(); ++t) {
                Matrix img = x * n.act_path(a->basis_path(paths[t]));
                int row = ds.offsets_at[j * nv + v] + (int)t;
                for (int c2 = 0; c2 < n.dims[v]; ++c2) f[v].at(row, c2) = img.at(0, c2);
            }
        }
        off += n.dims[w];
    }
    return f;
}

std::vector<VertexMaps> end_radical_basis(const Representation& m) {
    auto ends = hom_basis(m, m);
    std::size_t h = ends.size();
    if (h == 0) return {};
    const Field& fld = m.algebra->field();
    if (h == 1) return {};  // End = k·id, radical zero over any field
    if (!fld.is_rational()) throw BadInput("End radical requires characteristic 0");
    auto trace_product = [&](const VertexMaps& f, const VertexMaps& g) {
        Scalar t(0);
        for (std::size_t v = 0; v < f.size(); ++v)
            for (std::size_t i = 0; i < f[v].rows(); ++i)
                for (std::size_t k = 0; k < f[v].cols(); ++k)
                    if (f[v].at(i, k) != 0 && g[v].at(k, i) != 0)
                        t += f[v].at(i, k) * g[v].at(k, i);
        return t;
    };
    Matrix gram(h, h, fld);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) gram.at(i, j) = fld.reduce(trace_product(ends[i], ends[j]));
    Subspace rad = kernel_basis(gram);
    std::vector<VertexMaps> out;
    for (std::size_t r = 0; r < rad.dim(); ++r) {
        VertexMaps f;
        for (std::size_t v = 0; v < m.dims.size(); ++v) {
            Matrix fv(m.dims[v], m.dims[v], fld);
            for (std::size_t k = 0; k < h; ++k)
                if (rad.basis().at(r, k) != 0)
                    fv = fv + ends[k][v].scaled(rad.basis().at(r, k));
            f.push_back(std::move(fv));
        }
        out.push_back(std::move(f));
    }
    return out;
}

AlmostSplitSequence almost_split_sequence(const Representation& m) {
    Representation t = ar_translate(m);
    ProjPresentation pres = minimal_projective_presentation(m);
    ExtGroup e1 = ext_group(m, t, 1);
    if (e1.dim == 0) throw std::logic_error("Ext^1(M, tau M) vanished");

    // socle of Ext^1(M, tau M) under the right End(M)-action
    Matrix socle_rows = e1.cocycles;
    std::vector<VertexMaps> rad_end = end_radical_basis(m);
    if (!rad_end.empty()) {
        // action of f: precompose cocycles with the degree-1 chain lift of f
        Matrix system(e1.dim, 0, m.algebra->field());
        for (const auto& f : rad_end) {
            // lift f0: P0 -> P0' with f0 ∘ cover = cover ∘ f
            VertexMaps rhs0;
            for (std::size_t v = 0; v < m.dims.size(); ++v) rhs0.push_back(pres.cover[v] * f[v]);
            auto f0 = lift_through(m.algebra, pres.p0_vertices, pres.p0_vertices, m, pres.cover,
                                   rhs0);
            VertexMaps f0m = projective_sum_map(m.algebra, pres.p0_vertices, pres.p0_vertices, f0);
            VertexMaps rhs1;
            for (std::size_t v = 0; v < m.dims.size(); ++v) rhs1.push_back(pres.d[v] * f0m[v]);
            auto f1 = lift_through(m.algebra, pres.p1_vertices, pres.p1_vertices, pres.p0, pres.d,
                                   rhs1);
            // induced action on Ext^1 classes
            Matrix act(e1.dim, e1.dim, m.algebra->field());
            for (int r = 0; r < e1.dim; ++r) {
                // cocycle row r composed with f1
                Matrix z = e1.cocycles.row(r);
                Matrix mapped(1, e1.block_offsets.back(), m.algebra->field());
                for (std::size_t jt = 0; jt < pres.p1_vertices.size(); ++jt)
                    for (std::size_t js = 0; js < pres.p1_vertices.size(); ++js) {
                        const SparseElem& elem = f1[jt][js];
                        if (elem.empty()) continue;
                        Matrix blk = t.act_elem(pres.p1_vertices[js], pres.p1_vertices[jt], elem);
                        for (int x = e1.block_offsets[js]; x < e1.block_offsets[js + 1]; ++x)
                            if (z.at(0, x) != 0)
                                for (std::size_t y = 0; y < blk.cols(); ++y)
                                    mapped.at(0, e1.block_offsets[jt] + y) =
                                        m.algebra->field().add(
                                            mapped.at(0, e1.block_offsets[jt] + y),
                                            m.algebra->field().mul(
                                                z.at(0, x), blk.at(x - e1.block_offsets[js], y)));
                    }
                // express modulo boundaries
                Matrix stack = e1.boundaries.vstack(e1.cocycles);
                Matrix coords = coordinates(stack, mapped);
                for (int j = 0; j < e1.dim; ++j)
                    act.at(r, j) = coords.at(0, e1.boundaries.rows() + j);
            }
            system = system.hstack(act);
        }
        Subspace socle = kernel_basis(system);
        if (socle.dim() == 0) throw std::logic_error("Ext^1 socle is zero");
        socle_rows = socle.basis() * e1.cocycles;
    }
    if (socle_rows.rows() != 1)
        throw std::logic_error("almost split class is not unique: socle dimension " +
                               std::to_string(socle_rows.rows()));
    Matrix z = socle_rows.row(0);

    // realize the extension 0 -> t -> E -> m -> 0 from the cocycle z:
    // z: P1 -> t kills im(d2), hence induces zbar on Omega = ker(P0 -> m),
    // and E = (t ⊕ P0) / {(zbar(k), -k)}.
    VertexMaps zmap = hom_vector_to_map(m.algebra, pres.p1_vertices, t, z);
    SubQuotient omega = kernel_rep(pres.p0, m, pres.cover);
    const Field& fld = m.algebra->field();
    VertexMaps zbar;
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
        // preimage of omega basis rows under d, then apply z
        Matrix pre;
        if (omega.rep.dims[v] == 0) {
            zbar.emplace_back(0, t.dims[v], fld);
            continue;
        }
        if (!solve_row_system(pres.d[v], omega.map[v], pre))
            throw std::logic_error("syzygy not in the image of d");
        zbar.push_back(pre * zmap[v]);
    }
    DirectSum ds = direct_sum(m.algebra, {t, pres.p0});
    VertexMaps anti;
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
        Matrix g(omega.rep.dims[v], ds.rep.dims[v], fld);
        for (std::size_t i = 0; i < g.rows(); ++i) {
            for (int j = 0; j < t.dims[v]; ++j) g.at(i, j) = zbar[v].at(i, j);
            for (int j = 0; j < pres.p0.dims[v]; ++j)
                g.at(i, t.dims[v] + j) = fld.neg(omega.map[v].at(i, j));
        }
        anti.push_back(std::move(g));
    }
    SubQuotient quot = cokernel_rep(omega.rep, ds.rep, anti);
    AlmostSplitSequence out;
    out.tau_m = t;
    out.m = m;
    out.middle = quot.rep;
    out.left = maps_compose(t, ds.embedding(0), quot.map);
    // right map: descend (0, cover): solve quot.map ∘ right = h
    VertexMaps h;
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
        Matrix hv(ds.rep.dims[v], m.dims[v], fld);
        for (std::size_t i = 0; i < pres.p0.dims[v]; ++i)
            for (int j = 0; j < m.dims[v]; ++j)
                hv.at(t.dims[v] + i, j) = pres.cover[v].at(i, j);
        h.push_back(std::move(hv));
    }
    VertexMaps right;
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
        Matrix rt;
        if (!solve_row_system(quot.map[v].transpose(), h[v].transpose(), rt))
            throw std::logic_error("right map does not descend");
        right.push_back(rt.transpose());
    }
    out.right = std::move(right);

    // exactness and non-splitness checks
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        if (out.middle.dims[v] != t.dims[v] + m.dims[v])
            throw std::logic_error("almost split middle has wrong dimension");
    VertexMaps comp = maps_compose(t, out.left, out.right);
    for (const auto& mm : comp)
        if (!mm.is_zero()) throw std::logic_error("almost split composition non-zero");
    out.middle_summands = decompose(out.middle);
    return out;
}

}  // namespace cf
