#include "clusterforge/rep.hpp"

#include <algorithm>

namespace cf {

int Representation::total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

Matrix Representation::act_path(const Path& p) const {
    const Quiver& q = algebra->quiver();
    Matrix m = Matrix::identity(dims[p.source(q)], algebra->field());
    for (int a : p.arrows) m = m * arrow_mats[a];
    return m;
}

Matrix Representation::act_elem(int u, int v, const SparseElem& elem) const {
    Matrix m(dims[u], dims[v], algebra->field());
    for (const auto& [b, c] : elem) {
        const Path& p = algebra->basis_path(b);
        if (p.source(algebra->quiver()) != u || p.target(algebra->quiver()) != v)
            throw std::logic_error("act_elem: element not in e_u A e_v");
        m = m + act_path(p).scaled(c);
    }
    return m;
}

void Representation::validate() const {
    const Quiver& q = algebra->quiver();
    if ((int)dims.size() != q.n_vertices() || (int)arrow_mats.size() != q.n_arrows())
        throw BadInput("representation shape does not match algebra");
    for (int a = 0; a < q.n_arrows(); ++a) {
        if ((int)arrow_mats[a].rows() != dims[q.arrow(a).from] ||
            (int)arrow_mats[a].cols() != dims[q.arrow(a).to])
            throw BadInput("arrow matrix '" + q.arrow(a).name + "' has wrong shape");
    }
    for (const auto& rel : algebra->relations()) {
        int u = relation_source(rel, q), v = relation_target(rel, q);
        Matrix sum(dims[u], dims[v], algebra->field());
        for (const auto& term : rel) sum = sum + act_path(term.path).scaled(term.coeff);
        if (!sum.is_zero())
            throw BadInput("relation violated: " + relation_to_string(rel, q));
    }
}

Representation rep_zero(const AlgebraPtr& a) {
    Representation m;
    m.algebra = a;
    m.dims.assign(a->quiver().n_vertices(), 0);
    for (int i = 0; i < a->quiver().n_arrows(); ++i)
        m.arrow_mats.emplace_back(0, 0, a->field());
    return m;
}

Representation rep_simple(const AlgebraPtr& a, int vertex) {
    Representation m = rep_zero(a);
    m.dims[vertex] = 1;
    const Quiver& q = a->quiver();
    for (int i = 0; i < q.n_arrows(); ++i)
        m.arrow_mats[i] = Matrix(m.dims[q.arrow(i).from], m.dims[q.arrow(i).to], a->field());
    return m;
}

Representation rep_projective(const AlgebraPtr& a, int vertex) {
    const Quiver& q = a->quiver();
    if (vertex < 0 || vertex >= q.n_vertices()) throw BadInput("unknown vertex");
    Representation m;
    m.algebra = a;
    m.dims.resize(q.n_vertices());
    for (int w = 0; w < q.n_vertices(); ++w) m.dims[w] = a->pair_basis(vertex, w).size();
    for (int ar = 0; ar < q.n_arrows(); ++ar) {
        int w = q.arrow(ar).from, w2 = q.arrow(ar).to;
        const auto& dom = a->pair_basis(vertex, w);
        const auto& cod = a->pair_basis(vertex, w2);
        std::map<int, int> pos;
        for (std::size_t i = 0; i < cod.size(); ++i) pos[cod[i]] = (int)i;
        Matrix mat(dom.size(), cod.size(), a->field());
        for (std::size_t i = 0; i < dom.size(); ++i) {
            SparseElem prod = a->mul_arrow(SparseElem{{dom[i], a->field().one()}}, ar);
            for (const auto& [b, c] : prod) mat.at(i, pos.at(b)) = c;
        }
        m.arrow_mats.push_back(std::move(mat));
    }
    return m;
}

int projective_generator_position(const AlgebraPtr& a, int vertex) {
    const auto& list = a->pair_basis(vertex, vertex);
    int e = a->idempotent_index(vertex);
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i] == e) return (int)i;
    throw std::logic_error("idempotent missing from pair basis");
}

Representation rep_dual(const Representation& m, const AlgebraPtr& op) {
    // D M over the opposite algebra: same dims, transposed matrices along the
    // reversed arrows (matched by name).
    Representation r;
    r.algebra = op;
    r.dims = m.dims;
    const Quiver& q = m.algebra->quiver();
    const Quiver& qo = op->quiver();
    r.arrow_mats.resize(qo.n_arrows());
    for (int a = 0; a < q.n_arrows(); ++a) {
        int ao = qo.arrow_index(q.arrow(a).name);
        r.arrow_mats[ao] = m.arrow_mats[a].transpose();
    }
    return r;
}

Representation rep_injective(const AlgebraPtr& a, int vertex) {
    AlgebraPtr op = a->opposite();
    int v_op = op->quiver().vertex_index(a->quiver().vertex_name(vertex));
    return rep_dual(rep_projective(op, v_op), a);
}

bool maps_equal(const VertexMaps& f, const VertexMaps& g) {
    if (f.size() != g.size()) return false;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] != g[i]) return false;
    return true;
}

VertexMaps maps_identity(const Representation& m) {
    VertexMaps f;
    for (int d : m.dims) f.push_back(Matrix::identity(d, m.algebra->field()));
    return f;
}

VertexMaps maps_zero(const Representation& src, const Representation& dst) {
    VertexMaps f;
    for (std::size_t v = 0; v < src.dims.size(); ++v)
        f.emplace_back(src.dims[v], dst.dims[v], src.algebra->field());
    return f;
}

VertexMaps maps_compose(const Representation& a, const VertexMaps& f, const VertexMaps& g) {
    (void)a;
    VertexMaps h;
    for (std::size_t v = 0; v < f.size(); ++v) h.push_back(f[v] * g[v]);
    return h;
}

bool is_module_map(const Representation& src, const Representation& dst, const VertexMaps& f) {
    const Quiver& q = src.algebra->quiver();
    for (int a = 0; a < q.n_arrows(); ++a) {
        int s = q.arrow(a).from, t = q.arrow(a).to;
        if (f[s] * dst.arrow_mats[a] != src.arrow_mats[a] * f[t]) return false;
    }
    return true;
}

std::vector<VertexMaps> hom_basis(const Representation& m, const Representation& n) {
    const Quiver& q = m.algebra->quiver();
    const Field& fld = m.algebra->field();
    int nv = q.n_vertices();
    std::vector<int> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + m.dims[v] * n.dims[v];
    int unknowns = offset[nv];
    int equations = 0;
    for (int a = 0; a < q.n_arrows(); ++a)
        equations += m.dims[q.arrow(a).from] * n.dims[q.arrow(a).to];
    Matrix sys(unknowns, equations, fld);
    int ecol = 0;
    for (int a = 0; a < q.n_arrows(); ++a) {
        int s = q.arrow(a).from, t = q.arrow(a).to;
        const Matrix& Na = n.arrow_mats[a];
        const Matrix& Ma = m.arrow_mats[a];
        for (int i = 0; i < m.dims[s]; ++i)
            for (int j = 0; j < n.dims[t]; ++j) {
                int e = ecol + i * n.dims[t] + j;
                // sum_k F_s[i,k] Na[k,j] - sum_k Ma[i,k] F_t[k,j] = 0
                for (int k = 0; k < n.dims[s]; ++k)
                    if (Na.at(k, j) != 0)
                        sys.at(offset[s] + i * n.dims[s] + k, e) =
                            fld.add(sys.at(offset[s] + i * n.dims[s] + k, e), Na.at(k, j));
                for (int k = 0; k < m.dims[t]; ++k)
                    if (Ma.at(i, k) != 0)
                        sys.at(offset[t] + k * n.dims[t] + j, e) =
                            fld.sub(sys.at(offset[t] + k * n.dims[t] + j, e), Ma.at(i, k));
            }
        ecol += m.dims[s] * n.dims[t];
    }
    Subspace sol = kernel_basis(sys);
    std::vector<VertexMaps> out;
    for (std::size_t r = 0; r < sol.dim(); ++r) {
        VertexMaps f;
        for (int v = 0; v < nv; ++v) {
            Matrix fv(m.dims[v], n.dims[v], fld);
            for (int i = 0; i < m.dims[v]; ++i)
                for (int j = 0; j < n.dims[v]; ++j)
                    fv.at(i, j) = sol.basis().at(r, offset[v] + i * n.dims[v] + j);
            f.push_back(std::move(fv));
        }
        out.push_back(std::move(f));
    }
    return out;
}

int hom_dim(const Representation& m, const Representation& n) {
    return (int)hom_basis(m, n).size();
}

SubQuotient kernel_rep(const Representation& src, const Representation& dst,
                       const VertexMaps& f) {
    const Quiver& q = src.algebra->quiver();
    std::vector<Subspace> ker(q.n_vertices());
    Representation k;
    k.algebra = src.algebra;
    k.dims.resize(q.n_vertices());
    for (int v = 0; v < q.n_vertices(); ++v) {
        ker[v] = kernel_basis(f[v]);
        k.dims[v] = (int)ker[v].dim();
    }
    VertexMaps incl;
    for (int v = 0; v < q.n_vertices(); ++v) incl.push_back(ker[v].basis());
    for (int a = 0; a < q.n_arrows(); ++a) {
        int s = q.arrow(a).from, t = q.arrow(a).to;
        Matrix rows = incl[s] * src.arrow_mats[a];
        k.arrow_mats.push_back(k.dims[s] == 0 || k.dims[t] == 0
                                   ? Matrix(k.dims[s], k.dims[t], src.algebra->field())
                                   : coordinates(incl[t], rows));
    }
    return SubQuotient{std::move(k), std::move(incl)};
}

SubQuotient cokernel_rep(const Representation& src, const Representation& dst,
                         const VertexMaps& f) {
    const Quiver& q = dst.algebra->quiver();
    Representation c;
    c.algebra = dst.algebra;
    c.dims.resize(q.n_vertices());
    VertexMaps proj;
    for (int v = 0; v < q.n_vertices(); ++v) {
        Subspace img = image_basis(f[v]);
        Matrix p = quotient_map(dst.dims[v], img);
        c.dims[v] = (int)p.cols();
        proj.push_back(std::move(p));
    }
    for (int a = 0; a < q.n_arrows(); ++a) {
        int s = q.arrow(a).from, t = q.arrow(a).to;
        // solve proj[s] * C = dst(a) * proj[t]
        Matrix rhs = dst.arrow_mats[a] * proj[t];
        Matrix ct;
        if (!solve_row_system(proj[s].transpose(), rhs.transpose(), ct))
            throw std::logic_error("cokernel map not well defined");
        c.arrow_mats.push_back(ct.transpose());
    }
    return SubQuotient{std::move(c), std::move(proj)};
}

SubQuotient image_rep(const Representation& src, const Representation& dst, const VertexMaps& f) {
    const Quiver& q = dst.algebra->quiver();
    Representation im;
    im.algebra = dst.algebra;
    im.dims.resize(q.n_vertices());
    VertexMaps incl;
    for (int v = 0; v < q.n_vertices(); ++v) {
        Subspace s = image_basis(f[v]);
        im.dims[v] = (int)s.dim();
        incl.push_back(s.basis());
    }
    for (int a = 0; a < q.n_arrows(); ++a) {
        int s = q.arrow(a).from, t = q.arrow(a).to;
        Matrix rows = incl[s] * dst.arrow_mats[a];
        im.arrow_mats.push_back(im.dims[s] == 0 || im.dims[t] == 0
                                    ? Matrix(im.dims[s], im.dims[t], dst.algebra->field())
                                    : coordinates(incl[t], rows));
    }
    return SubQuotient{std::move(im), std::move(incl)};
}

SubQuotient submodule_closure(const Representation& m, const std::vector<Matrix>& generators) {
    const Quiver& q = m.algebra->quiver();
    const Field& fld = m.algebra->field();
    if ((int)generators.size() != q.n_vertices())
        throw std::logic_error("submodule_closure expects one generator block per vertex");
    std::vector<Matrix> span = generators;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int a = 0; a < q.n_arrows(); ++a) {
            int s = q.arrow(a).from, t = q.arrow(a).to;
            if (span[s].rows() == 0) continue;
            Matrix pushed = span[s] * m.arrow_mats[a];
            Matrix joint = span[t].vstack(pushed);
            Subspace sp = Subspace::from_rows(m.dims[t], joint);
            if (sp.dim() != image_basis(span[t]).dim()) {
                span[t] = sp.basis();
                grew = true;
            }
        }
    }
    Representation sub;
    sub.algebra = m.algebra;
    sub.dims.resize(q.n_vertices());
    VertexMaps incl;
    for (int v = 0; v < q.n_vertices(); ++v) {
        Subspace sp = Subspace::from_rows(m.dims[v], span[v]);
        sub.dims[v] = (int)sp.dim();
        incl.push_back(sp.basis());
    }
    for (int a = 0; a < q.n_arrows(); ++a) {
        int s = q.arrow(a).from, t = q.arrow(a).to;
        Matrix rows = incl[s] * m.arrow_mats[a];
        sub.arrow_mats.push_back(sub.dims[s] == 0 || sub.dims[t] == 0
                                     ? Matrix(sub.dims[s], sub.dims[t], fld)
                                     : coordinates(incl[t], rows));
    }
    return SubQuotient{std::move(sub), std::move(incl)};
}

VertexMaps DirectSum::embedding(std::size_t summand) const {
    int nv = (int)rep.dims.size();
    VertexMaps f;
    for (int v = 0; v < nv; ++v) {
        const Representation& s = summands[summand];
        Matrix e(s.dims[v], rep.dims[v], rep.algebra->field());
        int off = offsets_at[summand * nv + v];
        for (int i = 0; i < s.dims[v]; ++i) e.at(i, off + i) = 1;
        f.push_back(std::move(e));
    }
    return f;
}

VertexMaps DirectSum::projection(std::size_t summand) const {
    int nv = (int)rep.dims.size();
    VertexMaps f;
    for (int v = 0; v < nv; ++v) {
        const Representation& s = summands[summand];
        Matrix p(rep.dims[v], s.dims[v], rep.algebra->field());
        int off = offsets_at[summand * nv + v];
        for (int i = 0; i < s.dims[v]; ++i) p.at(off + i, i) = 1;
        f.push_back(std::move(p));
    }
    return f;
}

DirectSum direct_sum(const AlgebraPtr& a, const std::vector<Representation>& summands) {
    const Quiver& q = a->quiver();
    int nv = q.n_vertices();
    DirectSum ds;
    ds.summands = summands;
    ds.rep.algebra = a;
    ds.rep.dims.assign(nv, 0);
    ds.offsets_at.assign(summands.size() * nv, 0);
    for (std::size_t s = 0; s < summands.size(); ++s)
        for (int v = 0; v < nv; ++v) {
            ds.offsets_at[s * nv + v] = ds.rep.dims[v];
            ds.rep.dims[v] += summands[s].dims[v];
        }
    for (int ar = 0; ar < q.n_arrows(); ++ar) {
        int s = q.arrow(ar).from, t = q.arrow(ar).to;
        Matrix m(ds.rep.dims[s], ds.rep.dims[t], a->field());
        for (std::size_t k = 0; k < summands.size(); ++k) {
            const Matrix& blk = summands[k].arrow_mats[ar];
            int ro = ds.offsets_at[k * nv + s], co = ds.offsets_at[k * nv + t];
            for (std::size_t i = 0; i < blk.rows(); ++i)
                for (std::size_t j = 0; j < blk.cols(); ++j) m.at(ro + i, co + j) = blk.at(i, j);
        }
        ds.rep.arrow_mats.push_back(std::move(m));
    }
    return ds;
}

SubQuotient top_rep(const Representation& m) {
    const Quiver& q = m.algebra->quiver();
    Representation t;
    t.algebra = m.algebra;
    t.dims.resize(q.n_vertices());
    VertexMaps proj;
    for (int v = 0; v < q.n_vertices(); ++v) {
        Matrix rad(0, m.dims[v], m.algebra->field());
        for (int a : q.arrows_into(v)) rad = rad.vstack(m.arrow_mats[a]);
        Subspace radsp = Subspace::from_rows(m.dims[v], rad);
        Matrix p = quotient_map(m.dims[v], radsp);
        t.dims[v] = (int)p.cols();
        proj.push_back(std::move(p));
    }
    for (int a = 0; a < q.n_arrows(); ++a)
        t.arrow_mats.emplace_back(t.dims[q.arrow(a).from], t.dims[q.arrow(a).to],
                                  m.algebra->field());
    return SubQuotient{std::move(t), std::move(proj)};
}

ProjectiveCover projective_cover(const Representation& m) {
    const Quiver& q = m.algebra->quiver();
    const Field& fld = m.algebra->field();
    SubQuotient top = top_rep(m);
    ProjectiveCover pc;
    std::vector<Representation> summands;
    std::vector<Matrix> gen_rows;  // chosen preimage row in M at the summand's vertex
    for (int v = 0; v < q.n_vertices(); ++v) {
        for (int i = 0; i < top.rep.dims[v]; ++i) {
            // preimage of the i-th top basis vector at v
            Matrix e(1, top.rep.dims[v], fld);
            e.at(0, i) = 1;
            Matrix pre;  // pre * top.map[v] = e
            if (!solve_row_system(top.map[v], e, pre))
                throw std::logic_error("top projection not surjective");
            pc.vertices.push_back(v);
            gen_rows.push_back(pre);
            summands.push_back(rep_projective(m.algebra, v));
        }
    }
    DirectSum ds = direct_sum(m.algebra, summands);
    pc.p = ds.rep;
    // map P -> M: the generator of P_v goes to its chosen preimage, a basis
    // path p of P_v goes to (preimage) * act(p)
    int nv = q.n_vertices();
    VertexMaps f;
    for (int w = 0; w < nv; ++w) f.emplace_back(pc.p.dims[w], m.dims[w], fld);
    for (std::size_t k = 0; k < summands.size(); ++k) {
        int v = pc.vertices[k];
        for (int w = 0; w < nv; ++w) {
            const auto& paths = m.algebra->pair_basis(v, w);
            for (std::size_t i = 0; i < paths.size(); ++i) {
                Matrix img = gen_rows[k] * m.act_path(m.algebra->basis_path(paths[i]));
                int row = ds.offsets_at[k * nv + w] + (int)i;
                for (int j = 0; j < m.dims[w]; ++j) f[w].at(row, j) = img.at(0, j);
            }
        }
    }
    pc.map = std::move(f);
    return pc;
}

bool is_projective(const Representation& m) {
    if (m.is_zero()) return true;
    ProjectiveCover pc = projective_cover(m);
    return pc.p.total_dim() == m.total_dim();
}

bool is_injective(const Representation& m) {
    if (m.is_zero()) return true;
    AlgebraPtr op = m.algebra->opposite();
    return is_projective(rep_dual(m, op));
}

ProjPresentation minimal_projective_presentation(const Representation& m) {
    if (m.is_zero()) throw BadInput("zero module has no minimal presentation");
    const Quiver& q = m.algebra->quiver();
    int nv = q.n_vertices();
    ProjPresentation pres;
    ProjectiveCover c0 = projective_cover(m);
    pres.p0_vertices = c0.vertices;
    pres.p0 = c0.p;
    pres.cover = c0.map;
    SubQuotient ker = kernel_rep(c0.p, m, c0.map);
    ProjectiveCover c1 = projective_cover(ker.rep);
    pres.p1_vertices = c1.vertices;
    pres.p1 = c1.p;
    pres.d = maps_compose(c1.p, c1.map, ker.map);

    // element matrix of d: the image of each P1-generator, decomposed over the
    // basis-path coordinates of each P0 summand
    DirectSum ds0 = direct_sum(m.algebra, [&] {
        std::vector<Representation> s;
        for (int v : pres.p0_vertices) s.push_back(rep_projective(m.algebra, v));
        return s;
    }());
    pres.d_elems.assign(pres.p1_vertices.size(),
                        std::vector<SparseElem>(pres.p0_vertices.size()));
    DirectSum ds1 = direct_sum(m.algebra, [&] {
        std::vector<Representation> s;
        for (int v : pres.p1_vertices) s.push_back(rep_projective(m.algebra, v));
        return s;
    }());
    for (std::size_t j = 0; j < pres.p1_vertices.size(); ++j) {
        int v = pres.p1_vertices[j];
        int gen_row = ds1.offsets_at[j * nv + v] + projective_generator_position(m.algebra, v);
        Matrix img = pres.d[v].row(gen_row);  // row in P0(v)
        for (std::size_t i = 0; i < pres.p0_vertices.size(); ++i) {
            int u = pres.p0_vertices[i];
            const auto& paths = m.algebra->pair_basis(u, v);
            SparseElem e;
            int off = ds0.offsets_at[i * nv + v];
            for (std::size_t t = 0; t < paths.size(); ++t)
                if (img.at(0, off + t) != 0) e[paths[t]] = img.at(0, off + t);
            pres.d_elems[j][i] = std::move(e);
        }
    }
    return pres;
}

}  // namespace cf
