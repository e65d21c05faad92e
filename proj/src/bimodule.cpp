#include "clusterforge/bimodule.hpp"

namespace cf {

int Bimodule::dim() const {
    int d = 0;
    for (const auto& row : comp_dims)
        for (int x : row) d += x;
    return d;
}

Matrix Bimodule::left_path_action(const Path& p, int right_v) const {
    const Quiver& q = left_alg->quiver();
    // (p1 p2)·x = p1·(p2·x): apply the arrows right to left
    Matrix m = Matrix::identity(comp_dims[p.target(q)][right_v], left_alg->field());
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) m = m * left_act[*it][right_v];
    return m;
}

Matrix Bimodule::right_path_action(int left_u, const Path& p) const {
    const Quiver& q = right_alg->quiver();
    Matrix m = Matrix::identity(comp_dims[left_u][p.source(q)], right_alg->field());
    for (int a : p.arrows) m = m * right_act[a][left_u];
    return m;
}

void Bimodule::validate() const {
    const Quiver& ql = left_alg->quiver();
    const Quiver& qr = right_alg->quiver();
    for (int a = 0; a < ql.n_arrows(); ++a)
        for (int b = 0; b < qr.n_arrows(); ++b) {
            int s = ql.arrow(a).from, t = ql.arrow(a).to;
            int sb = qr.arrow(b).from, tb = qr.arrow(b).to;
            // comp(t, sb) -L-> comp(s, sb) -R-> comp(s, tb)  vs  R then L
            Matrix lr = left_act[a][sb] * right_act[b][s];
            Matrix rl = right_act[b][t] * left_act[a][tb];
            if (lr != rl)
                throw std::logic_error("bimodule actions do not commute on arrows " +
                                       ql.arrow(a).name + ", " + qr.arrow(b).name);
        }
    for (const auto& rel : left_alg->relations()) {
        int u = relation_source(rel, ql), w = relation_target(rel, ql);
        for (int v = 0; v < qr.n_vertices(); ++v) {
            Matrix sum(comp_dims[w][v], comp_dims[u][v], left_alg->field());
            for (const auto& term : rel)
                sum = sum + left_path_action(term.path, v).scaled(term.coeff);
            if (!sum.is_zero()) throw std::logic_error("left relation acts non-trivially");
        }
    }
    for (const auto& rel : right_alg->relations()) {
        int u = relation_source(rel, qr), w = relation_target(rel, qr);
        for (int l = 0; l < ql.n_vertices(); ++l) {
            Matrix sum(comp_dims[l][u], comp_dims[l][w], right_alg->field());
            for (const auto& term : rel)
                sum = sum + right_path_action(l, term.path).scaled(term.coeff);
            if (!sum.is_zero()) throw std::logic_error("right relation acts non-trivially");
        }
    }
}

Bimodule dual_bimodule(const AlgebraPtr& c) {
    const Quiver& q = c->quiver();
    int n = q.n_vertices();
    Bimodule dc;
    dc.left_alg = dc.right_alg = c;
    dc.comp_dims.assign(n, std::vector<int>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) dc.comp_dims[u][v] = (int)c->pair_basis(v, u).size();
    dc.left_act.resize(q.n_arrows());
    dc.right_act.resize(q.n_arrows());
    for (int a = 0; a < q.n_arrows(); ++a) {
        int s = q.arrow(a).from, t = q.arrow(a).to;
        SparseElem ae = c->path_element(Path{-1, {a}});
        dc.left_act[a].resize(n);
        dc.right_act[a].resize(n);
        for (int v = 0; v < n; ++v)
            dc.left_act[a][v] = c->right_mult_matrix(v, s, t, ae).transpose();
        for (int u = 0; u < n; ++u)
            dc.right_act[a][u] = c->left_mult_matrix(ae, s, t, u).transpose();
    }
    return dc;
}

Representation injective_summand_of_dual(const Bimodule& dc, int l) {
    const AlgebraPtr& c = dc.right_alg;
    Representation m;
    m.algebra = c;
    const Quiver& q = c->quiver();
    m.dims.resize(q.n_vertices());
    for (int v = 0; v < q.n_vertices(); ++v) m.dims[v] = dc.comp_dims[l][v];
    for (int a = 0; a < q.n_arrows(); ++a) m.arrow_mats.push_back(dc.right_act[a][l]);
    return m;
}

Bimodule ext2_bimodule(const AlgebraPtr& c, int cap) {
    HomDim gd = global_dim(c, cap);
    if (gd.at_least)
        throw BadInput("resolution too long: global dimension exceeds cap " + std::to_string(cap));
    const Quiver& q = c->quiver();
    int n = q.n_vertices();
    const Field& fld = c->field();
    Bimodule dc = dual_bimodule(c);

    // Resolutions of the injectives I_l = e_l DC to degree 3, and per left
    // vertex u the Ext^2 data of Hom(P_•(I_l), P_u).
    struct Piece {
        ProjResolution res;
        // per u: spaces of the degree-2 term of Hom(P_•, P_u)
        std::vector<ExtGroup> ext;          // [u]
        std::vector<Representation> dummy;  // unused, keeps struct simple
    };
    std::vector<Piece> pieces(n);
    std::vector<Representation> projectives;
    for (int u = 0; u < n; ++u) projectives.push_back(rep_projective(c, u));
    for (int l = 0; l < n; ++l) {
        Representation il = injective_summand_of_dual(dc, l);
        if (il.is_zero()) {
            pieces[l].ext.assign(n, ExtGroup{});
            continue;
        }
        pieces[l].res = minimal_resolution(il, 3);
        pieces[l].ext.resize(n);
        for (int u = 0; u < n; ++u) pieces[l].ext[u] = ext_group(il, projectives[u], 2, 3);
    }

    Bimodule e;
    e.left_alg = e.right_alg = c;
    e.comp_dims.assign(n, std::vector<int>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int l = 0; l < n; ++l) e.comp_dims[u][l] = pieces[l].ext[u].dim;

    // expressing a cocycle row in the chosen basis modulo boundaries
    auto express = [&](const ExtGroup& g, const Matrix& z) {
        if (g.dim == 0) return Matrix(z.rows(), 0, fld);
        Matrix stack = g.boundaries.vstack(g.cocycles);
        Matrix coords = coordinates(stack, z);
        Matrix out(z.rows(), g.dim, fld);
        for (std::size_t r = 0; r < z.rows(); ++r)
            for (int j = 0; j < g.dim; ++j)
                out.at(r, j) = coords.at(r, g.boundaries.rows() + j);
        return out;
    };

    // left action of arrow a: s->t on e_t E e_l -> e_s E e_l: postcompose
    // cocycles Hom(P_2(I_l), P_t) -> Hom(P_2(I_l), P_s) with left mult by a
    e.left_act.resize(q.n_arrows());
    e.right_act.resize(q.n_arrows());
    for (int a = 0; a < q.n_arrows(); ++a) {
        int s = q.arrow(a).from, t = q.arrow(a).to;
        SparseElem ae = c->path_element(Path{-1, {a}});
        e.left_act[a].resize(n);
        for (int l = 0; l < n; ++l) {
            const ExtGroup& src = pieces[l].ext[t];
            const ExtGroup& dst = pieces[l].ext[s];
            if (src.dim == 0 || dst.dim == 0) {
                e.left_act[a][l] = Matrix(src.dim, dst.dim, fld);
                continue;
            }
            const auto& verts = pieces[l].res.vertices[2];
            Matrix mapped(src.dim, dst.block_offsets.back(), fld);
            for (int r = 0; r < src.dim; ++r)
                for (std::size_t j = 0; j < verts.size(); ++j) {
                    // block j: e_t A e_{w_j} -> e_s A e_{w_j}
                    Matrix blk = c->left_mult_matrix(ae, s, t, verts[j]);
                    for (int x = src.block_offsets[j]; x < src.block_offsets[j + 1]; ++x)
                        if (src.cocycles.at(r, x) != 0)
                            for (std::size_t y = 0; y < blk.cols(); ++y)
                                mapped.at(r, dst.block_offsets[j] + y) = fld.add(
                                    mapped.at(r, dst.block_offsets[j] + y),
                                    fld.mul(src.cocycles.at(r, x),
                                            blk.at(x - src.block_offsets[j], y)));
                }
            e.left_act[a][l] = express(dst, mapped);
        }
    }

    // right action of arrow a: s->t on e_u E e_s -> e_u E e_t: lift
    // rho_a: I_t -> I_s to a chain map and precompose cocycles with its
    // degree-2 component.
    for (int a = 0; a < q.n_arrows(); ++a) {
        int s = q.arrow(a).from, t = q.arrow(a).to;
        e.right_act[a].resize(n);
        Representation it_rep = injective_summand_of_dual(dc, t);
        Representation is_rep = injective_summand_of_dual(dc, s);
        // rho_a at vertex v is the left action of a on DC
        VertexMaps rho;
        for (int v = 0; v < n; ++v) rho.push_back(dc.left_act[a][v]);

        bool trivial = it_rep.is_zero() || is_rep.is_zero() ||
                       pieces[t].res.vertices.size() < 3 || pieces[s].res.vertices.size() < 3;
        std::vector<std::vector<SparseElem>> f2;
        if (!trivial) {
            const auto& rt = pieces[t].res;
            const auto& rs = pieces[s].res;
            ProjectiveCover ct = projective_cover(it_rep), cs = projective_cover(is_rep);
            // f0 with f0 ∘ cover_s = cover_t ∘ rho
            VertexMaps rhs0;
            for (int v = 0; v < n; ++v) rhs0.push_back(ct.map[v] * rho[v]);
            auto f0 = lift_through(c, rt.vertices[0], rs.vertices[0], is_rep, cs.map, rhs0);
            // f1 with f1 ∘ d1_s = d1_t ∘ f0
            VertexMaps d1t = projective_sum_map(c, rt.vertices[1], rt.vertices[0], rt.diff[1]);
            VertexMaps d1s = projective_sum_map(c, rs.vertices[1], rs.vertices[0], rs.diff[1]);
            VertexMaps f0m = projective_sum_map(c, rt.vertices[0], rs.vertices[0], f0);
            Representation p0s = direct_sum(c, [&] {
                                    std::vector<Representation> sm;
                                    for (int v : rs.vertices[0]) sm.push_back(rep_projective(c, v));
                                    return sm;
                                }()).rep;
            VertexMaps rhs1;
            for (int v = 0; v < n; ++v) rhs1.push_back(d1t[v] * f0m[v]);
            auto f1 = lift_through(c, rt.vertices[1], rs.vertices[1], p0s, d1s, rhs1);
            // f2 with f2 ∘ d2_s = d2_t ∘ f1
            VertexMaps d2t = projective_sum_map(c, rt.vertices[2], rt.vertices[1], rt.diff[2]);
            VertexMaps d2s = projective_sum_map(c, rs.vertices[2], rs.vertices[1], rs.diff[2]);
            VertexMaps f1m = projective_sum_map(c, rt.vertices[1], rs.vertices[1], f1);
            Representation p1s = direct_sum(c, [&] {
                                    std::vector<Representation> sm;
                                    for (int v : rs.vertices[1]) sm.push_back(rep_projective(c, v));
                                    return sm;
                                }()).rep;
            VertexMaps rhs2;
            for (int v = 0; v < n; ++v) rhs2.push_back(d2t[v] * f1m[v]);
            f2 = lift_through(c, rt.vertices[2], rs.vertices[2], p1s, d2s, rhs2);
        }

        for (int u = 0; u < n; ++u) {
            const ExtGroup& src = pieces[s].ext[u];
            const ExtGroup& dst = pieces[t].ext[u];
            if (src.dim == 0 || dst.dim == 0) {
                e.right_act[a][u] = Matrix(src.dim, dst.dim, fld);
                continue;
            }
            const auto& vt = pieces[t].res.vertices[2];
            const auto& vs = pieces[s].res.vertices[2];
            Matrix mapped(src.dim, dst.block_offsets.back(), fld);
            for (int r = 0; r < src.dim; ++r) {
                for (std::size_t jt = 0; jt < vt.size(); ++jt)
                    for (std::size_t js = 0; js < vs.size(); ++js) {
                        const SparseElem& elem = f2[jt][js];
                        if (elem.empty()) continue;
                        // z_{js} · elem, elem in e_{vs[js]} A e_{vt[jt]}
                        Matrix blk = c->right_mult_matrix(u, vs[js], vt[jt], elem);
                        for (int x = src.block_offsets[js]; x < src.block_offsets[js + 1]; ++x)
                            if (src.cocycles.at(r, x) != 0)
                                for (std::size_t y = 0; y < blk.cols(); ++y)
                                    mapped.at(r, dst.block_offsets[jt] + y) = fld.add(
                                        mapped.at(r, dst.block_offsets[jt] + y),
                                        fld.mul(src.cocycles.at(r, x),
                                                blk.at(x - src.block_offsets[js], y)));
                    }
            }
            e.right_act[a][u] = express(dst, mapped);
        }
    }
    e.validate();
    return e;
}

}  // namespace cf
