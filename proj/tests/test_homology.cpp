#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clusterforge/bimodule.hpp"
#include "clusterforge/homology.hpp"
#include "fixtures.hpp"

using namespace cf;
using namespace cf::testing;

namespace {

// independent oracle: Ext^k_A(M, N) = Ext^k_{A^op}(DN, DM)
int ext_dim_via_duality(const Representation& m, const Representation& n, int k) {
    AlgebraPtr op = m.algebra->opposite();
    return ext_dim(rep_dual(n, op), rep_dual(m, op), k);
}

}  // namespace

TEST_CASE("syzygies") {
    auto c = tilted_a5();
    CHECK(syzygy(rep_projective(c, 1)).is_zero());
    CHECK(cosyzygy(rep_injective(c, 2)).is_zero());
    Representation o1 = syzygy(rep_simple(c, 0));
    CHECK(o1.dims == std::vector<int>{0, 1, 1, 0, 0});  // rad P_1, not projective
    // over hereditary A5, rad P_1 = P_2 is projective and gets stripped
    auto h = hereditary_a5();
    CHECK(syzygy(rep_simple(h, 0), 1).is_zero());
}

TEST_CASE("exactness of 0 -> Omega M -> P0 -> M -> 0") {
    auto c = tilted_a5();
    for (int v = 0; v < 5; ++v) {
        Representation s = rep_simple(c, v);
        ProjectiveCover cover = projective_cover(s);
        SubQuotient ker = kernel_rep(cover.p, s, cover.map);
        CHECK(ker.rep.total_dim() + s.total_dim() == cover.p.total_dim());
        VertexMaps comp = maps_compose(ker.rep, ker.map, cover.map);
        for (const auto& m : comp) CHECK(m.is_zero());
    }
}

TEST_CASE("ext basics") {
    auto c = tilted_a5();
    Representation p1 = rep_projective(c, 0);
    CHECK(ext_dim(p1, p1, 0) == 1);
    for (int k = 1; k <= 3; ++k) {
        CHECK(ext_dim(p1, rep_simple(c, 3), k) == 0);
        CHECK(ext_dim(rep_projective(c, 2), rep_injective(c, 1), k) == 0);
    }
    // ext^0 agrees with Hom
    CHECK(ext_dim(rep_simple(c, 0), rep_simple(c, 0), 0) == 1);
    CHECK(ext_dim(rep_simple(c, 0), rep_simple(c, 1), 1) == 1);
}

TEST_CASE("ext via injective-coresolution duality oracle") {
    auto c = tilted_a5();
    std::vector<Representation> probes = {rep_simple(c, 0), rep_simple(c, 2),
                                          rep_injective(c, 4), rep_projective(c, 1)};
    for (const auto& m : probes)
        for (const auto& n : probes)
            for (int k = 0; k <= 2; ++k) CHECK(ext_dim(m, n, k) == ext_dim_via_duality(m, n, k));
}

TEST_CASE("homological dimensions") {
    auto c = tilted_a5();
    CHECK(global_dim(c).value == 2);
    CHECK(global_dim(c).finite());
    CHECK(global_dim(hereditary_a5()).value == 1);
    CHECK(global_dim(tilted_a3()).value == 2);
    CHECK(proj_dim(rep_injective(c, 0)).value == 2);
    CHECK(proj_dim(rep_injective(c, 1)).value == 2);
    CHECK(proj_dim(rep_injective(c, 2)).value == 0);
    CHECK(proj_dim(rep_injective(c, 3)).value == 1);
    CHECK(inj_dim(rep_projective(c, 4)).value == 1);
}

TEST_CASE("dual bimodule") {
    auto c = tilted_a5();
    Bimodule dc = dual_bimodule(c);
    CHECK(dc.dim() == 13);
    dc.validate();
    // semisimple point algebra: DC = k
    Quiver pt;
    pt.add_vertex("1");
    auto k1 = BoundQuiverAlgebra::compute_basis(pt, {}, Field());
    CHECK(dual_bimodule(k1).dim() == 1);
    CHECK(dual_bimodule(hereditary_a5()).dim() == 15);
}

TEST_CASE("ext2 bimodule of the running fixture has dimension 3") {
    auto c = tilted_a5();
    Bimodule e = ext2_bimodule(c);
    CHECK(e.dim() == 3);
    // components: e_4 E e_1, e_3 E e_1, e_4 E e_2 (vertices are 0-indexed)
    CHECK(e.comp(3, 0) == 1);
    CHECK(e.comp(2, 0) == 1);
    CHECK(e.comp(3, 1) == 1);
    // generator: the class in e_4 E e_1; acting by c on the left and a on the
    // right reaches the other two components
    const Quiver& q = c->quiver();
    int arr_c = q.arrow_index("c"), arr_a = q.arrow_index("a");
    CHECK(!e.left_act[arr_c][0].is_zero());
    CHECK(!e.right_act[arr_a][3].is_zero());
}

TEST_CASE("ext2 bimodule: strictness witness has dimension 1") {
    Bimodule e = ext2_bimodule(tilted_a3());
    CHECK(e.dim() == 1);
    CHECK(e.comp(0, 2) == 1);  // e_1 E e_3
}

TEST_CASE("ext2 bimodule vanishes for hereditary algebras") {
    CHECK(ext2_bimodule(hereditary_a5()).dim() == 0);
    CHECK(ext2_bimodule(hereditary_d4()).dim() == 0);
    CHECK(ext2_bimodule(hereditary_a2()).dim() == 0);
}

TEST_CASE("ext2 bimodule of the second gentle control") {
    Bimodule e = ext2_bimodule(tilted_a4());
    CHECK(e.dim() == 1);
    CHECK(e.comp(3, 1) == 1);  // relation bc: 2 -> 4, new arrow 4 -> 2
}

TEST_CASE("chain-map lift choice does not matter on homology") {
    // recompute the right action with a second lift: perturb by an element of
    // Hom that dies on homology -- realized here by checking the action law
    // (x*a)*b = x*(ab) on the fixture, which composes two independent lifts
    auto c = tilted_a5();
    Bimodule e = ext2_bimodule(c);
    const Quiver& q = c->quiver();
    int arr_a = q.arrow_index("a"), arr_b = q.arrow_index("b");
    // (x*a)*b must equal 0 = x*(ab) on e_4 E e_1 since ab followed from vertex
    // 1 ends at 3 and e_4 E e_3 = 0
    Matrix via_a = e.right_act[arr_a][3] * e.right_act[arr_b][3];
    CHECK(via_a.is_zero());
    CHECK(e.comp(3, 2) == 0);
}
