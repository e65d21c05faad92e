#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clusterforge/algebra.hpp"

using namespace cf;

namespace {

// 1 --a--> 2 --b--> 3 --c--> 4 --e--> 5, bound by abc = 0 (the running
// tilted-algebra fixture).
Quiver linear5() {
    Quiver q;
    for (int i = 1; i <= 5; ++i) q.add_vertex(std::to_string(i));
    q.add_arrow("a", "1", "2");
    q.add_arrow("b", "2", "3");
    q.add_arrow("c", "3", "4");
    q.add_arrow("e", "4", "5");
    return q;
}

Relation monomial(const Quiver& q, const std::vector<std::string>& arrows) {
    Path p;
    for (const auto& name : arrows) p.arrows.push_back(q.arrow_index(name));
    return Relation{RelationTerm{Scalar(1), p}};
}

}  // namespace

TEST_CASE("hereditary A5 has 15 basis paths") {
    auto alg = BoundQuiverAlgebra::compute_basis(linear5(), {}, Field());
    CHECK(alg->dim() == 15);
    CHECK(alg->is_hereditary());
    CHECK(alg->nilpotency_bound() == 5);
}

TEST_CASE("single vertex algebra is one dimensional") {
    Quiver q;
    q.add_vertex("1");
    auto alg = BoundQuiverAlgebra::compute_basis(q, {}, Field());
    CHECK(alg->dim() == 1);
}

TEST_CASE("running fixture: dim C = 13") {
    Quiver q = linear5();
    auto alg = BoundQuiverAlgebra::compute_basis(q, {monomial(q, {"a", "b", "c"})}, Field());
    CHECK(alg->dim() == 13);
    // struck paths: abc and abce
    CHECK(alg->pair_basis(0, 3).empty());
    CHECK(alg->pair_basis(0, 4).empty());
    CHECK(alg->pair_basis(0, 2).size() == 1);
}

TEST_CASE("cluster-tilted quiver of the running fixture: dim 16") {
    Quiver q = linear5();
    q.add_arrow("d", "4", "1");
    std::vector<Relation> rels = {monomial(q, {"a", "b", "c"}), monomial(q, {"d", "a", "b"}),
                                  monomial(q, {"c", "d", "a"}), monomial(q, {"b", "c", "d"})};
    auto alg = BoundQuiverAlgebra::compute_basis(q, rels, Field());
    CHECK(alg->dim() == 16);
    // the three new basis paths are d, da, cd
    CHECK(alg->pair_basis(3, 0).size() == 1);
    CHECK(alg->pair_basis(3, 1).size() == 1);
    CHECK(alg->pair_basis(2, 0).size() == 1);
}

TEST_CASE("three-cycle with all length-2 relations: dim 6") {
    Quiver q;
    for (int i = 1; i <= 3; ++i) q.add_vertex(std::to_string(i));
    q.add_arrow("a", "3", "2");
    q.add_arrow("b", "2", "1");
    q.add_arrow("d", "1", "3");
    std::vector<Relation> rels = {monomial(q, {"a", "b"}), monomial(q, {"b", "d"}),
                                  monomial(q, {"d", "a"})};
    auto alg = BoundQuiverAlgebra::compute_basis(q, rels, Field());
    CHECK(alg->dim() == 6);
}

TEST_CASE("non-admissible ideals are rejected") {
    Quiver loop;
    loop.add_vertex("1");
    loop.add_arrow("x", "1", "1");
    CHECK_THROWS_WITH_AS(BoundQuiverAlgebra::compute_basis(loop, {}, Field(), 10).get(),
                         doctest::Contains("not admissible"), BadInput);

    Path x2{-1, {0, 0}}, x3{-1, {0, 0, 0}};
    Relation r{RelationTerm{Scalar(1), x3}, RelationTerm{Scalar(-1), x2}};
    CHECK_THROWS_WITH_AS(BoundQuiverAlgebra::compute_basis(loop, {r}, Field(), 10).get(),
                         doctest::Contains("not admissible"), BadInput);
}

TEST_CASE("short relation terms are rejected") {
    Quiver q = linear5();
    Relation bad{RelationTerm{Scalar(1), Path{-1, {q.arrow_index("a")}}}};
    CHECK_THROWS_AS(BoundQuiverAlgebra::compute_basis(q, {bad}, Field()), BadInput);
}

TEST_CASE("mixed-endpoint relations are rejected") {
    Quiver q = linear5();
    Relation bad{RelationTerm{Scalar(1), Path{-1, {0, 1}}},
                 RelationTerm{Scalar(1), Path{-1, {1, 2}}}};
    CHECK_THROWS_AS(BoundQuiverAlgebra::compute_basis(q, {bad}, Field()), BadInput);
}

TEST_CASE("basis multiplication is associative (exhaustive)") {
    Quiver q = linear5();
    q.add_arrow("d", "4", "1");
    std::vector<Relation> rels = {monomial(q, {"a", "b", "c"}), monomial(q, {"d", "a", "b"}),
                                  monomial(q, {"c", "d", "a"}), monomial(q, {"b", "c", "d"})};
    auto alg = BoundQuiverAlgebra::compute_basis(q, rels, Field());
    for (int i = 0; i < alg->dim(); ++i)
        for (int j = 0; j < alg->dim(); ++j)
            for (int k = 0; k < alg->dim(); ++k) {
                SparseElem x{{i, Scalar(1)}}, y{{j, Scalar(1)}}, z{{k, Scalar(1)}};
                CHECK(alg->mul(alg->mul(x, y), z) == alg->mul(x, alg->mul(y, z)));
            }
}

TEST_CASE("opposite is an involution up to renaming") {
    Quiver q = linear5();
    auto alg = BoundQuiverAlgebra::compute_basis(q, {monomial(q, {"a", "b", "c"})}, Field());
    auto op = alg->opposite();
    CHECK(op->dim() == 13);
    auto original = op->opposite();
    CHECK(original->dim() == alg->dim());
    for (int a = 0; a < q.n_arrows(); ++a) {
        const Arrow& lhs = alg->quiver().arrow(a);
        int idx = original->quiver().arrow_index(lhs.name);
        CHECK(original->quiver().arrow(idx).from == lhs.from);
        CHECK(original->quiver().arrow(idx).to == lhs.to);
    }
    CHECK(relation_to_string(original->relations()[0], original->quiver()) ==
          relation_to_string(alg->relations()[0], alg->quiver()));
}

TEST_CASE("relation system minimality") {
    Quiver q = linear5();
    std::vector<Relation> minimal = {monomial(q, {"a", "b", "c"})};
    CHECK(relation_system_is_minimal(q, minimal, Field()));
    std::vector<Relation> redundant = {monomial(q, {"a", "b", "c"}),
                                       monomial(q, {"a", "b", "c", "e"})};
    CHECK_FALSE(relation_system_is_minimal(q, redundant, Field()));
}

TEST_CASE("basis paths are length-lex representatives") {
    Quiver q = linear5();
    auto alg = BoundQuiverAlgebra::compute_basis(q, {monomial(q, {"a", "b", "c"})}, Field());
    for (int i = 1; i < alg->dim(); ++i)
        CHECK(!path_less(alg->basis_path(i), alg->basis_path(i - 1), q));
}

TEST_CASE("compute_basis over F2") {
    Quiver q = linear5();
    auto alg = BoundQuiverAlgebra::compute_basis(q, {monomial(q, {"a", "b", "c"})}, Field(2));
    CHECK(alg->dim() == 13);
}
