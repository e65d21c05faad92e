#pragma once

// Small algebra builders shared by the test binaries.

#include "clusterforge/algebra.hpp"

namespace cf::testing {

inline Relation monomial(const Quiver& q, const std::vector<std::string>& arrows) {
    Path p;
    for (const auto& name : arrows) p.arrows.push_back(q.arrow_index(name));
    return Relation{RelationTerm{Scalar(1), p}};
}

// 1 -a-> 2 -b-> 3 -c-> 4 -e-> 5 bound by abc = 0.
inline AlgebraPtr tilted_a5(Field f = Field()) {
    Quiver q;
    for (int i = 1; i <= 5; ++i) q.add_vertex(std::to_string(i));
    q.add_arrow("a", "1", "2");
    q.add_arrow("b", "2", "3");
    q.add_arrow("c", "3", "4");
    q.add_arrow("e", "4", "5");
    return BoundQuiverAlgebra::compute_basis(q, {monomial(q, {"a", "b", "c"})}, f);
}

inline AlgebraPtr hereditary_a5(Field f = Field()) {
    Quiver q;
    for (int i = 1; i <= 5; ++i) q.add_vertex(std::to_string(i));
    q.add_arrow("a", "1", "2");
    q.add_arrow("b", "2", "3");
    q.add_arrow("c", "3", "4");
    q.add_arrow("e", "4", "5");
    return BoundQuiverAlgebra::compute_basis(q, {}, f);
}

// 3 -a-> 2 -b-> 1 bound by ab = 0 (the strict gl.dim bound witness).
inline AlgebraPtr tilted_a3(Field f = Field()) {
    Quiver q;
    for (int i = 1; i <= 3; ++i) q.add_vertex(std::to_string(i));
    q.add_arrow("a", "3", "2");
    q.add_arrow("b", "2", "1");
    return BoundQuiverAlgebra::compute_basis(q, {monomial(q, {"a", "b"})}, f);
}

// D4 sink orientation: 1 -> 4 <- 2, 3 -> 4.
inline AlgebraPtr hereditary_d4(Field f = Field()) {
    Quiver q;
    for (int i = 1; i <= 4; ++i) q.add_vertex(std::to_string(i));
    q.add_arrow("a", "1", "4");
    q.add_arrow("b", "2", "4");
    q.add_arrow("c", "3", "4");
    return BoundQuiverAlgebra::compute_basis(q, {}, f);
}

// 1 -a-> 2 -b-> 3 -c-> 4 bound by bc = 0: a second gentle tilted control.
inline AlgebraPtr tilted_a4(Field f = Field()) {
    Quiver q;
    for (int i = 1; i <= 4; ++i) q.add_vertex(std::to_string(i));
    q.add_arrow("a", "1", "2");
    q.add_arrow("b", "2", "3");
    q.add_arrow("c", "3", "4");
    return BoundQuiverAlgebra::compute_basis(q, {monomial(q, {"b", "c"})}, f);
}

inline AlgebraPtr hereditary_a2(Field f = Field()) {
    Quiver q;
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_arrow("a", "1", "2");
    return BoundQuiverAlgebra::compute_basis(q, {}, f);
}

}  // namespace cf::testing
