#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clusterforge/field.hpp"

namespace cf {

struct Arrow {
    std::string name;
    int from = -1;
    int to = -1;
};

// Finite directed multigraph.  Vertices and arrows are addressed by index;
// names are kept for I/O and must be unique.
class Quiver {
  public:
    Quiver() = default;

    int add_vertex(const std::string& id);
    int add_arrow(const std::string& name, const std::string& from, const std::string& to);

    int n_vertices() const { return static_cast<int>(vertices_.size()); }
    int n_arrows() const { return static_cast<int>(arrows_.size()); }

    const std::string& vertex_name(int v) const { return vertices_[v]; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    int vertex_index(const std::string& id) const;
    int arrow_index(const std::string& name) const;
    std::optional<int> try_vertex_index(const std::string& id) const;

    const std::vector<int>& arrows_from(int v) const { return out_[v]; }
    const std::vector<int>& arrows_into(int v) const { return in_[v]; }

    // Rank of each arrow name in alphabetical order, for the length-lex path
    // order.
    const std::vector<int>& name_ranks() const;

    Quiver reversed() const;
    bool is_connected() const;  // as an undirected graph

  private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vertex_idx_;
    std::map<std::string, int> arrow_idx_;
    std::vector<std::vector<int>> out_, in_;
    mutable std::vector<int> name_ranks_;
};

// A path, read left to right: arrows[0] is traversed first.  A trivial path
// carries its vertex in `base`.
struct Path {
    int base = -1;
    std::vector<int> arrows;

    static Path trivial(int vertex) { return Path{vertex, {}}; }

    std::size_t length() const { return arrows.size(); }
    int source(const Quiver& q) const { return arrows.empty() ? base : q.arrow(arrows.front()).from; }
    int target(const Quiver& q) const { return arrows.empty() ? base : q.arrow(arrows.back()).to; }
    bool composable_with(const Path& next, const Quiver& q) const {
        return target(q) == next.source(q);
    }
    Path then(const Path& next, const Quiver& q) const;
    Path reversed() const;

    bool operator==(const Path& o) const {
        return arrows.empty() == o.arrows.empty() &&
               (arrows.empty() ? base == o.base : arrows == o.arrows);
    }
    std::string to_string(const Quiver& q) const;
};

// (length, alphabetical-on-arrow-names) order; trivial paths first, by vertex.
bool path_less(const Path& a, const Path& b, const Quiver& q);

struct RelationTerm {
    Scalar coeff;
    Path path;
};

// A linear combination of paths with a common source and target.
using Relation = std::vector<RelationTerm>;

int relation_source(const Relation& r, const Quiver& q);
int relation_target(const Relation& r, const Quiver& q);
std::string relation_to_string(const Relation& r, const Quiver& q);

}  // namespace cf
