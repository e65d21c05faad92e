#include "clusterforge/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace cf {

int Quiver::add_vertex(const std::string& id) {
    if (vertex_idx_.count(id)) throw BadInput("duplicate vertex id '" + id + "'");
    int v = n_vertices();
    vertices_.push_back(id);
    vertex_idx_[id] = v;
    out_.emplace_back();
    in_.emplace_back();
    return v;
}

int Quiver::add_arrow(const std::string& name, const std::string& from, const std::string& to) {
    if (arrow_idx_.count(name)) throw BadInput("duplicate arrow name '" + name + "'");
    int f = vertex_index(from), t = vertex_index(to);
    int a = n_arrows();
    arrows_.push_back(Arrow{name, f, t});
    arrow_idx_[name] = a;
    out_[f].push_back(a);
    in_[t].push_back(a);
    name_ranks_.clear();
    return a;
}

int Quiver::vertex_index(const std::string& id) const {
    auto it = vertex_idx_.find(id);
    if (it == vertex_idx_.end()) throw BadInput("unknown vertex '" + id + "'");
    return it->second;
}

std::optional<int> Quiver::try_vertex_index(const std::string& id) const {
    auto it = vertex_idx_.find(id);
    if (it == vertex_idx_.end()) return std::nullopt;
    return it->second;
}

int Quiver::arrow_index(const std::string& name) const {
    auto it = arrow_idx_.find(name);
    if (it == arrow_idx_.end()) throw BadInput("unknown arrow '" + name + "'");
    return it->second;
}

const std::vector<int>& Quiver::name_ranks() const {
    if (name_ranks_.empty() && !arrows_.empty()) {
        name_ranks_.resize(arrows_.size());
        int r = 0;
        for (const auto& [name, idx] : arrow_idx_) {
            (void)name;
            name_ranks_[idx] = r++;
        }
    }
    return name_ranks_;
}

Quiver Quiver::reversed() const {
    Quiver q;
    for (const auto& v : vertices_) q.add_vertex(v);
    for (const auto& a : arrows_) q.add_arrow(a.name, vertices_[a.to], vertices_[a.from]);
    return q;
}

bool Quiver::is_connected() const {
    if (vertices_.empty()) return true;
    std::vector<bool> seen(vertices_.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int a : out_[v])
            if (!seen[arrows_[a].to]) { seen[arrows_[a].to] = true; stack.push_back(arrows_[a].to); }
        for (int a : in_[v])
            if (!seen[arrows_[a].from]) { seen[arrows_[a].from] = true; stack.push_back(arrows_[a].from); }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Path Path::then(const Path& next, const Quiver& q) const {
    if (!composable_with(next, q)) throw std::logic_error("paths not composable");
    Path r = *this;
    if (r.arrows.empty()) r.base = base;
    r.arrows.insert(r.arrows.end(), next.arrows.begin(), next.arrows.end());
    if (r.arrows.empty()) r.base = base;
    return r;
}

Path Path::reversed() const {
    Path r = *this;
    std::reverse(r.arrows.begin(), r.arrows.end());
    return r;
}

std::string Path::to_string(const Quiver& q) const {
    if (arrows.empty()) return "e_" + q.vertex_name(base);
    std::string s;
    for (std::size_t i = 0; i < arrows.size(); ++i) s += (i ? "*" : "") + q.arrow(arrows[i]).name;
    return s;
}

bool path_less(const Path& a, const Path& b, const Quiver& q) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.arrows.empty()) return a.base < b.base;
    const auto& rk = q.name_ranks();
    for (std::size_t i = 0; i < a.arrows.size(); ++i)
        if (rk[a.arrows[i]] != rk[b.arrows[i]]) return rk[a.arrows[i]] < rk[b.arrows[i]];
    return false;
}

int relation_source(const Relation& r, const Quiver& q) {
    if (r.empty()) throw BadInput("empty relation");
    int s = r.front().path.source(q);
    for (const auto& t : r)
        if (t.path.source(q) != s) throw BadInput("inconsistent relation: mixed sources");
    return s;
}

int relation_target(const Relation& r, const Quiver& q) {
    int t0 = r.front().path.target(q);
    for (const auto& t : r)
        if (t.path.target(q) != t0) throw BadInput("inconsistent relation: mixed targets");
    return t0;
}

std::string relation_to_string(const Relation& r, const Quiver& q) {
    std::ostringstream os;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) os << " + ";
        if (r[i].coeff != 1) os << r[i].coeff.get_str() << "*";
        os << r[i].path.to_string(q);
    }
    return os.str();
}

}  // namespace cf
