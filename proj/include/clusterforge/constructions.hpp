#pragma once

#include "clusterforge/bimodule.hpp"
#include "clusterforge/sca.hpp"

namespace cf {

// Chosen basis of X/(rad·X + X·rad): one future arrow per element.  The
// element sits in component (left_vertex, right_vertex) of the bimodule.
struct NewArrowSpec {
    int left_vertex, right_vertex;
    std::string name;
    Matrix rep;  // 1 × comp(left,right) coordinates
};

std::vector<NewArrowSpec> bimodule_top(const Bimodule& x, const std::string& prefix);

// C ⋉ E with E·E = 0, presented as a bound quiver algebra.  Base arrows keep
// their names, new arrows are named from bimodule_top.
struct TrivialExtensionAlgebra {
    AlgebraPtr base;
    AlgebraPtr algebra;
    std::vector<NewArrowSpec> new_arrows;
};

TrivialExtensionAlgebra trivial_extension(const AlgebraPtr& c, const Bimodule& e);

enum class WindowKind { ClusterRepetitive, Repetitive };

// Finite truncation of the cluster repetitive (glue E) or repetitive (glue
// DC) algebra on levels [level_lo, level_hi].  Vertices are named "(l,i)",
// arrows "(a,i)" with i the source level; glue arrows run from level i to
// level i-1.
struct WindowedAlgebra {
    WindowKind kind = WindowKind::ClusterRepetitive;
    AlgebraPtr base;
    int level_lo = 0, level_hi = 0;
    AlgebraPtr algebra;
    std::vector<NewArrowSpec> new_arrows;

    std::vector<int> base_vertex_of, level_of;  // per window vertex
    // base arrows are kind ids 0..n_arrows-1, glue arrows n_arrows+k
    std::vector<int> arrow_kind_of, arrow_level_of;

    int levels() const { return level_hi - level_lo + 1; }
    int window_vertex(int base_vertex, int level) const;
    int window_arrow(int kind_id, int level) const;
    bool level_in_window(int level) const { return level >= level_lo && level <= level_hi; }
};

WindowedAlgebra cluster_repetitive_window(const AlgebraPtr& c, const Bimodule& e, int lo, int hi);
WindowedAlgebra repetitive_window(const AlgebraPtr& c, int lo, int hi);

// The two-level matrix algebra [[C,0],[E,C]]: the [0,1] cluster-repetitive
// window.  Per the module-triple convention (U,V,mu), U is the part over
// e0 (the level-1 vertices, the source of mu) and V over e1 (level 0).
struct ClusterDuplicatedAlgebra {
    WindowedAlgebra window;
    std::vector<int> e0_vertices;  // level 1
    std::vector<int> e1_vertices;  // level 0
};

ClusterDuplicatedAlgebra cluster_duplicated(const AlgebraPtr& c, const Bimodule& e);

// M^{phi^k}: vertex spaces relocated (l,i) -> (l,i+k); errors if the support
// leaves the window.
Representation shift_twist(const WindowedAlgebra& w, const Representation& m, int k);

// Extend a C-module by zero onto a single window level / restrict back.
Representation embed_at_level(const WindowedAlgebra& w, const Representation& m, int level);
Representation restrict_to_level(const WindowedAlgebra& w, const Representation& m, int level);

// Levels carrying a nonzero vertex space.
std::pair<int, int> support_levels(const WindowedAlgebra& w, const Representation& m);

}  // namespace cf
