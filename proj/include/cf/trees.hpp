#pragma once
// Stable n-marked genus-0 trees, semi-stable subdivisions, and the unique
// balanced slope assignment.

#include <string>
#include <vector>

#include "cf/exactgeom.hpp"
#include "cf/tangency.hpp"

namespace cf {

struct MarkedTree {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;  // unordered pairs of vertex ids
    std::vector<int> legs;                   // legs[i] = vertex of mark i+1

    int n() const { return static_cast<int>(legs.size()); }
    // legs + incident edges
    int valence(int v) const;
    int leg_count(int v) const;
    // semi-stable form: unstable vertices are exactly these
    bool is_unstable(int v) const { return valence(v) == 2 && leg_count(v) == 0; }
    // connected acyclic check; TooFewMarks / NotATree
    void validate() const;
    // Marks strictly behind the directed edge from -> to (on the `from` side).
    unsigned marks_behind(int from, int to) const;
    std::string canonical_key() const;
    // deterministic vertex order (canonical root first, children by subtree
    // encoding); well defined because marked trees have no automorphisms
    std::vector<int> canonical_dfs_order() const;
};

// One representative per isomorphism class of stable n-marked trees, sorted
// by canonical key. Throws TooFewMarks for n < 3.
std::vector<MarkedTree> enumerate_stable_trees(int n);

// Slopes of the unique balanced assignment: edge_slopes[k] is the slope in
// the direction edges[k].first -> edges[k].second; legs carry alpha_i.
struct SlopeAssignment {
    std::vector<LatticeVec> edge_slopes;
    std::vector<LatticeVec> leg_slopes;
};

SlopeAssignment balanced_slopes(const MarkedTree& tree, const Tangency& alpha);

// Removes 2-valent legless vertices, amalgamating their incident edges.
MarkedTree smooth_unstable(const MarkedTree& tree);

}  // namespace cf
