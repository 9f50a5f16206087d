#pragma once
// Combinatorial types of tropical stable maps: the realizability decision
// procedure, type construction from explicit maps, exhaustive enumeration of
// realisable types, lifts to subdivided fans, and chamber transport.

#include <optional>
#include <string>
#include <vector>

#include "cf/exactgeom.hpp"
#include "cf/fan.hpp"
#include "cf/tangency.hpp"
#include "cf/trees.hpp"

namespace cf {

// Crossing decoration of one base-tree edge or leg: carriers[0..k] are the
// minimal cones carrying the straight sub-segments, crossings[0..k-1] the
// cones (origin or ray) of the inserted bivalent vertices between them. A leg
// ends inside carriers.back(); an edge ends at the far stable vertex.
struct Segment {
    std::vector<ConeRef> carriers;
    std::vector<ConeRef> crossings;
    friend bool operator==(const Segment&, const Segment&) = default;
};

struct CombType {
    Fan2D fan;
    Tangency alpha;
    MarkedTree tree;  // stable base tree
    std::vector<ConeRef> vertex_cones;  // per base vertex
    std::vector<Segment> edge_decor;    // per base edge, oriented first->second
    std::vector<Segment> leg_decor;     // per mark

    // deterministic key: canonical tree traversal + cone/slope decorations;
    // two types over the same fan are equal iff their keys are equal
    std::string canonical_key() const;
};

// The semi-stable graph of a type: base vertices keep their ids, inserted
// bivalent vertices follow.
struct Materialized {
    MarkedTree graph;
    std::vector<ConeRef> vertex_cones;    // per graph vertex
    std::vector<ConeRef> edge_carriers;   // per graph edge
    std::vector<LatticeVec> edge_slopes;  // oriented edges[k].first -> second
    std::vector<ConeRef> leg_carriers;    // final carrier per mark
    std::vector<int> edge_parent;         // base edge index, or ~mark for legs
    int num_unstable = 0;
};

Materialized materialize(const CombType& c);

// Exact positions and lengths of a tropical map realizing a type.
struct Witness {
    std::vector<RatVec> positions;  // per materialized graph vertex
    std::vector<Rat> lengths;       // per materialized graph edge
};

// Checks the CombType invariants (InvariantViolation), then decides existence
// of a metric enhancement by exact LP. Witnesses are post-verified to
// reconstruct the queried type.
std::optional<Witness> is_realizable(const CombType& c);

// Two-vertex one-edge configuration decided by the LP alone: f_v in
// relint(sv), f_w = f_v + l*m with l > 0, f_w in relint(sw).
bool theta_lp(const Fan2D& fan, ConeRef sv, ConeRef sw, const LatticeVec& m);

// The conical-containment closed form for the same configuration; only the
// four face-compatible cases over a slope-sensitive fan are supported
// (UnsupportedConfiguration otherwise).
bool theta_realizable_closed_form(const Fan2D& fan, ConeRef sv, ConeRef sw,
                                  const LatticeVec& m);

// Traces the tropical map given by the stable-vertex positions: subdivides
// every edge and leg at ray/origin crossings and records minimal carriers.
// InconsistentMap if an edge difference is not a positive multiple of its
// balanced slope.
CombType construct_type(const MarkedTree& tree, const Tangency& alpha,
                        const Fan2D& fan, const std::vector<RatVec>& positions);

struct EnumerateOptions {
    bool allow_walls = false;
    bool permissive = false;  // degenerate subsets tolerated in the ordering
    int threads = 0;          // 0 = library default; 1 = serial reference path
};

// Complete duplicate-free canonically ordered list of realisable types.
std::vector<CombType> enumerate_realizable(const Fan2D& fan, const Tangency& alpha,
                                           const EnumerateOptions& opts = {});

// Serial reference implementation (same contract, no parallelism).
std::vector<CombType> enumerate_realizable_serial(const Fan2D& fan,
                                                  const Tangency& alpha,
                                                  const EnumerateOptions& opts = {});

// Re-traces a realisable type against a refining fan. NotRealizable if c has
// no witness.
CombType lift(const CombType& c, const Fan2D& subfan);

// Pushes a type over a refinement back down to the base fan.
CombType forget(const CombType& c, const Fan2D& basefan);

// The chamber transport bijection: lift to the slope-sensitive fan, replace
// every cone by its analogous cone for alpha2, re-solve, and push down.
CombType transport(const CombType& c, const Tangency& alpha2,
                   bool permissive = false);

}  // namespace cf
