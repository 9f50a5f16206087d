#pragma once
// Tangency data alpha, subset slopes, the index set of directions, exact
// cyclic orderings, Sigma-equivalence and the wall arrangement.

#include <string>
#include <vector>

#include "cf/exactgeom.hpp"
#include "cf/fan.hpp"

namespace cf {

struct Tangency {
    int n = 0;
    std::vector<LatticeVec> entries;

    Tangency() = default;
    // Validates sum = 0 (Unbalanced) and alpha_i != 0 (ZeroEntry).
    Tangency(std::vector<LatticeVec> e);
};

// Sum over the bits of mask (bit i = mark i+1).
LatticeVec subset_slope(const Tangency& alpha, unsigned mask);

// "{1,3}" style rendering of a subset mask.
std::string subset_str(unsigned mask, int n);

// All proper nonempty I with alpha_I = 0, sorted; closed under complement.
std::vector<unsigned> vanishing_subsets(const Tangency& alpha);

// An element of the index set: a proper nonempty subset of [n] or a ray of
// the doubled fan Sigma-dagger (identified by its index there).
struct IndexElement {
    enum Kind { Subset, FanRay } kind = Subset;
    unsigned mask = 0;  // Subset
    int ray = -1;       // FanRay: index into dagger(fan).rays()
    friend bool operator==(const IndexElement&, const IndexElement&) = default;
    friend auto operator<=>(const IndexElement&, const IndexElement&) = default;
};

LatticeVec element_slope(const IndexElement& e, const Fan2D& dag,
                         const Tangency& alpha);
std::string element_str(const IndexElement& e, const Fan2D& dag, int n);

// Direction classes of the index set listed counterclockwise from (1,0).
struct CyclicOrder {
    std::vector<std::vector<IndexElement>> groups;  // each sorted internally
    std::vector<LatticeVec> dirs;                   // primitive direction per group

    // index of the group containing e; throws UnknownElement
    int group_of(const IndexElement& e) const;
};

// Strict mode throws DegenerateSubset on alpha_I = 0; permissive mode drops
// vanishing subsets from the index set.
CyclicOrder cyclic_order(const Fan2D& fan, const Tangency& alpha,
                         bool permissive = false);

// [p,q,r]: walking counterclockwise from p meets q strictly before r, the three
// lying in pairwise distinct direction classes.
bool triple_holds(const CyclicOrder& order, const IndexElement& p,
                  const IndexElement& q, const IndexElement& r);

// Equal circular sequences of direction classes. Permissive mode additionally
// requires equal vanishing subsets.
bool sigma_equivalent(const Fan2D& fan, const Tangency& alpha,
                      const Tangency& alpha2, bool permissive = false);

// Canonical wall of the Sigma-slope decomposition. Subsets are stored as the
// numerically least of {I, complement}; ray directions modulo sign.
struct Wall {
    enum Kind { Quadratic, Linear, Degenerate } kind = Degenerate;
    unsigned I = 0, J = 0;  // subset class reps (J only for Quadratic)
    LatticeVec ray;         // Linear only
    friend bool operator==(const Wall&, const Wall&) = default;
    friend bool operator<(const Wall& a, const Wall& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.I != b.I) return a.I < b.I;
        if (a.J != b.J) return a.J < b.J;
        if (a.ray.x != b.ray.x) return a.ray.x < b.ray.x;
        return a.ray.y < b.ray.y;
    }
    std::string str(int n) const;
};

// All canonical walls for this fan and n marks (symbolic, no alpha).
std::vector<Wall> wall_census(const Fan2D& fan, int n);

// The census walls whose defining equation vanishes at alpha.
std::vector<Wall> walls_on(const Fan2D& fan, const Tangency& alpha);

// Cone of Sigma~_alpha2 analogous to cone c of Sigma~_alpha; checks
// Sigma-equivalence (NotEquivalent) before substituting generators.
ConeRef analogous_cone(const Fan2D& fan, const Tangency& alpha,
                       const Tangency& alpha2, ConeRef c,
                       bool permissive = false);

}  // namespace cf
