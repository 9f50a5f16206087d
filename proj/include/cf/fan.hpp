#pragma once
// Complete 2D fans given by primitive rays in counterclockwise order.
// Cones are the origin, the rays and the sectors between CCW neighbours.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cf/exactgeom.hpp"

namespace cf {

struct Tangency;  // tangency.hpp

// Where a ray of a (possibly subdivided) fan came from: a ray of the base
// fan Sigma-dagger (index + sign) and/or a subset slope alpha_I. A ray can
// carry several tags when directions coincide.
struct RayTag {
    // fan_ray >= 0: ray fan_ray of the base fan, negated if negated is set.
    int fan_ray = -1;
    bool negated = false;
    // subset masks I with alpha_I in this direction
    std::vector<unsigned> subsets;
};

struct ConeRef {
    enum Kind { Origin, Ray, Sector } kind = Origin;
    int index = 0;  // ray index, or sector index (spans rays index, index+1)

    friend bool operator==(const ConeRef&, const ConeRef&) = default;
    friend auto operator<=>(const ConeRef&, const ConeRef&) = default;
    int dim() const { return kind == Origin ? 0 : kind == Ray ? 1 : 2; }
    static ConeRef origin() { return {Origin, 0}; }
    static ConeRef ray(int i) { return {Ray, i}; }
    static ConeRef sector(int i) { return {Sector, i}; }
};

class Fan2D {
  public:
    Fan2D() = default;
    // Sorts CCW from (1,0), validates completeness/primitivity/no duplicates.
    Fan2D(std::string name, std::vector<LatticeVec> rays);

    const std::string& name() const { return name_; }
    const std::vector<LatticeVec>& rays() const { return rays_; }
    int num_rays() const { return static_cast<int>(rays_.size()); }
    const LatticeVec& ray(int i) const { return rays_[i]; }
    const RayTag& tag(int i) const { return tags_[i]; }

    int sector_next(int i) const { return (i + 1) % num_rays(); }

    // index of the ray with this direction, if present
    std::optional<int> find_ray(const LatticeVec& dir) const;

    // unique cone whose relative interior contains p
    ConeRef smallest_cone(const RatVec& p) const;
    ConeRef smallest_cone(const LatticeVec& p) const;

    // closure membership
    bool cone_contains(ConeRef c, const RatVec& p) const;
    bool cone_contains(ConeRef c, const LatticeVec& p) const;
    // face relation f <= c
    bool is_face(ConeRef f, ConeRef c) const;
    std::vector<ConeRef> faces(ConeRef c) const;
    std::vector<ConeRef> all_cones() const;
    // true iff dir lies in the linear span of the cone
    bool in_span(ConeRef c, const LatticeVec& dir) const;
    std::string cone_str(ConeRef c) const;

    // every ray of base appears among our rays
    bool refines(const Fan2D& base) const;

  private:
    friend Fan2D dagger(const Fan2D&);
    friend Fan2D slope_sensitive(const Fan2D&, const Tangency&, bool);
    std::string name_;
    std::vector<LatticeVec> rays_;
    std::vector<RayTag> tags_;
};

Fan2D dagger(const Fan2D& fan);

// rays of dagger(fan) plus primitive(alpha_I) for all proper nonempty I.
// strict: throws DegenerateSubset when some alpha_I = 0; otherwise those
// subsets are skipped.
Fan2D slope_sensitive(const Fan2D& fan, const Tangency& alpha, bool strict = true);

// smallest cone of base containing c (sub must refine base)
ConeRef pushforward(const Fan2D& sub, const Fan2D& base, ConeRef c);

// Maps a cone of one slope-sensitive fan to the analogous cone of another by
// substituting each tagged generator (fan ray fixed, subset I -> alpha2_I).
// Throws NotACone when the substituted generators do not span a cone of `to`.
ConeRef map_analogous(const Fan2D& from, ConeRef c, const Fan2D& to,
                      const Tangency& alpha2);

struct TangencyOrder {
    Rat order;    // c_ij = phi_j(a)
    Int cartier;  // least k >= 1 with k*phi_j integral (Z-Cartier multiple)
};

// Tangency orders of direction a against each boundary divisor: builds the
// piecewise linear function with value delta_ij on the primitive generators
// and evaluates it at a.
std::vector<TangencyOrder> tangency_orders(const Fan2D& fan, const LatticeVec& a);

}  // namespace cf
