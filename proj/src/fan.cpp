#include "cf/fan.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cf/tangency.hpp"

namespace cf {

namespace {
const LatticeVec kRef{1, 0};  // angular origin for the canonical ray order
}

Fan2D::Fan2D(std::string name, std::vector<LatticeVec> rays) : name_(std::move(name)) {
    if (rays.size() < 3)
        throw Error("NotComplete", "a complete 2D fan needs at least 3 rays");
    for (const auto& r : rays) {
        if (r.is_zero()) throw Error("NonPrimitiveRay", "zero ray");
        if (primitive(r) != r) {
            std::ostringstream os;
            os << "ray (" << r.x << "," << r.y << ") is not primitive";
            throw Error("NonPrimitiveRay", os.str());
        }
    }
    std::sort(rays.begin(), rays.end(), [](const LatticeVec& a, const LatticeVec& b) {
        return direction_cmp_ccw(kRef, a, b) < 0;
    });
    for (size_t i = 0; i + 1 < rays.size(); ++i)
        if (rays[i] == rays[i + 1]) {
            std::ostringstream os;
            os << "duplicate ray (" << rays[i].x << "," << rays[i].y << ")";
            throw Error("DuplicateRay", os.str());
        }
    // completeness: consecutive rays (cyclically) must span an angle < pi
    for (size_t i = 0; i < rays.size(); ++i) {
        const auto& a = rays[i];
        const auto& b = rays[(i + 1) % rays.size()];
        if (cross(a, b) <= 0) {
            std::ostringstream os;
            os << "sector between (" << a.x << "," << a.y << ") and (" << b.x << ","
               << b.y << ") is not strictly convex";
            throw Error("NotComplete", os.str());
        }
    }
    rays_ = std::move(rays);
    tags_.resize(rays_.size());
    for (int i = 0; i < num_rays(); ++i) tags_[i].fan_ray = i;
}

std::optional<int> Fan2D::find_ray(const LatticeVec& dir) const {
    for (int i = 0; i < num_rays(); ++i)
        if (same_ray(rays_[i], dir)) return i;
    return std::nullopt;
}

namespace {
template <class V>
ConeRef smallest_cone_impl(const Fan2D& fan, const V& p) {
    if (p.x == 0 && p.y == 0) return ConeRef::origin();
    const int m = fan.num_rays();
    for (int i = 0; i < m; ++i) {
        auto c = cross(fan.ray(i), p);
        if (c == 0 && dot(fan.ray(i), p) > 0) return ConeRef::ray(i);
        if (c > 0 && cross(p, fan.ray(fan.sector_next(i))) > 0)
            return ConeRef::sector(i);
    }
    throw Error("NotComplete", "point not covered by any cone");
}
}  // namespace

ConeRef Fan2D::smallest_cone(const RatVec& p) const { return smallest_cone_impl(*this, p); }
ConeRef Fan2D::smallest_cone(const LatticeVec& p) const { return smallest_cone_impl(*this, p); }

namespace {
template <class V>
bool cone_contains_impl(const Fan2D& fan, ConeRef c, const V& p) {
    if (p.x == 0 && p.y == 0) return true;
    switch (c.kind) {
        case ConeRef::Origin:
            return false;
        case ConeRef::Ray:
            return cross(fan.ray(c.index), p) == 0 && dot(fan.ray(c.index), p) > 0;
        case ConeRef::Sector: {
            const auto& a = fan.ray(c.index);
            const auto& b = fan.ray(fan.sector_next(c.index));
            // the sector is salient (cross(a,b) > 0), so the two closed
            // half-planes bounded by a and b cut out exactly its closure
            return cross(a, p) >= 0 && cross(p, b) >= 0;
        }
    }
    return false;
}
}  // namespace

bool Fan2D::cone_contains(ConeRef c, const RatVec& p) const {
    return cone_contains_impl(*this, c, p);
}
bool Fan2D::cone_contains(ConeRef c, const LatticeVec& p) const {
    return cone_contains_impl(*this, c, p);
}

bool Fan2D::is_face(ConeRef f, ConeRef c) const {
    if (f == c) return true;
    if (f.kind == ConeRef::Origin) return true;
    if (f.kind == ConeRef::Ray && c.kind == ConeRef::Sector)
        return f.index == c.index || f.index == sector_next(c.index);
    return false;
}

std::vector<ConeRef> Fan2D::faces(ConeRef c) const {
    switch (c.kind) {
        case ConeRef::Origin:
            return {ConeRef::origin()};
        case ConeRef::Ray:
            return {ConeRef::origin(), c};
        case ConeRef::Sector:
            return {ConeRef::origin(), ConeRef::ray(c.index),
                    ConeRef::ray(sector_next(c.index)), c};
    }
    return {};
}

std::vector<ConeRef> Fan2D::all_cones() const {
    std::vector<ConeRef> out{ConeRef::origin()};
    for (int i = 0; i < num_rays(); ++i) out.push_back(ConeRef::ray(i));
    for (int i = 0; i < num_rays(); ++i) out.push_back(ConeRef::sector(i));
    return out;
}

bool Fan2D::in_span(ConeRef c, const LatticeVec& dir) const {
    switch (c.kind) {
        case ConeRef::Origin:
            return dir.is_zero();
        case ConeRef::Ray:
            return cross(rays_[c.index], dir) == 0;
        case ConeRef::Sector:
            return true;
    }
    return false;
}

std::string Fan2D::cone_str(ConeRef c) const {
    std::ostringstream os;
    switch (c.kind) {
        case ConeRef::Origin:
            os << "o";
            break;
        case ConeRef::Ray:
            os << "ray(" << rays_[c.index].x << "," << rays_[c.index].y << ")";
            break;
        case ConeRef::Sector: {
            const auto& a = rays_[c.index];
            const auto& b = rays_[sector_next(c.index)];
            os << "sector((" << a.x << "," << a.y << "),(" << b.x << "," << b.y << "))";
            break;
        }
    }
    return os.str();
}

bool Fan2D::refines(const Fan2D& base) const {
    for (const auto& r : base.rays())
        if (!find_ray(r)) return false;
    return true;
}

namespace {
// Build a fan from tagged directions, merging tags of equal directions.
Fan2D from_tagged(std::string name, std::vector<std::pair<LatticeVec, RayTag>> dirs) {
    std::vector<std::pair<LatticeVec, RayTag>> merged;
    for (auto& [d, t] : dirs) {
        bool found = false;
        for (auto& [md, mt] : merged) {
            if (same_ray(md, d)) {
                if (t.fan_ray >= 0) mt.fan_ray = t.fan_ray, mt.negated = t.negated;
                for (auto s : t.subsets) mt.subsets.push_back(s);
                found = true;
                break;
            }
        }
        if (!found) merged.emplace_back(d, std::move(t));
    }
    std::vector<LatticeVec> rays;
    rays.reserve(merged.size());
    for (auto& [d, t] : merged) rays.push_back(d);
    Fan2D fan(std::move(name), std::move(rays));
    // re-attach tags in the fan's canonical order
    for (int i = 0; i < fan.num_rays(); ++i) {
        for (auto& [d, t] : merged)
            if (same_ray(d, fan.ray(i))) {
                const_cast<RayTag&>(fan.tag(i)) = t;
                break;
            }
    }
    return fan;
}
}  // namespace

Fan2D dagger(const Fan2D& fan) {
    std::vector<std::pair<LatticeVec, RayTag>> dirs;
    for (int i = 0; i < fan.num_rays(); ++i) {
        dirs.push_back({fan.ray(i), RayTag{i, false, {}}});
        dirs.push_back({-fan.ray(i), RayTag{i, true, {}}});
    }
    return from_tagged(fan.name() + "+", std::move(dirs));
}

Fan2D slope_sensitive(const Fan2D& fan, const Tangency& alpha, bool strict) {
    std::vector<std::pair<LatticeVec, RayTag>> dirs;
    for (int i = 0; i < fan.num_rays(); ++i) {
        dirs.push_back({fan.ray(i), RayTag{i, false, {}}});
        dirs.push_back({-fan.ray(i), RayTag{i, true, {}}});
    }
    const unsigned full = (1u << alpha.n) - 1;
    for (unsigned mask = 1; mask < full; ++mask) {
        LatticeVec s = subset_slope(alpha, mask);
        if (s.is_zero()) {
            if (strict)
                throw Error("DegenerateSubset",
                            "alpha_I = 0 for I = " + subset_str(mask, alpha.n));
            continue;
        }
        RayTag t;
        t.subsets = {mask};
        dirs.push_back({primitive(s), std::move(t)});
    }
    return from_tagged(fan.name() + "~", std::move(dirs));
}

ConeRef pushforward(const Fan2D& sub, const Fan2D& base, ConeRef c) {
    if (!sub.refines(base)) throw Error("NotARefinement", "sub does not refine base");
    switch (c.kind) {
        case ConeRef::Origin:
            return ConeRef::origin();
        case ConeRef::Ray:
            return base.smallest_cone(sub.ray(c.index));
        case ConeRef::Sector:
            // an interior point of the sub-sector pins down the smallest
            // base cone containing the whole sector
            return base.smallest_cone(sub.ray(c.index) +
                                      sub.ray(sub.sector_next(c.index)));
    }
    throw Error("NotACone", "bad cone kind");
}

namespace {
// Direction of the ray of `to` that corresponds to ray i of `from` under the
// generator correspondence (fan ray fixed, subset I -> alpha'_I).
LatticeVec corresponding_dir(const Fan2D& from, int i, const Fan2D& to,
                             const Tangency& alpha2) {
    const RayTag& t = from.tag(i);
    if (t.fan_ray >= 0) {
        // fan rays are shared between the two slope-sensitive fans; recover
        // the direction from our own ray (base fan rays are unchanged)
        return from.ray(i);
    }
    if (t.subsets.empty()) throw Error("NotACone", "untagged ray");
    LatticeVec s = subset_slope(alpha2, t.subsets.front());
    if (s.is_zero()) throw Error("DegenerateSubset", "alpha'_I = 0");
    (void)to;
    return primitive(s);
}
}  // namespace

ConeRef map_analogous(const Fan2D& from, ConeRef c, const Fan2D& to,
                      const Tangency& alpha2) {
    switch (c.kind) {
        case ConeRef::Origin:
            return ConeRef::origin();
        case ConeRef::Ray: {
            auto d = corresponding_dir(from, c.index, to, alpha2);
            if (auto i = to.find_ray(d)) return ConeRef::ray(*i);
            throw Error("NotACone", "analogous ray missing");
        }
        case ConeRef::Sector: {
            auto da = corresponding_dir(from, c.index, to, alpha2);
            auto db = corresponding_dir(from, from.sector_next(c.index), to, alpha2);
            auto ia = to.find_ray(da);
            auto ib = to.find_ray(db);
            if (!ia || !ib) throw Error("NotACone", "analogous generator missing");
            if (to.sector_next(*ia) != *ib)
                throw Error("NotACone", "analogous generators are not adjacent");
            return ConeRef::sector(*ia);
        }
    }
    throw Error("NotACone", "bad cone kind");
}

std::vector<TangencyOrder> tangency_orders(const Fan2D& fan, const LatticeVec& a) {
    if (a.is_zero()) throw Error("ZeroVector", "tangency direction is zero");
    const int m = fan.num_rays();
    std::vector<TangencyOrder> out(m);
    for (int j = 0; j < m; ++j) {
        // linear pieces of phi_j: on sector i, L(x,y) = px*x + py*y with
        // L(v_i) = delta_{ij}, L(v_{i+1}) = delta_{i+1,j}
        Int lcm_den = 1;
        Rat value = 0;
        bool value_set = false;
        for (int i = 0; i < m; ++i) {
            const auto& u = fan.ray(i);
            const auto& v = fan.ray(fan.sector_next(i));
            Int det = cross(u, v);
            Rat du = (i == j) ? 1 : 0;
            Rat dv = (fan.sector_next(i) == j) ? 1 : 0;
            // solve px*ux + py*uy = du ; px*vx + py*vy = dv
            Rat px = (du * v.y - dv * u.y) / Rat(det);
            Rat py = (dv * u.x - du * v.x) / Rat(det);
            Int dpx = boost::multiprecision::denominator(px);
            Int dpy = boost::multiprecision::denominator(py);
            lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::lcm(dpx, dpy));
            if (!value_set) {
                auto c = fan.smallest_cone(a);
                bool in_this = (c.kind == ConeRef::Sector && c.index == i) ||
                               (c.kind == ConeRef::Ray &&
                                (c.index == i || c.index == fan.sector_next(i)));
                if (in_this) {
                    value = px * Rat(a.x) + py * Rat(a.y);
                    value_set = true;
                }
            }
        }
        out[j] = {value, lcm_den};
    }
    return out;
}

}  // namespace cf
