#include "cf/tangency.hpp"

#include <algorithm>
#include <sstream>

namespace cf {

Tangency::Tangency(std::vector<LatticeVec> e)
    : n(static_cast<int>(e.size())), entries(std::move(e)) {
    LatticeVec sum{0, 0};
    for (int i = 0; i < n; ++i) {
        if (entries[i].is_zero())
            throw Error("ZeroEntry", "alpha_" + std::to_string(i + 1) + " = (0,0)");
        sum = sum + entries[i];
    }
    if (!sum.is_zero()) throw Error("Unbalanced", "sum of alpha_i is not (0,0)");
}

LatticeVec subset_slope(const Tangency& alpha, unsigned mask) {
    LatticeVec s{0, 0};
    for (int i = 0; i < alpha.n; ++i)
        if (mask & (1u << i)) s = s + alpha.entries[i];
    return s;
}

std::string subset_str(unsigned mask, int n) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) {
            if (!first) os << ",";
            os << (i + 1);
            first = false;
        }
    os << "}";
    return os.str();
}

std::vector<unsigned> vanishing_subsets(const Tangency& alpha) {
    std::vector<unsigned> out;
    const unsigned full = (1u << alpha.n) - 1;
    for (unsigned m = 1; m < full; ++m)
        if (subset_slope(alpha, m).is_zero()) out.push_back(m);
    return out;
}

LatticeVec element_slope(const IndexElement& e, const Fan2D& dag,
                         const Tangency& alpha) {
    if (e.kind == IndexElement::Subset) return subset_slope(alpha, e.mask);
    return dag.ray(e.ray);
}

std::string element_str(const IndexElement& e, const Fan2D& dag, int n) {
    if (e.kind == IndexElement::Subset) return subset_str(e.mask, n);
    std::ostringstream os;
    os << "rho(" << dag.ray(e.ray).x << "," << dag.ray(e.ray).y << ")";
    return os.str();
}

int CyclicOrder::group_of(const IndexElement& e) const {
    for (int g = 0; g < static_cast<int>(groups.size()); ++g)
        for (const auto& x : groups[g])
            if (x == e) return g;
    throw Error("UnknownElement", "element not in the cyclic order");
}

CyclicOrder cyclic_order(const Fan2D& fan, const Tangency& alpha, bool permissive) {
    Fan2D dag = dagger(fan);
    std::vector<std::pair<LatticeVec, IndexElement>> elems;
    const unsigned full = (1u << alpha.n) - 1;
    for (unsigned m = 1; m < full; ++m) {
        LatticeVec s = subset_slope(alpha, m);
        if (s.is_zero()) {
            if (permissive) continue;
            throw Error("DegenerateSubset",
                        "alpha_I = 0 for I = " + subset_str(m, alpha.n));
        }
        elems.push_back({primitive(s), IndexElement{IndexElement::Subset, m, -1}});
    }
    for (int i = 0; i < dag.num_rays(); ++i)
        elems.push_back({dag.ray(i), IndexElement{IndexElement::FanRay, 0, i}});

    std::stable_sort(elems.begin(), elems.end(), [](const auto& a, const auto& b) {
        auto c = direction_cmp_ccw({1, 0}, a.first, b.first);
        if (c != 0) return c < 0;
        return a.second < b.second;
    });
    CyclicOrder out;
    for (const auto& [d, e] : elems) {
        if (!out.dirs.empty() && same_ray(out.dirs.back(), d)) {
            out.groups.back().push_back(e);
        } else {
            out.dirs.push_back(d);
            out.groups.push_back({e});
        }
    }
    return out;
}

bool triple_holds(const CyclicOrder& order, const IndexElement& p,
                  const IndexElement& q, const IndexElement& r) {
    const int G = static_cast<int>(order.groups.size());
    int gp = order.group_of(p), gq = order.group_of(q), gr = order.group_of(r);
    if (gp == gq || gq == gr || gp == gr) return false;
    int dq = (gq - gp + G) % G, dr = (gr - gp + G) % G;
    return dq < dr;
}

bool sigma_equivalent(const Fan2D& fan, const Tangency& alpha,
                      const Tangency& alpha2, bool permissive) {
    if (alpha.n != alpha2.n) return false;
    if (permissive && vanishing_subsets(alpha) != vanishing_subsets(alpha2))
        return false;
    CyclicOrder a = cyclic_order(fan, alpha, permissive);
    CyclicOrder b = cyclic_order(fan, alpha2, permissive);
    const int G = static_cast<int>(a.groups.size());
    if (static_cast<int>(b.groups.size()) != G) return false;
    for (int rot = 0; rot < G; ++rot) {
        bool ok = true;
        for (int i = 0; i < G && ok; ++i)
            ok = a.groups[i] == b.groups[(i + rot) % G];
        if (ok) return true;
    }
    return false;
}

namespace {
unsigned subset_class(unsigned mask, int n) {
    unsigned full = (1u << n) - 1;
    return std::min(mask, full & ~mask);
}

LatticeVec ray_class(const LatticeVec& v) {
    // upper half-plane normal form (modulo sign)
    if (v.y < 0 || (v.y == 0 && v.x < 0)) return -v;
    return v;
}
}  // namespace

std::string Wall::str(int n) const {
    std::ostringstream os;
    switch (kind) {
        case Quadratic:
            os << "W[" << subset_str(I, n) << "," << subset_str(J, n) << "]";
            break;
        case Linear:
            os << "W[(" << ray.x << "," << ray.y << ")," << subset_str(I, n) << "]";
            break;
        case Degenerate:
            os << "W[" << subset_str(I, n) << "]";
            break;
    }
    return os.str();
}

std::vector<Wall> wall_census(const Fan2D& fan, int n) {
    if (n < 2) throw Error("TooFewMarks", "need n >= 2");
    std::vector<unsigned> classes;
    const unsigned full = (1u << n) - 1;
    for (unsigned m = 1; m < full; ++m)
        if (subset_class(m, n) == m) classes.push_back(m);
    std::vector<LatticeVec> rdirs;
    for (const auto& r : fan.rays()) {
        LatticeVec c = ray_class(r);
        if (std::find(rdirs.begin(), rdirs.end(), c) == rdirs.end()) rdirs.push_back(c);
    }
    std::vector<Wall> out;
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = i + 1; j < classes.size(); ++j)
            out.push_back({Wall::Quadratic, classes[i], classes[j], {}});
    for (const auto& r : rdirs)
        for (unsigned c : classes) out.push_back({Wall::Linear, c, 0, r});
    for (unsigned c : classes) out.push_back({Wall::Degenerate, c, 0, {}});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Wall> walls_on(const Fan2D& fan, const Tangency& alpha) {
    std::vector<Wall> out;
    for (const auto& w : wall_census(fan, alpha.n)) {
        bool on = false;
        switch (w.kind) {
            case Wall::Quadratic:
                on = cross(subset_slope(alpha, w.I), subset_slope(alpha, w.J)) == 0;
                break;
            case Wall::Linear:
                on = cross(w.ray, subset_slope(alpha, w.I)) == 0;
                break;
            case Wall::Degenerate:
                on = subset_slope(alpha, w.I).is_zero();
                break;
        }
        if (on) out.push_back(w);
    }
    return out;
}

ConeRef analogous_cone(const Fan2D& fan, const Tangency& alpha,
                       const Tangency& alpha2, ConeRef c, bool permissive) {
    if (!sigma_equivalent(fan, alpha, alpha2, permissive))
        throw Error("NotEquivalent", "tangency data are not Sigma-equivalent");
    Fan2D from = slope_sensitive(fan, alpha, !permissive);
    Fan2D to = slope_sensitive(fan, alpha2, !permissive);
    return map_analogous(from, c, to, alpha2);
}

}  // namespace cf
