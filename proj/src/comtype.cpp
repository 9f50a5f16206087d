#include "cf/comtype.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cf {

namespace {

std::string seg_str(const Fan2D& fan, const Segment& s, bool reversed) {
    std::ostringstream os;
    auto car = s.carriers;
    auto cro = s.crossings;
    if (reversed) {
        std::reverse(car.begin(), car.end());
        std::reverse(cro.begin(), cro.end());
    }
    for (size_t i = 0; i < car.size(); ++i) {
        if (i) os << "/" << fan.cone_str(cro[i - 1]) << "/";
        os << fan.cone_str(car[i]);
    }
    return os.str();
}

}  // namespace

std::string CombType::canonical_key() const {
    auto order = tree.canonical_dfs_order();
    std::vector<int> pos(tree.num_vertices);
    for (int i = 0; i < tree.num_vertices; ++i) pos[order[i]] = i;
    std::ostringstream os;
    os << "V:";
    for (int i = 0; i < tree.num_vertices; ++i)
        os << fan.cone_str(vertex_cones[order[i]]) << ";";
    struct Rec {
        int a, b;
        std::string body;
    };
    std::vector<Rec> recs;
    for (size_t k = 0; k < tree.edges.size(); ++k) {
        int a = pos[tree.edges[k].first], b = pos[tree.edges[k].second];
        bool rev = a > b;
        if (rev) std::swap(a, b);
        recs.push_back({a, b, seg_str(fan, edge_decor[k], rev)});
    }
    std::sort(recs.begin(), recs.end(),
              [](const Rec& x, const Rec& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    os << "E:";
    for (const auto& r : recs) os << r.a << "-" << r.b << "[" << r.body << "];";
    os << "L:";
    for (int i = 0; i < tree.n(); ++i)
        os << pos[tree.legs[i]] << "[" << seg_str(fan, leg_decor[i], false) << "];";
    return os.str();
}

// ---------------------------------------------------------------------------
// invariants

namespace {

void viol(const std::string& what) { throw Error("InvariantViolation", what); }

// shared segment checks; sw = nullopt for legs
void check_segment(const Fan2D& fan, const Segment& s, ConeRef sv,
                   std::optional<ConeRef> sw, const LatticeVec& m) {
    if (m.is_zero()) viol("zero slope");
    if (s.carriers.empty()) viol("empty carrier sequence");
    if (s.crossings.size() + 1 != s.carriers.size()) viol("carrier/crossing mismatch");
    if (!fan.is_face(sv, s.carriers.front())) viol("start cone not a face of carrier");
    if (sw && !fan.is_face(*sw, s.carriers.back())) viol("end cone not a face of carrier");
    if (!sw && !fan.cone_contains(s.carriers.back(), m))
        viol("leg slope leaves final carrier");
    std::vector<bool> ray_used(fan.num_rays(), false);
    bool origin_used = false;
    for (const auto& x : s.crossings) {
        if (x.dim() > 1) viol("crossing cone of dimension 2");
        if (x.kind == ConeRef::Origin) {
            if (origin_used) viol("origin crossed twice");
            origin_used = true;
        } else {
            if (ray_used[x.index]) viol("ray crossed twice");
            ray_used[x.index] = true;
        }
    }
    for (size_t i = 0; i < s.carriers.size(); ++i) {
        ConeRef c = s.carriers[i];
        if (!fan.in_span(c, m)) viol("slope outside carrier span");
        if (i + 1 < s.carriers.size()) {
            if (c == s.carriers[i + 1]) viol("equal consecutive carriers");
            if (!fan.is_face(s.crossings[i], c) ||
                !fan.is_face(s.crossings[i], s.carriers[i + 1]))
                viol("crossing not a face of adjacent carriers");
        }
        // carrier minimality
        ConeRef p1 = (i == 0) ? sv : s.crossings[i - 1];
        std::optional<ConeRef> p2;
        if (i + 1 < s.carriers.size()) p2 = s.crossings[i];
        else if (sw) p2 = *sw;
        for (ConeRef f : fan.faces(c)) {
            if (f == c) continue;
            if (!fan.is_face(p1, f)) continue;
            if (p2) {
                if (fan.is_face(*p2, f) && fan.in_span(f, m))
                    viol("carrier not minimal");
            } else {
                if (fan.cone_contains(f, m)) viol("carrier not minimal");
            }
        }
    }
}

void validate_comb_type(const CombType& c) {
    c.tree.validate();
    const int V = c.tree.num_vertices;
    if (static_cast<int>(c.vertex_cones.size()) != V) viol("vertex cone count");
    if (c.edge_decor.size() != c.tree.edges.size()) viol("edge decoration count");
    if (static_cast<int>(c.leg_decor.size()) != c.tree.n()) viol("leg decoration count");
    for (int v = 0; v < V; ++v)
        if (c.tree.valence(v) < 3) viol("base tree not stable");
    SlopeAssignment sl = balanced_slopes(c.tree, c.alpha);
    for (size_t k = 0; k < c.tree.edges.size(); ++k)
        check_segment(c.fan, c.edge_decor[k], c.vertex_cones[c.tree.edges[k].first],
                      c.vertex_cones[c.tree.edges[k].second], sl.edge_slopes[k]);
    for (int i = 0; i < c.tree.n(); ++i)
        check_segment(c.fan, c.leg_decor[i], c.vertex_cones[c.tree.legs[i]],
                      std::nullopt, sl.leg_slopes[i]);
}

}  // namespace

// ---------------------------------------------------------------------------
// materialization and the LP

Materialized materialize(const CombType& c) {
    Materialized m;
    m.graph.num_vertices = c.tree.num_vertices;
    m.vertex_cones = c.vertex_cones;
    m.graph.legs.assign(c.tree.n(), -1);
    SlopeAssignment sl = balanced_slopes(c.tree, c.alpha);
    auto chain = [&](int from, const Segment& seg, const LatticeVec& slope,
                     int parent) -> int {
        int cur = from;
        for (size_t j = 0; j < seg.crossings.size(); ++j) {
            int x = m.graph.num_vertices++;
            m.vertex_cones.push_back(seg.crossings[j]);
            ++m.num_unstable;
            m.graph.edges.push_back({cur, x});
            m.edge_carriers.push_back(seg.carriers[j]);
            m.edge_slopes.push_back(slope);
            m.edge_parent.push_back(parent);
            cur = x;
        }
        return cur;
    };
    for (size_t k = 0; k < c.tree.edges.size(); ++k) {
        auto [a, b] = c.tree.edges[k];
        int cur = chain(a, c.edge_decor[k], sl.edge_slopes[k], static_cast<int>(k));
        m.graph.edges.push_back({cur, b});
        m.edge_carriers.push_back(c.edge_decor[k].carriers.back());
        m.edge_slopes.push_back(sl.edge_slopes[k]);
        m.edge_parent.push_back(static_cast<int>(k));
    }
    for (int i = 0; i < c.tree.n(); ++i) {
        int cur = chain(c.tree.legs[i], c.leg_decor[i], sl.leg_slopes[i], ~i);
        m.graph.legs[i] = cur;
        m.leg_carriers.push_back(c.leg_decor[i].carriers.back());
    }
    return m;
}

namespace {

std::optional<Witness> lp_solve(const Fan2D& fan, const Materialized& mat) {
    LinSystem sys;
    const int V = mat.graph.num_vertices;
    const int E = static_cast<int>(mat.graph.edges.size());
    std::vector<int> fx(V), fy(V), ln(E);
    for (int v = 0; v < V; ++v) {
        fx[v] = sys.add_var("fx" + std::to_string(v));
        fy[v] = sys.add_var("fy" + std::to_string(v));
    }
    for (int k = 0; k < E; ++k) ln[k] = sys.add_var("l" + std::to_string(k));
    for (int k = 0; k < E; ++k) {
        auto [a, b] = mat.graph.edges[k];
        const auto& m = mat.edge_slopes[k];
        sys.add_equality({{fx[b], 1}, {fx[a], -1}, {ln[k], Rat(-m.x)}});
        sys.add_equality({{fy[b], 1}, {fy[a], -1}, {ln[k], Rat(-m.y)}});
        sys.add_strict({{ln[k], 1}});
    }
    for (int v = 0; v < V; ++v) {
        ConeRef c = mat.vertex_cones[v];
        switch (c.kind) {
            case ConeRef::Origin:
                sys.add_equality({{fx[v], 1}});
                sys.add_equality({{fy[v], 1}});
                break;
            case ConeRef::Ray: {
                const auto& r = fan.ray(c.index);
                sys.add_equality({{fx[v], Rat(r.y)}, {fy[v], Rat(-r.x)}});
                sys.add_strict({{fx[v], Rat(r.x)}, {fy[v], Rat(r.y)}});
                break;
            }
            case ConeRef::Sector: {
                const auto& u = fan.ray(c.index);
                const auto& w = fan.ray(fan.sector_next(c.index));
                sys.add_strict({{fy[v], Rat(u.x)}, {fx[v], Rat(-u.y)}});
                sys.add_strict({{fx[v], Rat(w.y)}, {fy[v], Rat(-w.x)}});
                break;
            }
        }
    }
    auto sol = strict_feasible(sys);
    if (!sol) return std::nullopt;
    Witness w;
    for (int v = 0; v < V; ++v) w.positions.push_back({(*sol)[fx[v]], (*sol)[fy[v]]});
    for (int k = 0; k < E; ++k) w.lengths.push_back((*sol)[ln[k]]);
    return w;
}

}  // namespace

// ---------------------------------------------------------------------------
// tracing a map into a type

namespace {

struct TracedSegment {
    Segment seg;
    std::vector<RatVec> crossing_points;
};

// crossings and carriers of t -> p0 + t*dir on (0, t_end), or (0, inf) for legs
TracedSegment trace_segment(const Fan2D& fan, const RatVec& p0, const RatVec& dir,
                            std::optional<Rat> t_end) {
    std::vector<std::pair<Rat, ConeRef>> hits;
    auto at = [&](const Rat& t) -> RatVec {
        return {p0.x + t * dir.x, p0.y + t * dir.y};
    };
    auto in_range = [&](const Rat& t) {
        return t > 0 && (!t_end || t < *t_end);
    };
    for (int i = 0; i < fan.num_rays(); ++i) {
        RatVec r = to_rat(fan.ray(i));
        Rat cm = cross(dir, r);
        if (cm == 0) continue;
        Rat t = -cross(p0, r) / cm;
        if (!in_range(t)) continue;
        RatVec q = at(t);
        if (dot(q, r) > 0) hits.push_back({t, ConeRef::ray(i)});
    }
    if (!(p0.x == 0 && p0.y == 0) && cross(p0, dir) == 0) {
        Rat t = dir.x != 0 ? -p0.x / dir.x : -p0.y / dir.y;
        if (in_range(t) && at(t).x == 0 && at(t).y == 0)
            hits.push_back({t, ConeRef::origin()});
    }
    std::sort(hits.begin(), hits.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // carrier of each open interval between consecutive hits
    std::vector<ConeRef> carriers;
    std::vector<Rat> ts;
    for (const auto& [t, c] : hits) ts.push_back(t);
    for (size_t i = 0; i + 1 <= ts.size(); ++i) {
        Rat lo = (i == 0) ? Rat(0) : ts[i - 1];
        Rat mid = (lo + ts[i]) / 2;
        carriers.push_back(fan.smallest_cone(at(mid)));
    }
    Rat last_lo = ts.empty() ? Rat(0) : ts.back();
    Rat last_mid = t_end ? Rat((last_lo + *t_end) / 2) : Rat(last_lo + 1);
    carriers.push_back(fan.smallest_cone(at(last_mid)));

    TracedSegment out;
    out.seg.carriers.push_back(carriers[0]);
    for (size_t j = 0; j < hits.size(); ++j) {
        // a candidate whose cone equals the surrounding carriers is not a
        // subdivision point
        if (hits[j].second == carriers[j] && hits[j].second == carriers[j + 1])
            continue;
        out.seg.crossings.push_back(hits[j].second);
        out.crossing_points.push_back(at(hits[j].first));
        out.seg.carriers.push_back(carriers[j + 1]);
    }
    return out;
}

}  // namespace

CombType construct_type(const MarkedTree& tree, const Tangency& alpha,
                        const Fan2D& fan, const std::vector<RatVec>& positions) {
    if (static_cast<int>(positions.size()) != tree.num_vertices)
        throw Error("InconsistentMap", "position count");
    SlopeAssignment sl = balanced_slopes(tree, alpha);
    CombType c;
    c.fan = fan;
    c.alpha = alpha;
    c.tree = tree;
    for (int v = 0; v < tree.num_vertices; ++v)
        c.vertex_cones.push_back(fan.smallest_cone(positions[v]));
    for (size_t k = 0; k < tree.edges.size(); ++k) {
        auto [a, b] = tree.edges[k];
        RatVec d = positions[b] - positions[a];
        RatVec m = to_rat(sl.edge_slopes[k]);
        if ((d.x == 0 && d.y == 0) || cross(d, m) != 0 || dot(d, m) <= 0)
            throw Error("InconsistentMap",
                        "edge " + std::to_string(k) + " not a positive multiple of its slope");
        c.edge_decor.push_back(trace_segment(fan, positions[a], d, Rat(1)).seg);
    }
    for (int i = 0; i < tree.n(); ++i)
        c.leg_decor.push_back(
            trace_segment(fan, positions[tree.legs[i]], to_rat(sl.leg_slopes[i]),
                          std::nullopt)
                .seg);
    validate_comb_type(c);
    return c;
}

// ---------------------------------------------------------------------------
// realizability

std::optional<Witness> is_realizable(const CombType& c) {
    validate_comb_type(c);
    Materialized mat = materialize(c);
    auto w = lp_solve(c.fan, mat);
    if (!w) return std::nullopt;
    // post-verify: the witness must trace back to exactly this type
    std::vector<RatVec> base(w->positions.begin(),
                             w->positions.begin() + c.tree.num_vertices);
    CombType traced = construct_type(c.tree, c.alpha, c.fan, base);
    if (traced.canonical_key() != c.canonical_key())
        throw Error("InternalError", "witness traces to a different type");
    return w;
}

bool theta_lp(const Fan2D& fan, ConeRef sv, ConeRef sw, const LatticeVec& m) {
    Materialized mat;
    mat.graph.num_vertices = 2;
    mat.graph.edges = {{0, 1}};
    mat.vertex_cones = {sv, sw};
    mat.edge_slopes = {m};
    mat.edge_carriers = {ConeRef::origin()};  // unused by the LP
    mat.edge_parent = {0};
    return lp_solve(fan, mat).has_value();
}

namespace {
// closed convex cone spanned by g1, g2 with cross(g1,g2) > 0
bool in_cone(const LatticeVec& g1, const LatticeVec& g2, const LatticeVec& m) {
    return cross(g1, m) >= 0 && cross(m, g2) >= 0;
}
}  // namespace

bool theta_realizable_closed_form(const Fan2D& fan, ConeRef sv, ConeRef sw,
                                  const LatticeVec& m) {
    auto unsupported = [] {
        throw Error("UnsupportedConfiguration", "cone pair outside the four cases");
        return false;
    };
    if (sv.kind == ConeRef::Sector && sw.kind == ConeRef::Sector) {
        if (sv == sw) return true;  // lengths can always be made small enough
        return unsupported();
    }
    if (sv.kind == ConeRef::Ray && sw.kind == ConeRef::Ray) {
        const auto& p = fan.ray(sv.index);
        const auto& q = fan.ray(sw.index);
        if (fan.sector_next(sv.index) == sw.index)
            // v on the clockwise generator: m in the open cone (-p, q)
            return cross(q, m) > 0 && cross(m, -p) > 0;
        if (fan.sector_next(sw.index) == sv.index)
            return cross(-p, m) > 0 && cross(m, q) > 0;
        return unsupported();
    }
    if (sv.kind == ConeRef::Ray && sw.kind == ConeRef::Sector) {
        const auto& a = fan.ray(sw.index);
        const auto& b = fan.ray(fan.sector_next(sw.index));
        if (sv.index == sw.index)  // v on a: Cone(-a, b) minus Cone(-a)
            return in_cone(b, -a, m) && !same_ray(m, -a);
        if (sv.index == fan.sector_next(sw.index))  // v on b, mirrored
            return in_cone(-b, a, m) && !same_ray(m, -b);
        return unsupported();
    }
    if (sv.kind == ConeRef::Sector && sw.kind == ConeRef::Ray) {
        const auto& a = fan.ray(sv.index);
        const auto& b = fan.ray(fan.sector_next(sv.index));
        if (sw.index == fan.sector_next(sv.index))  // w on b: Cone(-a,b) minus Cone(b)
            return in_cone(b, -a, m) && !same_ray(m, b);
        if (sw.index == sv.index)  // w on a, mirrored
            return in_cone(-b, a, m) && !same_ray(m, a);
        return unsupported();
    }
    return unsupported();
}

// ---------------------------------------------------------------------------
// decoration enumeration

namespace {

// unique minimal carrier of a straight segment starting in relint(P) with
// direction m
ConeRef carrier_from(const Fan2D& fan, ConeRef P, const LatticeVec& m) {
    switch (P.kind) {
        case ConeRef::Origin:
            return fan.smallest_cone(m);
        case ConeRef::Ray: {
            const auto& v = fan.ray(P.index);
            Int c = cross(v, m);
            if (c == 0) return P;  // along the ray, either direction
            if (c > 0) return ConeRef::sector(P.index);
            return ConeRef::sector((P.index + fan.num_rays() - 1) % fan.num_rays());
        }
        case ConeRef::Sector:
            return P;
    }
    throw Error("NotACone", "bad cone kind");
}

// crossing cones reachable (for some start position) out of carrier C
std::vector<ConeRef> crossings_from(const Fan2D& fan, ConeRef C, const LatticeVec& m) {
    std::vector<ConeRef> out;
    if (C.kind == ConeRef::Ray) {
        if (dot(fan.ray(C.index), m) < 0) out.push_back(ConeRef::origin());
        return out;
    }
    if (C.kind == ConeRef::Sector) {
        const auto& u = fan.ray(C.index);
        const auto& w = fan.ray(fan.sector_next(C.index));
        if (cross(u, m) < 0) out.push_back(ConeRef::ray(C.index));
        if (cross(w, m) > 0) out.push_back(ConeRef::ray(fan.sector_next(C.index)));
        if (cross(u, -m) > 0 && cross(-m, w) > 0) out.push_back(ConeRef::origin());
    }
    return out;
}

// can a straight segment inside C with direction m end at a point of
// relint(sw)?
bool can_end(const Fan2D& fan, ConeRef C, ConeRef sw, const LatticeVec& m) {
    if (!fan.is_face(sw, C)) return false;
    if (sw == C) return true;
    if (C.kind == ConeRef::Ray)  // sw = origin
        return sw.kind == ConeRef::Origin && dot(fan.ray(C.index), m) < 0;
    const auto& u = fan.ray(C.index);
    const auto& w = fan.ray(fan.sector_next(C.index));
    if (sw.kind == ConeRef::Origin) return cross(u, -m) > 0 && cross(-m, w) > 0;
    if (sw.index == C.index) return cross(u, m) < 0;
    return cross(w, m) > 0;
}

// all admissible crossing decorations of one edge (sv -> sw) or leg (sw null)
void dfs_segment(const Fan2D& fan, ConeRef P, std::optional<ConeRef> sw,
                 const LatticeVec& m, std::vector<bool>& ray_used,
                 bool& origin_used, Segment& cur, std::vector<Segment>& out) {
    ConeRef C = carrier_from(fan, P, m);
    cur.carriers.push_back(C);
    bool terminal = sw ? can_end(fan, C, *sw, m) : fan.cone_contains(C, m);
    if (terminal) out.push_back(cur);
    for (ConeRef x : crossings_from(fan, C, m)) {
        if (x.kind == ConeRef::Origin) {
            if (origin_used) continue;
            origin_used = true;
        } else {
            if (ray_used[x.index]) continue;
            ray_used[x.index] = true;
        }
        cur.crossings.push_back(x);
        dfs_segment(fan, x, sw, m, ray_used, origin_used, cur, out);
        cur.crossings.pop_back();
        if (x.kind == ConeRef::Origin) origin_used = false;
        else ray_used[x.index] = false;
    }
    cur.carriers.pop_back();
}

std::vector<Segment> segment_options(const Fan2D& fan, ConeRef sv,
                                     std::optional<ConeRef> sw, const LatticeVec& m) {
    std::vector<Segment> out;
    std::vector<bool> ray_used(fan.num_rays(), false);
    bool origin_used = false;
    Segment cur;
    dfs_segment(fan, sv, sw, m, ray_used, origin_used, cur, out);
    return out;
}

struct Subproblem {
    int tree_idx;
    std::vector<ConeRef> assignment;
};

std::vector<CombType> solve_subproblem(const Fan2D& fan, const Tangency& alpha,
                                       const MarkedTree& tree,
                                       const SlopeAssignment& sl,
                                       const std::vector<ConeRef>& assignment) {
    std::vector<CombType> out;
    std::vector<std::vector<Segment>> edge_opts, leg_opts;
    for (size_t k = 0; k < tree.edges.size(); ++k) {
        edge_opts.push_back(segment_options(fan, assignment[tree.edges[k].first],
                                            assignment[tree.edges[k].second],
                                            sl.edge_slopes[k]));
        if (edge_opts.back().empty()) return out;
    }
    for (int i = 0; i < tree.n(); ++i) {
        leg_opts.push_back(segment_options(fan, assignment[tree.legs[i]],
                                           std::nullopt, sl.leg_slopes[i]));
        if (leg_opts.back().empty()) return out;
    }
    // product over all segment choices
    const size_t ne = edge_opts.size(), nl = leg_opts.size();
    std::vector<size_t> idx(ne + nl, 0);
    for (;;) {
        CombType cand;
        cand.fan = fan;
        cand.alpha = alpha;
        cand.tree = tree;
        cand.vertex_cones = assignment;
        for (size_t k = 0; k < ne; ++k) cand.edge_decor.push_back(edge_opts[k][idx[k]]);
        for (size_t i = 0; i < nl; ++i)
            cand.leg_decor.push_back(leg_opts[i][idx[ne + i]]);
        bool ok = true;
        try {
            validate_comb_type(cand);
        } catch (const Error&) {
            ok = false;
        }
        if (ok && is_realizable(cand)) out.push_back(std::move(cand));
        // advance mixed-radix counter
        size_t d = 0;
        for (; d < idx.size(); ++d) {
            size_t lim = d < ne ? edge_opts[d].size() : leg_opts[d - ne].size();
            if (++idx[d] < lim) break;
            idx[d] = 0;
        }
        if (d == idx.size()) break;
    }
    return out;
}

std::vector<CombType> enumerate_impl(const Fan2D& fan, const Tangency& alpha,
                                     const EnumerateOptions& opts, bool parallel) {
    if (!vanishing_subsets(alpha).empty())
        throw Error("DegenerateSubset", "some alpha_I vanishes");
    if (!opts.allow_walls) {
        auto on = walls_on(fan, alpha);
        if (!on.empty())
            throw Error("OnWall", "alpha lies on " + on.front().str(alpha.n) +
                                      (on.size() > 1 ? " and others" : ""));
    }
    auto trees = enumerate_stable_trees(alpha.n);
    std::vector<SlopeAssignment> slopes;
    for (const auto& t : trees) slopes.push_back(balanced_slopes(t, alpha));
    auto cones = fan.all_cones();
    std::vector<Subproblem> subs;
    for (size_t ti = 0; ti < trees.size(); ++ti) {
        const int V = trees[ti].num_vertices;
        std::vector<size_t> idx(V, 0);
        for (;;) {
            Subproblem s;
            s.tree_idx = static_cast<int>(ti);
            for (int v = 0; v < V; ++v) s.assignment.push_back(cones[idx[v]]);
            subs.push_back(std::move(s));
            int d = 0;
            for (; d < V; ++d) {
                if (++idx[d] < cones.size()) break;
                idx[d] = 0;
            }
            if (d == V) break;
        }
    }
    std::vector<std::vector<CombType>> results(subs.size());
    if (parallel) {
#ifdef _OPENMP
        if (opts.threads > 0) omp_set_num_threads(opts.threads);
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(subs.size()); ++i)
            results[i] = solve_subproblem(fan, alpha, trees[subs[i].tree_idx],
                                          slopes[subs[i].tree_idx], subs[i].assignment);
#else
        parallel = false;
#endif
    }
    if (!parallel) {
        for (size_t i = 0; i < subs.size(); ++i)
            results[i] = solve_subproblem(fan, alpha, trees[subs[i].tree_idx],
                                          slopes[subs[i].tree_idx], subs[i].assignment);
    }
    std::vector<CombType> out;
    for (auto& r : results)
        for (auto& c : r) out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), [](const CombType& a, const CombType& b) {
        return a.canonical_key() < b.canonical_key();
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const CombType& a, const CombType& b) {
                              return a.canonical_key() == b.canonical_key();
                          }),
              out.end());
    return out;
}

}  // namespace

std::vector<CombType> enumerate_realizable(const Fan2D& fan, const Tangency& alpha,
                                           const EnumerateOptions& opts) {
    bool parallel = opts.threads != 1;
    return enumerate_impl(fan, alpha, opts, parallel);
}

std::vector<CombType> enumerate_realizable_serial(const Fan2D& fan,
                                                  const Tangency& alpha,
                                                  const EnumerateOptions& opts) {
    return enumerate_impl(fan, alpha, opts, false);
}

// ---------------------------------------------------------------------------
// lifting and transport

CombType lift(const CombType& c, const Fan2D& subfan) {
    if (!subfan.refines(c.fan)) throw Error("NotARefinement", "fan does not refine");
    auto w = is_realizable(c);
    if (!w) throw Error("NotRealizable", "type has no witness");
    std::vector<RatVec> base(w->positions.begin(),
                             w->positions.begin() + c.tree.num_vertices);
    return construct_type(c.tree, c.alpha, subfan, base);
}

CombType forget(const CombType& c, const Fan2D& basefan) {
    if (!c.fan.refines(basefan)) throw Error("NotARefinement", "fan does not refine");
    auto w = is_realizable(c);
    if (!w) throw Error("NotRealizable", "type has no witness");
    std::vector<RatVec> base(w->positions.begin(),
                             w->positions.begin() + c.tree.num_vertices);
    return construct_type(c.tree, c.alpha, basefan, base);
}

CombType transport(const CombType& c, const Tangency& alpha2, bool permissive) {
    if (!sigma_equivalent(c.fan, c.alpha, alpha2, permissive))
        throw Error("NotEquivalent", "tangency data are not Sigma-equivalent");
    Fan2D ssA = slope_sensitive(c.fan, c.alpha, !permissive);
    Fan2D ssB = slope_sensitive(c.fan, alpha2, !permissive);
    CombType lifted = lift(c, ssA);
    Materialized mat = materialize(lifted);
    // substitute analogous cones and the alpha2 slopes
    Materialized tr = mat;
    for (auto& cone : tr.vertex_cones) cone = map_analogous(ssA, cone, ssB, alpha2);
    for (auto& cone : tr.edge_carriers) cone = map_analogous(ssA, cone, ssB, alpha2);
    for (auto& cone : tr.leg_carriers) cone = map_analogous(ssA, cone, ssB, alpha2);
    SlopeAssignment sl2 = balanced_slopes(c.tree, alpha2);
    for (size_t k = 0; k < tr.edge_slopes.size(); ++k) {
        int p = tr.edge_parent[k];
        tr.edge_slopes[k] = p >= 0 ? sl2.edge_slopes[p] : sl2.leg_slopes[~p];
    }
    auto w = lp_solve(ssB, tr);
    if (!w) throw Error("TransportInfeasible", "transported lift has no witness");
    std::vector<RatVec> base(w->positions.begin(),
                             w->positions.begin() + c.tree.num_vertices);
    return construct_type(c.tree, alpha2, c.fan, base);
}

}  // namespace cf
