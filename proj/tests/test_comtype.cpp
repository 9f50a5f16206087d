#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "cf/comtype.hpp"

using namespace cf;

namespace {

Fan2D p2() { return Fan2D("P2", {{1, 0}, {0, 1}, {-1, -1}}); }
// P2 cone shorthands: tau_i = rays, sigma_i = sectors
const ConeRef o = ConeRef::origin();
const ConeRef tau1 = ConeRef::ray(0), tau2 = ConeRef::ray(1), tau3 = ConeRef::ray(2);
const ConeRef sig1 = ConeRef::sector(0), sig2 = ConeRef::sector(1),
              sig3 = ConeRef::sector(2);

MarkedTree one_vertex(int n) {
    MarkedTree t;
    t.num_vertices = 1;
    t.legs.assign(n, 0);
    return t;
}

Tangency axes4() { return Tangency({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }

std::vector<std::string> keys(const std::vector<CombType>& v) {
    std::vector<std::string> k;
    for (const auto& c : v) k.push_back(c.canonical_key());
    return k;
}

}  // namespace

TEST_CASE("a four-legged vertex in the first quadrant") {
    Fan2D fan = p2();
    Tangency alpha = axes4();
    CombType c = construct_type(one_vertex(4), alpha, fan, {RatVec{1, 1}});
    CHECK(c.vertex_cones == std::vector<ConeRef>{sig1});
    CHECK(c.leg_decor[0] == Segment{{sig1}, {}});
    CHECK(c.leg_decor[1] == Segment{{sig1}, {}});
    CHECK(c.leg_decor[2] == Segment{{sig1, sig2}, {tau2}});
    CHECK(c.leg_decor[3] == Segment{{sig1, sig3}, {tau1}});

    // the same type built by hand has the same key
    CombType manual{fan, alpha, one_vertex(4), {sig1},
                    {},  // no edges
                    {Segment{{sig1}, {}}, Segment{{sig1}, {}},
                     Segment{{sig1, sig2}, {tau2}}, Segment{{sig1, sig3}, {tau1}}}};
    CHECK(c.canonical_key() == manual.canonical_key());

    // scale invariance of the construction
    CHECK(construct_type(one_vertex(4), alpha, fan, {RatVec{5, 5}}).canonical_key() ==
          c.canonical_key());
    // every interior point of sigma1 induces this same type; a point in
    // sigma2 induces a different one
    CHECK(construct_type(one_vertex(4), alpha, fan, {RatVec{Rat(1, 3), Rat(1, 2)}})
              .canonical_key() == c.canonical_key());
    CHECK(construct_type(one_vertex(4), alpha, fan, {RatVec{-1, 2}}).canonical_key() !=
          c.canonical_key());

    auto w = is_realizable(c);
    REQUIRE(w);
    CHECK(fan.smallest_cone(w->positions[0]) == sig1);

    Materialized m = materialize(c);
    CHECK(m.graph.num_vertices == 3);
    CHECK(m.num_unstable == 2);
    CHECK(m.graph.edges.size() == 2);
    CHECK(m.edge_carriers == std::vector<ConeRef>{sig1, sig1});
    // unstable vertices land on the crossed rays
    CHECK(m.vertex_cones[1] == tau2);
    CHECK(m.vertex_cones[2] == tau1);
    CHECK(m.edge_parent == std::vector<int>{~2, ~3});
}

TEST_CASE("three types over the second quadrant differ only at one crossing") {
    Fan2D fan = p2();
    Tangency alpha = axes4();
    CombType psi1 = construct_type(one_vertex(4), alpha, fan, {RatVec{-2, 1}});
    CombType psi2 = construct_type(one_vertex(4), alpha, fan, {RatVec{-2, 0}});
    CombType psi3 = construct_type(one_vertex(4), alpha, fan, {RatVec{-2, -1}});
    for (const auto& psi : {psi1, psi2, psi3}) {
        CHECK(psi.vertex_cones == std::vector<ConeRef>{sig2});
        CHECK(is_realizable(psi));
        // the fourth leg always exits through the ray (-1,-1)
        CHECK(psi.leg_decor[3] == Segment{{sig2, sig3}, {tau3}});
    }
    // the first leg crosses tau2 / the origin / tau3 respectively
    CHECK(psi1.leg_decor[0] == Segment{{sig2, sig1}, {tau2}});
    CHECK(psi2.leg_decor[0] == Segment{{sig2, tau1}, {o}});
    CHECK(psi3.leg_decor[0] == Segment{{sig2, sig3}, {tau3}});
    std::set<std::string> distinct{psi1.canonical_key(), psi2.canonical_key(),
                                   psi3.canonical_key()};
    CHECK(distinct.size() == 3);
}

TEST_CASE("the parallel-edge type is not realizable") {
    Fan2D fan = p2();
    Tangency alpha = axes4();
    MarkedTree t;  // legs 1,2 at v=0; legs 3,4 at w=1
    t.num_vertices = 2;
    t.edges = {{0, 1}};
    t.legs = {0, 0, 1, 1};
    // v in the interior of sigma3, w on tau3; the edge slope alpha_{3,4} =
    // (-1,-1) is parallel to tau3, so w can never be reached
    CombType c{fan,
               alpha,
               t,
               {sig3, tau3},
               {Segment{{sig3}, {}}},
               {Segment{{sig3}, {}}, Segment{{sig3, sig1}, {tau1}},
                Segment{{sig2}, {}}, Segment{{sig3}, {}}}};
    CHECK(!is_realizable(c));
    // keeping w inside sigma3 instead makes a realizable configuration: leg 3
    // then leaves through tau3 into sigma2
    CombType good = c;
    good.vertex_cones = {sig3, sig3};
    good.leg_decor = {Segment{{sig3}, {}}, Segment{{sig3, sig1}, {tau1}},
                      Segment{{sig3, sig2}, {tau3}}, Segment{{sig3}, {}}};
    CHECK(is_realizable(good));
}

TEST_CASE("is_realizable validates invariants") {
    Fan2D fan = p2();
    Tangency alpha = axes4();
    CombType c = construct_type(one_vertex(4), alpha, fan, {RatVec{1, 1}});
    CombType bad = c;
    bad.leg_decor[0] = Segment{{sig2}, {}};  // sigma2 has no face sigma1
    CHECK_THROWS_WITH_AS(is_realizable(bad), doctest::Contains("InvariantViolation"),
                         Error);
    CombType bad2 = c;
    bad2.vertex_cones = {sig1, sig1};  // wrong arity
    CHECK_THROWS_WITH_AS(is_realizable(bad2), doctest::Contains("InvariantViolation"),
                         Error);
    // face-consistent but geometrically impossible: leg 1 with slope (1,0)
    // cannot reach the origin from the interior of sigma1
    CombType bad3 = c;
    bad3.leg_decor[0] = Segment{{sig1, tau1}, {o}};
    CHECK(!is_realizable(bad3));
}

TEST_CASE("construct_type rejects inconsistent vertex positions") {
    Fan2D fan = p2();
    Tangency alpha = axes4();
    MarkedTree t;
    t.num_vertices = 2;
    t.edges = {{0, 1}};
    t.legs = {0, 0, 1, 1};
    // balanced slope of the edge 0->1 is alpha_{3,4} = (-1,-1); the
    // displacement (1,0) is not a positive multiple of it
    CHECK_THROWS_WITH_AS(
        construct_type(t, alpha, fan, {RatVec{1, 1}, RatVec{2, 1}}),
        doctest::Contains("InconsistentMap"), Error);
    // a consistent two-vertex map
    CombType c = construct_type(t, alpha, fan, {RatVec{2, 2}, RatVec{1, 1}});
    CHECK(c.vertex_cones == std::vector<ConeRef>{sig1, sig1});
    CHECK(is_realizable(c));
}

TEST_CASE("theta closed form agrees with the LP oracle") {
    // the LP is the independent decision procedure; compare on every
    // face-compatible configuration over slope-sensitive fans, with slopes
    // drawn from the rays of the subdivided fan
    std::vector<std::pair<Fan2D, Tangency>> cases{
        {p2(), Tangency({{1, 2}, {1, 3}, {-2, -5}})},
        {Fan2D("P1xP1", {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}),
         Tangency({{1, 2}, {1, 3}, {-2, -5}})},
        {Fan2D("H1", {{1, 0}, {0, 1}, {-1, 1}, {0, -1}}),
         Tangency({{3, 1}, {-1, 2}, {-2, -3}})},
    };
    int exercised = 0;
    for (const auto& [base, alpha] : cases) {
        Fan2D fan = slope_sensitive(base, alpha);
        std::vector<LatticeVec> slopes;
        for (const auto& r : fan.rays()) {
            slopes.push_back(r);
            slopes.push_back(-r);
        }
        for (ConeRef sv : fan.all_cones())
            for (ConeRef sw : fan.all_cones())
                for (const auto& m : slopes) {
                    bool closed;
                    try {
                        closed = theta_realizable_closed_form(fan, sv, sw, m);
                    } catch (const Error& e) {
                        CHECK(std::string(e.kind) == "UnsupportedConfiguration");
                        continue;
                    }
                    CHECK(closed == theta_lp(fan, sv, sw, m));
                    ++exercised;
                }
    }
    CHECK(exercised > 500);
}

TEST_CASE("theta on the parallel-edge configuration") {
    Fan2D fan = p2();
    CHECK(!theta_lp(fan, sig3, tau3, {-1, -1}));
    CHECK(!theta_realizable_closed_form(fan, sig3, tau3, {-1, -1}));
    CHECK(theta_lp(fan, sig3, tau3, {-1, 0}));
    CHECK(theta_realizable_closed_form(fan, sig3, tau3, {-1, 0}));
}

TEST_CASE("enumeration is complete for one marked vertex: grid oracle") {
    Fan2D fan = p2();
    Tangency alpha({{1, 2}, {1, 3}, {-2, -5}});
    auto types = enumerate_realizable(fan, alpha);
    auto key_list = keys(types);
    std::set<std::string> enumerated(key_list.begin(), key_list.end());
    CHECK(enumerated.size() == types.size());  // duplicate free
    CHECK(std::is_sorted(enumerated.begin(), enumerated.end()));

    // oracle: construct the type of every map position on a dense direction
    // grid (witness regions are cones, so directions suffice) plus the origin
    std::set<std::string> observed;
    for (int x = -13; x <= 13; ++x)
        for (int y = -13; y <= 13; ++y)
            observed.insert(construct_type(one_vertex(3), alpha, fan,
                                           {RatVec{x, y}})
                                .canonical_key());
    CHECK(observed == enumerated);
}

TEST_CASE("every enumerated type is realizable and distinct") {
    Fan2D fan("H1", {{1, 0}, {0, 1}, {-1, 1}, {0, -1}});
    Tangency alpha({{3, 1}, {-1, 2}, {-2, -3}});
    auto types = enumerate_realizable(fan, alpha);
    CHECK(!types.empty());
    std::set<std::string> seen;
    for (const auto& c : types) {
        CHECK(is_realizable(c));
        CHECK(seen.insert(c.canonical_key()).second);
    }
}

TEST_CASE("enumeration counts, frozen after oracle validation") {
    // the P2 value is cross-checked against the direction-grid oracle above
    Fan2D pp("P1xP1", {{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    CHECK(enumerate_realizable(p2(), Tangency({{1, 2}, {1, 3}, {-2, -5}})).size() ==
          13);
    CHECK(enumerate_realizable(pp, Tangency({{1, 2}, {1, 3}, {-2, -5}})).size() == 15);
    CHECK(enumerate_realizable(p2(), Tangency({{1, 4}, {1, 5}, {2, -3}, {-4, -6}}))
              .size() == 120);
    CHECK(enumerate_realizable(pp, Tangency({{1, 4}, {1, 5}, {2, -3}, {-4, -6}}))
              .size() == 154);
}

TEST_CASE("serial and parallel enumeration agree") {
    std::vector<std::pair<Fan2D, Tangency>> cases{
        {p2(), Tangency({{1, 2}, {1, 3}, {-2, -5}})},
        {Fan2D("P1xP1", {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}),
         Tangency({{1, 2}, {1, 3}, {-2, -5}})},
        {p2(), Tangency({{1, 4}, {1, 5}, {2, -3}, {-4, -6}})},
    };
    for (const auto& [fan, alpha] : cases) {
        EnumerateOptions par;
        par.threads = 0;
        EnumerateOptions ser;
        ser.threads = 1;
        CHECK(keys(enumerate_realizable(fan, alpha, par)) ==
              keys(enumerate_realizable_serial(fan, alpha, ser)));
    }
}

TEST_CASE("enumeration refuses degenerate and on-wall input") {
    Fan2D fan = p2();
    Tangency vanishing({{1, 2}, {-1, -2}, {3, 1}, {-3, -1}});
    CHECK_THROWS_WITH_AS(enumerate_realizable(fan, vanishing),
                         doctest::Contains("DegenerateSubset"), Error);
    Tangency onwall({{2, 0}, {0, 1}, {-2, -1}});  // alpha_1 parallel to a ray
    CHECK_THROWS_WITH_AS(enumerate_realizable(fan, onwall),
                         doctest::Contains("OnWall"), Error);
    EnumerateOptions opts;
    opts.allow_walls = true;
    CHECK(!enumerate_realizable(fan, onwall, opts).empty());
}

TEST_CASE("lifting to the slope-sensitive fan") {
    Fan2D fan = p2();
    Tangency alpha({{2, 0}, {0, 1}, {-2, -1}});
    Fan2D ss = slope_sensitive(fan, alpha);
    int r21 = *ss.find_ray({2, 1});
    int r10 = *ss.find_ray({1, 0});

    CombType c1 =
        construct_type(one_vertex(3), alpha, fan, {RatVec{Rat(1, 2), Rat(9, 20)}});
    CombType c2 =
        construct_type(one_vertex(3), alpha, fan, {RatVec{Rat(1, 2), Rat(1, 4)}});
    CombType c3 =
        construct_type(one_vertex(3), alpha, fan, {RatVec{Rat(1, 2), Rat(3, 20)}});
    CHECK(std::set<std::string>{c1.canonical_key(), c2.canonical_key(),
                                c3.canonical_key()}
              .size() == 3);
    // all three share the cone assignments of the stable data over the base
    CHECK(c1.vertex_cones == std::vector<ConeRef>{sig1});
    CHECK(c2.vertex_cones == std::vector<ConeRef>{sig1});
    // the third leg crosses tau2 / the origin / tau1 then tau3
    CHECK(c1.leg_decor[2].crossings == std::vector<ConeRef>{tau2});
    CHECK(c2.leg_decor[2].crossings == std::vector<ConeRef>{o});
    CHECK(c3.leg_decor[2].crossings == std::vector<ConeRef>{tau1, tau3});

    // the unique lifts of c2 and c3 put the vertex on Cone(2,1) and
    // Cone((2,1),(1,0)) respectively
    CombType l2 = lift(c2, ss);
    CHECK(l2.vertex_cones == std::vector<ConeRef>{ConeRef::ray(r21)});
    CombType l3 = lift(c3, ss);
    CHECK(l3.vertex_cones == std::vector<ConeRef>{ConeRef::sector(r10)});
    CHECK(forget(l2, fan).canonical_key() == c2.canonical_key());
    CHECK(forget(l3, fan).canonical_key() == c3.canonical_key());
    CHECK(forget(lift(c1, ss), fan).canonical_key() == c1.canonical_key());

    // c1 has exactly three realizable lifts
    EnumerateOptions opts;
    opts.allow_walls = true;  // alpha lies on the subdivided fan's own rays
    int lifts_of_c1 = 0;
    for (const auto& t : enumerate_realizable(ss, alpha, opts))
        if (t.tree.canonical_key() == c1.tree.canonical_key() &&
            forget(t, fan).canonical_key() == c1.canonical_key())
            ++lifts_of_c1;
    CHECK(lifts_of_c1 == 3);
}

TEST_CASE("transport to a scaled tangency is the identity on decorations") {
    Fan2D fan = p2();
    Tangency alpha({{1, 2}, {1, 3}, {-2, -5}});
    Tangency alpha2({{2, 4}, {2, 6}, {-4, -10}});
    for (const auto& c : enumerate_realizable(fan, alpha)) {
        CombType t = transport(c, alpha2);
        CHECK(t.canonical_key() == c.canonical_key());
        CHECK(t.alpha.entries == alpha2.entries);
    }
}

TEST_CASE("transport is a bijection between chambers") {
    Fan2D fan = p2();
    // two tangencies in the same chamber but not proportional
    Tangency a({{1, 2}, {1, 3}, {-2, -5}});
    Tangency b({{1, 3}, {1, 4}, {-2, -7}});
    REQUIRE(sigma_equivalent(fan, a, b));
    auto ta = enumerate_realizable(fan, a);
    auto tb = enumerate_realizable(fan, b);
    CHECK(ta.size() == tb.size());
    auto tb_keys = keys(tb);
    std::set<std::string> target(tb_keys.begin(), tb_keys.end());
    std::set<std::string> image;
    for (const auto& c : ta) {
        CombType t = transport(c, b);
        CHECK(target.count(t.canonical_key()) == 1);
        CHECK(image.insert(t.canonical_key()).second);
        // round trip
        CHECK(transport(t, a).canonical_key() == c.canonical_key());
    }
    CHECK(image == target);
    CHECK_THROWS_WITH_AS(transport(ta.front(), Tangency({{1, 2}, {-1, -3}, {0, 1}})),
                         doctest::Contains("NotEquivalent"), Error);
}
