#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cf/exactgeom.hpp"

using namespace cf;

TEST_CASE("primitive") {
    CHECK(primitive({2, 0}) == LatticeVec{1, 0});
    CHECK(primitive({-2, -4}) == LatticeVec{-1, -2});
    CHECK(primitive({3, 5}) == LatticeVec{3, 5});
    CHECK_THROWS_WITH_AS(primitive({0, 0}), doctest::Contains("ZeroVector"), Error);
}

TEST_CASE("primitive_direction") {
    CHECK(primitive_direction({Rat(1, 2), Rat(3, 4)}) == LatticeVec{2, 3});
    CHECK(primitive_direction({Rat(-2), Rat(-4)}) == LatticeVec{-1, -2});
    CHECK_THROWS_AS(primitive_direction({Rat(0), Rat(0)}), Error);
}

TEST_CASE("cross and dot") {
    CHECK(cross(LatticeVec{1, 0}, LatticeVec{0, 1}) == 1);
    CHECK(cross(LatticeVec{1, 2}, LatticeVec{2, 4}) == 0);
    CHECK(cross(LatticeVec{1, 3}, LatticeVec{1, 2}) == -1);
    CHECK(dot(LatticeVec{1, 2}, LatticeVec{3, 4}) == 11);
}

TEST_CASE("direction_cmp_ccw basics") {
    LatticeVec base{1, 0};
    CHECK(direction_cmp_ccw(base, {1, 1}, {0, 1}) < 0);   // 45 deg < 90 deg
    CHECK(direction_cmp_ccw(base, {0, -1}, {0, 1}) > 0);  // 270 deg > 90 deg
    CHECK(direction_cmp_ccw({1, 1}, {2, 2}, {1, 0}) < 0);  // angle 0 first
    CHECK(direction_cmp_ccw(base, {2, 6}, {1, 3}) == 0);   // positive multiples
    CHECK_THROWS_AS(direction_cmp_ccw(base, {0, 0}, {1, 1}), Error);
}

TEST_CASE("direction_cmp_ccw is a total preorder with ray classes") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> d(-6, 6);
    auto rand_vec = [&]() {
        LatticeVec v;
        do {
            v = {d(rng), d(rng)};
        } while (v.is_zero());
        return v;
    };
    for (int it = 0; it < 2000; ++it) {
        LatticeVec base = rand_vec(), u = rand_vec(), v = rand_vec(), w = rand_vec();
        auto uv = direction_cmp_ccw(base, u, v);
        auto vw = direction_cmp_ccw(base, v, w);
        auto uw = direction_cmp_ccw(base, u, w);
        if (uv == 0) CHECK(same_ray(u, v));
        if (same_ray(u, v)) CHECK(uv == 0);
        if (uv < 0 && vw < 0) CHECK(uw < 0);  // transitivity
        if (uv == 0 && vw == 0) CHECK(uw == 0);
        // antisymmetry of the induced order
        auto vu = direction_cmp_ccw(base, v, u);
        CHECK(((uv < 0 && vu > 0) || (uv > 0 && vu < 0) || (uv == 0 && vu == 0)));
    }
}

namespace {
Rat eval(const LinSystem::Form& f, const std::vector<Rat>& x) {
    Rat v = 0;
    for (const auto& t : f) v += t.coef * x[t.var];
    return v;
}
}  // namespace

TEST_CASE("strict_feasible basics") {
    {
        LinSystem s;
        int x = s.add_var("x");
        s.add_strict({{x, 1}});
        s.add_strict({{x, -1}});
        CHECK(!strict_feasible(s));
    }
    {
        LinSystem s;
        int x = s.add_var("x"), y = s.add_var("y");
        s.add_equality({{x, 1}, {y, -1}});
        s.add_strict({{x, 1}});
        auto w = strict_feasible(s);
        REQUIRE(w);
        CHECK((*w)[0] == (*w)[1]);
        CHECK((*w)[0] > 0);
    }
    {
        LinSystem s;
        int x = s.add_var("x"), y = s.add_var("y"), z = s.add_var("z");
        s.add_equality({{x, 1}, {y, 1}, {z, -1}});
        s.add_strict({{x, 1}});
        s.add_strict({{y, 1}});
        s.add_strict({{z, 1}});
        auto w = strict_feasible(s);
        REQUIRE(w);
        CHECK((*w)[0] + (*w)[1] == (*w)[2]);
        CHECK((*w)[0] > 0);
        CHECK((*w)[1] > 0);
        CHECK((*w)[2] > 0);
    }
}

TEST_CASE("strict_feasible rejects unknown variables") {
    LinSystem s;
    s.add_var("x");
    CHECK_THROWS_WITH_AS(s.add_strict({{3, 1}}), doctest::Contains("MalformedSystem"),
                         Error);
}

TEST_CASE("strict_feasible witnesses are exact; None matches a grid oracle") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> nstrict(1, 4);
    for (int it = 0; it < 120; ++it) {
        LinSystem s;
        int x = s.add_var("x"), y = s.add_var("y");
        bool with_eq = it % 3 == 0;
        std::vector<LinSystem::Form> forms;
        if (with_eq) s.add_equality({{x, coef(rng)}, {y, coef(rng)}});
        int k = nstrict(rng);
        for (int i = 0; i < k; ++i) {
            LinSystem::Form f{{x, coef(rng)}, {y, coef(rng)}};
            forms.push_back(f);
            s.add_strict(f);
        }
        auto w = strict_feasible(s);
        if (w) {
            for (const auto& f : s.equalities) CHECK(eval(f, *w) == 0);
            for (const auto& f : s.strict) CHECK(eval(f, *w) > 0);
        } else {
            // small-instance oracle: denominators <= 8 in [-1,1]^2
            bool found = false;
            for (int px = -8; px <= 8 && !found; ++px)
                for (int py = -8; py <= 8 && !found; ++py) {
                    std::vector<Rat> cand{Rat(px, 8), Rat(py, 8)};
                    bool ok = true;
                    for (const auto& f : s.equalities) ok = ok && eval(f, cand) == 0;
                    for (const auto& f : s.strict) ok = ok && eval(f, cand) > 0;
                    found = ok;
                }
            CHECK(!found);
        }
    }
}
