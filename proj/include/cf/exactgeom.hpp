#pragma once
// Exact integer/rational plane geometry and a strict-inequality feasibility
// solver. Everything here is arbitrary precision; no floating point.

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    std::string kind;
    Error(std::string k, const std::string& msg)
        : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

template <class T>
struct Vec2 {
    T x{}, y{};
    friend bool operator==(const Vec2&, const Vec2&) = default;
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    template <class S>
    friend Vec2 operator*(const S& s, const Vec2& v) { return {T(s * v.x), T(s * v.y)}; }
    bool is_zero() const { return x == 0 && y == 0; }
};

using LatticeVec = Vec2<Int>;
using RatVec = Vec2<Rat>;

inline RatVec to_rat(const LatticeVec& v) { return {Rat(v.x), Rat(v.y)}; }

template <class T, class U>
auto cross(const Vec2<T>& u, const Vec2<U>& v) { return u.x * v.y - u.y * v.x; }

template <class T, class U>
auto dot(const Vec2<T>& u, const Vec2<U>& v) { return u.x * v.x + u.y * v.y; }

// v / gcd(|x|,|y|); throws ZeroVector on (0,0).
LatticeVec primitive(const LatticeVec& v);

// Shortest lattice vector in the direction of a rational point (p != 0).
LatticeVec primitive_direction(const RatVec& p);

// Compares u, v by counterclockwise angle from base in [0, 2pi). Equal iff
// positive multiples of each other. Pure sign arithmetic, no normalisation.
std::strong_ordering direction_cmp_ccw(const LatticeVec& base, const LatticeVec& u,
                                       const LatticeVec& v);

// Same direction as a ray (positive multiple).
inline bool same_ray(const LatticeVec& u, const LatticeVec& v) {
    return cross(u, v) == 0 && dot(u, v) > 0;
}

// A positively homogeneous system: affine forms with zero constant term over
// named variables, split into equalities (= 0) and strict inequalities (> 0).
struct LinSystem {
    struct Term {
        int var;
        Rat coef;
    };
    using Form = std::vector<Term>;

    int num_vars = 0;
    std::vector<std::string> var_names;
    std::vector<Form> equalities;
    std::vector<Form> strict;

    int add_var(std::string name);
    void add_equality(Form f) { check(f), equalities.push_back(std::move(f)); }
    void add_strict(Form f) { check(f), strict.push_back(std::move(f)); }

  private:
    void check(const Form& f) const;
};

// Exact witness for all equalities (= 0) and strict forms (> 0), or nullopt.
// Slack-maximisation by rational simplex over the box [-1,1]^vars.
std::optional<std::vector<Rat>> strict_feasible(const LinSystem& sys);

}  // namespace cf
