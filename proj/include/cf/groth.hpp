#pragma once
// Grothendieck-ring arithmetic: integer polynomials in the Lefschetz class L,
// the strata-class formula and specializations.

#include <string>
#include <vector>

#include "cf/comtype.hpp"
#include "cf/exactgeom.hpp"

namespace cf {

struct GrothPoly {
    std::vector<Int> coeffs;  // ascending powers of L, trailing zeros trimmed

    GrothPoly() = default;
    GrothPoly(std::initializer_list<Int> c) : coeffs(c) { trim(); }
    explicit GrothPoly(std::vector<Int> c) : coeffs(std::move(c)) { trim(); }
    static GrothPoly constant(Int v) { return GrothPoly({std::move(v)}); }
    static GrothPoly lefschetz() { return GrothPoly({0, 1}); }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    Int eval(const Int& q) const;
    std::string str() const;  // e.g. "L^2 - 5*L + 6"
    void trim();

    friend bool operator==(const GrothPoly&, const GrothPoly&) = default;
    GrothPoly operator+(const GrothPoly& o) const;
    GrothPoly operator-(const GrothPoly& o) const;
    GrothPoly operator*(const GrothPoly& o) const;
    GrothPoly pow(int e) const;
};

// [M_{0,k}] = prod_{j=2}^{k-2} (L - j); TooFewMarks for k < 3.
GrothPoly class_M0n(int k);

// R_c = sum dim(carriers) - sum dim(vertex cones) + 2 - #unstable, over the
// semi-stable graph (legs excluded).
int R_c(const Materialized& mat);
int R_c(const CombType& c);

// prod over stable vertices of [M_{0,val(v)}] times (L-1)^{R_c};
// NegativeRc if R_c < 0.
GrothPoly stratum_class(const CombType& c);

// sum of stratum classes over the full enumeration.
GrothPoly total_class(const Fan2D& fan, const Tangency& alpha,
                      const EnumerateOptions& opts = {});

// euler: p(1); count(q): p(q)
Int specialize_euler(const GrothPoly& p);
Int specialize_count(const GrothPoly& p, const Int& q);

}  // namespace cf
