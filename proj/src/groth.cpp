#include "cf/groth.hpp"

#include <sstream>

namespace cf {

void GrothPoly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Int GrothPoly::eval(const Int& q) const {
    Int v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * q + *it;
    return v;
}

std::string GrothPoly::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Int& c = coeffs[d];
        if (c == 0) continue;
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (d == 0) os << a;
        else {
            if (a != 1) os << a << "*";
            os << "L";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

GrothPoly GrothPoly::operator+(const GrothPoly& o) const {
    std::vector<Int> c(std::max(coeffs.size(), o.coeffs.size()), Int(0));
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] += coeffs[i];
    for (size_t i = 0; i < o.coeffs.size(); ++i) c[i] += o.coeffs[i];
    return GrothPoly(std::move(c));
}

GrothPoly GrothPoly::operator-(const GrothPoly& o) const {
    std::vector<Int> c(std::max(coeffs.size(), o.coeffs.size()), Int(0));
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] += coeffs[i];
    for (size_t i = 0; i < o.coeffs.size(); ++i) c[i] -= o.coeffs[i];
    return GrothPoly(std::move(c));
}

GrothPoly GrothPoly::operator*(const GrothPoly& o) const {
    if (coeffs.empty() || o.coeffs.empty()) return {};
    std::vector<Int> c(coeffs.size() + o.coeffs.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs.size(); ++i)
        for (size_t j = 0; j < o.coeffs.size(); ++j) c[i + j] += coeffs[i] * o.coeffs[j];
    return GrothPoly(std::move(c));
}

GrothPoly GrothPoly::pow(int e) const {
    GrothPoly r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

GrothPoly class_M0n(int k) {
    if (k < 3) throw Error("TooFewMarks", "need k >= 3");
    GrothPoly r = GrothPoly::constant(1);
    for (int j = 2; j <= k - 2; ++j) r = r * GrothPoly({Int(-j), 1});
    return r;
}

int R_c(const Materialized& mat) {
    int r = 2 - mat.num_unstable;
    for (const auto& c : mat.edge_carriers) r += c.dim();
    for (const auto& c : mat.vertex_cones) r -= c.dim();
    return r;
}

int R_c(const CombType& c) { return R_c(materialize(c)); }

GrothPoly stratum_class(const CombType& c) {
    int r = R_c(c);
    if (r < 0) throw Error("NegativeRc", "R_c < 0");
    GrothPoly out = GrothPoly::constant(1);
    for (int v = 0; v < c.tree.num_vertices; ++v)
        out = out * class_M0n(c.tree.valence(v));
    return out * GrothPoly({-1, 1}).pow(r);
}

GrothPoly total_class(const Fan2D& fan, const Tangency& alpha,
                      const EnumerateOptions& opts) {
    GrothPoly out;
    for (const auto& c : enumerate_realizable(fan, alpha, opts))
        out = out + stratum_class(c);
    return out;
}

Int specialize_euler(const GrothPoly& p) { return p.eval(1); }
Int specialize_count(const GrothPoly& p, const Int& q) { return p.eval(q); }

}  // namespace cf
