#include "cf/exactgeom.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace cf {

namespace mp = boost::multiprecision;

LatticeVec primitive(const LatticeVec& v) {
    if (v.is_zero()) throw Error("ZeroVector", "primitive of (0,0)");
    Int g = mp::gcd(mp::abs(v.x), mp::abs(v.y));
    return {v.x / g, v.y / g};
}

LatticeVec primitive_direction(const RatVec& p) {
    if (p.x == 0 && p.y == 0) throw Error("ZeroVector", "direction of (0,0)");
    Int nx = mp::numerator(p.x), dx = mp::denominator(p.x);
    Int ny = mp::numerator(p.y), dy = mp::denominator(p.y);
    // scale by lcm of denominators
    Int g = mp::gcd(dx, dy);
    Int l = dx / g * dy;
    return primitive({nx * (l / dx), ny * (l / dy)});
}

namespace {
// Half-plane index of w relative to base: 0 = positive multiple of base,
// 1 = strictly counterclockwise side (0 < angle < pi), 2 = opposite ray,
// 3 = clockwise side (pi < angle < 2pi).
int half_index(const LatticeVec& base, const LatticeVec& w) {
    Int c = cross(base, w);
    if (c > 0) return 1;
    if (c < 0) return 3;
    return dot(base, w) > 0 ? 0 : 2;
}
}  // namespace

std::strong_ordering direction_cmp_ccw(const LatticeVec& base, const LatticeVec& u,
                                       const LatticeVec& v) {
    if (base.is_zero() || u.is_zero() || v.is_zero())
        throw Error("ZeroVector", "direction_cmp_ccw on zero vector");
    int hu = half_index(base, u), hv = half_index(base, v);
    if (hu != hv) return hu <=> hv;
    Int c = cross(u, v);
    if (c > 0) return std::strong_ordering::less;
    if (c < 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;  // same half, parallel => same ray
}

int LinSystem::add_var(std::string name) {
    var_names.push_back(std::move(name));
    return num_vars++;
}

void LinSystem::check(const Form& f) const {
    for (const auto& t : f)
        if (t.var < 0 || t.var >= num_vars)
            throw Error("MalformedSystem", "unknown variable index");
}

namespace {

// Dense rational simplex tableau, Bland's rule. Solves
//   max c.x  s.t.  A x = b, x >= 0
// starting from a phase-1 basis of artificials. Sizes here are tiny.
class Simplex {
  public:
    Simplex(std::vector<std::vector<Rat>> a, std::vector<Rat> b, std::vector<Rat> c)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
        m_ = static_cast<int>(a_.size());
        n_ = m_ ? static_cast<int>(a_[0].size()) : 0;
    }

    // Returns nullopt if phase 1 finds the constraints infeasible.
    std::optional<std::pair<Rat, std::vector<Rat>>> solve() {
        for (int i = 0; i < m_; ++i)
            if (b_[i] < 0) {
                b_[i] = -b_[i];
                for (auto& v : a_[i]) v = -v;
            }
        // append artificials
        basis_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            for (int k = 0; k < m_; ++k) a_[i].push_back(i == k ? 1 : 0);
            basis_[i] = n_ + i;
        }
        // phase 1: minimise sum of artificials
        std::vector<Rat> obj(n_ + m_, 0);
        for (int k = 0; k < m_; ++k) obj[n_ + k] = -1;
        run(obj, n_ + m_);
        Rat p1 = objective(obj);
        if (p1 != 0) return std::nullopt;
        drive_out_artificials();
        // phase 2
        std::vector<Rat> obj2(n_ + m_, 0);
        for (int j = 0; j < n_; ++j) obj2[j] = c_[j];
        run(obj2, n_);  // artificials may not re-enter
        std::vector<Rat> x(n_, 0);
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = b_[i];
        return std::make_pair(objective(obj2), std::move(x));
    }

  private:
    Rat objective(const std::vector<Rat>& obj) const {
        Rat v = 0;
        for (int i = 0; i < m_; ++i) v += obj[basis_[i]] * b_[i];
        return v;
    }

    // reduced cost of column j for objective obj
    Rat reduced(const std::vector<Rat>& obj, int j) const {
        Rat r = obj[j];
        for (int i = 0; i < m_; ++i) r -= obj[basis_[i]] * a_[i][j];
        return r;
    }

    void pivot(int row, int col) {
        Rat piv = a_[row][col];
        for (auto& v : a_[row]) v /= piv;
        b_[row] /= piv;
        for (int i = 0; i < m_; ++i) {
            if (i == row) continue;
            Rat f = a_[i][col];
            if (f == 0) continue;
            for (int j = 0; j < static_cast<int>(a_[i].size()); ++j)
                a_[i][j] -= f * a_[row][j];
            b_[i] -= f * b_[row];
        }
        basis_[row] = col;
    }

    void run(const std::vector<Rat>& obj, int eligible) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < eligible; ++j)
                if (reduced(obj, j) > 0) { enter = j; break; }  // Bland
            if (enter < 0) return;
            int leave = -1;
            Rat best;
            for (int i = 0; i < m_; ++i) {
                if (a_[i][enter] <= 0) continue;
                Rat ratio = b_[i] / a_[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return;  // unbounded; caller's systems are boxed
            pivot(leave, enter);
        }
    }

    void drive_out_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            int col = -1;
            for (int j = 0; j < n_; ++j)
                if (a_[i][j] != 0) { col = j; break; }
            if (col >= 0) pivot(i, col);
            // else: redundant row, harmless to keep with the artificial at 0
        }
    }

    std::vector<std::vector<Rat>> a_;
    std::vector<Rat> b_;
    std::vector<Rat> c_;
    std::vector<int> basis_;
    int m_ = 0, n_ = 0;
};

}  // namespace

std::optional<std::vector<Rat>> strict_feasible(const LinSystem& sys) {
    // Substitute x_i = p_i - 1 with p_i in [0,2] and introduce the slack
    // delta in [0,1]; each strict form g > 0 becomes g >= delta. Homogeneity
    // lets any witness rescale into the box, so the system is strictly
    // feasible iff the optimum delta is positive.
    const int nv = sys.num_vars;
    const int delta = nv;                       // LP var index of delta
    const int n_ineq = static_cast<int>(sys.strict.size());
    // LP columns: p_0..p_{nv-1}, delta, s_k (per strict), t_i (box on p_i), r (box on delta)
    const int cols = nv + 1 + n_ineq + nv + 1;
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> B;
    auto row = [&]() -> std::vector<Rat>& {
        A.emplace_back(cols, Rat(0));
        B.emplace_back(0);
        return A.back();
    };
    for (const auto& f : sys.equalities) {
        auto& r = row();
        Rat rhs = 0;
        for (const auto& t : f) r[t.var] += t.coef, rhs += t.coef;
        B.back() = rhs;
    }
    for (int k = 0; k < n_ineq; ++k) {
        auto& r = row();
        Rat rhs = 0;
        for (const auto& t : sys.strict[k]) r[t.var] += t.coef, rhs += t.coef;
        r[delta] = -1;
        r[nv + 1 + k] = -1;  // surplus
        B.back() = rhs;
    }
    for (int i = 0; i < nv; ++i) {
        auto& r = row();
        r[i] = 1;
        r[nv + 1 + n_ineq + i] = 1;
        B.back() = 2;
    }
    {
        auto& r = row();
        r[delta] = 1;
        r[cols - 1] = 1;
        B.back() = 1;
    }
    std::vector<Rat> c(cols, 0);
    c[delta] = 1;
    auto sol = Simplex(std::move(A), std::move(B), std::move(c)).solve();
    if (!sol || sol->first <= 0) return std::nullopt;
    std::vector<Rat> w(nv);
    for (int i = 0; i < nv; ++i) w[i] = sol->second[i] - 1;
    return w;
}

}  // namespace cf
