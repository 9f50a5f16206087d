#include "cf/render.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

namespace cf {

namespace {

namespace mp = boost::multiprecision;

// integer approximation of v scaled to Chebyshev length `len`
std::pair<long long, long long> chebyshev(const LatticeVec& v, long long len) {
    Int m = mp::max(mp::abs(v.x), mp::abs(v.y));
    Int sx = v.x * len / m, sy = v.y * len / m;
    return {sx.convert_to<long long>(), sy.convert_to<long long>()};
}

// integer approximation of v projected to the circle of radius r
std::pair<long long, long long> on_circle(const LatticeVec& v, long long r) {
    const Int scale = 100000;
    Int n2 = Int(v.x * v.x + v.y * v.y) * scale * scale;
    Int len = mp::sqrt(n2);
    Int px = v.x * r * scale / len, py = v.y * r * scale / len;
    return {px.convert_to<long long>(), py.convert_to<long long>()};
}

}  // namespace

std::string render_svg(const Fan2D& fan, const std::optional<Tangency>& alpha) {
    const long long fcx = 200, fcy = 200, ccx = 480, ccy = 200;
    const long long ray_len = 150, radius = 120;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"660\" height=\"400\" "
          "viewBox=\"0 0 660 400\">\n";
    os << "<rect width=\"660\" height=\"400\" fill=\"white\"/>\n";

    struct Entry {
        LatticeVec dir;
        std::string label;
        bool subset;
    };
    std::vector<Entry> entries;
    for (const auto& r : fan.rays()) {
        std::ostringstream lb;
        lb << "rho(" << r.x << "," << r.y << ")";
        entries.push_back({r, lb.str(), false});
    }
    if (alpha) {
        const unsigned full = (1u << alpha->n) - 1;
        for (unsigned m = 1; m < full; ++m) {
            LatticeVec s = subset_slope(*alpha, m);
            if (s.is_zero()) continue;
            entries.push_back({primitive(s), subset_str(m, alpha->n), true});
        }
    }

    for (const auto& e : entries) {
        auto [dx, dy] = chebyshev(e.dir, ray_len);
        os << "<line x1=\"" << fcx << "\" y1=\"" << fcy << "\" x2=\"" << fcx + dx
           << "\" y2=\"" << fcy - dy << "\" stroke=\""
           << (e.subset ? "red" : "black") << "\" stroke-width=\"1.5\"/>\n";
    }
    os << "<circle cx=\"" << ccx << "\" cy=\"" << ccy << "\" r=\"" << radius
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (const auto& e : entries) {
        auto [px, py] = on_circle(e.dir, radius);
        os << "<circle cx=\"" << ccx + px << "\" cy=\"" << ccy - py
           << "\" r=\"3\" fill=\"" << (e.subset ? "red" : "black") << "\"/>\n";
        auto [lx, ly] = on_circle(e.dir, radius + 16);
        os << "<text x=\"" << ccx + lx << "\" y=\"" << ccy - ly
           << "\" font-size=\"9\" text-anchor=\"middle\">" << e.label << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace cf
