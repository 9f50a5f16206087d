#include "cf/io.hpp"

#include <fstream>

namespace cf {

namespace {

Int json_int(const Json& j) {
    if (!j.is_number_integer())
        throw Error("ParseError", "expected a bit-exact integer, got " + j.dump());
    return Int(j.get<long long>());
}

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

LatticeVec json_vec(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw Error("ParseError", "expected [x, y], got " + j.dump());
    return {json_int(j[0]), json_int(j[1])};
}

Json vec_json(const LatticeVec& v) { return Json::array({to_ll(v.x), to_ll(v.y)}); }

Json cone_json(const Fan2D& fan, ConeRef c) {
    Json j;
    switch (c.kind) {
        case ConeRef::Origin:
            j["kind"] = "origin";
            j["rays"] = Json::array();
            break;
        case ConeRef::Ray:
            j["kind"] = "ray";
            j["rays"] = Json::array({vec_json(fan.ray(c.index))});
            break;
        case ConeRef::Sector:
            j["kind"] = "sector";
            j["rays"] = Json::array({vec_json(fan.ray(c.index)),
                                     vec_json(fan.ray(fan.sector_next(c.index)))});
            break;
    }
    return j;
}

}  // namespace

Fan2D fan_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rays"))
        throw Error("ParseError", "fan JSON needs a \"rays\" array");
    std::vector<LatticeVec> rays;
    for (const auto& r : j.at("rays")) rays.push_back(json_vec(r));
    return Fan2D(j.value("name", std::string("fan")), std::move(rays));
}

Json fan_to_json(const Fan2D& fan) {
    Json j;
    j["name"] = fan.name();
    j["rays"] = Json::array();
    for (const auto& r : fan.rays()) j["rays"].push_back(vec_json(r));
    return j;
}

Fan2D load_fan(const std::string& path) { return fan_from_json(load_json(path)); }

Tangency tangency_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("alpha"))
        throw Error("ParseError", "tangency JSON needs an \"alpha\" array");
    std::vector<LatticeVec> entries;
    for (const auto& a : j.at("alpha")) entries.push_back(json_vec(a));
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(entries.size()))
        throw Error("ParseError", "\"n\" does not match the alpha entries");
    return Tangency(std::move(entries));
}

Json tangency_to_json(const Tangency& alpha) {
    Json j;
    j["n"] = alpha.n;
    j["alpha"] = Json::array();
    for (const auto& a : alpha.entries) j["alpha"].push_back(vec_json(a));
    return j;
}

Tangency load_tangency(const std::string& path) {
    return tangency_from_json(load_json(path));
}

Json tree_to_json(const MarkedTree& t) {
    Json j;
    j["vertices"] = t.num_vertices;
    j["edges"] = Json::array();
    for (auto [a, b] : t.edges) j["edges"].push_back(Json::array({a, b}));
    j["legs"] = Json::object();
    for (int i = 0; i < t.n(); ++i) j["legs"][std::to_string(i + 1)] = t.legs[i];
    return j;
}

Json order_to_json(const Fan2D& fan, const CyclicOrder& order, int n) {
    Fan2D dag = dagger(fan);
    Json groups = Json::array();
    for (size_t g = 0; g < order.groups.size(); ++g) {
        Json grp;
        grp["direction"] = vec_json(order.dirs[g]);
        grp["elements"] = Json::array();
        for (const auto& e : order.groups[g])
            grp["elements"].push_back(element_str(e, dag, n));
        groups.push_back(std::move(grp));
    }
    Json j;
    j["groups"] = std::move(groups);
    return j;
}

Json walls_to_json(const std::vector<Wall>& walls, int n) {
    Json j = Json::array();
    for (const auto& w : walls) {
        Json e;
        switch (w.kind) {
            case Wall::Quadratic:
                e["kind"] = "quadratic";
                e["I"] = subset_str(w.I, n);
                e["J"] = subset_str(w.J, n);
                break;
            case Wall::Linear:
                e["kind"] = "linear";
                e["ray"] = vec_json(w.ray);
                e["I"] = subset_str(w.I, n);
                break;
            case Wall::Degenerate:
                e["kind"] = "degenerate";
                e["I"] = subset_str(w.I, n);
                break;
        }
        j.push_back(std::move(e));
    }
    return j;
}

Json class_to_json(const GrothPoly& p) {
    Json j;
    j["coeffs"] = Json::array();
    for (const auto& c : p.coeffs) j["coeffs"].push_back(to_ll(c));
    j["var"] = "L";
    return j;
}

Json comb_type_to_json(const CombType& c) {
    Materialized mat = materialize(c);
    Json j;
    j["tree"] = tree_to_json(c.tree);
    j["graph"] = tree_to_json(mat.graph);
    j["vertex_cones"] = Json::array();
    for (const auto& cone : mat.vertex_cones)
        j["vertex_cones"].push_back(cone_json(c.fan, cone));
    j["carriers"] = Json::array();
    for (const auto& cone : mat.edge_carriers)
        j["carriers"].push_back(cone_json(c.fan, cone));
    j["leg_carriers"] = Json::array();
    for (const auto& cone : mat.leg_carriers)
        j["leg_carriers"].push_back(cone_json(c.fan, cone));
    j["slopes"] = Json::array();
    for (const auto& m : mat.edge_slopes) j["slopes"].push_back(vec_json(m));
    j["R_c"] = R_c(mat);
    GrothPoly cls = stratum_class(c);
    j["class"] = Json::array();
    for (const auto& co : cls.coeffs) j["class"].push_back(to_ll(co));
    j["key"] = c.canonical_key();
    return j;
}

Json strata_to_json(const std::vector<CombType>& strata) {
    Json j = Json::array();
    for (const auto& c : strata) j.push_back(comb_type_to_json(c));
    return j;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("FileError", "cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error("ParseError", std::string(e.what()));
    }
    return j;
}

void save_json(const Json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("FileError", "cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace cf
