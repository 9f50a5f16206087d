// chamberforge: command-line driver for the chamber / strata pipeline.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cf/comtype.hpp"
#include "cf/fan.hpp"
#include "cf/groth.hpp"
#include "cf/io.hpp"
#include "cf/render.hpp"
#include "cf/tangency.hpp"

using namespace cf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitDegenerate = 3;

int exit_code_for(const Error& e) {
    std::string k = e.kind;
    if (k == "DegenerateSubset" || k == "OnWall") return kExitDegenerate;
    return kExitInput;
}

void emit(const Json& j, const std::string& json_path) {
    std::cout << j.dump(2) << "\n";
    if (!json_path.empty()) save_json(j, json_path);
}

int resolve_threads(int flag_value, bool flag_given) {
    if (flag_given) return flag_value;
    if (const char* env = std::getenv("CHAMBERFORGE_THREADS")) return std::atoi(env);
    return 0;
}

std::vector<IndexElement> order_elements(const CyclicOrder& o) {
    std::vector<IndexElement> v;
    for (const auto& g : o.groups) v.insert(v.end(), g.begin(), g.end());
    return v;
}

// first element triple on which the two cyclic orders disagree
std::optional<std::array<IndexElement, 3>> first_differing_triple(
    const CyclicOrder& a, const CyclicOrder& b) {
    auto els = order_elements(a);
    for (const auto& p : els)
        for (const auto& q : els)
            for (const auto& r : els) {
                bool ta, tb;
                try {
                    ta = triple_holds(a, p, q, r);
                    tb = triple_holds(b, p, q, r);
                } catch (const Error&) {
                    continue;  // element missing from one order (vanishing)
                }
                if (ta != tb) return std::array<IndexElement, 3>{p, q, r};
            }
    return std::nullopt;
}

Json specialized_json(const GrothPoly& p, const std::string& spec) {
    Json j;
    j["class"] = class_to_json(p);
    j["class_str"] = p.str();
    if (spec == "euler") {
        j["specialized"] = specialize_euler(p).str();
        j["specialization"] = "euler";
    } else if (spec.rfind("q=", 0) == 0) {
        Int q(spec.substr(2));
        j["specialized"] = specialize_count(p, q).str();
        j["specialization"] = spec;
    } else if (!spec.empty()) {
        throw Error("BadFlag", "unknown --specialize value: " + spec);
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chamberforge: strata, classes and chamber transport for "
                 "genus-0 maps to toric surfaces"};
    app.require_subcommand(1);

    std::string fan_path, alpha_path, alpha2_path, json_path, out_path;
    std::string specialize, fan_sub;
    bool allow_walls = false, permissive = false, on_walls = false;
    int threads = 0, census_n = 3;
    bool threads_given = false;

    auto add_common = [&](CLI::App* c, bool needs_alpha) {
        c->add_option("--fan", fan_path, "fan JSON file")->required();
        if (needs_alpha)
            c->add_option("--alpha", alpha_path, "tangency JSON file")->required();
        c->add_option("--json", json_path, "also write the JSON output here");
    };
    auto add_enum_flags = [&](CLI::App* c) {
        c->add_flag("--allow-walls", allow_walls, "accept on-wall tangency data");
        c->add_flag("--permissive", permissive, "tolerate degenerate subsets in orderings");
        auto* t = c->add_option("--threads", threads, "worker threads (1 = serial)");
        t->each([&](const std::string&) { threads_given = true; });
    };

    CLI::App* fan_cmd = app.add_subcommand("fan", "fan utilities");
    fan_cmd->add_option("sub", fan_sub, "validate | dagger | slope-sensitive")
        ->required()
        ->check(CLI::IsMember({"validate", "dagger", "slope-sensitive"}));
    fan_cmd->add_option("--fan", fan_path, "fan JSON file")->required();
    fan_cmd->add_option("--alpha", alpha_path, "tangency JSON file");
    fan_cmd->add_option("--json", json_path, "also write the JSON output here");
    fan_cmd->add_flag("--permissive", permissive, "tolerate degenerate subsets");

    CLI::App* order_cmd = app.add_subcommand("order", "cyclic ordering of the index set");
    add_common(order_cmd, true);
    order_cmd->add_flag("--permissive", permissive, "drop vanishing subsets");

    CLI::App* equiv_cmd = app.add_subcommand("equiv", "decide Sigma-equivalence");
    add_common(equiv_cmd, true);
    equiv_cmd->add_option("--alpha2", alpha2_path, "second tangency JSON")->required();
    equiv_cmd->add_flag("--permissive", permissive, "compare vanishing patterns too");

    CLI::App* walls_cmd = app.add_subcommand("walls", "wall census / incident walls");
    walls_cmd->add_option("--fan", fan_path, "fan JSON file")->required();
    walls_cmd->add_option("--n", census_n, "number of marks for the census");
    walls_cmd->add_flag("--on", on_walls, "list walls containing --alpha");
    walls_cmd->add_option("--alpha", alpha_path, "tangency JSON file");
    walls_cmd->add_option("--json", json_path, "also write the JSON output here");

    CLI::App* strata_cmd = app.add_subcommand("strata", "enumerate realisable strata");
    add_common(strata_cmd, true);
    add_enum_flags(strata_cmd);

    CLI::App* class_cmd = app.add_subcommand("class", "total Grothendieck class");
    add_common(class_cmd, true);
    add_enum_flags(class_cmd);
    class_cmd->add_option("--specialize", specialize, "euler | q=<int>");

    CLI::App* transport_cmd =
        app.add_subcommand("transport", "transport strata to an equivalent tangency");
    add_common(transport_cmd, true);
    transport_cmd->add_option("--alpha2", alpha2_path, "target tangency JSON")
        ->required();
    add_enum_flags(transport_cmd);

    CLI::App* check_cmd =
        app.add_subcommand("check", "chamber-constancy harness for a tangency pair");
    add_common(check_cmd, true);
    check_cmd->add_option("--alpha2", alpha2_path, "second tangency JSON")->required();
    add_enum_flags(check_cmd);

    CLI::App* render_cmd = app.add_subcommand("render", "static SVG figure");
    render_cmd->add_option("--fan", fan_path, "fan JSON file")->required();
    render_cmd->add_option("--alpha", alpha_path, "tangency JSON file");
    render_cmd->add_option("--out", out_path, "output SVG path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*fan_cmd) {
            Fan2D fan = load_fan(fan_path);
            if (fan_sub == "validate") {
                Json j;
                j["valid"] = true;
                j["fan"] = fan_to_json(fan);
                emit(j, json_path);
            } else if (fan_sub == "dagger") {
                emit(fan_to_json(dagger(fan)), json_path);
            } else {
                if (alpha_path.empty())
                    throw Error("BadFlag", "slope-sensitive requires --alpha");
                Tangency alpha = load_tangency(alpha_path);
                emit(fan_to_json(slope_sensitive(fan, alpha, !permissive)),
                     json_path);
            }
        } else if (*order_cmd) {
            Fan2D fan = load_fan(fan_path);
            Tangency alpha = load_tangency(alpha_path);
            CyclicOrder o = cyclic_order(fan, alpha, permissive);
            Json j = order_to_json(fan, o, alpha.n);
            emit(j, json_path);
        } else if (*equiv_cmd) {
            Fan2D fan = load_fan(fan_path);
            Tangency a = load_tangency(alpha_path);
            Tangency b = load_tangency(alpha2_path);
            bool eq = sigma_equivalent(fan, a, b, permissive);
            CyclicOrder oa = cyclic_order(fan, a, permissive);
            CyclicOrder ob = cyclic_order(fan, b, permissive);
            Json j;
            j["equivalent"] = eq;
            j["order_a"] = order_to_json(fan, oa, a.n);
            j["order_b"] = order_to_json(fan, ob, b.n);
            j["walls_a"] = walls_to_json(walls_on(fan, a), a.n);
            j["walls_b"] = walls_to_json(walls_on(fan, b), b.n);
            if (!eq) {
                if (auto t = first_differing_triple(oa, ob)) {
                    Fan2D dag = dagger(fan);
                    j["first_differing_triple"] =
                        Json::array({element_str((*t)[0], dag, a.n),
                                     element_str((*t)[1], dag, a.n),
                                     element_str((*t)[2], dag, a.n)});
                }
            }
            emit(j, json_path);
        } else if (*walls_cmd) {
            Fan2D fan = load_fan(fan_path);
            if (on_walls) {
                if (alpha_path.empty())
                    throw Error("BadFlag", "--on requires --alpha");
                Tangency alpha = load_tangency(alpha_path);
                emit(walls_to_json(walls_on(fan, alpha), alpha.n), json_path);
            } else {
                emit(walls_to_json(wall_census(fan, census_n), census_n), json_path);
            }
        } else if (*strata_cmd || *class_cmd || *transport_cmd) {
            Fan2D fan = load_fan(fan_path);
            Tangency alpha = load_tangency(alpha_path);
            EnumerateOptions opts;
            opts.allow_walls = allow_walls;
            opts.permissive = permissive;
            opts.threads = resolve_threads(threads, threads_given);
            auto strata = enumerate_realizable(fan, alpha, opts);
            if (*strata_cmd) {
                emit(strata_to_json(strata), json_path);
            } else if (*class_cmd) {
                GrothPoly total;
                for (const auto& c : strata) total = total + stratum_class(c);
                emit(specialized_json(total, specialize), json_path);
            } else {
                Tangency alpha2 = load_tangency(alpha2_path);
                std::vector<CombType> out;
                for (const auto& c : strata) out.push_back(transport(c, alpha2, permissive));
                std::sort(out.begin(), out.end(),
                          [](const CombType& x, const CombType& y) {
                              return x.canonical_key() < y.canonical_key();
                          });
                emit(strata_to_json(out), json_path);
            }
        } else if (*check_cmd) {
            Fan2D fan = load_fan(fan_path);
            Tangency a = load_tangency(alpha_path);
            Tangency b = load_tangency(alpha2_path);
            Json j;
            bool eq = sigma_equivalent(fan, a, b, permissive);
            j["equivalent"] = eq;
            if (!eq) {
                CyclicOrder oa = cyclic_order(fan, a, permissive);
                CyclicOrder ob = cyclic_order(fan, b, permissive);
                if (auto t = first_differing_triple(oa, ob)) {
                    Fan2D dag = dagger(fan);
                    j["first_differing_triple"] =
                        Json::array({element_str((*t)[0], dag, a.n),
                                     element_str((*t)[1], dag, a.n),
                                     element_str((*t)[2], dag, a.n)});
                }
                emit(j, json_path);
                return kExitOk;  // correctly detected non-equivalence
            }
            EnumerateOptions opts;
            opts.allow_walls = allow_walls;
            opts.permissive = permissive;
            opts.threads = resolve_threads(threads, threads_given);
            auto sa = enumerate_realizable(fan, a, opts);
            auto sb = enumerate_realizable(fan, b, opts);
            GrothPoly ca, cb;
            std::map<std::string, GrothPoly> class_by_key;
            for (const auto& c : sa) ca = ca + stratum_class(c);
            std::set<std::string> target;
            for (const auto& c : sb) {
                cb = cb + stratum_class(c);
                target.insert(c.canonical_key());
                class_by_key[c.canonical_key()] = stratum_class(c);
            }
            bool classes_equal = ca == cb;
            bool bijection = sa.size() == sb.size();
            bool per_stratum = true;
            std::set<std::string> image;
            for (const auto& c : sa) {
                CombType t = transport(c, b, permissive);
                std::string k = t.canonical_key();
                if (!target.count(k) || !image.insert(k).second) bijection = false;
                else if (!(class_by_key[k] == stratum_class(c))) per_stratum = false;
                // and back
                if (transport(t, a, permissive).canonical_key() !=
                    c.canonical_key())
                    bijection = false;
            }
            bijection = bijection && image == target;
            j["classes_equal"] = classes_equal;
            j["class_a"] = ca.str();
            j["class_b"] = cb.str();
            j["strata_a"] = sa.size();
            j["strata_b"] = sb.size();
            j["bijection"] = bijection ? "ok" : "mismatch";
            j["per_stratum_classes"] = per_stratum ? "ok" : "mismatch";
            emit(j, json_path);
            if (!(classes_equal && bijection && per_stratum)) return kExitMismatch;
        } else if (*render_cmd) {
            Fan2D fan = load_fan(fan_path);
            std::optional<Tangency> alpha;
            if (!alpha_path.empty()) alpha = load_tangency(alpha_path);
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw Error("FileError", "cannot write " + out_path);
            out << render_svg(fan, alpha);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
