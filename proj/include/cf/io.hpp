#pragma once
// JSON serialization of fans, tangency data, trees, strata and classes.

#include <string>
#include <vector>

#include "cf/comtype.hpp"
#include "cf/fan.hpp"
#include "cf/groth.hpp"
#include "cf/tangency.hpp"
#include "cf/trees.hpp"

#include <json.hpp>

namespace cf {

using Json = nlohmann::json;

// {"name": str, "rays": [[x,y],...]} — rejects non-integer coordinates
Fan2D fan_from_json(const Json& j);
Json fan_to_json(const Fan2D& fan);
Fan2D load_fan(const std::string& path);

// {"n": int, "alpha": [[x,y],...]}
Tangency tangency_from_json(const Json& j);
Json tangency_to_json(const Tangency& alpha);
Tangency load_tangency(const std::string& path);

// {"vertices": int, "edges": [[v,w],...], "legs": {"1": v, ...}}
Json tree_to_json(const MarkedTree& t);

Json order_to_json(const Fan2D& fan, const CyclicOrder& order, int n);
Json walls_to_json(const std::vector<Wall>& walls, int n);
Json class_to_json(const GrothPoly& p);
Json comb_type_to_json(const CombType& c);
Json strata_to_json(const std::vector<CombType>& strata);

Json load_json(const std::string& path);
void save_json(const Json& j, const std::string& path);

}  // namespace cf
