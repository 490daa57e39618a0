#pragma once

#include <string>

#include "json.hpp"

#include "negsphere/fiber_catalog.hpp"
#include "negsphere/fibration.hpp"
#include "negsphere/plumbing.hpp"
#include "negsphere/search.hpp"
#include "negsphere/sl2z.hpp"

namespace negsphere {

using json = nlohmann::json;

// [[m11,m12],[m21,m22]]
json to_json(const GroupElement& g);
GroupElement group_element_from_json(const json& j);

json to_json(const PlumbingFragment& f);
json to_json(const FiberType& t);
json catalog_json();

// {vertices:[{label,weight,genus,exceptional}], edges:[[u,v]], trace:[...]}
json to_json(const PlumbingGraph& g);
PlumbingGraph graph_from_json(const json& j);

// {n, fibers:[names], provenance}
json to_json(const FibrationSpec& spec);
FibrationSpec spec_from_json(const json& j);

// {choices:[...], edge_blowups, point_blowups}
json to_json(const BlowupPlan& plan);
BlowupPlan plan_from_json(const json& j);

// {n, k, best_square, b2, spec, plan, ratio:{num,den}, satisfies_C5,
//  provenance, trace:[lines], graph}
json to_json(const SearchResult& r);

json to_json(const Rational& q);

// Graphviz text; vertex label = weight, blow-up vertices dashed.
std::string to_dot(const PlumbingGraph& g, const std::string& name = "plumbing");
std::string to_dot(const PlumbingFragment& f, const std::string& name);

}  // namespace negsphere
