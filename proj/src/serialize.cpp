#include "negsphere/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace negsphere {

namespace {

std::string_view rewrite_kind_name(RewriteKind k) {
  return k == RewriteKind::EdgeBlowup ? "edge_blowup" : "point_blowup";
}

RewriteKind parse_rewrite_kind(const std::string& s) {
  if (s == "edge_blowup") return RewriteKind::EdgeBlowup;
  if (s == "point_blowup") return RewriteKind::PointBlowup;
  throw std::invalid_argument("unknown rewrite kind '" + s + "'");
}

json spheres_json(const std::vector<Sphere>& spheres) {
  json out = json::array();
  for (const Sphere& s : spheres) {
    out.push_back({{"label", s.label},
                   {"weight", s.weight},
                   {"genus", s.genus},
                   {"exceptional", s.exceptional}});
  }
  return out;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::string dot_body(const std::vector<Sphere>& vertices, const std::vector<Edge>& edges,
                     int highlight) {
  std::ostringstream out;
  out << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Sphere& s = vertices[i];
    out << "  v" << i << " [label=\"" << s.weight << "\"";
    if (s.exceptional) out << ", style=dashed";
    if (static_cast<int>(i) == highlight) out << ", shape=doublecircle";
    out << ", tooltip=\"" << s.label << "\"];\n";
  }
  for (const Edge& e : edges) out << "  v" << e.u << " -- v" << e.v << ";\n";
  return out.str();
}

}  // namespace

json to_json(const GroupElement& g) {
  return json::array({json::array({g.m11(), g.m12()}), json::array({g.m21(), g.m22()})});
}

GroupElement group_element_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2) {
    throw std::invalid_argument("matrix must be [[m11,m12],[m21,m22]]");
  }
  return {j[0][0].get<std::int64_t>(), j[0][1].get<std::int64_t>(), j[1][0].get<std::int64_t>(),
          j[1][1].get<std::int64_t>()};
}

json to_json(const PlumbingFragment& f) {
  return {{"vertices", spheres_json(f.vertices)},
          {"edges", edges_json(f.edges)},
          {"attachment", f.attachment}};
}

json to_json(const FiberType& t) {
  json out = {{"name", t.name},
              {"word", t.word.str()},
              {"euler", t.euler},
              {"monodromy", to_json(word_to_matrix(t.word))}};
  out["fragment"] = t.fragment ? to_json(*t.fragment) : json(nullptr);
  if (t.resolution) {
    out["resolution"] = {{"blowups", t.resolution->blowups},
                         {"fragment", to_json(t.resolution->fragment)}};
  } else {
    out["resolution"] = nullptr;
  }
  return out;
}

json catalog_json() {
  json out = json::array();
  for (const FiberType& t : catalog()) out.push_back(to_json(t));
  return out;
}

json to_json(const PlumbingGraph& g) {
  json trace = json::array();
  for (const Rewrite& r : g.trace()) {
    trace.push_back({{"kind", rewrite_kind_name(r.kind)},
                     {"first", r.first},
                     {"second", r.second},
                     {"created", r.created}});
  }
  return {{"vertices", spheres_json(g.vertices())},
          {"edges", edges_json(g.edges())},
          {"trace", trace}};
}

PlumbingGraph graph_from_json(const json& j) {
  PlumbingGraph g;
  for (const json& v : j.at("vertices")) {
    g.add_vertex({v.at("label").get<std::string>(), v.at("weight").get<std::int64_t>(),
                  v.value("genus", 0), v.value("exceptional", false)});
  }
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be [u, v]");
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  if (j.contains("trace")) {
    for (const json& r : j.at("trace")) {
      g.append_trace({parse_rewrite_kind(r.at("kind").get<std::string>()), r.at("first").get<int>(),
                      r.at("second").get<int>(), r.at("created").get<int>()});
    }
  }
  return g;
}

json to_json(const FibrationSpec& spec) {
  json fibers = json::array();
  for (FiberKind k : spec.fibers) fibers.push_back(fiber_name(k));
  return {{"n", spec.n}, {"fibers", fibers}, {"provenance", provenance_name(spec.provenance)}};
}

FibrationSpec spec_from_json(const json& j) {
  FibrationSpec spec;
  spec.n = j.at("n").get<int>();
  for (const json& f : j.at("fibers")) spec.fibers.push_back(parse_fiber_name(f.get<std::string>()));
  spec.provenance = j.contains("provenance")
                        ? parse_provenance(j.at("provenance").get<std::string>())
                        : Provenance::AssumedRealizable;
  return spec;
}

json to_json(const BlowupPlan& plan) {
  json choices = json::array();
  for (FiberUse u : plan.choices) choices.push_back(fiber_use_name(u));
  return {{"choices", choices},
          {"edge_blowups", plan.edge_blowups},
          {"point_blowups", plan.point_blowups}};
}

BlowupPlan plan_from_json(const json& j) {
  BlowupPlan plan;
  for (const json& c : j.at("choices")) plan.choices.push_back(parse_fiber_use(c.get<std::string>()));
  plan.edge_blowups = j.value("edge_blowups", 0);
  plan.point_blowups = j.value("point_blowups", 0);
  return plan;
}

json to_json(const Rational& q) { return {{"num", q.numerator()}, {"den", q.denominator()}}; }

json to_json(const SearchResult& r) {
  const ConjectureCheck check = conjecture_check(r);
  return {{"n", r.n},
          {"k", r.k},
          {"best_square", r.best_square},
          {"b2", r.b2},
          {"spec", to_json(r.spec)},
          {"plan", to_json(r.plan)},
          {"ratio", to_json(r.ratio)},
          {"satisfies_C5", check.satisfies_c5},
          {"provenance", provenance_name(r.provenance)},
          {"trace", r.realization.narrative},
          {"graph", to_json(r.realization.graph)}};
}

std::string to_dot(const PlumbingGraph& g, const std::string& name) {
  return "graph " + name + " {\n" + dot_body(g.vertices(), g.edges(), -1) + "}\n";
}

std::string to_dot(const PlumbingFragment& f, const std::string& name) {
  return "graph " + name + " {\n" + dot_body(f.vertices, f.edges, f.attachment) + "}\n";
}

}  // namespace negsphere
