#include "negsphere/fiber_catalog.hpp"

#include <array>
#include <stdexcept>

namespace negsphere {

namespace {

constexpr std::array<std::string_view, kFiberKindCount> kNames = {
    "E8t", "E7t", "E6t", "I0star", "II_cusp", "III", "IV", "I1_nodal"};

// Affine Dynkin tree: a central (-2) sphere with arms of the given lengths,
// all spheres (-2). The section meets the far end of arm `attach_arm`.
PlumbingFragment star_of_arms(std::initializer_list<int> arms, int attach_arm) {
  PlumbingFragment f;
  f.vertices.push_back({"c", -2, 0, false});
  int arm_index = 0;
  for (int len : arms) {
    int prev = 0;
    for (int i = 1; i <= len; ++i) {
      f.vertices.push_back(
          {"arm" + std::to_string(arm_index) + "." + std::to_string(i), -2, 0, false});
      const int cur = static_cast<int>(f.vertices.size()) - 1;
      f.edges.push_back(Edge::of(prev, cur));
      prev = cur;
    }
    if (arm_index == attach_arm) f.attachment = prev;
    ++arm_index;
  }
  return f;
}

PlumbingFragment cusp_resolved() {
  PlumbingFragment f;
  f.vertices = {{"fiber", -6, 0, false},
                {"e3", -1, 0, true},
                {"e1", -2, 0, true},
                {"e2", -3, 0, true}};
  f.edges = {Edge::of(0, 1), Edge::of(1, 2), Edge::of(1, 3)};
  f.attachment = 0;
  return f;
}

PlumbingFragment type_iii_resolved() {
  PlumbingFragment f;
  f.vertices = {{"e2", -1, 0, true},
                {"curve1", -4, 0, false},
                {"curve2", -4, 0, false},
                {"e1", -2, 0, true}};
  f.edges = {Edge::of(0, 1), Edge::of(0, 2), Edge::of(0, 3)};
  f.attachment = 1;
  return f;
}

PlumbingFragment type_iv_resolved() {
  PlumbingFragment f;
  f.vertices = {{"e", -1, 0, true},
                {"curve1", -3, 0, false},
                {"curve2", -3, 0, false},
                {"curve3", -3, 0, false}};
  f.edges = {Edge::of(0, 1), Edge::of(0, 2), Edge::of(0, 3)};
  f.attachment = 1;
  return f;
}

MonodromyWord ab_power(int k) {
  return MonodromyWord{Generator::A, Generator::B}.power(k);
}

std::vector<FiberType> build_catalog() {
  const MonodromyWord a{Generator::A};
  std::vector<FiberType> out;
  auto add = [&](FiberKind kind, MonodromyWord word, std::optional<PlumbingFragment> frag,
                 std::optional<Resolution> res) {
    const int euler = static_cast<int>(word.length());
    out.push_back({kind, std::string(fiber_name(kind)), std::move(word), euler, std::move(frag),
                   std::move(res)});
  };
  add(FiberKind::E8t, ab_power(5), star_of_arms({1, 2, 5}, 2), std::nullopt);
  add(FiberKind::E7t, ab_power(4) + a, star_of_arms({1, 3, 3}, 1), std::nullopt);
  add(FiberKind::E6t, ab_power(4), star_of_arms({2, 2, 2}, 0), std::nullopt);
  add(FiberKind::I0star, ab_power(3), star_of_arms({1, 1, 1, 1}, 0), std::nullopt);
  add(FiberKind::II_cusp, ab_power(1), std::nullopt, Resolution{3, cusp_resolved()});
  add(FiberKind::III, ab_power(1) + a, std::nullopt, Resolution{2, type_iii_resolved()});
  add(FiberKind::IV, ab_power(2), std::nullopt, Resolution{1, type_iv_resolved()});
  add(FiberKind::I1_nodal, a, std::nullopt, std::nullopt);
  return out;
}

}  // namespace

std::string_view fiber_name(FiberKind kind) { return kNames[static_cast<int>(kind)]; }

FiberKind parse_fiber_name(std::string_view name) {
  for (int i = 0; i < kFiberKindCount; ++i) {
    if (kNames[i] == name) return static_cast<FiberKind>(i);
  }
  throw std::invalid_argument("unknown fiber type '" + std::string(name) + "'");
}

int PlumbingFragment::euler_characteristic() const {
  return 2 * static_cast<int>(vertices.size()) - static_cast<int>(edges.size());
}

bool PlumbingFragment::is_tree() const { return negsphere::is_tree(to_graph()); }

PlumbingGraph PlumbingFragment::to_graph() const {
  PlumbingGraph g;
  for (const Sphere& s : vertices) g.add_vertex(s);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

const std::vector<FiberType>& catalog() {
  static const std::vector<FiberType> table = build_catalog();
  return table;
}

const FiberType& fiber(FiberKind kind) { return catalog()[static_cast<int>(kind)]; }

Resolution resolve(const FiberType& type) {
  if (!type.resolution) {
    throw std::invalid_argument(type.name + ": not a resolvable singular type");
  }
  return *type.resolution;
}

Resolution cusp_replacement() {
  PlumbingFragment f;
  f.vertices = {{"cubic", -9, 0, false}};
  f.attachment = 0;
  return {1, f};
}

}  // namespace negsphere
