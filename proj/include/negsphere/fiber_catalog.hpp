#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "negsphere/plumbing.hpp"
#include "negsphere/sl2z.hpp"

namespace negsphere {

// Catalog order doubles as the canonical order of fibers inside a spec.
enum class FiberKind { E8t, E7t, E6t, I0star, II_cusp, III, IV, I1_nodal };

inline constexpr int kFiberKindCount = 8;

std::string_view fiber_name(FiberKind kind);
// Throws std::invalid_argument on an unknown name.
FiberKind parse_fiber_name(std::string_view name);

/// Normal-crossing tree of spheres, with the vertex a section passes through.
struct PlumbingFragment {
  std::vector<Sphere> vertices;
  std::vector<Edge> edges;
  int attachment = 0;

  // 2V - E: each sphere contributes 2, each crossing point glues two points into one.
  int euler_characteristic() const;
  bool is_tree() const;
  PlumbingGraph to_graph() const;
};

struct Resolution {
  int blowups = 0;
  PlumbingFragment fragment;
};

struct FiberType {
  FiberKind kind;
  std::string name;
  MonodromyWord word;
  int euler = 0;
  std::optional<PlumbingFragment> fragment;  // normal-crossing fibers only
  std::optional<Resolution> resolution;      // II, III, IV
};

// The eight cataloged fibers, indexed by FiberKind.
const std::vector<FiberType>& catalog();
const FiberType& fiber(FiberKind kind);

// Minimal normal-crossing resolution of a cusp, III or IV fiber.
// Throws std::invalid_argument("not a resolvable singular type") otherwise.
Resolution resolve(const FiberType& type);

// Cusp neighbourhood swapped for the cuspidal cubic's complement: a single
// (-9) sphere in one extra blow-up, still meeting the section once.
Resolution cusp_replacement();

}  // namespace negsphere
