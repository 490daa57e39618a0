#include "negsphere/fibration.hpp"

#include <sstream>
#include <stdexcept>

namespace negsphere {

namespace {

void require_n(int n, const char* where) {
  if (n < 2) {
    throw std::invalid_argument(std::string(where) + ": n = " + std::to_string(n) +
                                " but E(n) needs n >= 2 (b2+ > 1)");
  }
}

}  // namespace

std::string_view provenance_name(Provenance p) {
  return p == Provenance::PaperVerified ? "paper_verified" : "assumed_realizable";
}

Provenance parse_provenance(std::string_view name) {
  if (name == "paper_verified") return Provenance::PaperVerified;
  if (name == "assumed_realizable") return Provenance::AssumedRealizable;
  throw std::invalid_argument("unknown provenance '" + std::string(name) + "'");
}

std::string_view fiber_use_name(FiberUse use) {
  switch (use) {
    case FiberUse::Use:
      return "use";
    case FiberUse::Resolve:
      return "resolve";
    case FiberUse::Replace:
      return "replace";
    case FiberUse::Skip:
      return "skip";
  }
  return "skip";
}

FiberUse parse_fiber_use(std::string_view name) {
  if (name == "use") return FiberUse::Use;
  if (name == "resolve") return FiberUse::Resolve;
  if (name == "replace") return FiberUse::Replace;
  if (name == "skip") return FiberUse::Skip;
  throw std::invalid_argument("unknown fiber choice '" + std::string(name) + "'");
}

ValidationResult validate(const FibrationSpec& spec) {
  if (spec.n < 2) {
    return {false, "n = " + std::to_string(spec.n) + " < 2"};
  }
  std::int64_t euler = 0;
  MonodromyWord total;
  for (FiberKind kind : spec.fibers) {
    euler += fiber(kind).euler;
    total = total + fiber(kind).word;
  }
  const std::int64_t expected = 12 * static_cast<std::int64_t>(spec.n);
  if (euler != expected) {
    std::ostringstream msg;
    msg << "euler sum " << euler << " ≠ " << expected;
    return {false, msg.str()};
  }
  GroupElement product = GroupElement::identity();
  try {
    product = word_to_matrix(total);
  } catch (const std::overflow_error&) {
    return {false, "total monodromy overflows 64-bit entries"};
  }
  if (!is_identity(product)) {
    std::ostringstream msg;
    msg << "total monodromy [[" << product.m11() << "," << product.m12() << "],["
        << product.m21() << "," << product.m22() << "]] is not the identity";
    return {false, msg.str()};
  }
  return {true, ""};
}

FibrationSpec paper_decomposition(int n) {
  require_n(n, "paper_decomposition");
  const int q = n / 5;
  const int r = n % 5;
  FibrationSpec spec{n, std::vector<FiberKind>(static_cast<std::size_t>(6 * q), FiberKind::E8t),
                     Provenance::PaperVerified};
  using enum FiberKind;
  switch (r) {
    case 1:
      spec.fibers.insert(spec.fibers.end(), {I0star, I0star});
      break;
    case 2:
      spec.fibers.insert(spec.fibers.end(), {E8t, E6t, I0star});
      break;
    case 3:
      spec.fibers.insert(spec.fibers.end(), {E8t, E8t, E8t, I0star});
      break;
    case 4:
      spec.fibers.insert(spec.fibers.end(), {E8t, E8t, E8t, E8t, E6t});
      break;
    default:
      break;
  }
  return spec;
}

std::vector<FiberUse> default_choices(const FibrationSpec& spec) {
  std::vector<FiberUse> out;
  out.reserve(spec.fibers.size());
  for (FiberKind kind : spec.fibers) {
    out.push_back(fiber(kind).fragment ? FiberUse::Use : FiberUse::Skip);
  }
  return out;
}

BuiltTree build_tree(const FibrationSpec& spec, std::span<const FiberUse> choices) {
  require_n(spec.n, "build_tree");
  if (choices.size() != spec.fibers.size()) {
    throw std::invalid_argument("build_tree: " + std::to_string(choices.size()) +
                                " choices for " + std::to_string(spec.fibers.size()) +
                                " fibers");
  }
  BuiltTree out;
  out.graph.add_vertex({"section", -static_cast<std::int64_t>(spec.n), 0, false});

  for (std::size_t i = 0; i < spec.fibers.size(); ++i) {
    const FiberType& type = fiber(spec.fibers[i]);
    const FiberUse use = choices[i];
    const PlumbingFragment* frag = nullptr;
    Resolution swapped;

    switch (use) {
      case FiberUse::Skip:
        continue;
      case FiberUse::Use:
        if (!type.fragment) {
          throw std::invalid_argument("build_tree: fiber " + std::to_string(i) + " (" +
                                      type.name +
                                      ") has no embedded-sphere fragment; resolve or skip it");
        }
        frag = &*type.fragment;
        break;
      case FiberUse::Resolve:
        swapped = resolve(type);
        frag = &swapped.fragment;
        out.blowups_used += swapped.blowups;
        break;
      case FiberUse::Replace:
        if (type.kind != FiberKind::II_cusp) {
          throw std::invalid_argument("build_tree: only a cusp fiber can be replaced, fiber " +
                                      std::to_string(i) + " is " + type.name);
        }
        swapped = cusp_replacement();
        frag = &swapped.fragment;
        out.blowups_used += swapped.blowups;
        break;
    }

    const int base = out.graph.vertex_count();
    const std::string prefix = "f" + std::to_string(i) + "." + type.name + ".";
    for (Sphere s : frag->vertices) {
      s.label = prefix + s.label;
      out.graph.add_vertex(std::move(s));
    }
    for (const Edge& e : frag->edges) out.graph.add_edge(base + e.u, base + e.v);
    out.graph.add_edge(0, base + frag->attachment);
  }
  return out;
}

std::int64_t s_construction(int n) {
  const FibrationSpec spec = paper_decomposition(n);
  const auto choices = default_choices(spec);
  return smooth(build_tree(spec, choices).graph);
}

std::int64_t s_closed_form(int n) {
  require_n(n, "s_closed_form");
  const int r = n % 5;
  const std::int64_t t = r == 0 ? 0 : 5 - r;
  return -(221 * static_cast<std::int64_t>(n) - 4 * t) / 5;
}

Rational s_formula_printed(int n) {
  require_n(n, "s_formula_printed");
  const int r = n % 5;
  return Rational(-221, 5) * n + Rational(4, 5) * (5 - r);
}

AmbientSurface betti(int n, int k) {
  require_n(n, "betti");
  if (k < 0) throw std::invalid_argument("betti: negative blow-up count");
  return {n, k, 12 * static_cast<std::int64_t>(n) - 2 + k, 2 * static_cast<std::int64_t>(n) - 1};
}

}  // namespace negsphere
