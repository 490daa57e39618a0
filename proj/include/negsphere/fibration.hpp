#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "negsphere/fiber_catalog.hpp"
#include "negsphere/plumbing.hpp"

namespace negsphere {

using Rational = boost::rational<std::int64_t>;

enum class Provenance { PaperVerified, AssumedRealizable };

std::string_view provenance_name(Provenance p);
Provenance parse_provenance(std::string_view name);

// Ordered singular fibers of an elliptic fibration on E(n).
struct FibrationSpec {
  int n = 2;
  std::vector<FiberKind> fibers;
  Provenance provenance = Provenance::AssumedRealizable;

  friend bool operator==(const FibrationSpec&, const FibrationSpec&) = default;
};

// E(n) # k(-CP^2). b2 and b2+ are the standard invariants of the surface.
struct AmbientSurface {
  int n = 2;
  int k = 0;
  std::int64_t b2 = 0;
  std::int64_t b2plus = 0;
};

struct ValidationResult {
  bool ok = true;
  std::string message;

  explicit operator bool() const { return ok; }
};

// Checks that fiber Euler numbers sum to 12n and that the ordered product of
// the fiber monodromies is trivial.
ValidationResult validate(const FibrationSpec& spec);

// n = 5q + r: 6q copies of E8t followed by the fibers splitting (ab)^{6r}.
FibrationSpec paper_decomposition(int n);

// How a fiber enters the tree of spheres.
//   Use     - attach its normal-crossing fragment (E8t, E7t, E6t, I0star)
//   Resolve - blow up its singular point and attach the resolution (II, III, IV)
//   Replace - swap the cusp for the (-9) cuspidal-cubic sphere (II only)
//   Skip    - leave it out of the tree
enum class FiberUse { Use, Resolve, Replace, Skip };

std::string_view fiber_use_name(FiberUse use);
FiberUse parse_fiber_use(std::string_view name);

// Use for every fiber with a fragment, Skip for the rest.
std::vector<FiberUse> default_choices(const FibrationSpec& spec);

struct BuiltTree {
  PlumbingGraph graph;  // vertex 0 is the section
  int blowups_used = 0;
};

// Section of weight -n with every used fiber attached at its attachment vertex.
BuiltTree build_tree(const FibrationSpec& spec, std::span<const FiberUse> choices);

// Smoothing of the tree built from paper_decomposition(n) with every fiber used.
std::int64_t s_construction(int n);

// -(221n - 4t)/5 with t = 5 - (n mod 5), or t = 0 when 5 | n.
std::int64_t s_closed_form(int n);

// -44.2 n + 0.8 (5 - r), r = n mod 5, read literally.
Rational s_formula_printed(int n);

AmbientSurface betti(int n, int k);

}  // namespace negsphere
