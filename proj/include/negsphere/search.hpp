#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "negsphere/fibration.hpp"

namespace negsphere {

// How the k blow-ups of E(n) # k(-CP^2) are spent.
struct BlowupPlan {
  std::vector<FiberUse> choices;  // one per fiber of the spec
  int edge_blowups = 0;
  int point_blowups = 0;

  friend bool operator==(const BlowupPlan&, const BlowupPlan&) = default;
};

struct SearchOptions {
  std::vector<FiberKind> allowed = default_search_fibers();
  bool extended = false;  // admit E7t, III, I1_nodal (ordered-product validation)
  int max_n = 30;
  int max_k = 50;
  int threads = 1;
  // Per-multiset budget of orderings tried when the words do not commute.
  int ordering_attempts = 200000;

  static std::vector<FiberKind> default_search_fibers();
};

// A realized construction: the final tree and its smoothed square.
struct Realization {
  PlumbingGraph graph;
  int blowups = 0;  // resolutions + edge + point blow-ups
  std::int64_t square = 0;
  std::vector<std::string> narrative;
};

struct SearchResult {
  int n = 2;
  int k = 0;
  std::int64_t best_square = 0;
  FibrationSpec spec;
  BlowupPlan plan;
  Realization realization;
  std::int64_t b2 = 0;
  Rational ratio;
  Provenance provenance = Provenance::AssumedRealizable;
};

struct ConjectureCheck {
  Rational ratio;
  bool satisfies_c5 = true;
};

// s_construction(n) - 5k.
std::int64_t theorem2_value(int n, int k);

/// Rebuilds the tree for (spec, plan): fibers attached per plan.choices, then
/// point blow-ups on the section, then edge blow-ups on the first listed edge.
/// The returned square is smooth() of the final tree and has been checked
/// against oracle_square(); a mismatch throws std::logic_error.
Realization realize(const FibrationSpec& spec, const BlowupPlan& plan);

// paper_verified only for the fiber/plan patterns that are built explicitly
// (the main decomposition, the E(2) type IV example, the E(6) cusp examples).
Provenance classify(const FibrationSpec& spec, const BlowupPlan& plan);

/// Calls `visit` once per multiset of allowed fibers with Euler sum 12n, in
/// canonical order. Non-commuting multisets (extended mode) are visited in
/// the first ordering found whose monodromy product is trivial, and skipped
/// if none is found within options.ordering_attempts.
void for_each_spec(int n, const SearchOptions& options,
                   const std::function<void(const FibrationSpec&)>& visit);

std::vector<FibrationSpec> enumerate_specs(int n, const SearchOptions& options);

/// Most negative smoothed sphere reachable in E(n) # k(-CP^2) by branch and
/// bound over fiber multisets, per-fiber resolution choices, and leftover
/// blow-ups. Returns nullopt when no fiber multiset fits the Euler budget.
std::optional<SearchResult> best_sphere(int n, int k, const SearchOptions& options = {});

ConjectureCheck conjecture_check(const SearchResult& result);

// Throws std::invalid_argument for an empty or out-of-mode allowed set.
void check_allowed(const SearchOptions& options);

}  // namespace negsphere
