#include "negsphere/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace negsphere {

std::vector<FiberKind> SearchOptions::default_search_fibers() {
  using enum FiberKind;
  return {E8t, E6t, I0star, II_cusp, IV};
}

std::int64_t theorem2_value(int n, int k) {
  if (k < 0) throw std::invalid_argument("theorem2_value: negative blow-up count");
  return s_construction(n) - 5 * static_cast<std::int64_t>(k);
}

namespace {

bool is_ab_power(const MonodromyWord& w) {
  const auto& l = w.letters();
  if (l.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] != (i % 2 == 0 ? Generator::A : Generator::B)) return false;
  }
  return true;
}

std::string word_display(const MonodromyWord& w) {
  const auto& l = w.letters();
  if (is_ab_power(w)) {
    const std::size_t m = l.size() / 2;
    return m == 1 ? "ab" : "(ab)^" + std::to_string(m);
  }
  if (!l.empty() && l.back() == Generator::A) {
    const MonodromyWord head(std::vector<Generator>(l.begin(), l.end() - 1));
    if (is_ab_power(head) && !head.empty()) return word_display(head) + "a";
  }
  return w.str();
}

std::string weights_display(const PlumbingFragment& f) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < f.vertices.size(); ++i) {
    out << (i ? "," : "") << f.vertices[i].weight;
  }
  out << "}";
  return out.str();
}

std::vector<FiberKind> sorted_kinds(std::vector<FiberKind> kinds) {
  std::sort(kinds.begin(), kinds.end());
  return kinds;
}

// Smoothed contribution of one fiber hanging off the section: attach it to a
// weight-0 section and smooth.
std::int64_t attached_contribution(const PlumbingFragment& f) {
  PlumbingGraph g;
  g.add_vertex({"section", 0, 0, false});
  for (const Sphere& s : f.vertices) g.add_vertex(s);
  for (const Edge& e : f.edges) g.add_edge(1 + e.u, 1 + e.v);
  g.add_edge(0, 1 + f.attachment);
  return smooth(g);
}

struct Option {
  FiberUse use;
  int blowups;
  std::int64_t contribution;
};

// Options for one kind. The last option never costs blow-ups and absorbs the
// remainder of the count. A fragment fiber is always used: attaching it
// strictly lowers the square at no blow-up cost, so skipping it is dominated.
std::vector<Option> options_for(FiberKind kind) {
  const FiberType& t = fiber(kind);
  if (t.fragment) return {{FiberUse::Use, 0, attached_contribution(*t.fragment)}};
  std::vector<Option> out;
  if (t.resolution) {
    out.push_back({FiberUse::Resolve, t.resolution->blowups,
                   attached_contribution(t.resolution->fragment)});
  }
  if (kind == FiberKind::II_cusp) {
    const Resolution r = cusp_replacement();
    out.push_back({FiberUse::Replace, r.blowups, attached_contribution(r.fragment)});
  }
  out.push_back({FiberUse::Skip, 0, 0});
  return out;
}

// Optimistic completion: every remaining letter at -3.6 and every remaining
// blow-up at -5, scaled by 5 to stay integral.
constexpr std::int64_t kLetterBound5 = -18;
constexpr std::int64_t kBlowupBound5 = -25;

void check_bound_table(const std::vector<FiberKind>& kinds) {
  for (FiberKind kind : kinds) {
    for (const Option& o : options_for(kind)) {
      const std::int64_t floor5 =
          kLetterBound5 * fiber(kind).euler + kBlowupBound5 * o.blowups;
      if (5 * o.contribution < floor5) {
        throw std::logic_error("search bound is not a lower bound for " + fiber(kind).name);
      }
    }
  }
}

// Distinct orderings of `fibers` (given sorted), depth-first, until the
// monodromy product is trivial. Returns the permutation of input positions.
std::optional<std::vector<int>> find_ordering(const std::vector<FiberKind>& fibers,
                                              int attempts) {
  bool commuting = true;
  for (FiberKind kind : fibers) commuting = commuting && is_ab_power(fiber(kind).word);
  std::vector<int> identity_perm(fibers.size());
  for (std::size_t i = 0; i < fibers.size(); ++i) identity_perm[i] = static_cast<int>(i);
  if (commuting) {
    MonodromyWord total;
    for (FiberKind kind : fibers) total = total + fiber(kind).word;
    if (is_identity(word_to_matrix(total))) return identity_perm;
    return std::nullopt;
  }

  // Group equal kinds so each distinct ordering is visited once.
  std::vector<FiberKind> distinct;
  std::vector<std::vector<int>> positions;
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    if (distinct.empty() || distinct.back() != fibers[i]) {
      distinct.push_back(fibers[i]);
      positions.emplace_back();
    }
    positions.back().push_back(static_cast<int>(i));
  }
  std::vector<std::size_t> used(distinct.size(), 0);
  std::vector<int> perm;
  int budget = attempts;

  std::function<bool(const GroupElement&)> go = [&](const GroupElement& prefix) -> bool {
    if (perm.size() == fibers.size()) return is_identity(prefix);
    if (--budget < 0) return false;
    for (std::size_t d = 0; d < distinct.size(); ++d) {
      if (used[d] == positions[d].size()) continue;
      GroupElement next = prefix;
      try {
        next = compose(prefix, word_to_matrix(fiber(distinct[d]).word));
      } catch (const std::overflow_error&) {
        continue;
      }
      perm.push_back(positions[d][used[d]++]);
      if (go(next)) return true;
      perm.pop_back();
      --used[d];
    }
    return false;
  };
  if (go(GroupElement::identity())) return perm;
  return std::nullopt;
}

struct Candidate {
  std::int64_t value = 0;
  std::vector<int> spec_key;
  std::vector<int> plan_key;
  FibrationSpec spec;
  BlowupPlan plan;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.spec_key != b.spec_key) return a.spec_key < b.spec_key;
  return a.plan_key < b.plan_key;
}

int use_code(FiberUse u) { return static_cast<int>(u); }

class BranchAndBound {
 public:
  BranchAndBound(int n, int k, const SearchOptions& options)
      : n_(n), k_(k), options_(options), kinds_(sorted_kinds(options.allowed)) {
    kinds_.erase(std::unique(kinds_.begin(), kinds_.end()), kinds_.end());
    for (FiberKind kind : kinds_) opts_.push_back(options_for(kind));
    check_bound_table(kinds_);
  }

  std::optional<Candidate> run() {
    const int letters = 12 * n_;
    const int e0 = fiber(kinds_[0]).euler;
    std::vector<int> first_counts;
    for (int c = letters / e0; c >= 0; --c) first_counts.push_back(c);

    const int workers = std::max(1, std::min<int>(options_.threads,
                                                  static_cast<int>(first_counts.size())));
    std::vector<std::optional<Candidate>> found(static_cast<std::size_t>(workers));
    std::atomic<std::size_t> next{0};
    auto work = [&](int w) {
      Walker walker(*this);
      for (std::size_t t = next++; t < first_counts.size(); t = next++) {
        walker.run_top(first_counts[t]);
      }
      found[static_cast<std::size_t>(w)] = std::move(walker.best);
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& th : pool) th.join();
    }

    std::optional<Candidate> best;
    for (auto& f : found) {
      if (f && (!best || better(*f, *best))) best = std::move(f);
    }
    return best;
  }

 private:
  // Per-thread DFS state; pruning reads the shared best value only, and prunes
  // strictly, so the winner does not depend on scheduling.
  struct Walker {
    explicit Walker(BranchAndBound& owner) : o(owner), counts(owner.kinds_.size()) {}

    void run_top(int first_count) {
      fixed_first = first_count;
      dfs(0, 12 * o.n_, o.k_, -static_cast<std::int64_t>(o.n_));
    }

    bool pruned(std::int64_t value, int letters, int budget) const {
      const std::int64_t global = o.best_value_.load(std::memory_order_relaxed);
      if (global == std::numeric_limits<std::int64_t>::max()) return false;
      return 5 * value + kLetterBound5 * letters + kBlowupBound5 * budget > 5 * global;
    }

    void dfs(std::size_t ki, int letters, int budget, std::int64_t value) {
      if (ki == o.kinds_.size()) {
        if (letters == 0) leaf(budget, value);
        return;
      }
      const int e = fiber(o.kinds_[ki]).euler;
      const bool last = ki + 1 == o.kinds_.size();
      int hi = letters / e;
      int lo = 0;
      if (last) {
        if (letters % e != 0) return;
        lo = hi;
      }
      if (ki == 0) {
        if (fixed_first > hi || fixed_first < lo) return;
        hi = lo = fixed_first;
      }
      for (int c = hi; c >= lo; --c) {
        counts[ki].assign(o.opts_[ki].size(), 0);
        split(ki, 0, c, letters - c * e, budget, value);
      }
    }

    // Distributes `left` fibers of kind ki over its options, from option j on.
    void split(std::size_t ki, std::size_t j, int left, int letters, int budget,
               std::int64_t value) {
      const auto& options = o.opts_[ki];
      if (j + 1 == options.size()) {
        counts[ki][j] = left;
        const std::int64_t v = value + left * options[j].contribution;
        if (!pruned(v, letters, budget)) dfs(ki + 1, letters, budget, v);
        counts[ki][j] = 0;
        return;
      }
      const Option& opt = options[j];
      int hi = left;
      if (opt.blowups > 0) hi = std::min(hi, budget / opt.blowups);
      for (int x = hi; x >= 0; --x) {
        counts[ki][j] = x;
        split(ki, j + 1, left - x, letters, budget - x * opt.blowups,
              value + x * opt.contribution);
      }
      counts[ki][j] = 0;
    }

    void leaf(int leftover, std::int64_t value) {
      Candidate cand;
      bool has_edge = false;
      for (std::size_t ki = 0; ki < o.kinds_.size(); ++ki) {
        for (std::size_t j = 0; j < o.opts_[ki].size(); ++j) {
          const int c = counts[ki][j];
          const FiberUse use = o.opts_[ki][j].use;
          if (c > 0 && use != FiberUse::Skip) has_edge = true;
          for (int i = 0; i < c; ++i) {
            cand.spec.fibers.push_back(o.kinds_[ki]);
            cand.plan.choices.push_back(use);
          }
        }
      }
      if (leftover > 0) {
        if (has_edge) {
          cand.plan.edge_blowups = leftover;
          value -= 5 * static_cast<std::int64_t>(leftover);
        } else {
          cand.plan.point_blowups = 1;
          cand.plan.edge_blowups = leftover - 1;
          value -= 4 + 5 * static_cast<std::int64_t>(leftover - 1);
        }
      }
      cand.value = value;
      if (best && cand.value > best->value) return;
      const std::int64_t global = o.best_value_.load(std::memory_order_relaxed);
      if (cand.value > global) return;

      cand.spec.n = o.n_;
      for (FiberKind kind : cand.spec.fibers) cand.spec_key.push_back(static_cast<int>(kind));
      for (FiberUse u : cand.plan.choices) cand.plan_key.push_back(use_code(u));
      cand.plan_key.push_back(cand.plan.edge_blowups);
      cand.plan_key.push_back(cand.plan.point_blowups);
      if (best && !better(cand, *best)) return;

      // Canonical order is already valid when every word is a power of ab.
      const auto perm = find_ordering(cand.spec.fibers, o.options_.ordering_attempts);
      if (!perm) return;
      FibrationSpec ordered{o.n_, {}, Provenance::AssumedRealizable};
      BlowupPlan plan = cand.plan;
      plan.choices.clear();
      for (int idx : *perm) {
        ordered.fibers.push_back(cand.spec.fibers[static_cast<std::size_t>(idx)]);
        plan.choices.push_back(cand.plan.choices[static_cast<std::size_t>(idx)]);
      }
      if (!validate(ordered)) return;
      cand.spec = std::move(ordered);
      cand.plan = std::move(plan);

      best = std::move(cand);
      std::int64_t cur = o.best_value_.load();
      while (best->value < cur && !o.best_value_.compare_exchange_weak(cur, best->value)) {
      }
    }

    BranchAndBound& o;
    std::vector<std::vector<int>> counts;
    int fixed_first = 0;
    std::optional<Candidate> best;
  };

  int n_;
  int k_;
  const SearchOptions& options_;
  std::vector<FiberKind> kinds_;
  std::vector<std::vector<Option>> opts_;
  std::atomic<std::int64_t> best_value_{std::numeric_limits<std::int64_t>::max()};
};

bool same_multiset(std::vector<FiberKind> a, std::vector<FiberKind> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

void check_allowed(const SearchOptions& options) {
  if (options.allowed.empty()) throw std::invalid_argument("allowed fiber set is empty");
  const auto defaults = SearchOptions::default_search_fibers();
  for (FiberKind kind : options.allowed) {
    const bool standard = std::find(defaults.begin(), defaults.end(), kind) != defaults.end();
    if (!standard && !options.extended) {
      throw std::invalid_argument(std::string(fiber_name(kind)) +
                                  " is only searchable with extended fibers enabled");
    }
  }
}

Realization realize(const FibrationSpec& spec, const BlowupPlan& plan) {
  if (plan.edge_blowups < 0 || plan.point_blowups < 0) {
    throw std::invalid_argument("realize: negative blow-up count in plan");
  }
  BuiltTree built = build_tree(spec, plan.choices);
  Realization out;
  out.blowups = built.blowups_used;

  const AmbientSurface surface =
      betti(spec.n, built.blowups_used + plan.edge_blowups + plan.point_blowups);
  out.narrative.push_back("E(" + std::to_string(spec.n) + ") # " + std::to_string(surface.k) +
                          "(-CP^2), b2 = " + std::to_string(surface.b2));
  out.narrative.push_back("section: (" + std::to_string(-spec.n) +
                          ")-sphere meeting every fiber once; running total " +
                          std::to_string(-spec.n));

  std::vector<FiberUse> prefix(plan.choices.size(), FiberUse::Skip);
  for (std::size_t i = 0; i < spec.fibers.size(); ++i) {
    const FiberType& t = fiber(spec.fibers[i]);
    const FiberUse use = plan.choices[i];
    std::string line = "fiber " + std::to_string(i + 1) + ": " + t.name + ", monodromy " +
                       word_display(t.word) + ", ";
    switch (use) {
      case FiberUse::Use:
        line += std::to_string(t.fragment->vertices.size()) + " spheres " +
                weights_display(*t.fragment) + " attached";
        break;
      case FiberUse::Resolve:
        line += "resolved by " + std::to_string(t.resolution->blowups) + " blow-up(s) into " +
                weights_display(t.resolution->fragment);
        break;
      case FiberUse::Replace:
        line += "replaced by the cuspidal cubic (-9)-sphere (1 blow-up)";
        break;
      case FiberUse::Skip:
        line += "not used in the tree";
        break;
    }
    prefix[i] = use;
    if (use != FiberUse::Skip) {
      line += "; running total " + std::to_string(smooth(build_tree(spec, prefix).graph));
    }
    out.narrative.push_back(std::move(line));
  }

  PlumbingGraph g = std::move(built.graph);
  for (int i = 0; i < plan.point_blowups; ++i) {
    g = blow_up_point_on_vertex(g, 0);
    out.narrative.push_back("blow up a point on the section (tube in a (-4)-sphere); running total " +
                            std::to_string(smooth(g)));
  }
  for (int i = 0; i < plan.edge_blowups; ++i) {
    if (g.edge_count() == 0) {
      throw std::invalid_argument("realize: edge blow-up requested on a tree without edges");
    }
    const Edge e = g.edges().front();
    g = blow_up_edge(g, e);
    out.narrative.push_back("blow up the intersection " + g.vertex(e.u).label + " / " +
                            g.vertex(e.v).label + "; running total " + std::to_string(smooth(g)));
  }
  out.blowups += plan.edge_blowups + plan.point_blowups;

  out.square = smooth(g);
  const std::int64_t check = oracle_square(g, two_coloring(g));
  if (check != out.square) {
    throw std::logic_error("realize: smoothing " + std::to_string(out.square) +
                           " disagrees with quadratic form " + std::to_string(check));
  }
  out.graph = std::move(g);
  return out;
}

Provenance classify(const FibrationSpec& spec, const BlowupPlan& plan) {
  auto uses_of = [&](FiberKind kind) {
    std::vector<FiberUse> out;
    for (std::size_t i = 0; i < spec.fibers.size() && i < plan.choices.size(); ++i) {
      if (spec.fibers[i] == kind) out.push_back(plan.choices[i]);
    }
    return out;
  };
  auto all_are = [](const std::vector<FiberUse>& v, FiberUse u) {
    return std::all_of(v.begin(), v.end(), [u](FiberUse x) { return x == u; });
  };
  if (spec.n < 2 || plan.choices.size() != spec.fibers.size()) {
    return Provenance::AssumedRealizable;
  }
  using enum FiberKind;
  if (same_multiset(spec.fibers, paper_decomposition(spec.n).fibers) &&
      all_are(plan.choices, FiberUse::Use)) {
    return Provenance::PaperVerified;
  }
  if (spec.n == 2 && same_multiset(spec.fibers, {E8t, E8t, IV}) &&
      all_are(uses_of(E8t), FiberUse::Use) && all_are(uses_of(IV), FiberUse::Resolve)) {
    return Provenance::PaperVerified;
  }
  if (spec.n == 6 && same_multiset(spec.fibers, {E8t, E8t, E8t, E8t, E8t, E8t, E8t, II_cusp}) &&
      all_are(uses_of(E8t), FiberUse::Use)) {
    return Provenance::PaperVerified;
  }
  return Provenance::AssumedRealizable;
}

void for_each_spec(int n, const SearchOptions& options,
                   const std::function<void(const FibrationSpec&)>& visit) {
  if (n < 2) throw std::invalid_argument("for_each_spec: n must be >= 2");
  check_allowed(options);
  std::vector<FiberKind> kinds = sorted_kinds(options.allowed);
  kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());

  std::vector<FiberKind> current;
  std::function<void(std::size_t, int)> go = [&](std::size_t ki, int letters) {
    if (ki == kinds.size()) {
      if (letters != 0) return;
      const auto perm = find_ordering(current, options.ordering_attempts);
      if (!perm) return;
      FibrationSpec spec{n, {}, Provenance::AssumedRealizable};
      for (int idx : *perm) spec.fibers.push_back(current[static_cast<std::size_t>(idx)]);
      if (!validate(spec)) return;
      if (same_multiset(spec.fibers, paper_decomposition(n).fibers)) {
        spec.provenance = Provenance::PaperVerified;
      }
      visit(spec);
      return;
    }
    const int e = fiber(kinds[ki]).euler;
    for (int c = letters / e; c >= 0; --c) {
      current.insert(current.end(), static_cast<std::size_t>(c), kinds[ki]);
      go(ki + 1, letters - c * e);
      current.resize(current.size() - static_cast<std::size_t>(c));
    }
  };
  go(0, 12 * n);
}

std::vector<FibrationSpec> enumerate_specs(int n, const SearchOptions& options) {
  std::vector<FibrationSpec> out;
  for_each_spec(n, options, [&](const FibrationSpec& s) { out.push_back(s); });
  return out;
}

std::optional<SearchResult> best_sphere(int n, int k, const SearchOptions& options) {
  if (n < 2) throw std::invalid_argument("best_sphere: n must be >= 2");
  if (k < 0) throw std::invalid_argument("best_sphere: k must be >= 0");
  if (n > options.max_n) {
    throw std::invalid_argument("best_sphere: n = " + std::to_string(n) + " exceeds max_n " +
                                std::to_string(options.max_n));
  }
  if (k > options.max_k) {
    throw std::invalid_argument("best_sphere: k = " + std::to_string(k) + " exceeds max_k " +
                                std::to_string(options.max_k));
  }
  check_allowed(options);

  BranchAndBound bnb(n, k, options);
  std::optional<Candidate> best = bnb.run();
  if (!best) return std::nullopt;

  SearchResult result;
  result.n = n;
  result.k = k;
  result.spec = best->spec;
  result.plan = best->plan;
  result.realization = realize(result.spec, result.plan);
  if (result.realization.square != best->value || result.realization.blowups != k) {
    throw std::logic_error("best_sphere: replay of the winning plan gives " +
                           std::to_string(result.realization.square) + " with " +
                           std::to_string(result.realization.blowups) + " blow-ups, search said " +
                           std::to_string(best->value) + " with " + std::to_string(k));
  }
  result.best_square = result.realization.square;
  result.provenance = classify(result.spec, result.plan);
  result.spec.provenance = result.provenance;
  result.b2 = betti(n, k).b2;
  result.ratio = Rational(result.best_square, result.b2);
  return result;
}

ConjectureCheck conjecture_check(const SearchResult& result) {
  const std::int64_t b2 = betti(result.n, result.k).b2;
  return {Rational(result.best_square, b2), result.best_square >= -5 * b2};
}

}  // namespace negsphere
