#include "negsphere/report.hpp"

#include <functional>
#include <sstream>

namespace negsphere {

namespace {

MonodromyWord w(std::string_view s) { return MonodromyWord::parse(s); }

std::string weights_of(const PlumbingFragment& f) {
  std::ostringstream out;
  for (std::size_t i = 0; i < f.vertices.size(); ++i) out << (i ? "," : "") << f.vertices[i].weight;
  return out.str();
}

void add(std::vector<CheckLine>& out, std::string name, const std::function<std::string(bool&)>& body) {
  CheckLine line{std::move(name), false, ""};
  try {
    line.detail = body(line.pass);
  } catch (const std::exception& e) {
    line.pass = false;
    line.detail = std::string("exception: ") + e.what();
  }
  out.push_back(std::move(line));
}

// The 7 x E8t + cusp fibration of E(6).
FibrationSpec e6_cusp_spec() {
  FibrationSpec s{6, std::vector<FiberKind>(7, FiberKind::E8t), Provenance::PaperVerified};
  s.fibers.push_back(FiberKind::II_cusp);
  return s;
}

BlowupPlan plan_for(const FibrationSpec& spec, FiberUse cusp_use, int edges, int points) {
  BlowupPlan p{default_choices(spec), edges, points};
  for (std::size_t i = 0; i < spec.fibers.size(); ++i) {
    if (spec.fibers[i] == FiberKind::II_cusp || spec.fibers[i] == FiberKind::IV) {
      p.choices[i] = cusp_use;
    }
  }
  return p;
}

std::string expect_square(bool& pass, const Realization& r, std::int64_t expected,
                          int blowups) {
  pass = r.square == expected && r.blowups == blowups;
  return "square " + std::to_string(r.square) + " using " + std::to_string(r.blowups) +
         " blow-up(s), " + std::to_string(r.graph.vertex_count()) + " spheres";
}

}  // namespace

std::string rational_str(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::vector<CheckLine> verify_paper_battery() {
  std::vector<CheckLine> out;
  using enum FiberKind;

  add(out, "relation aba = bab", [](bool& pass) {
    pass = word_to_matrix(w("aba")) == word_to_matrix(w("bab"));
    return "both [[0,1],[-1,0]]";
  });
  add(out, "relation (ab)^6 = 1", [](bool& pass) {
    pass = is_identity(word_to_matrix(w("ab").power(6)));
    return "exact";
  });
  add(out, "(ab)^3 = (aba)^2 = -1", [](bool& pass) {
    const GroupElement minus{-1, 0, 0, -1};
    pass = word_to_matrix(w("ab").power(3)) == minus && word_to_matrix(w("aba").power(2)) == minus;
    return "exact";
  });

  for (const FiberType& t : catalog()) {
    add(out, "catalog " + t.name, [&t](bool& pass) {
      pass = t.euler == static_cast<int>(t.word.length());
      std::string d = "euler " + std::to_string(t.euler) + ", word " + t.word.str();
      if (t.fragment) {
        pass = pass && t.fragment->is_tree() && t.fragment->euler_characteristic() == t.euler;
        d += ", fragment 2V-E = " + std::to_string(t.fragment->euler_characteristic());
      }
      if (t.resolution) {
        const int chi = t.resolution->fragment.euler_characteristic();
        pass = pass && chi == t.euler + t.resolution->blowups;
        d += ", resolved {" + weights_of(t.resolution->fragment) + "} after " +
             std::to_string(t.resolution->blowups) + " blow-up(s)";
      }
      return d;
    });
  }

  add(out, "E(2): -86", [](bool& pass) {
    pass = s_construction(2) == -86;
    return "s(2) = " + std::to_string(s_construction(2));
  });
  add(out, "E(6): -262", [](bool& pass) {
    pass = s_construction(6) == -262;
    return "s(6) = " + std::to_string(s_construction(6));
  });
  add(out, "s(n) table n = 2..20 (tree = quadratic form = closed form)", [](bool& pass) {
    pass = true;
    for (int n = 2; n <= 20; ++n) {
      const FibrationSpec spec = paper_decomposition(n);
      const PlumbingGraph g = build_tree(spec, default_choices(spec)).graph;
      const std::int64_t s = s_construction(n);
      pass = pass && validate(spec).ok && smooth(g) == s &&
             oracle_square(g, two_coloring(g)) == s && s_closed_form(n) == s;
      if (n % 5 != 0) pass = pass && s_formula_printed(n) == Rational(s);
    }
    return "19 values";
  });
  for (int n : {5, 10, 15, 20}) {
    add(out, "n=" + std::to_string(n) + ": construction vs printed formula", [n](bool& pass) {
      const std::int64_t s = s_construction(n);
      const Rational printed = s_formula_printed(n);
      pass = printed - Rational(s) == Rational(4);
      return "construction " + std::to_string(s) + ", printed formula " + rational_str(printed);
    });
  }

  add(out, "blow-up identity x+y-2-5k (x,y in -6..-1, k <= 4)", [](bool& pass) {
    pass = true;
    for (int x = -6; x <= -1; ++x) {
      for (int y = -6; y <= -1; ++y) {
        PlumbingGraph g;
        g.add_vertex({"x", x, 0, false});
        g.add_vertex({"y", y, 0, false});
        g.add_edge(0, 1);
        for (int k = 0; k <= 4; ++k) {
          pass = pass && smooth(g) == x + y - 2 - 5 * k;
          g = blow_up_edge(g, g.edges().front());
        }
      }
    }
    return "180 cases";
  });

  const FibrationSpec k3_iv{2, {E8t, E8t, IV}, Provenance::PaperVerified};
  add(out, "E(2)#1: -92 (E8t+E8t+IV, IV resolved)", [&](bool& pass) {
    const Realization r = realize(k3_iv, plan_for(k3_iv, FiberUse::Resolve, 0, 0));
    const std::string d = expect_square(pass, r, -92, 1);
    pass = pass && r.graph.vertex_count() == 23;
    return d;
  });
  add(out, "E(2)#1: -91 (edge blow-up of the -86 tree)", [](bool& pass) {
    const FibrationSpec s = paper_decomposition(2);
    return expect_square(pass, realize(s, plan_for(s, FiberUse::Skip, 1, 0)), -91, 1);
  });

  const FibrationSpec e6 = e6_cusp_spec();
  add(out, "E(6): -258 (7 E8t, cusp unused)", [&](bool& pass) {
    const Realization r = realize(e6, plan_for(e6, FiberUse::Skip, 0, 0));
    const std::string d = expect_square(pass, r, -258, 0);
    pass = pass && r.graph.vertex_count() == 64;
    return d;
  });
  add(out, "E(6)#1: -266 (tube with a (-4)-sphere)", [](bool& pass) {
    const FibrationSpec s = paper_decomposition(6);
    return expect_square(pass, realize(s, plan_for(s, FiberUse::Skip, 0, 1)), -266, 1);
  });
  add(out, "E(6)#1: -267 (edge blow-up)", [](bool& pass) {
    const FibrationSpec s = paper_decomposition(6);
    return expect_square(pass, realize(s, plan_for(s, FiberUse::Skip, 1, 0)), -267, 1);
  });
  add(out, "E(6)#1: -269 (cusp replaced by cuspidal cubic)", [&](bool& pass) {
    return expect_square(pass, realize(e6, plan_for(e6, FiberUse::Replace, 0, 0)), -269, 1);
  });
  add(out, "E(6)#3: -277 (three edge blow-ups)", [](bool& pass) {
    const FibrationSpec s = paper_decomposition(6);
    return expect_square(pass, realize(s, plan_for(s, FiberUse::Skip, 3, 0)), -277, 3);
  });
  add(out, "E(6)#3: -278 (cusp blown up three times)", [&](bool& pass) {
    return expect_square(pass, realize(e6, plan_for(e6, FiberUse::Resolve, 0, 0)), -278, 3);
  });
  add(out, "E(6)#3: -279 (cusp replaced, two edge blow-ups)", [&](bool& pass) {
    return expect_square(pass, realize(e6, plan_for(e6, FiberUse::Replace, 2, 0)), -279, 3);
  });

  struct Target {
    int n, k;
    std::int64_t bound;
    bool exact;
  };
  for (const Target t : {Target{2, 0, -86, true}, Target{2, 1, -92, false},
                         Target{6, 1, -269, false}, Target{6, 3, -279, false}}) {
    const std::string rel = t.exact ? " = " : " <= ";
    add(out,
        "search E(" + std::to_string(t.n) + ")#" + std::to_string(t.k) + rel +
            std::to_string(t.bound),
        [t](bool& pass) {
          const auto r = best_sphere(t.n, t.k);
          if (!r) {
            pass = false;
            return std::string("no solution");
          }
          const ConjectureCheck c = conjecture_check(*r);
          pass = (t.exact ? r->best_square == t.bound : r->best_square <= t.bound) &&
                 c.satisfies_c5;
          return "found " + std::to_string(r->best_square) + ", ratio to b2 " +
                 rational_str(c.ratio) + (c.satisfies_c5 ? ", C = -5 holds" : ", C = -5 FAILS");
        });
  }
  return out;
}

void print_checks(std::ostream& out, const std::vector<CheckLine>& lines) {
  for (const CheckLine& l : lines) {
    out << (l.pass ? "PASS  " : "FAIL  ") << l.name;
    if (!l.detail.empty()) out << "  [" << l.detail << "]";
    out << "\n";
  }
}

void print_result(std::ostream& out, const SearchResult& r) {
  const ConjectureCheck c = conjecture_check(r);
  out << "E(" << r.n << ") # " << r.k << "(-CP^2): best square " << r.best_square << "\n";
  for (const std::string& line : r.realization.narrative) out << "  " << line << "\n";
  out << "  b2 = " << r.b2 << ", square / b2 = " << rational_str(c.ratio) << " ("
      << boost::rational_cast<double>(c.ratio) << "), C = -5 "
      << (c.satisfies_c5 ? "satisfied" : "VIOLATED") << "\n";
  out << "  provenance: " << provenance_name(r.provenance) << "\n";
}

}  // namespace negsphere
