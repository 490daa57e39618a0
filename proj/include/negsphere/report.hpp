#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "negsphere/search.hpp"

namespace negsphere {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Fixed battery of published values: group relations, the s(n) table,
// the blow-up identities and the E(2)/E(6) example constructions.
std::vector<CheckLine> verify_paper_battery();

void print_checks(std::ostream& out, const std::vector<CheckLine>& lines);

// Human-readable summary of a search result, one step per line.
void print_result(std::ostream& out, const SearchResult& r);

std::string rational_str(const Rational& q);

}  // namespace negsphere
