#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shr/fuzzy.hpp"
#include "shr/hypercore.hpp"

namespace shr {

// Structure files:
//
//   semihyperring T2
//   elements: e s x          # the first element is the zero
//   add e s = {s}            # once per unordered pair
//   mul s x = s              # once per ordered pair
//
// Errors are ParseError carrying the 1-based line (0 when the problem is a
// missing cell, which has no line of its own).
SemihyperringTable parse_structure(std::string_view text);
std::string serialize_structure(const SemihyperringTable& r);

SemihyperringTable load_structure(const std::string& path);
void save_structure(const std::string& path, const SemihyperringTable& r);

// Fuzzy files:
//
//   chain: 0 1/2 1
//   fuzzy mu1: e=1, s=1/2, x=0
struct FuzzyFile {
  ChainPtr chain;
  std::vector<std::pair<std::string, FuzzySubset>> subsets;

  const FuzzySubset* find(std::string_view name) const;
};

FuzzyFile parse_fuzzy(std::string_view text, const SemihyperringTable& r);
std::string serialize_fuzzy(const FuzzyFile& f, const SemihyperringTable& r);
FuzzyFile load_fuzzy(const std::string& path, const SemihyperringTable& r);

/// "e=1, s=1/2, x=0": total over the carrier, grades from the chain.
FuzzySubset parse_fuzzy_literal(std::string_view text, const SemihyperringTable& r,
                                const ChainPtr& chain);
std::string format_fuzzy(const FuzzySubset& f, const SemihyperringTable& r);

/// "{e,s}" or "e,s"; "{}" is the empty subset.
CrispSubset parse_subset(std::string_view text, const SemihyperringTable& r);

}  // namespace shr
