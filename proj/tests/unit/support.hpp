#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "shr/format.hpp"
#include "shr/fuzzy.hpp"
#include "shr/ideals.hpp"
#include "shr/structures.hpp"

namespace testing {

inline const shr::ChainPtr& chain3() {
  static const auto c = shr::make_chain(shr::GradeChain::parse("0 1/2 1"));
  return c;
}

inline const shr::ChainPtr& chain2() {
  static const auto c = shr::make_chain(shr::GradeChain::boolean());
  return c;
}

/// Every valid structure of order 1..3, in census order.
inline const std::vector<shr::SemihyperringTable>& small_census() {
  static const auto all = [] {
    std::vector<shr::SemihyperringTable> out;
    for (std::size_t n = 1; n <= 3; ++n) {
      shr::CensusConfig cfg;
      cfg.order = n;
      for (auto& r : shr::census(cfg)) out.push_back(std::move(r));
    }
    return out;
  }();
  return all;
}

inline shr::FuzzySubset fz(const shr::SemihyperringTable& r, std::string_view literal,
                           const shr::ChainPtr& chain = chain3()) {
  return shr::parse_fuzzy_literal(literal, r, chain);
}

inline shr::CrispSubset set(const shr::SemihyperringTable& r, std::string_view literal) {
  return shr::parse_subset(literal, r);
}

inline shr::CrispSubset random_subset(std::size_t order, std::mt19937_64& rng) {
  return {order, std::uniform_int_distribution<shr::Mask>(0, shr::full_mask(order))(rng)};
}

inline std::string fixture(const std::string& name) { return std::string(SHR_FIXTURE_DIR) + "/" + name; }

}  // namespace testing
