#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "shr/grade.hpp"
#include "shr/hypercore.hpp"
#include "shr/hypermodule.hpp"
#include "shr/ideals.hpp"

namespace shr {

using ChainPtr = std::shared_ptr<const GradeChain>;

inline ChainPtr make_chain(GradeChain c) { return std::make_shared<const GradeChain>(std::move(c)); }

/// A map from a finite carrier into a grade chain, stored as chain positions.
class FuzzySubset {
 public:
  FuzzySubset(ChainPtr chain, std::vector<std::uint8_t> levels);

  static FuzzySubset constant(ChainPtr chain, std::size_t order, std::size_t level);
  /// A(x) = 1 everywhere.
  static FuzzySubset top(ChainPtr chain, std::size_t order);
  /// phi(x) = 0 everywhere.
  static FuzzySubset bottom(ChainPtr chain, std::size_t order);

  std::size_t size() const noexcept { return levels_.size(); }
  std::size_t level(std::size_t x) const { return levels_.at(x); }
  const Grade& grade(std::size_t x) const { return (*chain_)[levels_.at(x)]; }
  const std::vector<std::uint8_t>& levels() const noexcept { return levels_; }
  const GradeChain& chain() const noexcept { return *chain_; }
  const ChainPtr& chain_ptr() const noexcept { return chain_; }

  bool is_top() const;
  bool is_bottom() const;

  friend bool operator==(const FuzzySubset& a, const FuzzySubset& b) {
    return a.levels_ == b.levels_ && (a.chain_ == b.chain_ || *a.chain_ == *b.chain_);
  }
  /// Lexicographic by level vector, element 0 most significant.
  friend std::strong_ordering operator<=>(const FuzzySubset& a, const FuzzySubset& b) {
    return a.levels_ <=> b.levels_;
  }

 private:
  ChainPtr chain_;
  std::vector<std::uint8_t> levels_;
};

/// Which fuzzy subsets count as fuzzy hyperideals: the bare two conditions, or
/// additionally mu(0) = 1.
enum class ZeroRegime { any, unit_at_zero };

std::string_view to_string(ZeroRegime z);

FuzzySubset meet(const FuzzySubset& a, const FuzzySubset& b);
FuzzySubset join(const FuzzySubset& a, const FuzzySubset& b);
bool leq(const FuzzySubset& a, const FuzzySubset& b);

/// Pointwise min; the empty family gives A.
FuzzySubset family_meet(const ChainPtr& chain, std::size_t order,
                        std::span<const FuzzySubset> family);
/// Left fold of fuzzy_sum; the empty family gives phi.
FuzzySubset family_sum(const SemihyperringTable& r, const ChainPtr& chain,
                       std::span<const FuzzySubset> family);

FuzzySubset characteristic(const CrispSubset& s, const ChainPtr& chain);

/// {x : grade(x) >= t}. t must be a positive chain member.
CrispSubset level_set(const FuzzySubset& mu, const Grade& t);
CrispSubset level_set_at(const FuzzySubset& mu, std::size_t level);

/// inf over x (+) y dominates min(mu x, mu y), and mu(xy), mu(yx) >= mu(x).
bool is_fuzzy_hyperideal(const SemihyperringTable& r, const FuzzySubset& mu);
/// One-sided forms keep only the matching multiplication condition:
/// right keeps mu(xy) >= mu(x), left keeps mu(yx) >= mu(x).
bool is_fuzzy_ideal(const SemihyperringTable& r, const FuzzySubset& mu, Side side);

bool is_fuzzy_subsemihypermodule(const SemihypermoduleTable& m, const FuzzySubset& mu);

/// (l (+) m)(x) = max over x in y (+) z of min(l(y), m(z)).
FuzzySubset fuzzy_sum(const SemihyperringTable& r, const FuzzySubset& l, const FuzzySubset& m);

/// Sup over all finite hypersum decompositions x in sum y_i z_i of
/// min_i min(l(y_i), m(z_i)), by threshold closure over the chain.
FuzzySubset fuzzy_product(const SemihyperringTable& r, const FuzzySubset& l,
                          const FuzzySubset& m);

struct OracleResult {
  FuzzySubset value;
  std::size_t stable_length = 0;  // last decomposition length that raised a grade
  std::size_t explored_length = 0;
  bool saturated = false;  // no new (sum-set, grade) states beyond explored_length
};

/// Breadth-first enumeration of hypersum decompositions of length 1..max_len.
/// Independent of the threshold-closure path; used to cross-check it.
OracleResult fuzzy_product_oracle(const SemihyperringTable& r, const FuzzySubset& l,
                                  const FuzzySubset& m, std::size_t max_len);

/// Module form: y_i range over M, z_i over R, and y_i z_i is the action cell.
FuzzySubset fuzzy_module_product(const SemihypermoduleTable& mod, const FuzzySubset& l,
                                 const FuzzySubset& m);

/// (l o m)(x) = max over x = yz of min(l(y), m(z)); no hypersums.
FuzzySubset fuzzy_circ(const SemihyperringTable& r, const FuzzySubset& l, const FuzzySubset& m);

struct FuzzyEnumOptions {
  Side side = Side::two_sided;
  ZeroRegime regime = ZeroRegime::any;
  std::size_t budget = std::size_t{1} << 22;  // candidate maps scanned
};

/// All maps R -> chain passing the fuzzy ideal test, lexicographic order.
std::vector<FuzzySubset> enumerate_fuzzy_hyperideals(const SemihyperringTable& r,
                                                     const ChainPtr& chain,
                                                     const FuzzyEnumOptions& opts = {});

/// Every map R -> chain, lexicographic order. Throws CapacityError past budget.
std::vector<FuzzySubset> enumerate_fuzzy_subsets(std::size_t order, const ChainPtr& chain,
                                                 std::size_t budget = std::size_t{1} << 22);

}  // namespace shr
