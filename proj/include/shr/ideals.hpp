#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "shr/hypercore.hpp"

namespace shr {

enum class Side { left, right, two_sided };

std::string_view to_string(Side s);
std::optional<Side> parse_side(std::string_view s);

/// Closed under (+) as set inclusion and under multiplication.
bool is_subsemihyperring(const SemihyperringTable& r, const CrispSubset& s);

bool is_right_hyperideal(const SemihyperringTable& r, const CrispSubset& i);
bool is_left_hyperideal(const SemihyperringTable& r, const CrispSubset& i);
bool is_hyperideal(const SemihyperringTable& r, const CrispSubset& i);
bool is_ideal(const SemihyperringTable& r, const CrispSubset& i, Side side);

/// Least ideal of the given side containing a (a may be empty).
CrispSubset generated_ideal(const SemihyperringTable& r, const CrispSubset& a, Side side);

inline CrispSubset generated_hyperideal(const SemihyperringTable& r, const CrispSubset& a) {
  return generated_ideal(r, a, Side::two_sided);
}

struct IdealLattice {
  Side side = Side::two_sided;
  std::vector<CrispSubset> ideals;  // ascending mask order

  std::size_t size() const noexcept { return ideals.size(); }
  bool contains(const CrispSubset& s) const;
  std::optional<std::size_t> index_of(const CrispSubset& s) const;
};

/// Carrier size up to which enumeration filters all 2^n subsets; beyond it the
/// closure-system walk is used.
inline constexpr std::size_t kSubsetFilterLimit = 16;

/// Beyond this even the closure walk is refused.
inline constexpr std::size_t kEnumerationLimit = 24;

IdealLattice enumerate_hyperideals(const SemihyperringTable& r, Side side = Side::two_sided);

/// Subset-filter and closure-walk strategies, exposed for cross-checking.
IdealLattice enumerate_ideals_by_filter(const SemihyperringTable& r, Side side);
IdealLattice enumerate_ideals_by_closure(const SemihyperringTable& r, Side side);

struct IdealArithmetic {
  CrispSubset result;
  bool is_ideal = false;  // whether the result is itself a two-sided hyperideal
};

/// I (+) J. Throws DomainError unless both arguments are two-sided hyperideals.
IdealArithmetic ideal_sum(const SemihyperringTable& r, const CrispSubset& i, const CrispSubset& j);

/// Finite hypersums of products ab, a in I, b in J.
IdealArithmetic ideal_product(const SemihyperringTable& r, const CrispSubset& i,
                              const CrispSubset& j);

/// The product without the ideal precondition (used for one-sided ideals).
CrispSubset set_product(const SemihyperringTable& r, const CrispSubset& a, const CrispSubset& b);

bool is_idempotent_ideal(const SemihyperringTable& r, const CrispSubset& i);
bool is_fully_idempotent(const SemihyperringTable& r);
bool is_fully_idempotent(const SemihyperringTable& r, const IdealLattice& ideals);

/// First hyperideal with I^2 != I, if any.
std::optional<CrispSubset> non_idempotent_ideal(const SemihyperringTable& r,
                                                const IdealLattice& ideals);

struct RegularityResult {
  bool regular = true;
  std::vector<std::optional<std::size_t>> witness;  // a with x = xax, per element
  std::optional<std::size_t> failing_element;
};

RegularityResult is_regular(const SemihyperringTable& r);

struct RegularLemmaCheck {
  bool regular = false;
  bool products_match = false;  // IL = I n L for every right I, left L
  std::optional<std::pair<CrispSubset, CrispSubset>> mismatch;

  bool consistent() const noexcept { return regular == products_match; }
};

RegularLemmaCheck check_regular_lemma(const SemihyperringTable& r);

/// Quantify over two-sided hyperideals; the second overloads reuse a lattice.
bool is_prime_ideal(const SemihyperringTable& r, const CrispSubset& i);
bool is_prime_ideal(const SemihyperringTable& r, const CrispSubset& i, const IdealLattice& l);
bool is_irreducible_ideal(const SemihyperringTable& r, const CrispSubset& i);
bool is_irreducible_ideal(const SemihyperringTable& r, const CrispSubset& i,
                          const IdealLattice& l);

}  // namespace shr
