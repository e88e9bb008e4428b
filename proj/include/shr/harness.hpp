#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shr/fuzzy.hpp"
#include "shr/ideals.hpp"

namespace shr {

enum class Verdict { holds, fails, not_applicable };

std::string_view to_string(Verdict v);

/// A replayable piece of evidence. `claim` names the fact, the remaining
/// fields carry its arguments (element indices, fuzzy and crisp subsets).
struct Witness {
  std::string claim;
  std::vector<std::size_t> elements;
  std::vector<FuzzySubset> fuzzy;
  std::vector<CrispSubset> crisp;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct TheoremReport {
  std::string theorem_id;
  std::string structure_id;
  ChainPtr chain;
  ZeroRegime regime = ZeroRegime::any;
  Verdict verdict = Verdict::holds;
  std::vector<Witness> witnesses;
  std::vector<std::pair<std::string, bool>> flags;
  std::vector<std::pair<std::string, std::vector<FuzzySubset>>> families;
  std::vector<std::string> notes;
  std::size_t checked = 0;
  std::chrono::nanoseconds elapsed{0};

  std::optional<bool> flag(std::string_view name) const;
  const std::vector<FuzzySubset>* family(std::string_view name) const;

  /// Equality ignoring elapsed time.
  bool same_outcome(const TheoremReport& other) const;
};

/// Re-checks a witness against the structure. Returns true when the claimed
/// fact is confirmed; false for an unknown claim or one that no longer holds.
bool replay(const SemihyperringTable& r, const ChainPtr& chain, const Witness& w,
            ZeroRegime regime = ZeroRegime::any);

/// Fuzzy hyperideals of one structure over one chain, with the pairwise sums
/// and products computed on first use. Not safe for concurrent mutation; use
/// one context per job.
class FuzzyContext {
 public:
  FuzzyContext(const SemihyperringTable& r, ChainPtr chain, ZeroRegime regime = ZeroRegime::any);

  const SemihyperringTable& ring() const noexcept { return *r_; }
  const ChainPtr& chain() const noexcept { return chain_; }
  ZeroRegime regime() const noexcept { return regime_; }

  const std::vector<FuzzySubset>& ideals() const noexcept { return ideals_; }
  std::size_t size() const noexcept { return ideals_.size(); }
  std::optional<std::size_t> index_of(const FuzzySubset& f) const;

  const FuzzySubset& product(std::size_t i, std::size_t j);
  const FuzzySubset& sum(std::size_t i, std::size_t j);

  bool is_prime(std::size_t i);
  bool is_irreducible(std::size_t i);
  /// Indices of fuzzy primes, A included.
  const std::vector<std::size_t>& primes();

  const IdealLattice& crisp_ideals() const noexcept { return crisp_; }
  bool fully_idempotent() const noexcept { return fully_idempotent_; }

 private:
  std::size_t code(const std::vector<std::uint8_t>& lv) const;

  const SemihyperringTable* r_;
  ChainPtr chain_;
  ZeroRegime regime_;
  std::vector<FuzzySubset> ideals_;
  std::vector<std::int32_t> index_;  // by level-vector code, -1 when absent
  std::vector<std::optional<FuzzySubset>> products_;
  std::vector<std::optional<FuzzySubset>> sums_;
  std::vector<std::int8_t> prime_;  // -1 unknown
  std::optional<std::vector<std::size_t>> primes_;
  IdealLattice crisp_;
  bool fully_idempotent_ = false;
};

using FuzzyIdealPredicate =
    std::function<bool(const SemihyperringTable&, const FuzzySubset&)>;

/// Biconditional between the fuzzy hyperideal test and crisp hyperideal
/// level sets, over every map into the chain. `predicate` defaults to
/// is_fuzzy_hyperideal and exists so a corrupted test can be injected.
TheoremReport verify_level_theorem(const SemihyperringTable& r, const ChainPtr& chain,
                                   const FuzzyIdealPredicate& predicate = {});

/// Fully idempotent, every fuzzy hyperideal idempotent, meet equals product,
/// and (for commutative multiplication) regular: all agree.
TheoremReport verify_fully_idempotent_equivalences(FuzzyContext& ctx);

/// Fully idempotent iff the fuzzy hyperideals form a distributive lattice
/// under sum and meet with meet equal to product. The join property of the
/// sum is reported under both zero regimes.
TheoremReport verify_lattice_distributive(FuzzyContext& ctx);

/// On fully idempotent structures the fuzzy prime and fuzzy irreducible
/// classes coincide; otherwise not applicable, classes still listed.
TheoremReport verify_prime_iff_irreducible(FuzzyContext& ctx);

/// A maximal fuzzy prime eta with lambda <= eta and eta(a) = lambda(a).
/// A itself counts as prime here.
std::optional<FuzzySubset> find_prime_over(FuzzyContext& ctx, const FuzzySubset& lambda,
                                           std::size_t a);

/// Fully idempotent iff every fuzzy hyperideal is the meet of the fuzzy
/// primes above it (and, with commutative multiplication, iff regular).
TheoremReport verify_intersection_of_primes(FuzzyContext& ctx);

/// Regular iff IL = I n L for all right I and left L iff
/// lambda o mu = lambda ^ mu for all fuzzy right lambda and fuzzy left mu.
TheoremReport verify_regular_characterization(const SemihyperringTable& r,
                                              const ChainPtr& chain,
                                              ZeroRegime regime = ZeroRegime::any);

inline constexpr std::string_view kTheoremIds[] = {"level",       "thr21",       "distrib",
                                                   "prime-irred", "primes-meet", "regular"};

/// Runs a theorem by id. Throws DomainError on an unknown id.
TheoremReport verify_theorem(std::string_view id, const SemihyperringTable& r,
                             const ChainPtr& chain, ZeroRegime regime = ZeroRegime::any);

}  // namespace shr
