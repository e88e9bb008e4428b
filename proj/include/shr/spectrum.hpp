#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "shr/harness.hpp"

namespace shr {

using PrimeSet = boost::dynamic_bitset<>;

/// Open sets of the fuzzy prime spectrum. Opens are deduplicated in order of
/// first appearance over the generators; generator_map[i] is the open of
/// generators[i].
struct SpectrumTopology {
  std::string structure_id;
  ChainPtr chain;
  ZeroRegime regime = ZeroRegime::unit_at_zero;
  std::vector<FuzzySubset> primes;      // proper fuzzy primes, canonical order
  std::vector<FuzzySubset> generators;  // every fuzzy hyperideal of the regime
  std::vector<PrimeSet> opens;
  std::vector<std::size_t> generator_map;

  std::size_t open_index(const PrimeSet& s) const;  // opens.size() when absent
};

/// Fuzzy primes other than A, canonical order.
std::vector<FuzzySubset> fuzzy_prime_spectrum(FuzzyContext& ctx);

/// {mu in primes : lambda is not <= mu}.
PrimeSet open_set(const std::vector<FuzzySubset>& primes, const FuzzySubset& lambda);

SpectrumTopology build_topology(FuzzyContext& ctx);

struct TopologyCheckOptions {
  std::size_t union_samples = 64;  // random subfamilies beyond pairs and singletons
  std::size_t max_union_size = 8;
  std::uint64_t seed = 1;
};

/// Meet and sum identities for the open sets, O_phi = {}, O_A = everything,
/// and literal closure of the family under intersection and union.
TheoremReport verify_topology_axioms(const SemihyperringTable& r, const SpectrumTopology& t,
                                     const TopologyCheckOptions& opts = {});

/// Injectivity of lambda -> O_lambda plus the topology identities. Not
/// applicable unless the structure is fully idempotent.
TheoremReport verify_lattice_iso(FuzzyContext& ctx, const TopologyCheckOptions& opts = {});

/// Replays spectrum claims; false for claims it does not know.
bool replay_spectrum_witness(const SemihyperringTable& r, const ChainPtr& chain, const Witness& w,
                             ZeroRegime regime);

}  // namespace shr
