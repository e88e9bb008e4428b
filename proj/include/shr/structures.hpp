#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shr/hypercore.hpp"

namespace shr {

/// The four-element table with elements 0, a, b, c, cell for cell.
/// Its zero row is absorbing under (+) (0 (+) a = {0}), so it fails the
/// strict zero law and also left distributivity; it is kept as a fixture of
/// that discrepancy.
SemihyperringTable example_1_3();

/// The open sets {}, {1}, {1,2} of a two-point space with union and
/// intersection, elements named e, s, x.
SemihyperringTable t2();

/// {0} with 0 (+) 0 = {0}, 0.0 = 0.
SemihyperringTable one_element();

/// Semihyperring of open sets under union (as singleton hypersums) and
/// intersection. Open sets are bitmasks over points 0..points-1; the empty
/// set becomes index 0, the others keep their given order. Throws
/// DomainError unless open_sets is a topology.
SemihyperringTable from_topology(std::size_t points, const std::vector<Mask>& open_sets,
                                 std::vector<std::string> names = {},
                                 std::string name = "topology");

bool is_topology(std::size_t points, const std::vector<Mask>& open_sets);

/// All topologies on `points` points (points <= 4), each sorted ascending.
std::vector<std::vector<Mask>> all_topologies(std::size_t points);

enum class CensusMode { exhaustive, sampled };

struct CensusConfig {
  std::size_t order = 2;
  CensusMode mode = CensusMode::exhaustive;
  std::size_t sample_count = 0;  // structures to emit in sampled mode
  std::optional<std::uint64_t> seed;
  bool require_commutative_mul = false;
  std::size_t max_draws = 0;  // sampled mode; 0 means 1000 * sample_count
};

/// Throws DomainError on an invalid configuration.
void check_census_config(const CensusConfig& cfg);

/// Raw candidates under the forced-zero, symmetric-add reduction:
/// (2^n - 1)^(n(n-1)/2) * n^((n-1)^2).
std::uint64_t census_search_space(std::size_t order);

/// Streams every valid structure in deterministic order (encoding order for
/// exhaustive mode, draw order for sampled mode). Zero sits at index 0 with
/// its row and column forced; elements are named 0, a, b, ...
void census_for_each(const CensusConfig& cfg,
                     const std::function<void(const SemihyperringTable&)>& sink);
std::vector<SemihyperringTable> census(const CensusConfig& cfg);

/// Table encoding: add cells row-major then mul cells row-major.
std::vector<std::uint64_t> table_encoding(const SemihyperringTable& r);

/// Lexicographically least encoding over permutations fixing the zero.
std::vector<std::uint64_t> canonical_form(const SemihyperringTable& r);
bool iso_equivalent(const SemihyperringTable& a, const SemihyperringTable& b);

/// Relabels elements by perm (new index = perm[old index]).
SemihyperringTable permuted(const SemihyperringTable& r, const std::vector<std::size_t>& perm);

/// Census element names: 0, a, b, c, ...
std::vector<std::string> census_names(std::size_t order);

}  // namespace shr
