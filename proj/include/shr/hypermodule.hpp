#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "shr/hypercore.hpp"

namespace shr {

/// A finite right R-semihypermodule. The action cell for (m, x) is the subset
/// mx of M; it is a set even when the module is R over itself.
class SemihypermoduleTable {
 public:
  SemihypermoduleTable(std::shared_ptr<const SemihyperringTable> ring,
                       std::vector<std::string> element_names, std::size_t zero_index,
                       std::vector<Mask> madd, std::vector<Mask> action);

  const SemihyperringTable& ring() const noexcept { return *ring_; }
  std::shared_ptr<const SemihyperringTable> ring_ptr() const noexcept { return ring_; }
  std::size_t order() const noexcept { return names_.size(); }
  std::size_t zero() const noexcept { return zero_; }
  const std::vector<std::string>& element_names() const noexcept { return names_; }

  const HyperOperation& addition() const noexcept { return madd_; }
  Mask add(std::size_t m1, std::size_t m2) const { return madd_.at(m1, m2); }
  Mask act(std::size_t m, std::size_t x) const { return action_[m * ring_->order() + x]; }
  const std::vector<Mask>& action_cells() const noexcept { return action_; }

  /// Union of mx over m in ms, x in xs.
  Mask act_sets(Mask ms, Mask xs) const;

  SemihypermoduleTable with_action(std::size_t m, std::size_t x, Mask cell) const;

 private:
  std::shared_ptr<const SemihyperringTable> ring_;
  std::vector<std::string> names_;
  std::size_t zero_;
  HyperOperation madd_;
  std::vector<Mask> action_;
};

/// R as a right module over itself: madd = add, action(m, x) = {m.x}.
SemihypermoduleTable regular_module_from_ring(std::shared_ptr<const SemihyperringTable> r);

/// The submodule carried by n, reindexed onto 0..|n|-1. Throws DomainError
/// unless n is closed under the module addition and action.
SemihypermoduleTable restrict_module(const SemihypermoduleTable& m, const CrispSubset& n);

/// Additive axioms plus conditions (i)-(iv) of a right semihypermodule, with
/// the zero law read strictly: 0_M (+) m = {m}, 0_M x = {0_M}, m 0 = {0_M}.
ValidationReport validate_semihypermodule(const SemihypermoduleTable& m);

bool is_subsemihypermodule(const SemihypermoduleTable& m, const CrispSubset& n);

}  // namespace shr
