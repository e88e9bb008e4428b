#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shr/subset.hpp"

namespace shr {

/// An n x n table whose cells are nonempty subsets of the carrier.
///
/// Shared by the additive part of a semihyperring and the additive part of a
/// semihypermodule. Set extension and hypersum reachability live here.
class HyperOperation {
 public:
  HyperOperation() = default;
  HyperOperation(std::size_t order, std::vector<Mask> cells);

  std::size_t order() const noexcept { return order_; }
  Mask at(std::size_t x, std::size_t y) const { return cells_[x * order_ + y]; }
  const std::vector<Mask>& cells() const noexcept { return cells_; }

  /// Union of x (+) y over x in a, y in b.
  Mask apply(Mask a, Mask b) const;

  /// Least C containing s with apply(C, s) inside C.
  Mask closure(Mask s) const;

  bool symmetric() const;

  friend bool operator==(const HyperOperation&, const HyperOperation&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<Mask> cells_;
};

/// Finite carrier with a hyperaddition table, a multiplication table and a
/// designated zero. Tables are total, add cells nonempty and add symmetric;
/// the constructor rejects anything else. Semihyperring axioms are not
/// enforced here; see validate().
class SemihyperringTable {
 public:
  SemihyperringTable(std::string name, std::vector<std::string> element_names,
                     std::size_t zero_index, std::vector<Mask> add,
                     std::vector<std::uint8_t> mul);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return names_.size(); }
  std::size_t zero() const noexcept { return zero_; }
  const std::vector<std::string>& element_names() const noexcept { return names_; }
  const std::string& element_name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view element) const;

  Mask add(std::size_t x, std::size_t y) const { return add_.at(x, y); }
  std::size_t mul(std::size_t x, std::size_t y) const { return mul_[x * order() + y]; }
  const HyperOperation& addition() const noexcept { return add_; }
  const std::vector<std::uint8_t>& mul_cells() const noexcept { return mul_; }

  CrispSubset full() const { return CrispSubset::full(order()); }
  CrispSubset subset(Mask m) const { return {order(), m}; }

  bool mul_commutative() const;

  /// Copies with one cell replaced; add cells are replaced symmetrically.
  SemihyperringTable with_add(std::size_t x, std::size_t y, Mask cell) const;
  SemihyperringTable with_mul(std::size_t x, std::size_t y, std::size_t value) const;
  SemihyperringTable renamed(std::string name) const;

  /// Names the members of s, e.g. "{0,b}".
  std::string format(const CrispSubset& s) const;
  std::string format(Mask m) const { return format(subset(m)); }

  friend bool operator==(const SemihyperringTable&, const SemihyperringTable&) = default;

 private:
  std::string name_;
  std::vector<std::string> names_;
  std::size_t zero_;
  HyperOperation add_;
  std::vector<std::uint8_t> mul_;
};

CrispSubset hyperadd_sets(const SemihyperringTable& r, const CrispSubset& a, const CrispSubset& b);
CrispSubset mul_sets(const SemihyperringTable& r, const CrispSubset& a, const CrispSubset& b);

/// Everything reachable as a finite hypersum s1 (+) s2 (+) ... of members of s.
/// Throws DomainError on an empty s.
CrispSubset additive_closure(const SemihyperringTable& r, const CrispSubset& s);

Mask mul_mask(const SemihyperringTable& r, Mask a, Mask b);

enum class StructureClass {
  semihypergroup,
  hypergroup,
  polygroup,
  canonical_hypergroup,
  semihyperring,
  hyperring,
  semihypermodule,
  invalid,
};

std::string_view to_string(StructureClass c);
std::optional<StructureClass> parse_structure_class(std::string_view s);

struct AxiomFailure {
  std::string axiom;
  std::vector<std::size_t> witness;

  friend bool operator==(const AxiomFailure&, const AxiomFailure&) = default;
};

struct ValidationReport {
  StructureClass requested = StructureClass::invalid;
  StructureClass structure_class = StructureClass::invalid;
  std::vector<AxiomFailure> failures;

  bool ok() const noexcept { return failures.empty(); }
  bool has_failure(std::string_view axiom) const;

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Exhaustive axiom scan for the requested class. Failures are reported,
/// never thrown.
ValidationReport validate(const SemihyperringTable& r, StructureClass target);

/// Early-exit semihyperring check used by the census.
bool is_semihyperring(const SemihyperringTable& r);

/// True when the witness still violates its axiom.
bool recheck(const SemihyperringTable& r, const AxiomFailure& failure);

}  // namespace shr
