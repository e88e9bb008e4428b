#include "shr/hypercore.hpp"

#include <algorithm>
#include <unordered_set>

namespace shr {

HyperOperation::HyperOperation(std::size_t order, std::vector<Mask> cells)
    : order_(order), cells_(std::move(cells)) {
  if (order == 0 || order > kMaxOrder) throw StructureError("hyperoperation order must be in 1..64");
  if (cells_.size() != order * order) throw StructureError("hyperoperation table is not total");
  const Mask carrier = full_mask(order);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] == 0)
      throw StructureError("empty hyperoperation cell at (" + std::to_string(i / order) + "," +
                           std::to_string(i % order) + ")");
    if ((cells_[i] & ~carrier) != 0) throw StructureError("hyperoperation cell outside carrier");
  }
}

Mask HyperOperation::apply(Mask a, Mask b) const {
  Mask out = 0;
  for_each_bit(a, [&](std::size_t x) {
    const Mask* row = &cells_[x * order_];
    for_each_bit(b, [&](std::size_t y) { out |= row[y]; });
  });
  return out;
}

Mask HyperOperation::closure(Mask s) const {
  Mask c = s;
  // Only newly reached elements can contribute new sums.
  Mask frontier = s;
  while (frontier != 0) {
    const Mask next = apply(frontier, s) & ~c;
    c |= next;
    frontier = next;
  }
  return c;
}

bool HyperOperation::symmetric() const {
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = x + 1; y < order_; ++y)
      if (at(x, y) != at(y, x)) return false;
  return true;
}

SemihyperringTable::SemihyperringTable(std::string name, std::vector<std::string> element_names,
                                       std::size_t zero_index, std::vector<Mask> add,
                                       std::vector<std::uint8_t> mul)
    : name_(std::move(name)), names_(std::move(element_names)), zero_(zero_index),
      add_(names_.size(), std::move(add)), mul_(std::move(mul)) {
  const std::size_t n = names_.size();
  if (zero_ >= n) throw StructureError("zero index outside carrier");
  if (mul_.size() != n * n) throw StructureError("multiplication table is not total");
  for (auto v : mul_)
    if (v >= n) throw StructureError("multiplication value outside carrier");
  if (!add_.symmetric()) throw StructureError("hyperaddition table is not symmetric");
  std::unordered_set<std::string> seen;
  for (const auto& id : names_) {
    if (id.empty()) throw StructureError("empty element name");
    if (!seen.insert(id).second) throw StructureError("duplicate element name '" + id + "'");
  }
}

std::optional<std::size_t> SemihyperringTable::index_of(std::string_view element) const {
  auto it = std::find(names_.begin(), names_.end(), element);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

bool SemihyperringTable::mul_commutative() const {
  const std::size_t n = order();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

SemihyperringTable SemihyperringTable::with_add(std::size_t x, std::size_t y, Mask cell) const {
  auto cells = add_.cells();
  cells.at(x * order() + y) = cell;
  cells.at(y * order() + x) = cell;
  return {name_, names_, zero_, std::move(cells), mul_};
}

SemihyperringTable SemihyperringTable::with_mul(std::size_t x, std::size_t y,
                                                std::size_t value) const {
  auto cells = mul_;
  cells.at(x * order() + y) = static_cast<std::uint8_t>(value);
  return {name_, names_, zero_, add_.cells(), std::move(cells)};
}

SemihyperringTable SemihyperringTable::renamed(std::string name) const {
  auto copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::string SemihyperringTable::format(const CrispSubset& s) const {
  std::string out = "{";
  bool first = true;
  for (auto i : s.elements()) {
    if (!first) out += ',';
    out += names_.at(i);
    first = false;
  }
  return out + "}";
}

namespace {

void check_same_carrier(const SemihyperringTable& r, const CrispSubset& a) {
  if (a.order() != r.order()) throw StructureError("subset refers to a different carrier");
}

}  // namespace

Mask mul_mask(const SemihyperringTable& r, Mask a, Mask b) {
  Mask out = 0;
  for_each_bit(a, [&](std::size_t x) {
    for_each_bit(b, [&](std::size_t y) { out |= bit(r.mul(x, y)); });
  });
  return out;
}

CrispSubset hyperadd_sets(const SemihyperringTable& r, const CrispSubset& a, const CrispSubset& b) {
  check_same_carrier(r, a);
  check_same_carrier(r, b);
  return r.subset(r.addition().apply(a.mask(), b.mask()));
}

CrispSubset mul_sets(const SemihyperringTable& r, const CrispSubset& a, const CrispSubset& b) {
  check_same_carrier(r, a);
  check_same_carrier(r, b);
  return r.subset(mul_mask(r, a.mask(), b.mask()));
}

CrispSubset additive_closure(const SemihyperringTable& r, const CrispSubset& s) {
  check_same_carrier(r, s);
  if (s.is_empty()) throw DomainError("additive closure of the empty set");
  return r.subset(r.addition().closure(s.mask()));
}

std::string_view to_string(StructureClass c) {
  switch (c) {
    case StructureClass::semihypergroup: return "semihypergroup";
    case StructureClass::hypergroup: return "hypergroup";
    case StructureClass::polygroup: return "polygroup";
    case StructureClass::canonical_hypergroup: return "canonical_hypergroup";
    case StructureClass::semihyperring: return "semihyperring";
    case StructureClass::hyperring: return "hyperring";
    case StructureClass::semihypermodule: return "semihypermodule";
    case StructureClass::invalid: return "invalid";
  }
  return "invalid";
}

std::optional<StructureClass> parse_structure_class(std::string_view s) {
  for (auto c : {StructureClass::semihypergroup, StructureClass::hypergroup,
                 StructureClass::polygroup, StructureClass::canonical_hypergroup,
                 StructureClass::semihyperring, StructureClass::hyperring})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

bool ValidationReport::has_failure(std::string_view axiom) const {
  return std::any_of(failures.begin(), failures.end(),
                     [&](const AxiomFailure& f) { return f.axiom == axiom; });
}

namespace {

// Each predicate returns true when the axiom is violated at the tuple.

bool add_commutative_fails(const SemihyperringTable& r, std::size_t x, std::size_t y) {
  return r.add(x, y) != r.add(y, x);
}

bool add_associative_fails(const SemihyperringTable& r, std::size_t x, std::size_t y,
                           std::size_t z) {
  const auto& a = r.addition();
  return a.apply(bit(x), a.at(y, z)) != a.apply(a.at(x, y), bit(z));
}

bool mul_associative_fails(const SemihyperringTable& r, std::size_t x, std::size_t y,
                           std::size_t z) {
  return r.mul(x, r.mul(y, z)) != r.mul(r.mul(x, y), z);
}

bool left_distributive_fails(const SemihyperringTable& r, std::size_t x, std::size_t y,
                             std::size_t z) {
  return mul_mask(r, bit(x), r.add(y, z)) != r.add(r.mul(x, y), r.mul(x, z));
}

bool right_distributive_fails(const SemihyperringTable& r, std::size_t x, std::size_t y,
                              std::size_t z) {
  return mul_mask(r, r.add(x, y), bit(z)) != r.add(r.mul(x, z), r.mul(y, z));
}

bool zero_add_fails(const SemihyperringTable& r, std::size_t x) {
  return r.add(r.zero(), x) != bit(x) || r.add(x, r.zero()) != bit(x);
}

bool zero_mul_fails(const SemihyperringTable& r, std::size_t a, std::size_t b) {
  return r.mul(a, b) != r.zero();
}

bool reproduction_fails(const SemihyperringTable& r, std::size_t x) {
  const Mask all = full_mask(r.order());
  return r.addition().apply(bit(x), all) != all;
}

std::vector<std::size_t> additive_identities(const SemihyperringTable& r) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < r.order(); ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < r.order() && ok; ++x)
      ok = r.add(e, x) == bit(x) && r.add(x, e) == bit(x);
    if (ok) out.push_back(e);
  }
  return out;
}

std::vector<std::size_t> inverses(const SemihyperringTable& r, std::size_t e, std::size_t x) {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < r.order(); ++y)
    if ((r.add(x, y) & r.add(y, x) & bit(e)) != 0) out.push_back(y);
  return out;
}

// Reversibility needs a unique identity and unique inverses; callers check
// those first.
bool reversibility_fails(const SemihyperringTable& r, std::size_t x, std::size_t y,
                         std::size_t z) {
  auto ids = additive_identities(r);
  if (ids.size() != 1) return false;
  const auto e = ids.front();
  auto xi = inverses(r, e, x);
  auto yi = inverses(r, e, y);
  if (xi.size() != 1 || yi.size() != 1) return false;
  if ((r.add(x, y) & bit(z)) == 0) return false;
  const bool first = (r.add(z, yi.front()) & bit(x)) != 0;
  const bool second = (r.add(xi.front(), z) & bit(y)) != 0;
  return !(first && second);
}

class Collector {
 public:
  explicit Collector(bool stop_early) : stop_early_(stop_early) {}

  void fail(std::string axiom, std::vector<std::size_t> witness) {
    failures.push_back({std::move(axiom), std::move(witness)});
  }
  bool done() const { return stop_early_ && !failures.empty(); }

  std::vector<AxiomFailure> failures;

 private:
  bool stop_early_;
};

void check_hypergroupoid(const SemihyperringTable& r, Collector& c, bool commutative) {
  const std::size_t n = r.order();
  if (commutative)
    for (std::size_t x = 0; x < n && !c.done(); ++x)
      for (std::size_t y = x + 1; y < n && !c.done(); ++y)
        if (add_commutative_fails(r, x, y)) c.fail("add-commutative", {x, y});
  for (std::size_t x = 0; x < n && !c.done(); ++x)
    for (std::size_t y = 0; y < n && !c.done(); ++y)
      for (std::size_t z = 0; z < n && !c.done(); ++z)
        if (add_associative_fails(r, x, y, z)) c.fail("add-associative", {x, y, z});
}

void check_reproduction(const SemihyperringTable& r, Collector& c) {
  for (std::size_t x = 0; x < r.order() && !c.done(); ++x)
    if (reproduction_fails(r, x)) c.fail("reproduction", {x});
}

void check_polygroup(const SemihyperringTable& r, Collector& c) {
  const std::size_t n = r.order();
  auto ids = additive_identities(r);
  if (ids.size() != 1) {
    c.fail("polygroup-identity", {});
    return;
  }
  const auto e = ids.front();
  bool inverses_ok = true;
  for (std::size_t x = 0; x < n && !c.done(); ++x)
    if (inverses(r, e, x).size() != 1) {
      c.fail("polygroup-inverse", {x});
      inverses_ok = false;
    }
  if (!inverses_ok) return;
  for (std::size_t x = 0; x < n && !c.done(); ++x)
    for (std::size_t y = 0; y < n && !c.done(); ++y)
      for (std::size_t z = 0; z < n && !c.done(); ++z)
        if (reversibility_fails(r, x, y, z)) c.fail("polygroup-reversibility", {x, y, z});
}

void check_semihyperring(const SemihyperringTable& r, Collector& c) {
  const std::size_t n = r.order();
  const std::size_t zero = r.zero();
  for (std::size_t x = 0; x < n && !c.done(); ++x)
    if (zero_add_fails(r, x)) c.fail("zero-add-identity", {zero, x});
  for (std::size_t x = 0; x < n && !c.done(); ++x) {
    if (zero_mul_fails(r, zero, x)) c.fail("zero-mul-absorbing", {zero, x});
    if (x != zero && zero_mul_fails(r, x, zero)) c.fail("zero-mul-absorbing", {x, zero});
  }
  if (c.done()) return;
  check_hypergroupoid(r, c, true);
  for (std::size_t x = 0; x < n && !c.done(); ++x)
    for (std::size_t y = 0; y < n && !c.done(); ++y)
      for (std::size_t z = 0; z < n && !c.done(); ++z) {
        if (mul_associative_fails(r, x, y, z)) c.fail("mul-associative", {x, y, z});
        if (left_distributive_fails(r, x, y, z)) c.fail("left-distributive", {x, y, z});
        if (right_distributive_fails(r, x, y, z)) c.fail("right-distributive", {x, y, z});
      }
}

std::vector<AxiomFailure> scan(const SemihyperringTable& r, StructureClass target,
                               bool stop_early) {
  Collector c(stop_early);
  switch (target) {
    case StructureClass::semihypergroup:
      check_hypergroupoid(r, c, true);
      break;
    case StructureClass::hypergroup:
      check_hypergroupoid(r, c, true);
      check_reproduction(r, c);
      break;
    case StructureClass::polygroup:
      check_hypergroupoid(r, c, false);
      check_polygroup(r, c);
      break;
    case StructureClass::canonical_hypergroup:
      check_hypergroupoid(r, c, true);
      check_polygroup(r, c);
      break;
    case StructureClass::semihyperring:
      check_semihyperring(r, c);
      break;
    case StructureClass::hyperring:
      check_semihyperring(r, c);
      check_polygroup(r, c);
      break;
    case StructureClass::semihypermodule:
    case StructureClass::invalid:
      c.fail("unsupported-class", {});
      break;
  }
  return std::move(c.failures);
}

}  // namespace

ValidationReport validate(const SemihyperringTable& r, StructureClass target) {
  ValidationReport report;
  report.requested = target;
  report.failures = scan(r, target, false);
  report.structure_class = report.ok() ? target : StructureClass::invalid;
  return report;
}

bool is_semihyperring(const SemihyperringTable& r) {
  return scan(r, StructureClass::semihyperring, true).empty();
}

bool recheck(const SemihyperringTable& r, const AxiomFailure& f) {
  const auto& w = f.witness;
  const std::size_t n = r.order();
  for (auto i : w)
    if (i >= n) return false;
  const auto& a = f.axiom;
  if (a == "add-commutative" && w.size() == 2) return add_commutative_fails(r, w[0], w[1]);
  if (a == "add-associative" && w.size() == 3) return add_associative_fails(r, w[0], w[1], w[2]);
  if (a == "mul-associative" && w.size() == 3) return mul_associative_fails(r, w[0], w[1], w[2]);
  if (a == "left-distributive" && w.size() == 3)
    return left_distributive_fails(r, w[0], w[1], w[2]);
  if (a == "right-distributive" && w.size() == 3)
    return right_distributive_fails(r, w[0], w[1], w[2]);
  if (a == "zero-add-identity" && w.size() == 2) return zero_add_fails(r, w[1]);
  if (a == "zero-mul-absorbing" && w.size() == 2) return zero_mul_fails(r, w[0], w[1]);
  if (a == "reproduction" && w.size() == 1) return reproduction_fails(r, w[0]);
  if (a == "polygroup-identity" && w.empty()) return additive_identities(r).size() != 1;
  if (a == "polygroup-inverse" && w.size() == 1) {
    auto ids = additive_identities(r);
    return ids.size() == 1 && inverses(r, ids.front(), w[0]).size() != 1;
  }
  if (a == "polygroup-reversibility" && w.size() == 3)
    return reversibility_fails(r, w[0], w[1], w[2]);
  return false;
}

}  // namespace shr
