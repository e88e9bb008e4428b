#include "shr/hypermodule.hpp"

namespace shr {

SemihypermoduleTable::SemihypermoduleTable(std::shared_ptr<const SemihyperringTable> ring,
                                           std::vector<std::string> element_names,
                                           std::size_t zero_index, std::vector<Mask> madd,
                                           std::vector<Mask> action)
    : ring_(std::move(ring)), names_(std::move(element_names)), zero_(zero_index),
      madd_(names_.size(), std::move(madd)), action_(std::move(action)) {
  if (!ring_) throw StructureError("module needs a ring");
  if (zero_ >= names_.size()) throw StructureError("module zero outside carrier");
  if (!madd_.symmetric()) throw StructureError("module addition is not symmetric");
  if (action_.size() != names_.size() * ring_->order())
    throw StructureError("module action table is not total");
  const Mask carrier = full_mask(names_.size());
  for (auto cell : action_)
    if (cell == 0 || (cell & ~carrier) != 0)
      throw StructureError("module action cell must be a nonempty subset of M");
}

Mask SemihypermoduleTable::act_sets(Mask ms, Mask xs) const {
  Mask out = 0;
  for_each_bit(ms, [&](std::size_t m) {
    for_each_bit(xs, [&](std::size_t x) { out |= act(m, x); });
  });
  return out;
}

SemihypermoduleTable SemihypermoduleTable::with_action(std::size_t m, std::size_t x,
                                                       Mask cell) const {
  auto cells = action_;
  cells.at(m * ring_->order() + x) = cell;
  return {ring_, names_, zero_, madd_.cells(), std::move(cells)};
}

SemihypermoduleTable regular_module_from_ring(std::shared_ptr<const SemihyperringTable> r) {
  const std::size_t n = r->order();
  std::vector<Mask> action(n * n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t x = 0; x < n; ++x) action[m * n + x] = bit(r->mul(m, x));
  auto names = r->element_names();
  auto zero = r->zero();
  auto madd = r->addition().cells();
  return {std::move(r), std::move(names), zero, std::move(madd), std::move(action)};
}

namespace {

bool closed_under_module(const SemihypermoduleTable& m, Mask n) {
  if ((m.addition().apply(n, n) & ~n) != 0) return false;
  return (m.act_sets(n, full_mask(m.ring().order())) & ~n) == 0;
}

}  // namespace

bool is_subsemihypermodule(const SemihypermoduleTable& m, const CrispSubset& n) {
  if (n.order() != m.order()) throw StructureError("subset refers to a different carrier");
  if (n.is_empty()) throw DomainError("empty subset");
  return closed_under_module(m, n.mask());
}

SemihypermoduleTable restrict_module(const SemihypermoduleTable& m, const CrispSubset& n) {
  if (!is_subsemihypermodule(m, n)) throw DomainError("subset is not a subsemihypermodule");
  if (!n.contains(m.zero())) throw DomainError("subset does not contain the module zero");
  const auto members = n.elements();
  std::vector<std::size_t> pos(m.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = i;
  auto reindex = [&](Mask cell) {
    Mask out = 0;
    for_each_bit(cell, [&](std::size_t e) { out |= bit(pos[e]); });
    return out;
  };
  const std::size_t k = members.size();
  const std::size_t rn = m.ring().order();
  std::vector<std::string> names;
  std::vector<Mask> madd(k * k);
  std::vector<Mask> action(k * rn);
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(m.element_names()[members[i]]);
    for (std::size_t j = 0; j < k; ++j) madd[i * k + j] = reindex(m.add(members[i], members[j]));
    for (std::size_t x = 0; x < rn; ++x) action[i * rn + x] = reindex(m.act(members[i], x));
  }
  return {m.ring_ptr(), std::move(names), pos[m.zero()], std::move(madd), std::move(action)};
}

ValidationReport validate_semihypermodule(const SemihypermoduleTable& m) {
  ValidationReport report;
  report.requested = StructureClass::semihypermodule;
  const auto& r = m.ring();
  const auto& madd = m.addition();
  const std::size_t k = m.order();
  const std::size_t n = r.order();
  auto fail = [&](std::string axiom, std::vector<std::size_t> w) {
    report.failures.push_back({std::move(axiom), std::move(w)});
  };

  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        if (madd.apply(bit(a), madd.at(b, c)) != madd.apply(madd.at(a, b), bit(c)))
          fail("madd-associative", {a, b, c});
  for (std::size_t a = 0; a < k; ++a)
    if (madd.at(m.zero(), a) != bit(a)) fail("module-zero-add-identity", {m.zero(), a});

  // (i) (m1 (+) m2)x = m1x (+) m2x
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t x = 0; x < n; ++x)
        if (m.act_sets(madd.at(a, b), bit(x)) != madd.apply(m.act(a, x), m.act(b, x)))
          fail("module-sum-distributive", {a, b, x});
  // (ii) m(x (+) y) = mx (+) my
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (m.act_sets(bit(a), r.add(x, y)) != madd.apply(m.act(a, x), m.act(a, y)))
          fail("module-ring-distributive", {a, x, y});
  // (iii) m(xy) = (mx)y
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (m.act(a, r.mul(x, y)) != m.act_sets(m.act(a, x), bit(y)))
          fail("module-associative", {a, x, y});
  // (iv) 0_M x = m 0 = 0_M
  for (std::size_t x = 0; x < n; ++x)
    if (m.act(m.zero(), x) != bit(m.zero())) fail("module-zero-action", {m.zero(), x});
  for (std::size_t a = 0; a < k; ++a)
    if (m.act(a, r.zero()) != bit(m.zero())) fail("module-action-by-zero", {a, r.zero()});

  report.structure_class = report.ok() ? StructureClass::semihypermodule : StructureClass::invalid;
  return report;
}

}  // namespace shr
