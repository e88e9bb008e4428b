#include "shr/fuzzy.hpp"

#include <algorithm>
#include <unordered_map>

namespace shr {

FuzzySubset::FuzzySubset(ChainPtr chain, std::vector<std::uint8_t> levels)
    : chain_(std::move(chain)), levels_(std::move(levels)) {
  if (!chain_) throw DomainError("fuzzy subset needs a grade chain");
  if (levels_.empty() || levels_.size() > kMaxOrder)
    throw StructureError("fuzzy subset carrier must have 1..64 elements");
  for (auto l : levels_)
    if (l >= chain_->size()) throw DomainError("fuzzy grade outside chain");
}

FuzzySubset FuzzySubset::constant(ChainPtr chain, std::size_t order, std::size_t level) {
  return {std::move(chain), std::vector<std::uint8_t>(order, static_cast<std::uint8_t>(level))};
}

FuzzySubset FuzzySubset::top(ChainPtr chain, std::size_t order) {
  const auto t = chain->top();
  return constant(std::move(chain), order, t);
}

FuzzySubset FuzzySubset::bottom(ChainPtr chain, std::size_t order) {
  return constant(std::move(chain), order, 0);
}

bool FuzzySubset::is_top() const {
  return std::all_of(levels_.begin(), levels_.end(),
                     [&](auto l) { return l == chain_->top(); });
}

bool FuzzySubset::is_bottom() const {
  return std::all_of(levels_.begin(), levels_.end(), [](auto l) { return l == 0; });
}

std::string_view to_string(ZeroRegime z) {
  return z == ZeroRegime::any ? "any" : "unit-at-zero";
}

namespace {

void require_compatible(const FuzzySubset& a, const FuzzySubset& b) {
  if (a.size() != b.size()) throw DomainError("fuzzy subsets over different carriers");
  if (a.chain_ptr() != b.chain_ptr() && a.chain() != b.chain())
    throw DomainError("fuzzy subsets over different grade chains");
}

void require_carrier(const SemihyperringTable& r, const FuzzySubset& a) {
  if (a.size() != r.order()) throw DomainError("fuzzy subset does not match the carrier");
}

using Levels = std::vector<std::uint8_t>;

}  // namespace

FuzzySubset meet(const FuzzySubset& a, const FuzzySubset& b) {
  require_compatible(a, b);
  Levels out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(a.levels()[i], b.levels()[i]);
  return {a.chain_ptr(), std::move(out)};
}

FuzzySubset join(const FuzzySubset& a, const FuzzySubset& b) {
  require_compatible(a, b);
  Levels out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(a.levels()[i], b.levels()[i]);
  return {a.chain_ptr(), std::move(out)};
}

bool leq(const FuzzySubset& a, const FuzzySubset& b) {
  require_compatible(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.levels()[i] > b.levels()[i]) return false;
  return true;
}

FuzzySubset family_meet(const ChainPtr& chain, std::size_t order,
                        std::span<const FuzzySubset> family) {
  auto acc = FuzzySubset::top(chain, order);
  for (const auto& f : family) acc = meet(acc, f);
  return acc;
}

FuzzySubset family_sum(const SemihyperringTable& r, const ChainPtr& chain,
                       std::span<const FuzzySubset> family) {
  if (family.empty()) return FuzzySubset::bottom(chain, r.order());
  auto acc = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) acc = fuzzy_sum(r, acc, family[i]);
  return acc;
}

FuzzySubset characteristic(const CrispSubset& s, const ChainPtr& chain) {
  Levels out(s.order(), 0);
  for (auto i : s.elements()) out[i] = static_cast<std::uint8_t>(chain->top());
  return {chain, std::move(out)};
}

CrispSubset level_set_at(const FuzzySubset& mu, std::size_t level) {
  if (level == 0 || level >= mu.chain().size())
    throw DomainError("level threshold must be a positive chain grade");
  Mask m = 0;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu.level(i) >= level) m |= bit(i);
  return {mu.size(), m};
}

CrispSubset level_set(const FuzzySubset& mu, const Grade& t) {
  auto idx = mu.chain().index_of(t);
  if (!idx) throw DomainError("level threshold " + format_grade(t) + " is not in the chain");
  return level_set_at(mu, *idx);
}

namespace {

bool additive_condition(const HyperOperation& add, const Levels& mu) {
  const std::size_t n = add.order();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) {
      const auto lo = std::min(mu[x], mu[y]);
      if (lo == 0) continue;
      bool ok = true;
      for_each_bit(add.at(x, y), [&](std::size_t z) { ok = ok && mu[z] >= lo; });
      if (!ok) return false;
    }
  return true;
}

bool fuzzy_ideal_levels(const SemihyperringTable& r, const Levels& mu, Side side) {
  const std::size_t n = r.order();
  for (std::size_t x = 0; x < n; ++x) {
    if (mu[x] == 0) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (side != Side::left && mu[r.mul(x, y)] < mu[x]) return false;
      if (side != Side::right && mu[r.mul(y, x)] < mu[x]) return false;
    }
  }
  return additive_condition(r.addition(), mu);
}

}  // namespace

bool is_fuzzy_ideal(const SemihyperringTable& r, const FuzzySubset& mu, Side side) {
  require_carrier(r, mu);
  return fuzzy_ideal_levels(r, mu.levels(), side);
}

bool is_fuzzy_hyperideal(const SemihyperringTable& r, const FuzzySubset& mu) {
  return is_fuzzy_ideal(r, mu, Side::two_sided);
}

bool is_fuzzy_subsemihypermodule(const SemihypermoduleTable& m, const FuzzySubset& mu) {
  if (mu.size() != m.order()) throw DomainError("fuzzy subset does not match the module");
  const auto& lv = mu.levels();
  if (lv[m.zero()] != mu.chain().top()) return false;
  const std::size_t n = m.ring().order();
  for (std::size_t a = 0; a < m.order(); ++a) {
    if (lv[a] == 0) continue;
    for (std::size_t x = 0; x < n; ++x) {
      bool ok = true;
      for_each_bit(m.act(a, x), [&](std::size_t b) { ok = ok && lv[b] >= lv[a]; });
      if (!ok) return false;
    }
  }
  return additive_condition(m.addition(), lv);
}

FuzzySubset fuzzy_sum(const SemihyperringTable& r, const FuzzySubset& l, const FuzzySubset& m) {
  require_compatible(l, m);
  require_carrier(r, l);
  const std::size_t n = r.order();
  Levels out(n, 0);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z) {
      const auto g = std::min(l.levels()[y], m.levels()[z]);
      if (g == 0) continue;
      for_each_bit(r.add(y, z), [&](std::size_t x) { out[x] = std::max(out[x], g); });
    }
  return {l.chain_ptr(), std::move(out)};
}

namespace {

// Shared threshold-closure loop: products(t) yields the generating set S_t.
template <typename Products>
Levels threshold_closure(const HyperOperation& add, std::size_t top, Products&& products) {
  Levels out(add.order(), 0);
  Mask assigned = 0;
  for (std::size_t t = top; t >= 1; --t) {
    const Mask s = products(t);
    if (s == 0) continue;
    const Mask reached = add.closure(s) & ~assigned;
    for_each_bit(reached, [&](std::size_t x) { out[x] = static_cast<std::uint8_t>(t); });
    assigned |= reached;
  }
  return out;
}

Mask at_least(const Levels& mu, std::size_t t) {
  Mask m = 0;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] >= t) m |= bit(i);
  return m;
}

}  // namespace

FuzzySubset fuzzy_product(const SemihyperringTable& r, const FuzzySubset& l,
                          const FuzzySubset& m) {
  require_compatible(l, m);
  require_carrier(r, l);
  auto out = threshold_closure(r.addition(), l.chain().top(), [&](std::size_t t) {
    return mul_mask(r, at_least(l.levels(), t), at_least(m.levels(), t));
  });
  return {l.chain_ptr(), std::move(out)};
}

FuzzySubset fuzzy_module_product(const SemihypermoduleTable& mod, const FuzzySubset& l,
                                 const FuzzySubset& m) {
  if (l.size() != mod.order()) throw DomainError("left operand does not match the module");
  if (m.size() != mod.ring().order()) throw DomainError("right operand does not match the ring");
  if (l.chain_ptr() != m.chain_ptr() && l.chain() != m.chain())
    throw DomainError("fuzzy subsets over different grade chains");
  auto out = threshold_closure(mod.addition(), l.chain().top(), [&](std::size_t t) {
    return mod.act_sets(at_least(l.levels(), t), at_least(m.levels(), t));
  });
  return {l.chain_ptr(), std::move(out)};
}

OracleResult fuzzy_product_oracle(const SemihyperringTable& r, const FuzzySubset& l,
                                  const FuzzySubset& m, std::size_t max_len) {
  require_compatible(l, m);
  require_carrier(r, l);
  const std::size_t n = r.order();
  const auto& add = r.addition();

  // One term: (product, grade) per pair (y, z).
  std::vector<std::pair<std::size_t, std::uint8_t>> terms;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z)
      terms.emplace_back(r.mul(y, z), std::min(l.levels()[y], m.levels()[z]));

  // best[A] = highest min-grade over decompositions whose hypersum is A.
  std::unordered_map<Mask, std::uint8_t> best;
  std::vector<std::pair<Mask, std::uint8_t>> frontier;
  auto offer = [&](Mask a, std::uint8_t g, auto& next) {
    auto [it, inserted] = best.try_emplace(a, g);
    if (inserted || g > it->second) {
      it->second = g;
      next.emplace_back(a, g);
    }
  };
  for (auto [p, g] : terms) offer(bit(p), g, frontier);

  Levels value(n, 0);
  auto refresh = [&] {
    bool changed = false;
    for (auto [a, g] : best)
      for_each_bit(a, [&](std::size_t x) {
        if (g > value[x]) {
          value[x] = g;
          changed = true;
        }
      });
    return changed;
  };

  OracleResult out{FuzzySubset(l.chain_ptr(), value), 0, 1, false};
  if (refresh()) out.stable_length = 1;
  std::size_t len = 1;
  while (len < max_len) {
    std::vector<std::pair<Mask, std::uint8_t>> next;
    for (auto [a, g] : frontier)
      for (auto [p, h] : terms) offer(add.apply(a, bit(p)), std::min(g, h), next);
    if (next.empty()) {
      out.saturated = true;
      break;
    }
    ++len;
    frontier = std::move(next);
    if (refresh()) out.stable_length = len;
  }
  out.explored_length = len;
  if (!out.saturated && frontier.empty()) out.saturated = true;
  out.value = FuzzySubset(l.chain_ptr(), std::move(value));
  return out;
}

FuzzySubset fuzzy_circ(const SemihyperringTable& r, const FuzzySubset& l, const FuzzySubset& m) {
  require_compatible(l, m);
  require_carrier(r, l);
  const std::size_t n = r.order();
  Levels out(n, 0);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z) {
      auto& cell = out[r.mul(y, z)];
      cell = std::max(cell, std::min(l.levels()[y], m.levels()[z]));
    }
  return {l.chain_ptr(), std::move(out)};
}

namespace {

std::size_t candidate_count(std::size_t order, std::size_t base, std::size_t budget) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < order; ++i) {
    if (count > budget / base) throw CapacityError("fuzzy enumeration exceeds budget");
    count *= base;
  }
  if (count > budget) throw CapacityError("fuzzy enumeration exceeds budget");
  return count;
}

// Odometer over level vectors, last element fastest.
template <typename F>
void for_each_levels(std::size_t order, std::size_t base, F&& f) {
  Levels lv(order, 0);
  for (;;) {
    f(lv);
    std::size_t i = order;
    while (i > 0) {
      --i;
      if (++lv[i] < base) break;
      lv[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace

std::vector<FuzzySubset> enumerate_fuzzy_subsets(std::size_t order, const ChainPtr& chain,
                                                 std::size_t budget) {
  candidate_count(order, chain->size(), budget);
  std::vector<FuzzySubset> out;
  for_each_levels(order, chain->size(), [&](const Levels& lv) { out.emplace_back(chain, lv); });
  return out;
}

std::vector<FuzzySubset> enumerate_fuzzy_hyperideals(const SemihyperringTable& r,
                                                     const ChainPtr& chain,
                                                     const FuzzyEnumOptions& opts) {
  candidate_count(r.order(), chain->size(), opts.budget);
  std::vector<FuzzySubset> out;
  const auto top = chain->top();
  const auto zero = r.zero();
  for_each_levels(r.order(), chain->size(), [&](const Levels& lv) {
    if (opts.regime == ZeroRegime::unit_at_zero && lv[zero] != top) return;
    if (fuzzy_ideal_levels(r, lv, opts.side)) out.emplace_back(chain, lv);
  });
  return out;
}

}  // namespace shr
