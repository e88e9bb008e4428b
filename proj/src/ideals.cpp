#include "shr/ideals.hpp"

#include <algorithm>
#include <set>

namespace shr {

std::string_view to_string(Side s) {
  switch (s) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::two_sided: return "two";
  }
  return "two";
}

std::optional<Side> parse_side(std::string_view s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  if (s == "two" || s == "two-sided") return Side::two_sided;
  return std::nullopt;
}

namespace {

void require_nonempty(const SemihyperringTable& r, const CrispSubset& s) {
  if (s.order() != r.order()) throw StructureError("subset refers to a different carrier");
  if (s.is_empty()) throw DomainError("empty subset");
}

bool additively_closed(const SemihyperringTable& r, Mask s) {
  return (r.addition().apply(s, s) & ~s) == 0;
}

bool multiplicatively_closed(const SemihyperringTable& r, Mask s) {
  return (mul_mask(r, s, s) & ~s) == 0;
}

// R.s for left absorption, s.R for right.
Mask absorbed(const SemihyperringTable& r, Mask s, Side side) {
  const Mask all = full_mask(r.order());
  switch (side) {
    case Side::left: return mul_mask(r, all, s);
    case Side::right: return mul_mask(r, s, all);
    case Side::two_sided: return mul_mask(r, all, s) | mul_mask(r, s, all);
  }
  return 0;
}

bool ideal_mask(const SemihyperringTable& r, Mask s, Side side) {
  return s != 0 && additively_closed(r, s) && multiplicatively_closed(r, s) &&
         (absorbed(r, s, side) & ~s) == 0;
}

}  // namespace

bool is_subsemihyperring(const SemihyperringTable& r, const CrispSubset& s) {
  require_nonempty(r, s);
  return additively_closed(r, s.mask()) && multiplicatively_closed(r, s.mask());
}

bool is_ideal(const SemihyperringTable& r, const CrispSubset& i, Side side) {
  require_nonempty(r, i);
  return ideal_mask(r, i.mask(), side);
}

bool is_right_hyperideal(const SemihyperringTable& r, const CrispSubset& i) {
  return is_ideal(r, i, Side::right);
}

bool is_left_hyperideal(const SemihyperringTable& r, const CrispSubset& i) {
  return is_ideal(r, i, Side::left);
}

bool is_hyperideal(const SemihyperringTable& r, const CrispSubset& i) {
  return is_ideal(r, i, Side::two_sided);
}

namespace {

Mask generated_mask(const SemihyperringTable& r, Mask a, Side side) {
  Mask c = a | bit(r.zero());
  for (;;) {
    Mask next = c | r.addition().apply(c, c) | mul_mask(r, c, c) | absorbed(r, c, side);
    if (next == c) return c;
    c = next;
  }
}

}  // namespace

CrispSubset generated_ideal(const SemihyperringTable& r, const CrispSubset& a, Side side) {
  if (a.order() != r.order()) throw StructureError("subset refers to a different carrier");
  return r.subset(generated_mask(r, a.mask(), side));
}

bool IdealLattice::contains(const CrispSubset& s) const { return index_of(s).has_value(); }

std::optional<std::size_t> IdealLattice::index_of(const CrispSubset& s) const {
  auto it = std::lower_bound(ideals.begin(), ideals.end(), s);
  if (it == ideals.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - ideals.begin());
}

IdealLattice enumerate_ideals_by_filter(const SemihyperringTable& r, Side side) {
  const std::size_t n = r.order();
  if (n > kSubsetFilterLimit)
    throw CapacityError("subset filter limited to carriers of at most 16 elements");
  IdealLattice out{side, {}};
  const Mask limit = Mask{1} << n;
  for (Mask m = 1; m < limit; ++m)
    if (ideal_mask(r, m, side)) out.ideals.emplace_back(n, m);
  return out;
}

IdealLattice enumerate_ideals_by_closure(const SemihyperringTable& r, Side side) {
  const std::size_t n = r.order();
  if (n > kEnumerationLimit) throw CapacityError("ideal enumeration limited to 24 elements");
  // Every ideal J is reached from the minimal ideal by adjoining its members
  // one at a time, so the walk over single-element extensions is complete.
  std::set<Mask> seen;
  std::vector<Mask> stack{generated_mask(r, 0, side)};
  seen.insert(stack.front());
  while (!stack.empty()) {
    const Mask cur = stack.back();
    stack.pop_back();
    for (std::size_t x = 0; x < n; ++x) {
      if (cur & bit(x)) continue;
      const Mask next = generated_mask(r, cur | bit(x), side);
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  IdealLattice out{side, {}};
  for (auto m : seen)
    if (ideal_mask(r, m, side)) out.ideals.emplace_back(n, m);
  return out;
}

IdealLattice enumerate_hyperideals(const SemihyperringTable& r, Side side) {
  if (r.order() <= kSubsetFilterLimit) return enumerate_ideals_by_filter(r, side);
  return enumerate_ideals_by_closure(r, side);
}

namespace {

void require_ideal(const SemihyperringTable& r, const CrispSubset& i) {
  if (i.order() != r.order() || i.is_empty() || !ideal_mask(r, i.mask(), Side::two_sided))
    throw DomainError("argument is not a hyperideal: " + r.format(i));
}

}  // namespace

IdealArithmetic ideal_sum(const SemihyperringTable& r, const CrispSubset& i,
                          const CrispSubset& j) {
  require_ideal(r, i);
  require_ideal(r, j);
  auto s = hyperadd_sets(r, i, j);
  return {s, ideal_mask(r, s.mask(), Side::two_sided)};
}

CrispSubset set_product(const SemihyperringTable& r, const CrispSubset& a,
                        const CrispSubset& b) {
  auto products = mul_sets(r, a, b);
  if (products.is_empty()) return products;
  return additive_closure(r, products);
}

IdealArithmetic ideal_product(const SemihyperringTable& r, const CrispSubset& i,
                              const CrispSubset& j) {
  require_ideal(r, i);
  require_ideal(r, j);
  auto p = set_product(r, i, j);
  return {p, ideal_mask(r, p.mask(), Side::two_sided)};
}

bool is_idempotent_ideal(const SemihyperringTable& r, const CrispSubset& i) {
  return ideal_product(r, i, i).result == i;
}

std::optional<CrispSubset> non_idempotent_ideal(const SemihyperringTable& r,
                                                const IdealLattice& ideals) {
  for (const auto& i : ideals.ideals)
    if (set_product(r, i, i) != i) return i;
  return std::nullopt;
}

bool is_fully_idempotent(const SemihyperringTable& r, const IdealLattice& ideals) {
  return !non_idempotent_ideal(r, ideals).has_value();
}

bool is_fully_idempotent(const SemihyperringTable& r) {
  return is_fully_idempotent(r, enumerate_hyperideals(r));
}

RegularityResult is_regular(const SemihyperringTable& r) {
  const std::size_t n = r.order();
  RegularityResult out;
  out.witness.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t a = 0; a < n; ++a)
      if (r.mul(r.mul(x, a), x) == x) {
        out.witness[x] = a;
        break;
      }
    if (!out.witness[x] && out.regular) {
      out.regular = false;
      out.failing_element = x;
    }
  }
  return out;
}

RegularLemmaCheck check_regular_lemma(const SemihyperringTable& r) {
  RegularLemmaCheck out;
  out.regular = is_regular(r).regular;
  out.products_match = true;
  const auto rights = enumerate_hyperideals(r, Side::right);
  const auto lefts = enumerate_hyperideals(r, Side::left);
  for (const auto& i : rights.ideals) {
    for (const auto& l : lefts.ideals) {
      if (set_product(r, i, l) != (i & l)) {
        out.products_match = false;
        out.mismatch = std::make_pair(i, l);
        return out;
      }
    }
  }
  return out;
}

bool is_prime_ideal(const SemihyperringTable& r, const CrispSubset& i, const IdealLattice& l) {
  require_ideal(r, i);
  for (const auto& a : l.ideals)
    for (const auto& b : l.ideals)
      if (set_product(r, a, b).subset_of(i) && !a.subset_of(i) && !b.subset_of(i)) return false;
  return true;
}

bool is_prime_ideal(const SemihyperringTable& r, const CrispSubset& i) {
  return is_prime_ideal(r, i, enumerate_hyperideals(r));
}

bool is_irreducible_ideal(const SemihyperringTable& r, const CrispSubset& i,
                          const IdealLattice& l) {
  require_ideal(r, i);
  for (const auto& a : l.ideals)
    for (const auto& b : l.ideals)
      if ((a & b) == i && a != i && b != i) return false;
  return true;
}

bool is_irreducible_ideal(const SemihyperringTable& r, const CrispSubset& i) {
  return is_irreducible_ideal(r, i, enumerate_hyperideals(r));
}

}  // namespace shr
