#include "shr/structures.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "shr/parallel.hpp"

namespace shr {

SemihyperringTable example_1_3() {
  // Elements 0, a, b, c -> indices 0..3.
  constexpr Mask z = bit(0), a = bit(1), b = bit(2), c = bit(3);
  std::vector<Mask> add = {
      z, z,     z,     z,      //
      z, a | b, b,     c,      //
      z, b,     z | b, c,      //
      z, c,     c,     z | c,  //
  };
  std::vector<std::uint8_t> mul = {
      0, 0, 0, 0,  //
      0, 1, 1, 1,  //
      0, 2, 2, 2,  //
      0, 3, 3, 3,  //
  };
  return {"example_1_3", {"0", "a", "b", "c"}, 0, std::move(add), std::move(mul)};
}

SemihyperringTable t2() {
  // Points 1, 2 are bits 0, 1: e = {}, s = {1}, x = {1,2}.
  return from_topology(2, {0b00, 0b01, 0b11}, {"e", "s", "x"}, "T2");
}

SemihyperringTable one_element() { return {"trivial", {"0"}, 0, {bit(0)}, {0}}; }

bool is_topology(std::size_t points, const std::vector<Mask>& open_sets) {
  if (points == 0 || points > 6) return false;
  const Mask x = full_mask(points);
  auto has = [&](Mask m) {
    return std::find(open_sets.begin(), open_sets.end(), m) != open_sets.end();
  };
  if (!has(0) || !has(x)) return false;
  for (auto u : open_sets) {
    if ((u & ~x) != 0) return false;
    for (auto v : open_sets)
      if (!has(u | v) || !has(u & v)) return false;
  }
  auto sorted = open_sets;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

SemihyperringTable from_topology(std::size_t points, const std::vector<Mask>& open_sets,
                                 std::vector<std::string> names, std::string name) {
  if (!is_topology(points, open_sets))
    throw DomainError("open sets do not form a topology on the point set");
  std::vector<Mask> opens{0};
  for (auto u : open_sets)
    if (u != 0) opens.push_back(u);
  const std::size_t n = opens.size();
  if (n > kMaxOrder) throw CapacityError("topology has more than 64 open sets");
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back("U" + std::to_string(i));
  if (names.size() != n) throw DomainError("one name per open set is required");
  auto index = [&](Mask u) {
    return static_cast<std::size_t>(std::find(opens.begin(), opens.end(), u) - opens.begin());
  };
  std::vector<Mask> add(n * n);
  std::vector<std::uint8_t> mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      add[i * n + j] = bit(index(opens[i] | opens[j]));
      mul[i * n + j] = static_cast<std::uint8_t>(index(opens[i] & opens[j]));
    }
  return {std::move(name), std::move(names), 0, std::move(add), std::move(mul)};
}

std::vector<std::vector<Mask>> all_topologies(std::size_t points) {
  if (points == 0 || points > 4) throw DomainError("topology enumeration supports 1..4 points");
  const std::size_t subsets = std::size_t{1} << points;
  const Mask x = full_mask(points);
  std::vector<std::vector<Mask>> out;
  // Families always contain {} and X; choose the rest.
  const std::size_t inner = subsets - 2;
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << inner); ++f) {
    std::vector<Mask> family{0};
    for (std::size_t k = 0; k < inner; ++k)
      if (f & (std::uint64_t{1} << k)) family.push_back(k + 1);
    family.push_back(x);
    if (is_topology(points, family)) out.push_back(std::move(family));
  }
  return out;
}

std::vector<std::string> census_names(std::size_t order) {
  std::vector<std::string> names{"0"};
  for (std::size_t i = 1; i < order; ++i) {
    if (i <= 26)
      names.emplace_back(1, static_cast<char>('a' + i - 1));
    else
      names.push_back("e" + std::to_string(i));
  }
  return names;
}

void check_census_config(const CensusConfig& cfg) {
  if (cfg.order < 1 || cfg.order > 4) throw DomainError("census order must be in 1..4");
  if (cfg.mode == CensusMode::exhaustive && cfg.order > 3)
    throw DomainError("exhaustive census is limited to order 3; use sampled mode");
  if (cfg.mode == CensusMode::sampled) {
    if (!cfg.seed) throw DomainError("sampled census requires a seed");
    if (cfg.sample_count == 0) throw DomainError("sampled census requires a positive count");
  }
}

std::uint64_t census_search_space(std::size_t order) {
  std::uint64_t total = 1;
  const std::uint64_t add_choices = (std::uint64_t{1} << order) - 1;
  for (std::size_t k = 0; k < order * (order - 1) / 2; ++k) total *= add_choices;
  for (std::size_t k = 0; k < (order - 1) * (order - 1); ++k) total *= order;
  return total;
}

namespace {

// Free cells of a census table: add cells for nonzero i <= j, then mul cells
// for nonzero (i, j).
struct CellLayout {
  std::size_t n;
  std::vector<std::pair<std::size_t, std::size_t>> add_cells;
  std::vector<std::pair<std::size_t, std::size_t>> mul_cells;

  explicit CellLayout(std::size_t order) : n(order) {
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) add_cells.emplace_back(i, j);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 1; j < n; ++j) mul_cells.emplace_back(i, j);
  }

  std::size_t cells() const { return add_cells.size() + mul_cells.size(); }
  std::uint64_t radix(std::size_t k) const {
    return k < add_cells.size() ? (std::uint64_t{1} << n) - 1 : n;
  }

  // digits: add digit d means mask d+1; mul digit is the element.
  SemihyperringTable build(const std::vector<std::uint64_t>& digits,
                           const std::string& name) const {
    std::vector<Mask> add(n * n, 0);
    std::vector<std::uint8_t> mul(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      add[x] = bit(x);
      add[x * n] = bit(x);
    }
    for (std::size_t k = 0; k < add_cells.size(); ++k) {
      auto [i, j] = add_cells[k];
      add[i * n + j] = add[j * n + i] = digits[k] + 1;
    }
    for (std::size_t k = 0; k < mul_cells.size(); ++k) {
      auto [i, j] = mul_cells[k];
      mul[i * n + j] = static_cast<std::uint8_t>(digits[add_cells.size() + k]);
    }
    return {name, census_names(n), 0, std::move(add), std::move(mul)};
  }
};

bool accept(const CensusConfig& cfg, const SemihyperringTable& r) {
  if (cfg.require_commutative_mul && !r.mul_commutative()) return false;
  return is_semihyperring(r);
}

std::string census_id(std::size_t order, std::uint64_t index, char tag) {
  return "n" + std::to_string(order) + tag + std::to_string(index);
}

void exhaustive(const CensusConfig& cfg,
                const std::function<void(const SemihyperringTable&)>& sink) {
  const CellLayout layout(cfg.order);
  if (layout.cells() == 0) {
    auto r = one_element().renamed(census_id(1, 0, 'e'));
    if (accept(cfg, r)) sink(r);
    return;
  }
  // Partition by the leading cell; each slot enumerates the remaining cells
  // in odometer order so concatenating slots reproduces global order.
  const std::uint64_t lead = layout.radix(0);
  std::vector<std::vector<SemihyperringTable>> slots(lead);
  std::uint64_t per_slot = 1;
  for (std::size_t k = 1; k < layout.cells(); ++k) per_slot *= layout.radix(k);
  parallel_for(lead, [&](std::size_t slot) {
    std::vector<std::uint64_t> digits(layout.cells(), 0);
    digits[0] = slot;
    for (std::uint64_t idx = 0; idx < per_slot; ++idx) {
      std::uint64_t rem = idx;
      for (std::size_t k = layout.cells(); k-- > 1;) {
        digits[k] = rem % layout.radix(k);
        rem /= layout.radix(k);
      }
      auto r = layout.build(digits, census_id(cfg.order, slot * per_slot + idx, 'e'));
      if (accept(cfg, r)) slots[slot].push_back(std::move(r));
    }
  });
  for (const auto& s : slots)
    for (const auto& r : s) sink(r);
}

// Multiplication tables with zero forced and associativity holding.
std::vector<std::vector<std::uint8_t>> associative_mul_tables(const CellLayout& layout) {
  const std::size_t n = layout.n;
  std::vector<std::vector<std::uint8_t>> out;
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < layout.mul_cells.size(); ++k) count *= n;
  std::vector<std::uint8_t> mul(n * n, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rem = idx;
    for (std::size_t k = layout.mul_cells.size(); k-- > 0;) {
      auto [i, j] = layout.mul_cells[k];
      mul[i * n + j] = static_cast<std::uint8_t>(rem % n);
      rem /= n;
    }
    bool ok = true;
    for (std::size_t x = 1; x < n && ok; ++x)
      for (std::size_t y = 1; y < n && ok; ++y)
        for (std::size_t z = 1; z < n && ok; ++z)
          ok = mul[x * n + mul[y * n + z]] == mul[mul[x * n + y] * n + z];
    if (ok) out.push_back(mul);
  }
  return out;
}

// Hyperaddition table under construction; unknown cells make a check
// undecidable rather than failing it.
class PartialAdd {
 public:
  PartialAdd(std::size_t n, const std::vector<std::uint8_t>& mul)
      : n_(n), mul_(mul), add_(n * n, 0), known_(n * n, false) {
    for (std::size_t x = 0; x < n; ++x) set(0, x, bit(x));
  }

  void set(std::size_t x, std::size_t y, Mask m) {
    add_[x * n_ + y] = add_[y * n_ + x] = m;
    known_[x * n_ + y] = known_[y * n_ + x] = true;
  }
  void clear(std::size_t x, std::size_t y) {
    known_[x * n_ + y] = known_[y * n_ + x] = false;
  }
  const std::vector<Mask>& cells() const { return add_; }

  bool consistent() const {
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y)
        for (std::size_t z = 0; z < n_; ++z) {
          auto yz = cell(y, z);
          auto xy = cell(x, y);
          if (yz && xy) {
            auto l = apply(bit(x), *yz);
            auto r = apply(*xy, bit(z));
            if (l && r && *l != *r) return false;
          }
          if (yz) {
            auto l = cell(mul(x, y), mul(x, z));
            if (l && *l != mul_set(bit(x), *yz)) return false;
          }
          if (xy) {
            auto r = cell(mul(x, z), mul(y, z));
            if (r && *r != mul_set(*xy, bit(z))) return false;
          }
        }
    return true;
  }

 private:
  std::size_t mul(std::size_t x, std::size_t y) const { return mul_[x * n_ + y]; }
  std::optional<Mask> cell(std::size_t x, std::size_t y) const {
    if (!known_[x * n_ + y]) return std::nullopt;
    return add_[x * n_ + y];
  }
  std::optional<Mask> apply(Mask a, Mask b) const {
    Mask out = 0;
    bool ok = true;
    for_each_bit(a, [&](std::size_t x) {
      for_each_bit(b, [&](std::size_t y) {
        if (!known_[x * n_ + y]) ok = false;
        out |= add_[x * n_ + y];
      });
    });
    if (!ok) return std::nullopt;
    return out;
  }
  Mask mul_set(Mask a, Mask b) const {
    Mask out = 0;
    for_each_bit(a, [&](std::size_t x) { for_each_bit(b, [&](std::size_t y) { out |= bit(mul(x, y)); }); });
    return out;
  }

  std::size_t n_;
  const std::vector<std::uint8_t>& mul_;
  std::vector<Mask> add_;
  std::vector<bool> known_;
};

// Randomized depth-first completion of the free add cells.
bool complete_add(PartialAdd& p, const CellLayout& layout, std::size_t k, std::mt19937_64& rng,
                  std::size_t& budget) {
  if (k == layout.add_cells.size()) return true;
  const auto [i, j] = layout.add_cells[k];
  std::vector<Mask> values((std::size_t{1} << layout.n) - 1);
  std::iota(values.begin(), values.end(), Mask{1});
  std::shuffle(values.begin(), values.end(), rng);
  for (auto v : values) {
    if (budget == 0) return false;
    --budget;
    p.set(i, j, v);
    if (p.consistent() && complete_add(p, layout, k + 1, rng, budget)) return true;
  }
  p.clear(i, j);
  return false;
}

// Draws an associative multiplication uniformly, then completes the
// hyperaddition by randomized backtracking. Plain uniform draws from the full
// order-4 table space essentially never land on a semihyperring.
void sampled(const CensusConfig& cfg, const std::function<void(const SemihyperringTable&)>& sink) {
  const CellLayout layout(cfg.order);
  std::mt19937_64 rng(*cfg.seed);
  const std::size_t max_draws = cfg.max_draws ? cfg.max_draws : 1000 * cfg.sample_count;
  if (layout.cells() == 0) {
    auto r = one_element().renamed(census_id(1, 0, 's'));
    if (accept(cfg, r)) sink(r);
    return;
  }
  const auto muls = associative_mul_tables(layout);
  const std::size_t n = layout.n;
  std::size_t emitted = 0;
  for (std::size_t draw = 0; draw < max_draws && emitted < cfg.sample_count; ++draw) {
    const auto& mul = muls[std::uniform_int_distribution<std::size_t>(0, muls.size() - 1)(rng)];
    if (cfg.require_commutative_mul) {
      bool comm = true;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) comm = comm && mul[x * n + y] == mul[y * n + x];
      if (!comm) continue;
    }
    PartialAdd partial(n, mul);
    std::size_t budget = 20000;
    if (!complete_add(partial, layout, 0, rng, budget)) continue;
    SemihyperringTable r(census_id(n, draw, 's'), census_names(n), 0, partial.cells(), mul);
    if (accept(cfg, r)) {
      sink(r);
      ++emitted;
    }
  }
}

}  // namespace

void census_for_each(const CensusConfig& cfg,
                     const std::function<void(const SemihyperringTable&)>& sink) {
  check_census_config(cfg);
  if (cfg.mode == CensusMode::exhaustive)
    exhaustive(cfg, sink);
  else
    sampled(cfg, sink);
}

std::vector<SemihyperringTable> census(const CensusConfig& cfg) {
  std::vector<SemihyperringTable> out;
  census_for_each(cfg, [&](const SemihyperringTable& r) { out.push_back(r); });
  return out;
}

std::vector<std::uint64_t> table_encoding(const SemihyperringTable& r) {
  std::vector<std::uint64_t> out(r.addition().cells().begin(), r.addition().cells().end());
  out.insert(out.end(), r.mul_cells().begin(), r.mul_cells().end());
  return out;
}

SemihyperringTable permuted(const SemihyperringTable& r, const std::vector<std::size_t>& perm) {
  const std::size_t n = r.order();
  if (perm.size() != n) throw DomainError("permutation size does not match the carrier");
  auto map_mask = [&](Mask m) {
    Mask out = 0;
    for_each_bit(m, [&](std::size_t i) { out |= bit(perm[i]); });
    return out;
  };
  std::vector<Mask> add(n * n);
  std::vector<std::uint8_t> mul(n * n);
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    names[perm[x]] = r.element_name(x);
    for (std::size_t y = 0; y < n; ++y) {
      add[perm[x] * n + perm[y]] = map_mask(r.add(x, y));
      mul[perm[x] * n + perm[y]] = static_cast<std::uint8_t>(perm[r.mul(x, y)]);
    }
  }
  return {r.name(), std::move(names), perm[r.zero()], std::move(add), std::move(mul)};
}

std::vector<std::uint64_t> canonical_form(const SemihyperringTable& r) {
  const std::size_t n = r.order();
  if (n > 9) throw CapacityError("canonical form limited to 9 elements");
  // Send zero to index 0 and permute the rest.
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < n; ++i)
    if (i != r.zero()) others.push_back(i);
  std::vector<std::size_t> targets(others.size());
  std::iota(targets.begin(), targets.end(), 1);
  std::vector<std::uint64_t> best;
  do {
    std::vector<std::size_t> perm(n);
    perm[r.zero()] = 0;
    for (std::size_t k = 0; k < others.size(); ++k) perm[others[k]] = targets[k];
    auto enc = table_encoding(permuted(r, perm));
    if (best.empty() || enc < best) best = std::move(enc);
  } while (std::next_permutation(targets.begin(), targets.end()));
  best.insert(best.begin(), n);
  return best;
}

bool iso_equivalent(const SemihyperringTable& a, const SemihyperringTable& b) {
  return a.order() == b.order() && canonical_form(a) == canonical_form(b);
}

}  // namespace shr
