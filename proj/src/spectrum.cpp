#include "shr/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace shr {

std::size_t SpectrumTopology::open_index(const PrimeSet& s) const {
  return static_cast<std::size_t>(std::find(opens.begin(), opens.end(), s) - opens.begin());
}

std::vector<FuzzySubset> fuzzy_prime_spectrum(FuzzyContext& ctx) {
  std::vector<FuzzySubset> out;
  for (auto p : ctx.primes())
    if (!ctx.ideals()[p].is_top()) out.push_back(ctx.ideals()[p]);
  return out;
}

PrimeSet open_set(const std::vector<FuzzySubset>& primes, const FuzzySubset& lambda) {
  PrimeSet s(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (!leq(lambda, primes[i])) s.set(i);
  return s;
}

SpectrumTopology build_topology(FuzzyContext& ctx) {
  SpectrumTopology t;
  t.structure_id = ctx.ring().name();
  t.chain = ctx.chain();
  t.regime = ctx.regime();
  t.primes = fuzzy_prime_spectrum(ctx);
  t.generators = ctx.ideals();
  for (const auto& g : t.generators) {
    auto o = open_set(t.primes, g);
    auto idx = t.open_index(o);
    if (idx == t.opens.size()) t.opens.push_back(std::move(o));
    t.generator_map.push_back(idx);
  }
  return t;
}

namespace {

TheoremReport start(std::string id, const std::string& structure, const ChainPtr& chain,
                    ZeroRegime regime) {
  TheoremReport rep;
  rep.theorem_id = std::move(id);
  rep.structure_id = structure;
  rep.chain = chain;
  rep.regime = regime;
  return rep;
}

PrimeSet union_of(const SpectrumTopology& t, const std::vector<std::size_t>& members) {
  PrimeSet s(t.primes.size());
  for (auto m : members) s |= t.opens[t.generator_map[m]];
  return s;
}

std::vector<FuzzySubset> pick(const SpectrumTopology& t, const std::vector<std::size_t>& members) {
  std::vector<FuzzySubset> out;
  for (auto m : members) out.push_back(t.generators[m]);
  return out;
}

// Adds a witness unless the same claim already has one.
void note_failure(TheoremReport& rep, Witness w) {
  const bool seen = std::any_of(rep.witnesses.begin(), rep.witnesses.end(),
                                [&](const Witness& o) { return o.claim == w.claim; });
  if (!seen) rep.witnesses.push_back(std::move(w));
}

}  // namespace

TheoremReport verify_topology_axioms(const SemihyperringTable& r, const SpectrumTopology& t,
                                     const TopologyCheckOptions& opts) {
  const auto clock = std::chrono::steady_clock::now();
  auto rep = start("topology", t.structure_id, t.chain, t.regime);
  const std::size_t k = t.generators.size();
  const std::size_t order = r.order();
  const auto& chain = t.chain;

  const bool bottom_empty = open_set(t.primes, FuzzySubset::bottom(chain, order)).none();
  const bool top_full = open_set(t.primes, FuzzySubset::top(chain, order)).all();
  if (!bottom_empty) note_failure(rep, {"open-bottom-not-empty", {}, {}, {}});
  if (!top_full) note_failure(rep, {"open-top-not-full", {}, {}, {}});

  bool meets = true, unions = true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const auto& a = t.generators[i];
      const auto& b = t.generators[j];
      rep.checked += 2;
      const auto lhs = t.opens[t.generator_map[i]] & t.opens[t.generator_map[j]];
      if (lhs != open_set(t.primes, meet(a, b))) {
        meets = false;
        note_failure(rep, {"open-meet-mismatch", {}, {a, b}, {}});
      }
      if (union_of(t, {i, j}) != open_set(t.primes, fuzzy_sum(r, a, b))) {
        unions = false;
        note_failure(rep, {"open-union-mismatch", {}, {a, b}, {}});
      }
    }

  std::vector<std::vector<std::size_t>> families;
  families.emplace_back();  // empty family: union is {} and the sum is phi
  for (std::size_t i = 0; i < k; ++i) families.push_back({i});
  std::vector<std::size_t> all(k);
  std::iota(all.begin(), all.end(), 0);
  families.push_back(all);
  std::mt19937_64 rng(opts.seed);
  if (k >= 3) {
    for (std::size_t s = 0; s < opts.union_samples; ++s) {
      const std::size_t hi = std::min(opts.max_union_size, k);
      const std::size_t size = std::uniform_int_distribution<std::size_t>(3, std::max<std::size_t>(3, hi))(rng);
      auto members = all;
      std::shuffle(members.begin(), members.end(), rng);
      members.resize(std::min(size, k));
      std::sort(members.begin(), members.end());
      families.push_back(std::move(members));
    }
  }
  for (const auto& f : families) {
    ++rep.checked;
    const auto fam = pick(t, f);
    if (union_of(t, f) != open_set(t.primes, family_sum(r, chain, fam))) {
      unions = false;
      note_failure(rep, {"open-union-mismatch", {}, fam, {}});
    }
  }

  bool closed = t.open_index(PrimeSet(t.primes.size())) < t.opens.size() &&
                t.open_index(~PrimeSet(t.primes.size())) < t.opens.size();
  for (std::size_t i = 0; i < k && closed; ++i)
    for (std::size_t j = i; j < k && closed; ++j) {
      const auto& a = t.opens[t.generator_map[i]];
      const auto& b = t.opens[t.generator_map[j]];
      if (t.open_index(a & b) == t.opens.size() || t.open_index(a | b) == t.opens.size()) {
        closed = false;
        note_failure(rep, {"open-family-not-closed", {}, {t.generators[i], t.generators[j]}, {}});
      }
    }
  if (!closed && rep.witnesses.empty()) note_failure(rep, {"open-family-not-closed", {}, {}, {}});

  bool monotone = true;
  for (std::size_t i = 0; i < k && monotone; ++i)
    for (std::size_t j = 0; j < k && monotone; ++j)
      if (leq(t.generators[i], t.generators[j]) &&
          !t.opens[t.generator_map[i]].is_subset_of(t.opens[t.generator_map[j]]))
        monotone = false;

  rep.flags = {{"bottom_open_empty", bottom_empty}, {"top_open_full", top_full},
               {"meet_identity", meets},            {"union_identity", unions},
               {"family_closed", closed},           {"monotone", monotone}};
  rep.notes.push_back("primes: " + std::to_string(t.primes.size()) +
                      ", opens: " + std::to_string(t.opens.size()) +
                      ", generators: " + std::to_string(k));
  const bool ok = bottom_empty && top_full && meets && unions && closed && monotone;
  rep.verdict = ok ? Verdict::holds : Verdict::fails;
  rep.elapsed = std::chrono::steady_clock::now() - clock;
  return rep;
}

TheoremReport verify_lattice_iso(FuzzyContext& ctx, const TopologyCheckOptions& opts) {
  const auto clock = std::chrono::steady_clock::now();
  const auto& r = ctx.ring();
  const auto t = build_topology(ctx);
  auto rep = start("lattice-iso", t.structure_id, t.chain, t.regime);
  const auto axioms = verify_topology_axioms(r, t, opts);
  rep.checked = axioms.checked;
  rep.witnesses = axioms.witnesses;

  const std::size_t k = t.generators.size();
  const bool injective = t.opens.size() == k;
  for (std::size_t i = 0; i < k && !injective; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (t.generator_map[i] == t.generator_map[j]) {
        note_failure(rep, {"not-injective", {}, {t.generators[i], t.generators[j]}, {}});
        i = k;
        break;
      }
  rep.checked += k;

  bool product_meet = true;
  if (ctx.fully_idempotent())
    for (std::size_t i = 0; i < k && product_meet; ++i)
      for (std::size_t j = 0; j < k && product_meet; ++j)
        product_meet = (t.opens[t.generator_map[i]] & t.opens[t.generator_map[j]]) ==
                       open_set(t.primes, ctx.product(i, j));

  rep.flags = axioms.flags;
  rep.flags.emplace_back("injective", injective);
  rep.flags.emplace_back("fully_idempotent", ctx.fully_idempotent());
  if (ctx.fully_idempotent()) rep.flags.emplace_back("product_identity", product_meet);
  rep.notes = axioms.notes;

  if (!ctx.fully_idempotent()) {
    rep.verdict = Verdict::not_applicable;
    rep.witnesses.clear();
  } else {
    const bool ok = axioms.verdict == Verdict::holds && injective && product_meet;
    rep.verdict = ok ? Verdict::holds : Verdict::fails;
  }
  rep.elapsed = std::chrono::steady_clock::now() - clock;
  return rep;
}

bool replay_spectrum_witness(const SemihyperringTable& r, const ChainPtr& chain, const Witness& w,
                             ZeroRegime regime) {
  static constexpr std::string_view known[] = {
      "open-bottom-not-empty", "open-top-not-full",      "open-meet-mismatch",
      "open-union-mismatch",   "open-family-not-closed", "not-injective"};
  if (std::find(std::begin(known), std::end(known), w.claim) == std::end(known)) return false;
  FuzzyContext ctx(r, chain, regime);
  const auto primes = fuzzy_prime_spectrum(ctx);
  const auto& f = w.fuzzy;
  for (const auto& g : f)
    if (!ctx.index_of(g)) return false;
  if (w.claim == "open-bottom-not-empty")
    return open_set(primes, FuzzySubset::bottom(chain, r.order())).any();
  if (w.claim == "open-top-not-full") return !open_set(primes, FuzzySubset::top(chain, r.order())).all();
  if (w.claim == "open-meet-mismatch")
    return f.size() == 2 &&
           (open_set(primes, f[0]) & open_set(primes, f[1])) != open_set(primes, meet(f[0], f[1]));
  if (w.claim == "open-union-mismatch") {
    PrimeSet u(primes.size());
    for (const auto& g : f) u |= open_set(primes, g);
    return u != open_set(primes, family_sum(r, chain, f));
  }
  if (w.claim == "not-injective")
    return f.size() == 2 && f[0] != f[1] && open_set(primes, f[0]) == open_set(primes, f[1]);
  const auto t = build_topology(ctx);
  if (f.size() != 2) return false;
  const auto a = open_set(primes, f[0]);
  const auto b = open_set(primes, f[1]);
  return t.open_index(a & b) == t.opens.size() || t.open_index(a | b) == t.opens.size();
}

}  // namespace shr
