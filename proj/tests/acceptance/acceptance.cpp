// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "shr/format.hpp"
#include "shr/harness.hpp"
#include "shr/parallel.hpp"
#include "shr/spectrum.hpp"
#include "shr/structures.hpp"

using namespace shr;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

const ChainPtr& chain3() {
  static const auto c = make_chain(GradeChain::parse("0 1/2 1"));
  return c;
}

const std::vector<SemihyperringTable>& census_up_to_3() {
  static const auto all = [] {
    std::vector<SemihyperringTable> out;
    for (std::size_t n = 1; n <= 3; ++n) {
      CensusConfig cfg;
      cfg.order = n;
      for (auto& r : census(cfg)) out.push_back(std::move(r));
    }
    return out;
  }();
  return all;
}

constexpr ZeroRegime kRegimes[] = {ZeroRegime::any, ZeroRegime::unit_at_zero};

// Counts structures where check() is false, in parallel, keeping the first
// few names for the report.
struct Tally {
  std::atomic<std::size_t> failures{0};
  std::atomic<std::size_t> checked{0};
  std::mutex m;
  std::vector<std::string> names;

  void fail(const std::string& what) {
    ++failures;
    std::lock_guard lock(m);
    if (names.size() < 5) names.push_back(what);
  }

  Outcome outcome(std::string detail) const {
    if (failures != 0) {
      detail += "; failures " + std::to_string(failures.load()) + ":";
      for (const auto& n : names) detail += " " + n;
    }
    return {failures == 0, detail};
  }
};

std::string regime_tag(ZeroRegime z) { return std::string(to_string(z)); }

// ---------------------------------------------------------------------------

Outcome fixture_fidelity() {
  const auto ex = example_1_3();
  Outcome o;
  const auto loaded = load_structure(std::string(SHR_FIXTURE_DIR) + "/example_1_3.shr");
  const bool round_trip = parse_structure(serialize_structure(loaded)) == loaded &&
                          loaded.renamed(ex.name()) == ex &&
                          parse_structure(serialize_structure(ex)) == ex;

  std::vector<CrispSubset> found;
  for (Mask m = 1; m <= full_mask(ex.order()); ++m) {
    const auto s = ex.subset(m);
    if (s.contains(ex.zero()) && is_right_hyperideal(ex, s)) found.push_back(s);
  }
  std::vector<CrispSubset> expected;
  for (auto lit : {"{0}", "{0,b}", "{0,c}", "{0,a,b}", "{0,b,c}", "{0,a,b,c}"})
    expected.push_back(parse_subset(lit, ex));
  std::sort(found.begin(), found.end());
  std::sort(expected.begin(), expected.end());
  const bool scan = found == expected;

  const auto rep = validate(ex, StructureClass::semihyperring);
  bool zero_reported = rep.has_failure("zero-add-identity");
  for (const auto& f : rep.failures)
    if (f.axiom == "zero-add-identity") zero_reported = zero_reported && recheck(ex, f);

  o.pass = round_trip && scan && zero_reported && !rep.ok();
  o.detail = std::string("round trip ") + (round_trip ? "ok" : "BROKEN") + ", right ideals with 0: " +
             std::to_string(found.size()) + (scan ? " as listed" : " DIFFER") +
             ", zero-axiom failure " + (zero_reported ? "reported" : "MISSING");
  return o;
}

Outcome generator_soundness() {
  std::size_t total = 0, bad = 0;
  for (std::size_t p = 1; p <= 3; ++p)
    for (const auto& opens : all_topologies(p)) {
      ++total;
      if (!validate(from_topology(p, opens), StructureClass::semihyperring).ok()) ++bad;
    }
  return {bad == 0, std::to_string(total) + " topologies on 1..3 points, " + std::to_string(bad) +
                        " invalid"};
}

Outcome equivalence_sweep() {
  const auto& all = census_up_to_3();
  Tally t;
  std::atomic<std::size_t> fi{0}, comm{0};
  parallel_for(all.size(), [&](std::size_t i) {
    for (auto regime : kRegimes) {
      FuzzyContext ctx(all[i], chain3(), regime);
      const auto rep = verify_fully_idempotent_equivalences(ctx);
      ++t.checked;
      if (rep.verdict != Verdict::holds) t.fail(all[i].name() + "/" + regime_tag(regime));
      if (regime == ZeroRegime::any) {
        fi += rep.flag("fully_idempotent").value_or(false);
        comm += all[i].mul_commutative();
      }
    }
  });
  return t.outcome(std::to_string(all.size()) + " structures x 2 zero regimes, " +
                   std::to_string(fi.load()) + " fully idempotent, " + std::to_string(comm.load()) +
                   " with commutative multiplication");
}

Outcome regular_sweep() {
  const auto& all = census_up_to_3();
  Tally t;
  std::atomic<std::size_t> regular{0};
  parallel_for(all.size(), [&](std::size_t i) {
    for (auto regime : kRegimes) {
      const auto rep = verify_regular_characterization(all[i], chain3(), regime);
      if (rep.verdict != Verdict::holds) t.fail(all[i].name() + "/" + regime_tag(regime));
      if (regime == ZeroRegime::any) regular += rep.flag("regular").value_or(false);
    }
  });
  return t.outcome(std::to_string(all.size()) + " structures x 2 zero regimes, " +
                   std::to_string(regular.load()) + " regular");
}

Outcome prime_sweep() {
  const auto& all = census_up_to_3();
  Tally t;
  std::atomic<std::size_t> fi{0}, primes{0};
  parallel_for(all.size(), [&](std::size_t i) {
    if (!is_fully_idempotent(all[i])) return;
    ++fi;
    for (auto regime : kRegimes) {
      FuzzyContext ctx(all[i], chain3(), regime);
      const auto a = verify_prime_iff_irreducible(ctx);
      const auto b = verify_intersection_of_primes(ctx);
      if (a.verdict != Verdict::holds || b.verdict != Verdict::holds)
        t.fail(all[i].name() + "/" + regime_tag(regime));
      if (const auto* p = a.family("prime")) primes += p->size();
    }
  });
  return t.outcome(std::to_string(fi.load()) + " fully idempotent structures x 2 zero regimes, " +
                   std::to_string(primes.load()) + " fuzzy primes examined");
}

Outcome level_sweep() {
  const auto& all = census_up_to_3();
  Tally t;
  std::atomic<std::size_t> maps{0};
  parallel_for(all.size(), [&](std::size_t i) {
    const auto rep = verify_level_theorem(all[i], chain3());
    maps += rep.checked;
    if (rep.verdict != Verdict::holds) t.fail(all[i].name());
  });
  return t.outcome(std::to_string(all.size()) + " structures, " + std::to_string(maps.load()) +
                   " fuzzy subsets");
}

Outcome oracle_equivalence() {
  constexpr std::size_t kPairs = 100;
  constexpr std::size_t kMaxLength = 8;
  const auto& all = census_up_to_3();
  Tally t;
  std::atomic<std::size_t> pairs{0}, crisp{0};
  parallel_for(all.size(), [&](std::size_t i) {
    const auto& r = all[i];
    const auto ideals = enumerate_fuzzy_hyperideals(r, chain3());
    std::mt19937_64 rng(0x5eed + i);
    std::uniform_int_distribution<std::size_t> pick(0, ideals.size() - 1);
    for (std::size_t k = 0; k < kPairs; ++k) {
      const auto& l = ideals[pick(rng)];
      const auto& m = ideals[pick(rng)];
      const auto oracle = fuzzy_product_oracle(r, l, m, kMaxLength);
      ++pairs;
      if (!oracle.saturated || oracle.value != fuzzy_product(r, l, m)) {
        t.fail(r.name() + " pair " + std::to_string(k));
        return;
      }
    }
    const auto& crisp_ideals = enumerate_hyperideals(r).ideals;
    for (const auto& a : crisp_ideals)
      for (const auto& b : crisp_ideals) {
        ++crisp;
        const auto da = characteristic(a, chain3());
        const auto db = characteristic(b, chain3());
        if (fuzzy_product(r, da, db) != characteristic(ideal_product(r, a, b).result, chain3()) ||
            fuzzy_sum(r, da, db) != characteristic(ideal_sum(r, a, b).result, chain3())) {
          t.fail(r.name() + " " + r.format(a) + " " + r.format(b));
          return;
        }
      }
  });
  return t.outcome(std::to_string(pairs.load()) + " random fuzzy ideal pairs, " +
                   std::to_string(crisp.load()) + " crisp ideal pairs");
}

bool spectrum_holds(const SemihyperringTable& r) {
  FuzzyContext ctx(r, chain3(), ZeroRegime::unit_at_zero);
  const auto top = build_topology(ctx);
  return verify_topology_axioms(r, top).verdict == Verdict::holds &&
         verify_lattice_iso(ctx).verdict == Verdict::holds;
}

Outcome spectrum_sweep() {
  const auto& all = census_up_to_3();
  Tally t;
  std::atomic<std::size_t> fi{0};
  if (!spectrum_holds(t2())) t.fail("T2");
  parallel_for(all.size(), [&](std::size_t i) {
    if (!is_fully_idempotent(all[i])) return;
    ++fi;
    if (!spectrum_holds(all[i])) t.fail(all[i].name());
  });
  return t.outcome("T2 and " + std::to_string(fi.load()) +
                   " fully idempotent structures, fuzzy ideals with grade 1 at zero");
}

// ---------------------------------------------------------------------------
// Checks anchored on T2, reused against corrupted copies.

struct Anchored {
  std::string name;
  std::function<bool(const SemihyperringTable&)> ok;
};

std::vector<Anchored> t2_checks() {
  const auto reference = t2();
  const auto c = chain3();
  auto lit = [&](const char* s) { return parse_fuzzy_literal(s, reference, c); };
  std::vector<FuzzySubset> golden_primes{lit("e=1, s=0, x=0"), lit("e=1, s=1/2, x=1/2"),
                                         lit("e=1, s=1, x=0"), lit("e=1, s=1, x=1/2")};
  const auto mu1 = lit("e=1, s=1/2, x=0");
  const auto chi_e = lit("e=1, s=0, x=0");
  const auto top = FuzzySubset::top(c, 3);

  return {
      {"c2-cells",
       [](const SemihyperringTable& r) {
         const Mask opens[] = {0b00, 0b10, 0b11};
         for (std::size_t x = 0; x < 3; ++x)
           for (std::size_t y = 0; y < 3; ++y) {
             const auto u = std::find(std::begin(opens), std::end(opens), opens[x] | opens[y]);
             const auto n = std::find(std::begin(opens), std::end(opens), opens[x] & opens[y]);
             if (r.add(x, y) != bit(static_cast<std::size_t>(u - opens))) return false;
             if (r.mul(x, y) != static_cast<std::size_t>(n - opens)) return false;
           }
         return true;
       }},
      {"c2-valid",
       [](const SemihyperringTable& r) { return validate(r, StructureClass::semihyperring).ok(); }},
      {"c3-truth",
       [c](const SemihyperringTable& r) {
         FuzzyContext ctx(r, c);
         const auto rep = verify_fully_idempotent_equivalences(ctx);
         return rep.verdict == Verdict::holds && rep.flag("fully_idempotent") == true &&
                rep.flag("regular") == true && r.mul_commutative();
       }},
      {"c4-truth",
       [c](const SemihyperringTable& r) {
         const auto rep = verify_regular_characterization(r, c);
         return rep.verdict == Verdict::holds && rep.flag("regular") == true;
       }},
      {"c5-primes",
       [c, golden_primes](const SemihyperringTable& r) {
         FuzzyContext ctx(r, c, ZeroRegime::unit_at_zero);
         if (verify_prime_iff_irreducible(ctx).verdict != Verdict::holds) return false;
         if (verify_intersection_of_primes(ctx).verdict != Verdict::holds) return false;
         auto primes = fuzzy_prime_spectrum(ctx);
         std::sort(primes.begin(), primes.end());
         return primes == golden_primes;
       }},
      {"c6-level",
       [c](const SemihyperringTable& r) {
         return verify_level_theorem(r, c).verdict == Verdict::holds;
       }},
      {"c7-values",
       [mu1, chi_e, top](const SemihyperringTable& r) {
         if (!is_fuzzy_hyperideal(r, mu1)) return false;
         if (fuzzy_sum(r, mu1, chi_e).grade(1) != Grade(1, 2)) return false;
         if (fuzzy_product(r, mu1, top).grade(1) != Grade(1, 2)) return false;
         return fuzzy_product_oracle(r, mu1, top, 8).value == fuzzy_product(r, mu1, top);
       }},
      {"c8-spectrum",
       [c](const SemihyperringTable& r) {
         FuzzyContext ctx(r, c, ZeroRegime::unit_at_zero);
         const auto t = build_topology(ctx);
         return t.primes.size() == 4 && t.opens.size() == 6 && spectrum_holds(r);
       }},
  };
}

Outcome mutation_sanity(bool verbose) {
  const auto base = t2();
  const auto checks = t2_checks();
  for (const auto& ch : checks)
    if (!ch.ok(base)) return {false, "check " + ch.name + " fails on T2 itself"};

  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<std::size_t> elem(0, 2);
  std::uniform_int_distribution<Mask> cell(1, full_mask(3));
  std::size_t caught = 0, valid = 0;
  std::vector<std::size_t> fired(checks.size(), 0);
  std::string failures;
  constexpr std::size_t kMutants = 10;
  for (std::size_t k = 0; k < kMutants; ++k) {
    const bool on_add = rng() % 2 == 0;
    const auto x = elem(rng), y = elem(rng);
    SemihyperringTable mutant = base;
    std::string label;
    if (on_add) {
      Mask v;
      do v = cell(rng); while (v == base.add(x, y));
      mutant = base.with_add(x, y, v);
      label = "add " + base.element_name(x) + " " + base.element_name(y) + " = " + base.format(v);
    } else {
      std::size_t v;
      do v = elem(rng); while (v == base.mul(x, y));
      mutant = base.with_mul(x, y, v);
      label = "mul " + base.element_name(x) + " " + base.element_name(y) + " = " +
              base.element_name(v);
    }
    valid += is_semihyperring(mutant);
    std::string hit;
    for (std::size_t i = 0; i < checks.size(); ++i)
      if (!checks[i].ok(mutant)) {
        ++fired[i];
        hit += " " + checks[i].name;
      }
    if (!hit.empty()) ++caught;
    else failures += " [" + label + "]";
    if (verbose) std::printf("    mutant %zu: %-22s caught by:%s\n", k, label.c_str(),
                             hit.empty() ? " nothing" : hit.c_str());
  }
  std::string detail = std::to_string(caught) + "/" + std::to_string(kMutants) + " mutants caught (" +
                       std::to_string(valid) + " still semihyperrings); per check:";
  for (std::size_t i = 0; i < checks.size(); ++i)
    detail += " " + checks[i].name + "=" + std::to_string(fired[i]);
  if (!failures.empty()) detail += "; uncaught:" + failures;
  return {caught == kMutants, detail};
}

}  // namespace

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double limit_ms;  // 0 when there is no runtime bound
  };
  const std::vector<Criterion> criteria{
      {1, "fixture fidelity", fixture_fidelity, 1000},
      {2, "generator soundness", generator_soundness, 1000},
      {3, "fully idempotent equivalences", equivalence_sweep, 0},
      {4, "regular characterisation", regular_sweep, 0},
      {5, "primes, irreducibles and meets of primes", prime_sweep, 0},
      {6, "level-set biconditional", level_sweep, 0},
      {7, "product oracle and characteristic functions", oracle_equivalence, 0},
      {8, "spectrum topology and lattice isomorphism", spectrum_sweep, 0},
      {9, "mutation sanity", [verbose] { return mutation_sanity(verbose); }, 0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (c.limit_ms > 0 && ms > c.limit_ms) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_ms)) + " ms bound";
    }
    std::printf("%s criterion %d %s: %s (%.1f ms)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), ms);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
