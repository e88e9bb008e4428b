#include "shr/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "shr/format.hpp"
#include "shr/parallel.hpp"
#include "shr/records.hpp"
#include "shr/structures.hpp"

namespace shr {

namespace {

struct Globals {
  std::string format = "table";
  bool no_timing = false;

  bool jsonl() const { return format == "jsonl"; }
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string names_tuple(const SemihyperringTable& r, const std::vector<std::size_t>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + r.element_name(w[i]);
  return s + ")";
}

ChainPtr chain_option(const std::string& text) {
  return make_chain(GradeChain::parse(text.empty() ? "0 1/2 1" : text));
}

ZeroRegime regime_option(const std::string& text) {
  if (text == "any") return ZeroRegime::any;
  if (text == "unit-at-zero" || text == "unit") return ZeroRegime::unit_at_zero;
  throw DomainError("zero regime must be 'any' or 'unit-at-zero'");
}

std::string ms(std::chrono::nanoseconds d) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << std::chrono::duration<double, std::milli>(d).count()
    << " ms";
  return s.str();
}

void print_report(std::ostream& out, const Globals& g, const TheoremReport& rep,
                  const SemihyperringTable& r) {
  if (g.jsonl()) {
    out << report_json(rep, r, !g.no_timing).dump() << "\n";
    return;
  }
  out << rep.theorem_id << "  " << rep.structure_id << "  chain {" << rep.chain->to_string()
      << "}  " << to_string(rep.regime) << "  " << to_string(rep.verdict) << "  checked "
      << rep.checked;
  if (!g.no_timing) out << "  " << ms(rep.elapsed);
  out << "\n";
  if (!rep.flags.empty()) {
    out << "  ";
    for (const auto& [k, v] : rep.flags) out << " " << k << "=" << yes_no(v);
    out << "\n";
  }
  for (const auto& w : rep.witnesses) {
    out << "   witness " << w.claim;
    if (!w.elements.empty()) out << " " << names_tuple(r, w.elements);
    for (const auto& c : w.crisp) out << " " << r.format(c);
    for (const auto& f : w.fuzzy) out << " [" << format_fuzzy(f, r) << "]";
    out << "\n";
  }
  for (const auto& [name, fs] : rep.families) {
    out << "   " << name << " (" << fs.size() << "):";
    for (const auto& f : fs) out << " [" << format_fuzzy(f, r) << "]";
    out << "\n";
  }
  for (const auto& n : rep.notes) out << "   note: " << n << "\n";
}

// Fuzzy operands: a literal "e=1, s=0", a name from --subsets, A, phi, or chi{...}.
FuzzySubset operand(const std::string& text, const SemihyperringTable& r, const ChainPtr& chain,
                    const FuzzyFile* file) {
  if (text == "A") return FuzzySubset::top(chain, r.order());
  if (text == "phi") return FuzzySubset::bottom(chain, r.order());
  if (text.starts_with("chi")) return characteristic(parse_subset(text.substr(3), r), chain);
  if (text.find('=') != std::string::npos) return parse_fuzzy_literal(text, r, chain);
  if (file)
    if (const auto* f = file->find(text)) return *f;
  throw DomainError("unknown fuzzy operand '" + text + "'");
}

int cmd_validate(std::ostream& out, const Globals& g, const std::string& file,
                 const std::string& cls) {
  const auto r = load_structure(file);
  const auto target = parse_structure_class(cls);
  if (!target) throw DomainError("unknown structure class '" + cls + "'");
  const auto rep = validate(r, *target);
  if (g.jsonl()) {
    out << validation_json(rep, r).dump() << "\n";
  } else {
    out << "structure " << r.name() << ": " << to_string(rep.structure_class) << " (requested "
        << to_string(rep.requested) << ")\n";
    if (rep.ok()) out << "ok\n";
    for (const auto& f : rep.failures)
      out << "FAIL " << f.axiom << " " << names_tuple(r, f.witness) << "\n";
  }
  return rep.ok() ? 0 : 1;
}

int cmd_ideals(std::ostream& out, const Globals& g, const std::string& file,
               const std::string& side_text, const std::string& check) {
  const auto r = load_structure(file);
  const auto side = parse_side(side_text);
  if (!side) throw DomainError("side must be left, right or two");
  if (!check.empty()) {
    const auto s = parse_subset(check, r);
    const bool ok = !s.is_empty() && is_ideal(r, s, *side);
    const auto gen = generated_ideal(r, s, *side);
    if (g.jsonl()) {
      out << Json{{"structure", r.name()}, {"side", std::string(to_string(*side))},
                  {"subset", r.format(s)}, {"is_ideal", ok}, {"generated", r.format(gen)}}
                 .dump()
          << "\n";
    } else {
      out << r.format(s) << " " << to_string(*side) << " hyperideal: " << yes_no(ok) << "\n";
      out << "generated: " << r.format(gen) << "\n";
    }
    return ok ? 0 : 1;
  }
  const auto lattice = enumerate_hyperideals(r, *side);
  if (g.jsonl()) {
    Json list = Json::array();
    for (const auto& i : lattice.ideals) list.push_back(r.format(i));
    out << Json{{"structure", r.name()}, {"side", std::string(to_string(*side))}, {"ideals", list}}
               .dump()
        << "\n";
  } else {
    out << to_string(*side) << " hyperideals of " << r.name() << ": " << lattice.size() << "\n";
    for (const auto& i : lattice.ideals) out << r.format(i) << "\n";
  }
  return 0;
}

int cmd_classify(std::ostream& out, const Globals& g, const std::string& file) {
  const auto r = load_structure(file);
  const auto lattice = enumerate_hyperideals(r);
  const bool fi = is_fully_idempotent(r, lattice);
  const bool reg = is_regular(r).regular;
  const bool comm = r.mul_commutative();
  if (g.jsonl()) {
    Json ideals = Json::array();
    for (const auto& i : lattice.ideals)
      ideals.push_back({{"ideal", r.format(i)},
                        {"prime", is_prime_ideal(r, i, lattice)},
                        {"irreducible", is_irreducible_ideal(r, i, lattice)},
                        {"idempotent", is_idempotent_ideal(r, i)}});
    out << Json{{"structure", r.name()},  {"fully_idempotent", fi},
                {"regular", reg},         {"commutative", comm},
                {"ideal_count", lattice.size()}, {"ideals", ideals}}
               .dump()
        << "\n";
    return 0;
  }
  out << "structure         " << r.name() << "\n"
      << "fully_idempotent  " << yes_no(fi) << "\n"
      << "regular           " << yes_no(reg) << "\n"
      << "commutative       " << yes_no(comm) << "\n"
      << "ideal_count       " << lattice.size() << "\n";
  std::size_t width = 5;
  for (const auto& i : lattice.ideals) width = std::max(width, r.format(i).size());
  out << std::left << std::setw(static_cast<int>(width + 2)) << "ideal"
      << "prime  irreducible  idempotent\n";
  for (const auto& i : lattice.ideals)
    out << std::setw(static_cast<int>(width + 2)) << r.format(i) << std::setw(7)
        << yes_no(is_prime_ideal(r, i, lattice)) << std::setw(13)
        << yes_no(is_irreducible_ideal(r, i, lattice)) << yes_no(is_idempotent_ideal(r, i))
        << "\n";
  out << std::right;
  return 0;
}

struct FuzzyArgs {
  std::string file, chain, subsets, side = "two", op;
  std::vector<std::string> operands;
  std::size_t oracle = 0;
};

int cmd_fuzzy(std::ostream& out, const Globals& g, const FuzzyArgs& a) {
  const auto r = load_structure(a.file);
  std::optional<FuzzyFile> file;
  if (!a.subsets.empty()) file = load_fuzzy(a.subsets, r);
  ChainPtr chain = file && a.chain.empty() ? file->chain : chain_option(a.chain);
  if (file && *file->chain != *chain)
    throw DomainError("--chain differs from the chain in " + a.subsets);
  const FuzzyFile* fp = file ? &*file : nullptr;
  auto need = [&](std::size_t k) {
    if (a.operands.size() != k)
      throw DomainError("'" + a.op + "' takes " + std::to_string(k) + " operand(s)");
  };
  auto emit = [&](const std::string& key, const std::string& value) {
    if (g.jsonl())
      out << Json{{"structure", r.name()}, {"op", a.op}, {key, value}}.dump() << "\n";
    else
      out << key << ": " << value << "\n";
  };

  if (a.op == "check") {
    need(1);
    const auto side = parse_side(a.side);
    if (!side) throw DomainError("side must be left, right or two");
    const auto mu = operand(a.operands[0], r, chain, fp);
    const bool ok = is_fuzzy_ideal(r, mu, *side);
    const bool unit = mu.level(r.zero()) == chain->top();
    if (g.jsonl())
      out << Json{{"structure", r.name()}, {"op", "check"}, {"fuzzy", format_fuzzy(mu, r)},
                  {"side", std::string(to_string(*side))}, {"fuzzy_ideal", ok}, {"unit_at_zero", unit}}
                 .dump()
          << "\n";
    else
      out << format_fuzzy(mu, r) << ": fuzzy " << to_string(*side)
          << " hyperideal " << yes_no(ok) << ", unit at zero " << yes_no(unit) << "\n";
    return ok ? 0 : 1;
  }
  if (a.op == "level") {
    need(2);
    const auto mu = operand(a.operands[1], r, chain, fp);
    emit("level_set", r.format(level_set(mu, parse_grade(a.operands[0]))));
    return 0;
  }
  static const std::map<std::string, FuzzySubset (*)(const SemihyperringTable&, const FuzzySubset&,
                                                     const FuzzySubset&)>
      binary = {{"sum", fuzzy_sum}, {"prod", fuzzy_product}, {"circ", fuzzy_circ}};
  if (a.op == "meet" || a.op == "join" || binary.contains(a.op)) {
    need(2);
    const auto l = operand(a.operands[0], r, chain, fp);
    const auto m = operand(a.operands[1], r, chain, fp);
    FuzzySubset res = a.op == "meet"   ? meet(l, m)
                      : a.op == "join" ? join(l, m)
                                       : binary.at(a.op)(r, l, m);
    emit("result", format_fuzzy(res, r));
    if (a.op == "prod" && a.oracle > 0) {
      const auto o = fuzzy_product_oracle(r, l, m, a.oracle);
      const bool agree = o.value == res;
      if (g.jsonl())
        out << Json{{"oracle", format_fuzzy(o.value, r)}, {"agrees", agree},
                    {"stable_length", o.stable_length}, {"saturated", o.saturated}}
                   .dump()
            << "\n";
      else
        out << "oracle: " << format_fuzzy(o.value, r) << " (agrees " << yes_no(agree)
            << ", stable at length " << o.stable_length << ")\n";
      return agree ? 0 : 1;
    }
    return 0;
  }
  throw DomainError("unknown fuzzy operation '" + a.op + "'");
}

struct VerifyArgs {
  std::vector<std::string> files;
  std::string chain;
  std::vector<std::string> theorems;
  bool unit = false;
};

int cmd_verify(std::ostream& out, const Globals& g, const VerifyArgs& a) {
  const auto chain = chain_option(a.chain);
  std::vector<std::string> ids;
  for (const auto& t : a.theorems) {
    if (t == "all")
      ids.insert(ids.end(), std::begin(kTheoremIds), std::end(kTheoremIds));
    else if (std::find(std::begin(kTheoremIds), std::end(kTheoremIds), t) != std::end(kTheoremIds))
      ids.push_back(t);
    else
      throw DomainError("unknown theorem '" + t + "'");
  }
  std::vector<SemihyperringTable> rings;
  for (const auto& f : a.files) rings.push_back(load_structure(f));
  const auto regime = a.unit ? ZeroRegime::unit_at_zero : ZeroRegime::any;
  std::vector<std::optional<TheoremReport>> slots(rings.size() * ids.size());
  parallel_for(slots.size(), [&](std::size_t job) {
    slots[job] = verify_theorem(ids[job % ids.size()], rings[job / ids.size()], chain, regime);
  });
  int status = 0;
  for (std::size_t job = 0; job < slots.size(); ++job) {
    print_report(out, g, *slots[job], rings[job / ids.size()]);
    if (slots[job]->verdict == Verdict::fails) status = 1;
  }
  return status;
}

struct SpectrumArgs {
  std::string file, chain, regime = "unit-at-zero";
  bool check = false;
  TopologyCheckOptions opts;
};

int cmd_spectrum(std::ostream& out, const Globals& g, const SpectrumArgs& a) {
  const auto r = load_structure(a.file);
  FuzzyContext ctx(r, chain_option(a.chain), regime_option(a.regime));
  const auto t = build_topology(ctx);
  if (g.jsonl()) {
    out << topology_json(t, r).dump() << "\n";
  } else {
    out << "fuzzy prime spectrum of " << r.name() << " over {" << t.chain->to_string() << "} ("
        << to_string(t.regime) << "): " << t.primes.size() << " primes\n";
    for (std::size_t i = 0; i < t.primes.size(); ++i)
      out << "  p" << i << "  " << format_fuzzy(t.primes[i], r) << "\n";
    out << "opens: " << t.opens.size() << "\n";
    for (std::size_t o = 0; o < t.opens.size(); ++o) {
      out << "  O" << o << " = {";
      bool first = true;
      for (auto i = t.opens[o].find_first(); i != PrimeSet::npos; i = t.opens[o].find_next(i)) {
        out << (first ? "" : ",") << "p" << i;
        first = false;
      }
      out << "}  from";
      for (std::size_t gi = 0; gi < t.generators.size(); ++gi)
        if (t.generator_map[gi] == o) out << " [" << format_fuzzy(t.generators[gi], r) << "]";
      out << "\n";
    }
  }
  if (!a.check) return 0;
  const auto top = verify_topology_axioms(r, t, a.opts);
  const auto iso = verify_lattice_iso(ctx, a.opts);
  print_report(out, g, top, r);
  print_report(out, g, iso, r);
  return top.verdict == Verdict::fails || iso.verdict == Verdict::fails ? 1 : 0;
}

struct CensusArgs {
  std::size_t order = 2;
  bool sampled = false, commutative = false;
  std::optional<std::uint64_t> seed;
  std::size_t count = 0;
  std::string out_dir;
};

int cmd_census(std::ostream& out, const Globals& g, const CensusArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  CensusConfig cfg;
  cfg.order = a.order;
  cfg.mode = a.sampled ? CensusMode::sampled : CensusMode::exhaustive;
  cfg.seed = a.seed;
  cfg.sample_count = a.count;
  cfg.require_commutative_mul = a.commutative;
  check_census_config(cfg);
  const auto rings = census(cfg);

  struct Row {
    bool fi, regular, commutative;
    std::size_t ideals;
  };
  std::vector<Row> rows(rings.size());
  parallel_for(rings.size(), [&](std::size_t i) {
    const auto lattice = enumerate_hyperideals(rings[i]);
    rows[i] = {is_fully_idempotent(rings[i], lattice), is_regular(rings[i]).regular,
               rings[i].mul_commutative(), lattice.size()};
  });

  std::ofstream manifest;
  if (!a.out_dir.empty()) {
    std::filesystem::create_directories(a.out_dir);
    manifest.open(std::filesystem::path(a.out_dir) / "manifest.csv");
    if (!manifest) throw std::runtime_error("cannot write manifest in '" + a.out_dir + "'");
    manifest << "id,file,fully_idempotent,regular,commutative,ideal_count\n";
  }
  std::size_t fi = 0, reg = 0, comm = 0;
  if (!g.jsonl()) out << "id  fully_idempotent  regular  commutative  ideal_count\n";
  for (std::size_t i = 0; i < rings.size(); ++i) {
    const auto& r = rings[i];
    const auto& row = rows[i];
    fi += row.fi;
    reg += row.regular;
    comm += row.commutative;
    if (g.jsonl())
      out << Json{{"structure", r.name()}, {"fully_idempotent", row.fi}, {"regular", row.regular},
                  {"commutative", row.commutative}, {"ideal_count", row.ideals}}
                 .dump()
          << "\n";
    else
      out << r.name() << "  " << yes_no(row.fi) << "  " << yes_no(row.regular) << "  "
          << yes_no(row.commutative) << "  " << row.ideals << "\n";
    if (manifest.is_open()) {
      const auto name = r.name() + ".shr";
      save_structure((std::filesystem::path(a.out_dir) / name).string(), r);
      manifest << r.name() << "," << name << "," << yes_no(row.fi) << "," << yes_no(row.regular)
               << "," << yes_no(row.commutative) << "," << row.ideals << "\n";
    }
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  Json summary{{"order", a.order},
               {"mode", a.sampled ? "sampled" : "exhaustive"},
               {"search_space", census_search_space(a.order)},
               {"valid", rings.size()},
               {"fully_idempotent", fi},
               {"regular", reg},
               {"commutative", comm}};
  if (a.seed) summary["seed"] = *a.seed;
  if (!g.no_timing)
    summary["elapsed_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  if (g.jsonl()) {
    out << Json{{"summary", summary}}.dump() << "\n";
  } else {
    if (a.sampled)
      out << "sampled " << rings.size() << " valid (seed " << *a.seed << ", search space "
          << census_search_space(a.order) << ")";
    else
      out << "valid " << rings.size() << " of " << census_search_space(a.order) << " candidates";
    out << "; fully_idempotent " << fi << ", regular " << reg << ", commutative "
        << comm;
    if (!g.no_timing) out << "  " << ms(elapsed);
    out << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite semihyperrings: validation, hyperideals, fuzzy hyperideals, spectra", "shr"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output: table or jsonl")
      ->check(CLI::IsMember({"table", "jsonl"}));
  app.add_flag("--no-timing", g.no_timing, "Omit elapsed times so output is byte-stable");

  std::string file, cls = "semihyperring", side = "two", check;
  auto* validate_cmd = app.add_subcommand("validate", "Check the axioms of a class");
  validate_cmd->add_option("file", file)->required();
  validate_cmd->add_option("--class", cls, "semihypergroup, hypergroup, polygroup, "
                                           "canonical_hypergroup, semihyperring, hyperring");

  auto* ideals_cmd = app.add_subcommand("ideals", "List hyperideals or test a subset");
  ideals_cmd->add_option("file", file)->required();
  ideals_cmd->add_option("--side", side, "left, right or two")->check(CLI::IsMember({"left", "right", "two", "two-sided"}));
  ideals_cmd->add_flag("--list", "List all hyperideals (default)");
  ideals_cmd->add_option("--check", check, "Subset such as {0,b}");

  auto* classify_cmd = app.add_subcommand("classify", "Fully idempotent, regular, prime ideals");
  classify_cmd->add_option("file", file)->required();

  FuzzyArgs fa;
  auto* fuzzy_cmd = app.add_subcommand("fuzzy", "Fuzzy subset operations");
  fuzzy_cmd->add_option("file", fa.file)->required();
  fuzzy_cmd->add_option("op", fa.op, "check, level, sum, prod, circ, meet, join")->required();
  fuzzy_cmd->add_option("operands", fa.operands,
                        "Literals (e=1,s=1/2,x=0), names from --subsets, A, phi or chi{...}");
  fuzzy_cmd->add_option("--chain", fa.chain, "Grade chain, e.g. \"0 1/2 1\"");
  fuzzy_cmd->add_option("--subsets", fa.subsets, "Fuzzy file with named subsets");
  fuzzy_cmd->add_option("--side", fa.side, "left, right or two (check only)");
  fuzzy_cmd->add_option("--oracle", fa.oracle, "prod: cross-check with decompositions up to this length");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run theorem checks");
  verify_cmd->add_option("files", va.files)->required();
  verify_cmd->add_option("--chain", va.chain, "Grade chain (default \"0 1/2 1\")");
  verify_cmd->add_option("--theorem", va.theorems,
                         "level, thr21, distrib, prime-irred, primes-meet, regular or all")
      ->required();
  verify_cmd->add_flag("--require-unit-at-zero", va.unit, "Only fuzzy hyperideals with mu(0) = 1");

  SpectrumArgs sa;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Fuzzy prime spectrum and its topology");
  spectrum_cmd->add_option("file", sa.file)->required();
  spectrum_cmd->add_option("--chain", sa.chain, "Grade chain (default \"0 1/2 1\")");
  spectrum_cmd->add_option("--zero-regime", sa.regime, "unit-at-zero (default) or any");
  spectrum_cmd->add_flag("--check", sa.check, "Verify the topology and the lattice isomorphism");
  spectrum_cmd->add_option("--samples", sa.opts.union_samples, "Random subfamilies for unions");
  spectrum_cmd->add_option("--seed", sa.opts.seed, "Seed for the subfamily sample");

  CensusArgs ca;
  auto* census_cmd = app.add_subcommand("census", "Enumerate small semihyperrings");
  census_cmd->add_option("--order", ca.order)->required()->check(CLI::Range(1, 4));
  census_cmd->add_flag("--sampled", ca.sampled, "Seeded sampling (required for order 4)");
  census_cmd->add_option("--seed", ca.seed);
  census_cmd->add_option("--count", ca.count, "Structures to emit in sampled mode");
  census_cmd->add_flag("--commutative", ca.commutative, "Keep commutative multiplication only");
  census_cmd->add_option("--out", ca.out_dir, "Write structure files and manifest.csv here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(out, g, file, cls);
    if (*ideals_cmd) return cmd_ideals(out, g, file, side, check);
    if (*classify_cmd) return cmd_classify(out, g, file);
    if (*fuzzy_cmd) return cmd_fuzzy(out, g, fa);
    if (*verify_cmd) return cmd_verify(out, g, va);
    if (*spectrum_cmd) return cmd_spectrum(out, g, sa);
    if (*census_cmd) return cmd_census(out, g, ca);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace shr
