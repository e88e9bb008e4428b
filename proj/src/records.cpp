#include "shr/records.hpp"

#include "shr/format.hpp"

namespace shr {

Json witness_json(const Witness& w, const SemihyperringTable& r) {
  Json j;
  j["claim"] = w.claim;
  if (!w.elements.empty()) {
    j["elements"] = Json::array();
    for (auto e : w.elements) j["elements"].push_back(r.element_name(e));
  }
  if (!w.fuzzy.empty()) {
    j["fuzzy"] = Json::array();
    for (const auto& f : w.fuzzy) j["fuzzy"].push_back(format_fuzzy(f, r));
  }
  if (!w.crisp.empty()) {
    j["crisp"] = Json::array();
    for (const auto& c : w.crisp) j["crisp"].push_back(r.format(c));
  }
  return j;
}

Json report_json(const TheoremReport& rep, const SemihyperringTable& r, bool timing) {
  Json j;
  j["theorem"] = rep.theorem_id;
  j["structure"] = rep.structure_id;
  j["chain"] = rep.chain ? rep.chain->to_string() : "";
  j["zero_regime"] = std::string(to_string(rep.regime));
  j["verdict"] = std::string(to_string(rep.verdict));
  Json flags = Json::object();
  for (const auto& [k, v] : rep.flags) flags[k] = v;
  j["flags"] = flags;
  j["witnesses"] = Json::array();
  for (const auto& w : rep.witnesses) j["witnesses"].push_back(witness_json(w, r));
  if (!rep.families.empty()) {
    Json fams = Json::object();
    for (const auto& [name, fs] : rep.families) {
      fams[name] = Json::array();
      for (const auto& f : fs) fams[name].push_back(format_fuzzy(f, r));
    }
    j["families"] = fams;
  }
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  j["checked"] = rep.checked;
  if (timing)
    j["elapsed_ms"] = std::chrono::duration<double, std::milli>(rep.elapsed).count();
  return j;
}

Json validation_json(const ValidationReport& v, const SemihyperringTable& r) {
  Json j;
  j["structure"] = r.name();
  j["requested"] = std::string(to_string(v.requested));
  j["class"] = std::string(to_string(v.structure_class));
  j["ok"] = v.ok();
  j["failures"] = Json::array();
  for (const auto& f : v.failures) {
    Json w = Json::array();
    for (auto e : f.witness) w.push_back(r.element_name(e));
    j["failures"].push_back({{"axiom", f.axiom}, {"witness", w}});
  }
  return j;
}

Json topology_json(const SpectrumTopology& t, const SemihyperringTable& r) {
  Json j;
  j["structure"] = t.structure_id;
  j["chain"] = t.chain->to_string();
  j["zero_regime"] = std::string(to_string(t.regime));
  j["primes"] = Json::array();
  for (const auto& p : t.primes) j["primes"].push_back(format_fuzzy(p, r));
  j["opens"] = Json::array();
  for (const auto& o : t.opens) {
    Json idx = Json::array();
    for (auto i = o.find_first(); i != PrimeSet::npos; i = o.find_next(i)) idx.push_back(i);
    j["opens"].push_back(idx);
  }
  j["generator_map"] = Json::array();
  for (std::size_t g = 0; g < t.generators.size(); ++g)
    j["generator_map"].push_back(
        {{"generator", format_fuzzy(t.generators[g], r)}, {"open", t.generator_map[g]}});
  return j;
}

}  // namespace shr
