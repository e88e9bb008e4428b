#pragma once

#include <json.hpp>

#include "shr/harness.hpp"
#include "shr/spectrum.hpp"

namespace shr {

using Json = nlohmann::ordered_json;

Json witness_json(const Witness& w, const SemihyperringTable& r);

/// One self-contained record; `timing` adds elapsed_ms.
Json report_json(const TheoremReport& rep, const SemihyperringTable& r, bool timing);

Json validation_json(const ValidationReport& v, const SemihyperringTable& r);

/// primes (fuzzy literals), opens (prime index lists), generator_map.
Json topology_json(const SpectrumTopology& t, const SemihyperringTable& r);

}  // namespace shr
