#pragma once

#include <string>

#include <json.hpp>

#include "freeact/classify.hpp"
#include "freeact/marked.hpp"

namespace freeact {

// Serialization of results as human tables and as machine-readable JSON
// with stable field names and ordering (machine output round-trips
// byte-for-byte through parse + dump).

std::string kind_name(ActionKind kind);

// Character as values on the group's canonical generators, e.g. "s1:-,s2:+";
// "trivial" for the trivial character.
std::string character_text(const FiniteGroup& G, const Character& chr);

std::string render_report_table(const FiniteGroup& G, const ClassificationReport& report);
nlohmann::ordered_json report_to_json(const FiniteGroup& G, const ClassificationReport& report);

std::string render_spectrum_table(const GenusSpectrum& spectrum);
nlohmann::ordered_json spectrum_to_json(const GenusSpectrum& spectrum);

std::string render_partition_table(const FiniteGroup& G, const OrbitPartition& partition);
nlohmann::ordered_json partition_to_json(const FiniteGroup& G, const OrbitPartition& partition);

std::string render_orbit_table(const FiniteGroup& G, const OrbitRecord& orbit);
nlohmann::ordered_json orbit_to_json(const FiniteGroup& G, const OrbitRecord& orbit);

std::string render_nielsen_table(const FiniteGroup& G, int n,
                                 const std::vector<NielsenClass>& classes);
nlohmann::ordered_json nielsen_to_json(const FiniteGroup& G, int n,
                                       const std::vector<NielsenClass>& classes);

std::string render_oracle_table(const FiniteGroup& G, int n, const OracleCheckResult& result);
nlohmann::ordered_json oracle_to_json(const FiniteGroup& G, int n,
                                      const OracleCheckResult& result);

}  // namespace freeact
