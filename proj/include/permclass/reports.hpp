#pragma once

// JSON and CSV renderings of every report type. Key order is fixed so equal
// inputs serialize to identical bytes.

#include <string>

#include <json.hpp>

#include "permclass/class_engine.hpp"
#include "permclass/enumeration_harness.hpp"
#include "permclass/erdos_szekeres.hpp"
#include "permclass/pseudo_rotational.hpp"

namespace permclass::report {

using Json = nlohmann::ordered_json;

Json to_json(const ClassPartition& p);
Json to_json(const RotationalProfile& p);
Json to_json(const PseudoPartition& p);
Json to_json(const EsReport& r);
// Timing fields (wall_ms, from_cache) only when `timing` is set.
Json to_json(const ExperimentReport& r, bool timing);
Json to_json(const SubconjectureResult& r);

std::string to_csv(const ClassPartition& p);
std::string to_csv(const RotationalProfile& p);
std::string to_csv(const PseudoPartition& p);
std::string to_csv(const EsReport& r);
std::string to_csv(const ExperimentReport& r, bool timing);
std::string to_csv(const SubconjectureResult& r);

// RFC 4180 quoting when the field needs it.
std::string csv_field(const std::string& s);

}  // namespace permclass::report
