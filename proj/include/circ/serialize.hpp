#pragma once

#include <string>

#include <json.hpp>

#include "circ/classification.hpp"

namespace circ {

nlohmann::json to_json(const Key& k);
nlohmann::json to_json(const GeneralizedMultiplier& m);
nlohmann::json to_json(const ConnectionSet& s);
nlohmann::json to_json(const ZnPartition& p);
nlohmann::json to_json(const IsoVerdict& v);
nlohmann::json to_json(const CiVerdict& v);
nlohmann::json to_json(const CosetCase& c);
/// {n, m, mode, property, predicate, agree, counterexamples}; predicate is
/// null when no closed form covers the cell.
nlohmann::json to_json(const ClassificationReport& r);

/// Same columns as the JSON rows.
std::string csv_header();
std::string to_csv_row(const ClassificationReport& r);

}  // namespace circ
