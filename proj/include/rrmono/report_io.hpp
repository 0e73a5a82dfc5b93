#pragma once

#include <json.hpp>

#include <string>

#include "rrmono/analysis.hpp"

namespace rrmono {

nlohmann::json report_to_json(const AnalysisReport& R);  // carries "schema": 1
AnalysisReport report_from_json(const nlohmann::json& j);

std::string report_human(const AnalysisReport& R);

std::string csv_escape(const std::string& field);
std::string csv_header();
std::string csv_row(const AnalysisReport& R);

}  // namespace rrmono
