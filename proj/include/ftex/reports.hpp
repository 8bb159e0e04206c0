#pragma once

#include <string>

#include "ftex/experiments.hpp"

namespace ftex {

enum class ReportFormat { Json, Csv, Text };

ReportFormat parse_format(const std::string& s);

// Byte-stable serializers: fixed key order, no timestamps.
std::string emit_report(const SurveyReport& rep, ReportFormat fmt);
std::string emit_report(const SweepReport& rep, ReportFormat fmt);

std::string sequence_string(const ElementSequence& seq);

}  // namespace ftex
