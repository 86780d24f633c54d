#pragma once

#include <string>

#include "njcones/simulate.hpp"

namespace njcones {

enum class ReportFormat { Csv, Json, Text };

/// Renders a frequency table.
///
/// CSV columns are tree,partner,count,percent,pair_percent sorted by tree
/// key; tree fields are double-quoted since canonical keys contain commas.
/// JSON mirrors the table plus the run configuration. Text lays the table
/// out pairwise. Percentages carry 4 decimal places everywhere; output is
/// byte-deterministic for a given table.
std::string emit_report(const FrequencyTable& t, ReportFormat format);

const char* to_string(ReportFormat f);

}  // namespace njcones
