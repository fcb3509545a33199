#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pcent/series.hpp"

namespace pcent {

enum class OutputFormat { csv, tsv, jsonl };

std::optional<OutputFormat> parse_output_format(std::string_view text);

/// One row per record, then `estimate,,,<value>,<estimator>` per series.
/// Numbers use 17 significant digits and lines end in '\n'.
void write_series(std::ostream& os, const std::vector<EntropySeries>& series, OutputFormat format);

/// Self-contained SVG line chart of record values against n on a log y axis,
/// one line per method and eps.
void write_svg(std::ostream& os, const std::vector<EntropySeries>& series, const std::string& title);

}  // namespace pcent
