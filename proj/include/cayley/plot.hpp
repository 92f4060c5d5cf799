#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace cayley {

/// Comma-separated table with a header row; numbers at 12 significant digits.
void writeCsv(const std::filesystem::path& file, const std::vector<std::string>& header,
              const std::vector<std::vector<double>>& rows);

/// Single-series polyline chart, 800x600 viewBox, axes with min/max tick labels.
void writeLineChartSvg(const std::filesystem::path& file, const std::string& title, const std::string& xLabel,
                       const std::string& yLabel, const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace cayley
