#include "cayley/plot.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace cayley {
namespace {

std::ofstream openOut(const std::filesystem::path& file) {
  std::ofstream os(file);
  if (!os) throw std::runtime_error("cannot write " + file.string());
  return os;
}

std::string escapeXml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace

void writeCsv(const std::filesystem::path& file, const std::vector<std::string>& header,
              const std::vector<std::vector<double>>& rows) {
  auto os = openOut(file);
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << num(row[i]);
    os << '\n';
  }
}

void writeLineChartSvg(const std::filesystem::path& file, const std::string& title, const std::string& xLabel,
                       const std::string& yLabel, const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("writeLineChartSvg: need matching, non-empty series");
  constexpr double W = 800, H = 600, left = 90, right = 30, top = 50, bottom = 70;
  auto [xMin, xMax] = std::minmax_element(xs.begin(), xs.end());
  auto [yMin, yMax] = std::minmax_element(ys.begin(), ys.end());
  const double x0 = *xMin, x1 = *xMax > *xMin ? *xMax : *xMin + 1.0;
  const double y0 = *yMin, y1 = *yMax > *yMin ? *yMax : *yMin + 1.0;
  auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * (W - left - right); };
  auto py = [&](double y) { return H - bottom - (y - y0) / (y1 - y0) * (H - top - bottom); };

  auto os = openOut(file);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" height=\"600\">\n";
  os << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  os << "<text x=\"400\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">" << escapeXml(title)
     << "</text>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << H - bottom << "\" x2=\"" << W - right << "\" y2=\"" << H - bottom
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << H - bottom
     << "\" stroke=\"black\"/>\n";
  const char* tick = "font-family=\"sans-serif\" font-size=\"12\"";
  os << "<text x=\"" << left << "\" y=\"" << H - bottom + 18 << "\" text-anchor=\"middle\" " << tick << ">" << num(x0, 6)
     << "</text>\n";
  os << "<text x=\"" << W - right << "\" y=\"" << H - bottom + 18 << "\" text-anchor=\"middle\" " << tick << ">"
     << num(x1, 6) << "</text>\n";
  os << "<text x=\"" << left - 6 << "\" y=\"" << H - bottom << "\" text-anchor=\"end\" " << tick << ">" << num(y0, 6)
     << "</text>\n";
  os << "<text x=\"" << left - 6 << "\" y=\"" << top + 4 << "\" text-anchor=\"end\" " << tick << ">" << num(y1, 6)
     << "</text>\n";
  os << "<text x=\"400\" y=\"" << H - 20 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
     << escapeXml(xLabel) << "</text>\n";
  os << "<text x=\"20\" y=\"300\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
        "transform=\"rotate(-90 20 300)\">"
     << escapeXml(yLabel) << "</text>\n";
  os << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << num(px(xs[i]), 7) << ',' << num(py(ys[i]), 7);
  os << "\"/>\n</svg>\n";
}

}  // namespace cayley
