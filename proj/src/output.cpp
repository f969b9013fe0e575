#include "ldc/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ldc {

namespace {

void fail_io(const std::filesystem::path& path, const char* what) {
  throw std::runtime_error(std::string(what) + ": " + path.string());
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
  const auto idx = static_cast<std::size_t>(
      std::llround(q * static_cast<double>(sorted.size() - 1)));
  return sorted[std::min(idx, sorted.size() - 1)];
}

}  // namespace

FieldStats field_stats(const ScalarField& field) {
  FieldStats stats;
  stats.cells = field.values.size();
  std::vector<double> live;
  live.reserve(field.values.size());
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    if (field.mask[i])
      live.push_back(field.values[i]);
    else
      ++stats.masked_cells;
  }
  if (live.empty()) return stats;
  std::sort(live.begin(), live.end());
  stats.min = live.front();
  stats.max = live.back();
  stats.p01 = quantile(live, 0.01);
  stats.p50 = quantile(live, 0.50);
  stats.p99 = quantile(live, 0.99);
  return stats;
}

void write_csv(const ScalarField& field, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail_io(path, "cannot open for writing");
  out << "# axis1=" << field.axis1.name << " lo1=" << format_value(field.axis1.lo)
      << " hi1=" << format_value(field.axis1.hi) << " axis2=" << field.axis2.name
      << " lo2=" << format_value(field.axis2.lo) << " hi2=" << format_value(field.axis2.hi)
      << " n1=" << field.n1 << " n2=" << field.n2 << " h1=" << format_value(field.h1)
      << " h2=" << format_value(field.h2) << "\n";
  std::string line;
  for (int j = 0; j < field.n2; ++j) {
    line.clear();
    for (int i = 0; i < field.n1; ++i) {
      if (i) line += ',';
      line += field.admissible(i, j) ? format_value(field.at(i, j)) : "nan";
    }
    line += '\n';
    out << line;
  }
  if (!out) fail_io(path, "write failed");
}

ScalarField read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail_io(path, "cannot open for reading");
  std::string header;
  std::getline(in, header);
  if (header.empty() || header[0] != '#') fail_io(path, "missing csv header");

  ScalarField field;
  std::istringstream hs(header.substr(1));
  std::string token;
  while (hs >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "axis1") field.axis1.name = value;
    else if (key == "axis2") field.axis2.name = value;
    else if (key == "lo1") field.axis1.lo = std::stod(value);
    else if (key == "hi1") field.axis1.hi = std::stod(value);
    else if (key == "lo2") field.axis2.lo = std::stod(value);
    else if (key == "hi2") field.axis2.hi = std::stod(value);
    else if (key == "n1") field.n1 = std::stoi(value);
    else if (key == "n2") field.n2 = std::stoi(value);
    else if (key == "h1") field.h1 = std::stod(value);
    else if (key == "h2") field.h2 = std::stod(value);
  }
  if (field.n1 < 1 || field.n2 < 1) fail_io(path, "bad csv dimensions");

  field.values.assign(static_cast<std::size_t>(field.n1) * field.n2,
                      std::numeric_limits<double>::quiet_NaN());
  field.mask.assign(field.values.size(), 0);
  std::string line;
  for (int j = 0; j < field.n2; ++j) {
    if (!std::getline(in, line)) fail_io(path, "truncated csv");
    std::size_t pos = 0;
    for (int i = 0; i < field.n1; ++i) {
      std::size_t next = line.find(',', pos);
      if (next == std::string::npos) next = line.size();
      const std::string cell = line.substr(pos, next - pos);
      pos = next + 1;
      if (cell != "nan") {
        field.at(i, j) = std::stod(cell);
        field.mask[static_cast<std::size_t>(j) * field.n1 + i] = 1;
      }
    }
  }
  return field;
}

void write_landscape_csv(const Landscape& landscape, const std::string& axis_name,
                         const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail_io(path, "cannot open for writing");
  const std::size_t n = landscape.positions.size();
  out << "# axis=" << axis_name << " n=" << n << " columns=position,ld,second_diff\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << format_value(landscape.positions[i]) << ',';
    out << (landscape.mask[i] ? format_value(landscape.ld[i]) : "nan") << ',';
    out << (std::isfinite(landscape.second_diff[i]) ? format_value(landscape.second_diff[i])
                                                    : "nan")
        << '\n';
  }
  if (!out) fail_io(path, "write failed");
}

void write_pgm(const ScalarField& field, const std::filesystem::path& path, double lo, double hi) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail_io(path, "cannot open for writing");
  out << "P5\n" << field.n1 << " " << field.n2 << "\n65535\n";
  const double span = hi - lo;
  const bool flat = !(span > 0.0) || !std::isfinite(span);
  std::vector<unsigned char> row(static_cast<std::size_t>(field.n1) * 2);
  // Raster top row first; axis2 increases upward in the written image.
  for (int j = field.n2 - 1; j >= 0; --j) {
    for (int i = 0; i < field.n1; ++i) {
      std::uint16_t pixel = 65535;  // masked cells stay white
      if (field.admissible(i, j)) {
        if (flat) {
          pixel = 32767;
        } else {
          const double unit = std::clamp((field.at(i, j) - lo) / span, 0.0, 1.0);
          pixel = static_cast<std::uint16_t>(std::lround(unit * 65534.0));
        }
      }
      row[2 * i] = static_cast<unsigned char>(pixel >> 8);
      row[2 * i + 1] = static_cast<unsigned char>(pixel & 0xff);
    }
    out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
  }
  if (!out) fail_io(path, "write failed");
}

std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_io(path, "cannot open for digest");
  std::uint64_t hash = 1469598103934665603ull;
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 1099511628211ull;
    }
    if (got < static_cast<std::streamsize>(sizeof buf)) break;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
  return hex;
}

}  // namespace ldc
