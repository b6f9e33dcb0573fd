#include "parabose/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace parabose {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, sep)) out.push_back(field);
  return out;
}

}  // namespace

void write_key_values(const std::string& path, const KeyValues& kv) {
  auto out = open_out(path);
  for (const auto& [key, value] : kv) out << key << "=" << value << "\n";
}

std::map<std::string, std::string> read_key_values(const std::string& path) {
  auto in = open_in(path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto pos = line.find('=');
    if (pos == std::string::npos)
      throw std::runtime_error("malformed key=value line: " + line);
    kv[line.substr(0, pos)] = line.substr(pos + 1);
  }
  return kv;
}

void write_time_series_csv(const std::string& path, const TimeSeries& ts) {
  auto out = open_out(path);
  out << "time";
  for (const auto& name : ts.names) out << "," << name;
  out << "\n";
  for (Index i = 0; i < ts.times.size(); ++i) {
    out << format_double(ts.times(i));
    for (Index j = 0; j < ts.columns.cols(); ++j)
      out << "," << format_double(ts.columns(i, j));
    out << "\n";
  }
}

TimeSeries read_time_series_csv(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("empty time-series file: " + path);
  auto header = split(line, ',');
  if (header.empty() || header[0] != "time")
    throw std::runtime_error("bad time-series header in " + path);

  TimeSeries ts;
  ts.names.assign(header.begin() + 1, header.end());
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = split(line, ',');
    if (fields.size() != header.size())
      throw std::runtime_error("ragged time-series row in " + path);
    std::vector<double> row;
    for (const auto& f : fields) row.push_back(std::stod(f));
    rows.push_back(row);
  }
  ts.times.resize(Index(rows.size()));
  ts.columns.resize(Index(rows.size()), Index(ts.names.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ts.times(Index(i)) = rows[i][0];
    for (std::size_t j = 0; j + 1 < rows[i].size(); ++j)
      ts.columns(Index(i), Index(j)) = rows[i][j + 1];
  }
  return ts;
}

void write_qgrid_csv(const std::string& path, const QGrid& grid) {
  auto out = open_out(path);
  out << "# husimi-q grid, row-major, Re alpha along columns\n";
  out << "# range=" << format_double(grid.range) << " points=" << grid.points
      << "\n";
  for (Index i = 0; i < grid.points; ++i) {
    for (Index j = 0; j < grid.points; ++j) {
      if (j) out << ",";
      out << format_double(grid.values(i, j));
    }
    out << "\n";
  }
}

QGrid read_qgrid_csv(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("#", 0) != 0)
    throw std::runtime_error("missing qgrid preamble in " + path);
  if (!std::getline(in, line) || line.rfind("# range=", 0) != 0)
    throw std::runtime_error("missing qgrid metadata in " + path);

  QGrid grid;
  {
    std::stringstream ss(line.substr(2));
    std::string tok;
    while (ss >> tok) {
      auto pos = tok.find('=');
      if (pos == std::string::npos) continue;
      auto key = tok.substr(0, pos), value = tok.substr(pos + 1);
      if (key == "range") grid.range = std::stod(value);
      if (key == "points") grid.points = std::stol(value);
    }
  }
  if (grid.points < 3)
    throw std::runtime_error("bad qgrid metadata in " + path);
  grid.values.resize(grid.points, grid.points);
  for (Index i = 0; i < grid.points; ++i) {
    if (!std::getline(in, line))
      throw std::runtime_error("truncated qgrid in " + path);
    auto fields = split(line, ',');
    if (Index(fields.size()) != grid.points)
      throw std::runtime_error("ragged qgrid row in " + path);
    for (Index j = 0; j < grid.points; ++j)
      grid.values(i, j) = std::stod(fields[std::size_t(j)]);
  }
  return grid;
}

}  // namespace parabose
