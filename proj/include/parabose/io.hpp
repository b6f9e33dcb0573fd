#pragma once

#include <map>
#include <string>
#include <vector>

#include "parabose/dynamics.hpp"
#include "parabose/states.hpp"

// Deterministic text serialization: every writer formats doubles with
// %.17g so identical runs produce byte-identical files, and every format
// round-trips through its own parser.

namespace parabose {

std::string format_double(double x);

using KeyValues = std::vector<std::pair<std::string, std::string>>;

// key=value lines, one per pair, order preserved.
void write_key_values(const std::string& path, const KeyValues& kv);
std::map<std::string, std::string> read_key_values(const std::string& path);

// CSV with a single header row: time, then one column per observable.
void write_time_series_csv(const std::string& path, const TimeSeries& ts);
TimeSeries read_time_series_csv(const std::string& path);

// Row-major Q values preceded by a two-line '#' metadata preamble.
void write_qgrid_csv(const std::string& path, const QGrid& grid);
QGrid read_qgrid_csv(const std::string& path);

}  // namespace parabose
