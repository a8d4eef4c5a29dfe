// Copyright 2026 The geogame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GEOGAME_IO_HPP
#define GEOGAME_IO_HPP

// Serialization of the solver's value types. Every real is emitted in its
// shortest round-trip decimal form, so serialize -> parse -> serialize is
// byte-identical and every printed number re-parses to the exact double the
// library computed. JSON documents carry a schema tag; the sweep-record
// formats (CSV with a pinned header, or a bare JSON array) match what the
// command-line tool writes.

#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "geogame/model.hpp"
#include "geogame/optimize.hpp"
#include "geogame/stability.hpp"
#include "geogame/sweep.hpp"

namespace geogame::io {

inline constexpr std::string_view kCsvHeader =
    "y_star_h,y_star_c,y_tilde_opt,delta_min_opt,status";

inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

inline double parse_double(std::string_view text) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  return value;
}

namespace detail {

using ordered_json = nlohmann::ordered_json;

// Shortest-form number or null for non-finite values (JSON has no nan/inf).
inline std::string json_number(double v) {
  return std::isfinite(v) ? format_double(v) : "null";
}

inline std::string json_string(const std::string& s) {
  return nlohmann::json(s).dump();
}

inline double number_or_nan(const ordered_json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN()
                     : j.get<double>();
}

inline CellStatus status_from_string(std::string_view s) {
  if (s == "ok") return CellStatus::ok;
  if (s == "zero-cell") return CellStatus::zero_cell;
  if (s == "failed") return CellStatus::failed;
  throw std::invalid_argument("unknown cell status: '" + std::string(s) + "'");
}

inline BindingPlayer binding_from_string(std::string_view s) {
  if (s == "H") return BindingPlayer::h;
  if (s == "C") return BindingPlayer::c;
  if (s == "tie") return BindingPlayer::tie;
  throw std::invalid_argument("unknown binding player: '" + std::string(s) + "'");
}

inline void expect_schema(const ordered_json& j, std::string_view schema) {
  if (!j.is_object() || !j.contains("schema") ||
      j.at("schema").get<std::string>() != schema)
    throw std::invalid_argument("document is not a " + std::string(schema));
}

inline std::string record_to_json(const SweepCell& cell) {
  std::string out = "{\"y_star_h\":" + json_number(cell.y_star_h) +
                    ",\"y_star_c\":" + json_number(cell.y_star_c) +
                    ",\"y_tilde_opt\":" + json_number(cell.y_tilde_opt) +
                    ",\"delta_min_opt\":" + json_number(cell.delta_min_opt) +
                    ",\"status\":" + json_string(to_string(cell.status));
  if (cell.status == CellStatus::failed)
    out += ",\"diagnostic\":" + json_string(cell.diagnostic);
  return out + "}";
}

inline SweepCell record_from_json(const ordered_json& j) {
  SweepCell cell{};
  cell.y_star_h = number_or_nan(j.at("y_star_h"));
  cell.y_star_c = number_or_nan(j.at("y_star_c"));
  cell.y_tilde_opt = number_or_nan(j.at("y_tilde_opt"));
  cell.delta_min_opt = number_or_nan(j.at("delta_min_opt"));
  cell.status = status_from_string(j.at("status").get<std::string>());
  if (j.contains("diagnostic"))
    cell.diagnostic = j.at("diagnostic").get<std::string>();
  return cell;
}

}  // namespace detail

// --- sweep records: CSV ------------------------------------------------------

inline std::string records_to_csv(const std::vector<SweepCell>& records) {
  std::string out{kCsvHeader};
  out += '\n';
  for (const auto& cell : records) {
    out += format_double(cell.y_star_h);
    out += ',';
    out += format_double(cell.y_star_c);
    out += ',';
    out += format_double(cell.y_tilde_opt);
    out += ',';
    out += format_double(cell.delta_min_opt);
    out += ',';
    out += to_string(cell.status);
    out += '\n';
  }
  return out;
}

inline std::vector<SweepCell> records_from_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    if (end > start) lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (lines.empty() || lines.front() != kCsvHeader)
    throw std::invalid_argument("missing or malformed CSV header");

  std::vector<SweepCell> records;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string_view> fields;
    std::string_view line = lines[i];
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = line.find(',', pos);
      if (comma == std::string_view::npos) {
        fields.push_back(line.substr(pos));
        break;
      }
      fields.push_back(line.substr(pos, comma - pos));
      pos = comma + 1;
    }
    if (fields.size() != 5)
      throw std::invalid_argument("CSV record must have 5 fields");
    records.push_back({parse_double(fields[0]), parse_double(fields[1]),
                       parse_double(fields[2]), parse_double(fields[3]),
                       detail::status_from_string(fields[4]), ""});
  }
  return records;
}

// --- sweep records: JSON array -----------------------------------------------

inline std::string records_to_json(const std::vector<SweepCell>& records) {
  std::string out = "[";
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i > 0) out += ',';
    out += detail::record_to_json(records[i]);
  }
  return out + "]";
}

inline std::vector<SweepCell> records_from_json(std::string_view text) {
  const auto j = detail::ordered_json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array");
  std::vector<SweepCell> records;
  records.reserve(j.size());
  for (const auto& item : j) records.push_back(detail::record_from_json(item));
  return records;
}

// --- schema-tagged documents -------------------------------------------------

inline std::string to_json_string(const Deployment& d) {
  return "{\"schema\":\"geogame.deployment/1\",\"g_h\":" +
         detail::json_number(d.g_h) + ",\"g_c\":" + detail::json_number(d.g_c) +
         ",\"y\":" + detail::json_number(d.temperature()) + "}";
}

inline Deployment deployment_from_json(std::string_view text) {
  const auto j = detail::ordered_json::parse(text);
  detail::expect_schema(j, "geogame.deployment/1");
  return Deployment{detail::number_or_nan(j.at("g_h")),
                    detail::number_or_nan(j.at("g_c"))};
}

inline std::string to_json_string(const StabilityReport& r) {
  return "{\"schema\":\"geogame.stability_report/1\",\"delta_h\":" +
         detail::json_number(r.delta_h) +
         ",\"delta_c\":" + detail::json_number(r.delta_c) +
         ",\"delta_min\":" + detail::json_number(r.delta_min) +
         ",\"binding\":" + detail::json_string(to_string(r.binding_player)) +
         "}";
}

inline StabilityReport stability_report_from_json(std::string_view text) {
  const auto j = detail::ordered_json::parse(text);
  detail::expect_schema(j, "geogame.stability_report/1");
  return StabilityReport{
      detail::number_or_nan(j.at("delta_h")),
      detail::number_or_nan(j.at("delta_c")),
      detail::number_or_nan(j.at("delta_min")),
      detail::binding_from_string(j.at("binding").get<std::string>())};
}

inline std::string to_json_string(const SustainableRange& r) {
  return "{\"schema\":\"geogame.sustainable_range/1\",\"lower\":" +
         detail::json_number(r.lower) +
         ",\"upper\":" + detail::json_number(r.upper) +
         ",\"shrink\":" + detail::json_number(r.shrink) + "}";
}

inline SustainableRange sustainable_range_from_json(std::string_view text) {
  const auto j = detail::ordered_json::parse(text);
  detail::expect_schema(j, "geogame.sustainable_range/1");
  return SustainableRange{detail::number_or_nan(j.at("lower")),
                          detail::number_or_nan(j.at("upper")),
                          detail::number_or_nan(j.at("shrink"))};
}

inline std::string to_json_string(const OptimizeResult& r) {
  return "{\"schema\":\"geogame.optimize_result/1\",\"minimizer\":" +
         detail::json_number(r.minimizer) +
         ",\"objective\":" + detail::json_number(r.objective) +
         ",\"evaluations\":" + std::to_string(r.evaluations) + "}";
}

inline OptimizeResult optimize_result_from_json(std::string_view text) {
  const auto j = detail::ordered_json::parse(text);
  detail::expect_schema(j, "geogame.optimize_result/1");
  return OptimizeResult{detail::number_or_nan(j.at("minimizer")),
                        detail::number_or_nan(j.at("objective")),
                        j.at("evaluations").get<int>()};
}

inline std::string to_json_string(const SweepSurface& surface) {
  const auto number_list = [](const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) out += ',';
      out += detail::json_number(values[i]);
    }
    return out + "]";
  };
  return "{\"schema\":\"geogame.sweep_surface/1\",\"y_h_values\":" +
         number_list(surface.y_h_values) +
         ",\"y_c_values\":" + number_list(surface.y_c_values) +
         ",\"records\":" + records_to_json(surface.cells) + "}";
}

inline SweepSurface sweep_surface_from_json(std::string_view text) {
  const auto j = detail::ordered_json::parse(text);
  detail::expect_schema(j, "geogame.sweep_surface/1");
  SweepSurface surface;
  for (const auto& v : j.at("y_h_values"))
    surface.y_h_values.push_back(detail::number_or_nan(v));
  for (const auto& v : j.at("y_c_values"))
    surface.y_c_values.push_back(detail::number_or_nan(v));
  for (const auto& item : j.at("records"))
    surface.cells.push_back(detail::record_from_json(item));
  return surface;
}

}  // namespace geogame::io

#endif  // GEOGAME_IO_HPP
