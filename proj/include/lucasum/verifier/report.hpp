// Copyright 2026 The lucasum Authors
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

// Report serialization. Two formats, both byte-stable for a given report:
//
//   table       human-readable block per identity
//   json-lines  one JSON object per identity per line, fixed key order

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lucasum/verifier/verify.hpp"

namespace lucasum::verifier {

using ordered_json = nlohmann::ordered_json;

inline std::string describe_cell(const Cell& c) {
  std::string s = "p=" + std::to_string(c.p);
  if (c.a) s += " a=" + std::to_string(*c.a);
  if (c.m) s += " m=" + std::to_string(*c.m);
  if (c.A) s += " A=" + std::to_string(*c.A);
  if (c.B) s += " B=" + std::to_string(*c.B);
  return s;
}

inline std::string to_table(const VerificationReport& r) {
  std::ostringstream out;
  out << "== " << r.identity_id << " | " << r.anchor << "\n";
  out << "   range:   " << r.range << "\n";
  out << "   checked: " << r.checked << "  skipped: " << r.skipped << "  failed: " << r.failed << "\n";
  if (!r.skip_histogram.empty()) {
    out << "   skips:  ";
    for (const auto& [reason, count] : r.skip_histogram) out << " [" << reason << "]=" << count;
    out << "\n";
  }
  for (const auto& f : r.failures) {
    out << "   FAIL " << describe_cell(f.cell) << " lhs=" << f.lhs << " rhs=" << f.rhs << "\n";
  }
  return out.str();
}

inline ordered_json to_json(const VerificationReport& r) {
  ordered_json j;
  j["identity_id"] = r.identity_id;
  j["anchor"] = r.anchor;
  j["range"] = r.range;
  j["checked"] = r.checked;
  j["skipped"] = r.skipped;
  j["failed"] = r.failed;
  j["failures"] = ordered_json::array();
  for (const auto& f : r.failures) {
    ordered_json fj;
    fj["p"] = f.cell.p;
    if (f.cell.a) fj["a"] = *f.cell.a;
    if (f.cell.m) fj["m"] = *f.cell.m;
    if (f.cell.A) fj["A"] = *f.cell.A;
    if (f.cell.B) fj["B"] = *f.cell.B;
    fj["lhs"] = f.lhs;
    fj["rhs"] = f.rhs;
    j["failures"].push_back(std::move(fj));
  }
  j["skip_histogram"] = ordered_json::object();
  for (const auto& [reason, count] : r.skip_histogram) j["skip_histogram"][reason] = count;
  return j;
}

/// One line, no trailing newline.
inline std::string to_json_line(const VerificationReport& r) { return to_json(r).dump(); }

/// Inverse of to_json_line. Throws nlohmann::json::exception on malformed input.
inline VerificationReport from_json_line(const std::string& line) {
  const ordered_json j = ordered_json::parse(line);
  VerificationReport r;
  r.identity_id = j.at("identity_id").get<std::string>();
  r.anchor = j.at("anchor").get<std::string>();
  r.range = j.at("range").get<std::string>();
  r.checked = j.at("checked").get<std::size_t>();
  r.skipped = j.at("skipped").get<std::size_t>();
  r.failed = j.at("failed").get<std::size_t>();
  for (const auto& fj : j.at("failures")) {
    Failure f;
    f.cell.p = fj.at("p").get<std::int64_t>();
    if (fj.contains("a")) f.cell.a = fj["a"].get<std::int64_t>();
    if (fj.contains("m")) f.cell.m = fj["m"].get<std::int64_t>();
    if (fj.contains("A")) f.cell.A = fj["A"].get<std::int64_t>();
    if (fj.contains("B")) f.cell.B = fj["B"].get<std::int64_t>();
    f.lhs = fj.at("lhs").get<std::string>();
    f.rhs = fj.at("rhs").get<std::string>();
    r.failures.push_back(std::move(f));
  }
  for (const auto& [reason, count] : j.at("skip_histogram").items()) r.skip_histogram[reason] = count.get<std::size_t>();
  return r;
}

enum class ReportFormat { table, json_lines };

inline std::string render_reports(const std::vector<VerificationReport>& reports, ReportFormat format) {
  std::string out;
  for (const auto& r : reports) {
    out += format == ReportFormat::table ? to_table(r) : to_json_line(r) + "\n";
  }
  return out;
}

}  // namespace lucasum::verifier
