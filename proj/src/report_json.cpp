// Copyright 2026 The stabnull Authors.
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

#include "stabnull/report_json.hpp"

namespace stabnull {

using nlohmann::json;

json report_to_json(const NullityReport& report) {
  json entries = json::array();
  if (report.is_state) {
    for (const auto& e : report.state_entries) {
      entries.push_back({{"u", e.u.str()}, {"sign", e.sign}});
    }
  } else {
    for (const auto& e : report.entries) {
      entries.push_back({{"u", e.u.str()}, {"v", e.v.str()}, {"sign", e.sign}});
    }
  }
  return json{{"n", report.n},
              {"s", report.s_value},
              {"nullity", report.nullity},
              {"kind", report.is_state ? "state" : "unitary"},
              {"backend", report.backend},
              {"entries", std::move(entries)},
              {"elapsed_ms", report.elapsed_ms}};
}

NullityReport report_from_json(const json& j) {
  NullityReport report;
  report.n = j.at("n").get<int>();
  report.s_value = j.at("s").get<uint64_t>();
  report.nullity = j.at("nullity").get<int>();
  report.is_state = j.at("kind").get<std::string>() == "state";
  report.backend = j.at("backend").get<std::string>();
  report.elapsed_ms = j.at("elapsed_ms").get<double>();
  for (const auto& e : j.at("entries")) {
    if (report.is_state) {
      report.state_entries.push_back(
          SignedLabel{PauliLabel::from_str(e.at("u").get<std::string>()),
                      e.at("sign").get<int>()});
    } else {
      report.entries.push_back(
          TransferEntry{PauliLabel::from_str(e.at("u").get<std::string>()),
                        PauliLabel::from_str(e.at("v").get<std::string>()),
                        e.at("sign").get<int>()});
    }
  }
  return report;
}

json check_results_to_json(const std::vector<CheckResult>& results) {
  json out = json::array();
  for (const auto& r : results) {
    out.push_back({{"name", r.name},
                   {"status", r.passed ? "pass" : "fail"},
                   {"witness", r.witness},
                   {"seed", r.seed},
                   {"elapsed_ms", r.elapsed_ms}});
  }
  return out;
}

}  // namespace stabnull
