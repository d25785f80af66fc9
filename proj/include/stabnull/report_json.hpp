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

#ifndef STABNULL_REPORT_JSON_HPP
#define STABNULL_REPORT_JSON_HPP

#include <json.hpp>

#include "stabnull/nullity.hpp"
#include "stabnull/theorem_suite.hpp"

namespace stabnull {

/// NullityReport wire form:
///   {n, s, nullity, backend, entries: [{u, v, sign}] or [{u, sign}],
///    elapsed_ms}
/// with labels in the text form of the Pauli module. Unknown keys are
/// ignored on parse, so emitters may extend the object.
nlohmann::json report_to_json(const NullityReport& report);
NullityReport report_from_json(const nlohmann::json& j);

nlohmann::json check_results_to_json(const std::vector<CheckResult>& results);

}  // namespace stabnull

#endif  // STABNULL_REPORT_JSON_HPP
