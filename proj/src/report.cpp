// Copyright 2026 The maass-theta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "maass/report.hpp"

#include <cmath>

namespace maass {

nlohmann::json complex_json(std::complex<double> z) { return nlohmann::json::array({z.real(), z.imag()}); }

RunReport::RunReport(std::string command) : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {}

void RunReport::add_check(const std::string& name, double residual, double tolerance) {
    const bool ok = std::isfinite(residual) && residual <= tolerance;
    pass_ = pass_ && ok;
    results_.push_back({{"name", name}, {"residual", residual}, {"tolerance", tolerance}, {"pass", ok}});
}

void RunReport::add_flag(const std::string& name, bool ok, nlohmann::json detail) {
    pass_ = pass_ && ok;
    nlohmann::json entry = {{"name", name}, {"pass", ok}};
    if (!detail.is_null()) entry["detail"] = std::move(detail);
    results_.push_back(std::move(entry));
}

void RunReport::add_value(const std::string& name, nlohmann::json value) {
    results_.push_back({{"name", name}, {"value", std::move(value)}});
}

void RunReport::add_error(const std::string& name, const std::string& message) {
    pass_ = false;
    results_.push_back({{"name", name}, {"error", message}, {"pass", false}});
}

nlohmann::json RunReport::to_json(bool with_time) const {
    nlohmann::json j = {{"schema", kReportSchema}, {"command", command_}, {"inputs", inputs_},
                        {"results", results_}, {"pass", pass_}};
    if (with_time)
        j["wall_time_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    return j;
}

}  // namespace maass
