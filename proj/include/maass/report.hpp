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

#pragma once

#include <chrono>
#include <complex>
#include <string>

#include <json.hpp>

namespace maass {

inline constexpr int kReportSchema = 1;

nlohmann::json complex_json(std::complex<double> z);

/// Outcome of one CLI command. pass is true iff every check is within its
/// tolerance and no step raised an error.
class RunReport {
public:
    explicit RunReport(std::string command);

    nlohmann::json& inputs() { return inputs_; }

    void add_check(const std::string& name, double residual, double tolerance);
    void add_flag(const std::string& name, bool ok, nlohmann::json detail = nullptr);
    void add_value(const std::string& name, nlohmann::json value);
    void add_error(const std::string& name, const std::string& message);

    bool pass() const { return pass_; }
    /// Without the wall time the output is a pure function of the inputs.
    nlohmann::json to_json(bool with_time = true) const;

private:
    std::string command_;
    nlohmann::json inputs_ = nlohmann::json::object();
    nlohmann::json results_ = nlohmann::json::array();
    bool pass_ = true;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace maass
