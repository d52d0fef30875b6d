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

// Command implementations behind the `maass` executable. Every command returns a
// RunReport; run_cli maps it to the exit-code contract
//   0 pass, 1 verification failure (or I/O failure), 2 usage / input error.

#include <complex>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "maass/family.hpp"
#include "maass/qseries.hpp"
#include "maass/report.hpp"
#include "maass/theta.hpp"

namespace maass {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

RunReport cmd_qseries_verify(SeriesKind kind, std::int64_t order);

RunReport cmd_theta_eval(const ThetaParams& params, Complex tau, double eps, ThetaKind kind);

struct VerifyAllOptions {
    std::vector<Complex> taus{{0.0, 1.0}, {0.0, 2.0}, {1.0 / 3.0, 1.0}};
    double eps = 1e-10;
    double h = 1e-3;
    std::optional<FamilySpec> family;
};

/// Every verification on the Cohen example, the Cohen family, a synthetic family
/// and (if given) a user family. The report (without wall time) is identical for
/// every worker count.
RunReport cmd_verify_all(const VerifyAllOptions& options);

enum class ExportWhat { TCoeffs, SigmaCoeffs, SigmaStarCoeffs };
enum class ExportFormat { Json, Csv };

/// CSV: header "exponent,coefficient" (or "n,T"); JSON: {"schema", "what", "order",
/// "coefficients": [[exponent, value], ...]} with values as integers, or as
/// decimal strings when they exceed 64 bits.
RunReport cmd_export(ExportWhat what, std::int64_t order, ExportFormat format, const std::string& path);
std::string export_text(ExportWhat what, std::int64_t order, ExportFormat format);

RunReport cmd_family_validate(const FamilySpec& spec, Complex tau, double eps);

/// Reads and parses a family spec file; UsageError on unreadable or malformed input.
FamilySpec load_family_spec(const std::string& path);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace maass
