// Copyright 2026 The monogamy Authors.
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

#include <iosfwd>
#include <string>
#include <vector>

#include "monogamy/reproduce.hpp"
#include "monogamy/states.hpp"

namespace monogamy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRegression = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the `monogamy` executable. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Prints the example table; returns kExitOk when every value matches its reference.
int report_example(const ExampleResult& result, std::ostream& out);

/// Parses either {"n_qubits": n, "amplitudes": [[re, im], ...]} or
/// {"lambda": [l0, ..., l4], "phi": x}. Throws std::invalid_argument on malformed input.
PureState parse_state_json(const std::string& text);

}  // namespace monogamy::cli
