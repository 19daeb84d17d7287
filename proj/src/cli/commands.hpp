// Copyright 2026 The heliwave Authors
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

#ifndef HELIWAVE_CLI_COMMANDS_HPP
#define HELIWAVE_CLI_COMMANDS_HPP

#include <ostream>
#include <string_view>

#include "heliwave/kinematics.hpp"

namespace heliwave::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfig = 2;

/// Entry point of the heliwave tool. Data goes to `out` (or to --out files),
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Parses "identity" or a product of generators such as "rz(0.4)*ry(0.9)*bz(0.6)".
/// Throws DomainError on malformed text.
LorentzTransform parse_lambda(std::string_view text);

}  // namespace heliwave::cli

#endif
