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

#ifndef HELIWAVE_FORMAT_HPP
#define HELIWAVE_FORMAT_HPP

#include <string>

namespace heliwave {

/// Shortest decimal string that round-trips to the same double.
std::string format_shortest(double v);

/// 17 significant digits, '.' decimal point, locale independent.
std::string format_full(double v);

}  // namespace heliwave

#endif
