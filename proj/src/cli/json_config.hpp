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

#ifndef HELIWAVE_CLI_JSON_CONFIG_HPP
#define HELIWAVE_CLI_JSON_CONFIG_HPP

#include <istream>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace heliwave::cli {

/// Reads --config files written as JSON.
///
/// Top-level keys name options of the main command; a key naming a
/// subcommand holds an object with that subcommand's options:
///   {"threads": 2, "fixed-points": {"grid": 64, "varpi": [0.3, 0.7]}}
/// Numbers are passed through losslessly. Options given on the command line
/// win over the file.
class JsonConfig : public CLI::Config {
   public:
    std::string to_config(const CLI::App* app, bool default_also, bool write_description,
                          std::string prefix) const override;
    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override;
};

}  // namespace heliwave::cli

#endif
