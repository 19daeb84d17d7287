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

#include "cli/json_config.hpp"

#include "heliwave/format.hpp"
#include "json.hpp"

namespace heliwave::cli {

namespace {

using nlohmann::json;

std::string scalar_text(const json& j, const std::string& name) {
    if (j.is_boolean()) {
        return j.get<bool>() ? "true" : "false";
    }
    if (j.is_number_unsigned()) {
        return std::to_string(j.get<std::uint64_t>());
    }
    if (j.is_number_integer()) {
        return std::to_string(j.get<std::int64_t>());
    }
    if (j.is_number()) {
        return format_full(j.get<double>());
    }
    if (j.is_string()) {
        return j.get<std::string>();
    }
    throw CLI::ConversionError("config value for '" + name + "' must be a scalar or a list of scalars");
}

void flatten(const json& j, const std::string& name, const std::vector<std::string>& parents,
             std::vector<CLI::ConfigItem>& out) {
    if (j.is_object()) {
        std::vector<std::string> inner = parents;
        if (!name.empty()) {
            inner.push_back(name);
        }
        for (auto it = j.begin(); it != j.end(); ++it) {
            flatten(it.value(), it.key(), inner, out);
        }
        return;
    }
    if (name.empty()) {
        throw CLI::ConversionError("config file must hold a JSON object");
    }
    CLI::ConfigItem item;
    item.parents = parents;
    item.name = name;
    if (j.is_array()) {
        for (const auto& v : j) {
            item.inputs.push_back(scalar_text(v, name));
        }
    } else {
        item.inputs.push_back(scalar_text(j, name));
    }
    out.push_back(std::move(item));
}

}  // namespace

std::string JsonConfig::to_config(const CLI::App* app, bool default_also, bool, std::string) const {
    json j = json::object();
    for (const CLI::Option* opt : app->get_options({})) {
        if (opt->get_lnames().empty() || !opt->get_configurable()) {
            continue;
        }
        const std::string& name = opt->get_lnames().front();
        if (opt->count() > 0) {
            auto results = opt->results();
            j[name] = results.size() == 1 ? json(results.front()) : json(results);
        } else if (default_also && !opt->get_default_str().empty()) {
            j[name] = opt->get_default_str();
        }
    }
    for (const CLI::App* sub : app->get_subcommands({})) {
        json inner = json::parse(to_config(sub, default_also, false, ""));
        if (!inner.empty()) {
            j[sub->get_name()] = inner;
        }
    }
    return j.dump(2);
}

std::vector<CLI::ConfigItem> JsonConfig::from_config(std::istream& input) const {
    json j;
    try {
        j = json::parse(input);
    } catch (const json::exception& e) {
        throw CLI::ConversionError(std::string("invalid JSON config: ") + e.what());
    }
    std::vector<CLI::ConfigItem> items;
    flatten(j, "", {}, items);
    return items;
}

}  // namespace heliwave::cli
