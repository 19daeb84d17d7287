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

#include "heliwave/packet_io.hpp"

#include <cmath>

#include "heliwave/errors.hpp"
#include "json.hpp"

namespace heliwave {

namespace {

using nlohmann::json;

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw DomainError(std::string(what) + " must be a [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

double number_from(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw DomainError(std::string("missing numeric field '") + key + "'");
    }
    return j[key].get<double>();
}

json envelope_json(const Envelope& envelope) {
    if (const auto* g = std::get_if<GaussianCone>(&envelope)) {
        return {{"kind", "gaussian-cone"}, {"theta0", g->theta0}, {"width", g->width}};
    }
    if (const auto* u = std::get_if<UniformCap>(&envelope)) {
        return {{"kind", "uniform-cap"}, {"theta_max", u->theta_max}};
    }
    return {{"kind", "ring"}, {"theta0", std::get<Ring>(envelope).theta0}};
}

Envelope envelope_from(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw DomainError("envelope needs a string 'kind'");
    }
    std::string kind = j["kind"].get<std::string>();
    if (kind == "gaussian-cone") {
        return GaussianCone{number_from(j, "theta0"), number_from(j, "width")};
    }
    if (kind == "uniform-cap") {
        return UniformCap{number_from(j, "theta_max")};
    }
    if (kind == "ring") {
        return Ring{number_from(j, "theta0")};
    }
    throw DomainError("unknown envelope kind '" + kind + "'");
}

}  // namespace

std::string envelope_to_json(const Envelope& envelope) { return envelope_json(envelope).dump(); }

Envelope envelope_from_json(const std::string& text) {
    try {
        return envelope_from(json::parse(text));
    } catch (const json::exception& e) {
        throw DomainError(std::string("invalid envelope JSON: ") + e.what());
    }
}

std::string packet_to_json(const WavePacketQubit& packet, int indent) {
    if (packet.correlation != Correlation::PhiA) {
        throw DomainError("only phi-a packets can be serialized");
    }
    json samples = json::array();
    for (const auto& s : packet.samples) {
        if (s.pair.tag != Correlation::PhiA) {
            throw DomainError("packet sample lost its phi-a correlation");
        }
        samples.push_back({{"theta1", s.pair.p1.theta()}, {"phi1", s.pair.p1.phi()}, {"f", complex_json(s.f)}});
    }
    json j = {{"alpha", complex_json(packet.alpha)},
              {"beta", complex_json(packet.beta)},
              {"samples", std::move(samples)},
              {"envelope", envelope_json(packet.quadrature.envelope)},
              {"seed", packet.quadrature.seed}};
    return j.dump(indent) + "\n";
}

WavePacketQubit packet_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("invalid packet JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("alpha") || !j.contains("beta") || !j.contains("samples") ||
        !j["samples"].is_array()) {
        throw DomainError("packet JSON needs alpha, beta and samples");
    }
    WavePacketQubit packet{complex_from(j["alpha"], "alpha"), complex_from(j["beta"], "beta"), {}, {}, Correlation::PhiA};
    double norm = std::norm(packet.alpha) + std::norm(packet.beta);
    if (std::abs(norm - 1) > 1e-12) {
        throw DomainError("packet amplitudes are not normalized");
    }
    if (j.contains("envelope")) {
        packet.quadrature.envelope = envelope_from(j["envelope"]);
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) {
            throw DomainError("seed must be a non-negative integer");
        }
        packet.quadrature.seed = j["seed"].get<std::uint64_t>();
    }
    double total = 0;
    for (const auto& s : j["samples"]) {
        PacketSample sample{correlated_pair(number_from(s, "theta1"), number_from(s, "phi1"), Correlation::PhiA),
                            complex_from(s.value("f", json()), "f")};
        total += std::norm(sample.f);
        packet.samples.push_back(sample);
    }
    if (packet.samples.empty()) {
        throw EmptyPacketError("packet JSON has no samples");
    }
    if (std::abs(total - 1) > 1e-10) {
        throw DomainError("packet weights do not satisfy sum |f|^2 = 1");
    }
    packet.quadrature.requested = packet.samples.size();
    return packet;
}

}  // namespace heliwave
