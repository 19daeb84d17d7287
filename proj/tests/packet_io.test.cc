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

#include "gtest/gtest.h"

#include "heliwave/errors.hpp"

using namespace heliwave;

TEST(packet_io, round_trip) {
    auto packet = build_packet(Complex(0.6, 0.0), Complex(0.0, 0.8), GaussianCone{0.3, 0.1}, 40, 5);
    auto loaded = packet_from_json(packet_to_json(packet));
    ASSERT_EQ(loaded.samples.size(), packet.samples.size());
    EXPECT_EQ(loaded.alpha, packet.alpha);
    EXPECT_EQ(loaded.beta, packet.beta);
    EXPECT_EQ(loaded.quadrature.seed, 5u);
    EXPECT_EQ(describe(loaded.quadrature.envelope), describe(packet.quadrature.envelope));
    for (std::size_t k = 0; k < packet.samples.size(); k++) {
        const auto& a = packet.samples[k];
        const auto& b = loaded.samples[k];
        ASSERT_EQ(a.f, b.f);
        ASSERT_EQ(a.pair.p1.theta(), b.pair.p1.theta());
        ASSERT_EQ(a.pair.p1.phi(), b.pair.p1.phi());
        ASSERT_NEAR(a.pair.p2.phi(), b.pair.p2.phi(), 1e-15);
    }
    EXPECT_EQ(packet_to_json(loaded), packet_to_json(packet));
    EXPECT_EQ(measure_packet(loaded).p_gamma1, measure_packet(packet).p_gamma1);
}

TEST(packet_io, envelopes) {
    for (const Envelope& e : {Envelope{GaussianCone{0.1, 0.2}}, Envelope{UniformCap{0.7}}, Envelope{Ring{1.1}}}) {
        EXPECT_EQ(describe(envelope_from_json(envelope_to_json(e))), describe(e));
    }
    EXPECT_THROW(envelope_from_json(R"({"kind": "square"})"), DomainError);
    EXPECT_THROW(envelope_from_json(R"({"kind": "ring"})"), DomainError);
    EXPECT_THROW(envelope_from_json("not json"), DomainError);
}

TEST(packet_io, rejects_bad_packets) {
    auto none = build_packet(1.0, 0.0, Ring{0.5}, 4, 1, Correlation::None);
    EXPECT_THROW(packet_to_json(none), DomainError);

    const char* unnormalized = R"({"alpha": [1, 0], "beta": [0, 0],
        "samples": [{"theta1": 0.5, "phi1": 0.1, "f": [0.5, 0]}],
        "envelope": {"kind": "ring", "theta0": 0.5}, "seed": 1})";
    EXPECT_THROW(packet_from_json(unnormalized), DomainError);

    const char* empty = R"({"alpha": [1, 0], "beta": [0, 0], "samples": [],
        "envelope": {"kind": "ring", "theta0": 0.5}, "seed": 1})";
    EXPECT_THROW(packet_from_json(empty), Error);
    EXPECT_THROW(packet_from_json("{}"), DomainError);
    EXPECT_THROW(packet_from_json("[1, 2"), DomainError);
}
