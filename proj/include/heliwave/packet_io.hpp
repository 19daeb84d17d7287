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

#ifndef HELIWAVE_PACKET_IO_HPP
#define HELIWAVE_PACKET_IO_HPP

#include <string>

#include "heliwave/wavepacket.hpp"

namespace heliwave {

/// JSON form of a phi-a packet:
///   {"alpha": [re, im], "beta": [re, im],
///    "samples": [{"theta1": .., "phi1": .., "f": [re, im]}, ...],
///    "envelope": {"kind": "gaussian-cone", "theta0": .., "width": ..}, "seed": n}
/// Partner momenta are not stored; they are rebuilt from theta1, phi1 on load.
/// Throws DomainError for uncorrelated or transformed (re-tagged) packets.
std::string packet_to_json(const WavePacketQubit& packet, int indent = 2);

/// Inverse of packet_to_json. Throws DomainError for malformed input or
/// weights that violate sum |f|^2 = 1 within 1e-10.
WavePacketQubit packet_from_json(const std::string& text);

/// {"kind": ..., params} <-> Envelope.
std::string envelope_to_json(const Envelope& envelope);
Envelope envelope_from_json(const std::string& text);

}  // namespace heliwave

#endif
