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

#ifndef HELIWAVE_WAVEPACKET_HPP
#define HELIWAVE_WAVEPACKET_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "heliwave/bell.hpp"

namespace heliwave {

/// theta = |theta0 + width * N(0, 1)| folded into [0, pi], phi uniform.
struct GaussianCone {
    double theta0;
    double width;
};

/// cos(theta) uniform on [cos(theta_max), 1], phi uniform.
struct UniformCap {
    double theta_max;
};

/// theta = theta0 with n equally spaced azimuths (no randomness).
struct Ring {
    double theta0;
};

using Envelope = std::variant<GaussianCone, UniformCap, Ring>;

/// e.g. "gaussian-cone(theta0=0.3,width=0.05)".
std::string describe(const Envelope& envelope);

struct SamplingOptions {
    /// Directions with |theta - pi/2| below this are dropped. The projected
    /// Phi- vanishes on the equator.
    double equator_band = 1e-3;
};

/// Bookkeeping for the discretized measure.
struct Quadrature {
    Envelope envelope = GaussianCone{0.0, 0.0};
    std::uint64_t seed = 0;
    std::size_t requested = 0;
    std::size_t excluded = 0;
    SamplingOptions options;
    /// Indices of samples moved into the equator band by a transformation.
    std::vector<std::size_t> band_crossings;
};

/// (theta, phi) candidates drawn from an envelope. Deterministic in (envelope, n, seed).
struct Direction {
    double theta;
    double phi;
};
std::vector<Direction> sample_directions(const Envelope& envelope, std::size_t n, std::uint64_t seed);

struct PacketSample {
    MomentumPair pair;
    Complex f;
    double doppler1 = 1.0;  // logged only, never enters amplitudes
    double doppler2 = 1.0;
};

/// alpha |Phi+> + beta |Phi-> smeared over a finite set of momentum pairs.
/// Built packets carry Phi-a pairs; Correlation::None is available as a
/// control where each partner is drawn independently from the envelope.
struct WavePacketQubit {
    Complex alpha;
    Complex beta;
    std::vector<PacketSample> samples;
    Quadrature quadrature;
    Correlation correlation = Correlation::PhiA;
};

/// Throws DomainError for unnormalized (alpha, beta), n = 0 or bad envelope
/// parameters, EmptyPacketError if every sample is excluded.
WavePacketQubit build_packet(Complex alpha, Complex beta, const Envelope& envelope, std::size_t n,
                             std::uint64_t seed, Correlation correlation = Correlation::PhiA,
                             const SamplingOptions& options = {});

/// Same samples and envelope, different logical amplitudes.
WavePacketQubit with_amplitudes(const WavePacketQubit& packet, Complex alpha, Complex beta);

struct TransformOptions {
    /// Recompute every sample's net phase with the little-group oracle and
    /// throw ConsistencyError if it deviates from 1 by more than tolerance.
    bool verify = false;
    double tolerance = 1e-10;
};

/// Moves every momentum pair by lambda. The logical amplitudes are left as
/// they are: for correlated pairs the Wigner phases of the two modes cancel.
/// Samples that land in the equator band are recorded in band_crossings.
/// Throws DomainError for uncorrelated packets (use audit_invariance).
WavePacketQubit transform_packet(const WavePacketQubit& packet, const LorentzTransform& lambda,
                                 const TransformOptions& options = {});

struct InvarianceAudit {
    double max_amplitude_deviation;  // max over samples of |c'(sigma1 sigma2) - c(sigma1 sigma2)|
    double max_phase_deviation;      // max over samples of |exp(-i (s1 w1 + s2 w2)) - 1| on the Phi components
};

/// Transforms each sample state through the little-group oracle and compares
/// the helicity coefficients with the untransformed ones.
InvarianceAudit audit_invariance(const WavePacketQubit& packet, const LorentzTransform& lambda);

enum class Outcome { Gamma1, Gamma2, Null };

std::string_view to_string(Outcome outcome);

/// Result of Gamma1 = |floor Phi-><floor Phi-|, Gamma2 = 1 - Gamma1 after the
/// transverse projection of both modes.
struct MeasurementRecord {
    double detect_prob;
    double p_gamma1;  // conditional on detection
    double p_gamma2;
};

/// Exact expectations. Per sample the encoded state alpha Phi+ + beta Phi- is
/// projected, weighted by |f|^2 times the kept squared norm, and compared with
/// the projected Phi- of the same pair. Throws NullOutcomeError when the total
/// detection probability is below 1e-14.
MeasurementRecord measure_packet(const WavePacketQubit& packet);

struct ShotCounts {
    std::uint64_t seed;
    std::size_t shots;
    std::size_t gamma1;
    std::size_t gamma2;
    std::size_t null;
};

/// Draws single-shot outcomes from a record with a seeded generator.
ShotCounts sample_shots(const MeasurementRecord& record, std::size_t shots, std::uint64_t seed);

/// Momentum-traced state seen by the two-mode detector: sum over samples of
/// |f|^2 u u^dagger with u the projected (unnormalized) floored 4-vector,
/// divided by its trace.
Eigen::Matrix4cd detected_density_matrix(const WavePacketQubit& packet);

struct SingleModeSample {
    FourMomentum p;
    Complex f;
    Complex phase = 1.0;  // applied to |p,+>; |p,-> receives the conjugate
    double doppler = 1.0;
};

/// alpha |p,+> + beta |p,-> smeared over single momenta.
struct SingleModePacket {
    Complex alpha;
    Complex beta;
    std::vector<SingleModeSample> samples;
    Quadrature quadrature;
};

SingleModePacket build_single_mode(Complex alpha, Complex beta, const Envelope& envelope, std::size_t n,
                                   std::uint64_t seed, const SamplingOptions& options = {});

SingleModePacket with_amplitudes(const SingleModePacket& packet, Complex alpha, Complex beta);

/// Moves each momentum and multiplies its phase by exp(-i theta_W).
SingleModePacket transform_single_mode(const SingleModePacket& packet, const LorentzTransform& lambda);

struct EffectiveDensityMatrix {
    Eigen::Matrix2cd m;    // renormalized to unit trace
    double trace;          // before renormalization
    double trace_deficit;  // 1 - trace
};

/// sum |f|^2 Pi_k (alpha|+> + beta|->)(...)^dagger Pi_k over samples.
/// Throws NullOutcomeError for zero trace.
EffectiveDensityMatrix effective_density_matrix(const SingleModePacket& packet);

/// Minimum error of discriminating two equiprobable density matrices,
/// 1/2 - ||a - b||_1 / 4.
double helstrom_error(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

struct DistinguishabilityRow {
    std::string lambda_desc;
    std::string encoding;  // "bell" or "single-mode"
    double error_prob;
    double detect_prob;
};

struct ReportLambda {
    std::string desc;
    LorentzTransform lambda;
};

struct ReportParams {
    std::vector<double> widths;  // gaussian-cone widths, theta0 below
    double theta0 = 0.0;
    std::size_t samples = 256;
    std::uint64_t seed = 1;
};

/// For every width, lambda and (alpha, beta): Helstrom error between the
/// packet and its orthogonal partner (-conj(beta), conj(alpha)) after
/// transformation and detection, for both encodings. lambda_desc carries the
/// width when more than one is swept.
std::vector<DistinguishabilityRow> distinguishability_report(const std::vector<Vector2c>& alpha_beta,
                                                             const std::vector<ReportLambda>& lambdas,
                                                             const ReportParams& params);

}  // namespace heliwave

#endif
