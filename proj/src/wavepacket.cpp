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

#include "heliwave/wavepacket.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "heliwave/errors.hpp"
#include "heliwave/format.hpp"

namespace heliwave {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kNullNorm = 1e-14;

void check_amplitudes(Complex alpha, Complex beta) {
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()) || !std::isfinite(beta.real()) ||
        !std::isfinite(beta.imag())) {
        throw DomainError("non-finite logical amplitudes");
    }
    double norm = std::norm(alpha) + std::norm(beta);
    if (std::abs(norm - 1) > 1e-12) {
        throw DomainError("logical amplitudes must satisfy |alpha|^2 + |beta|^2 = 1, got " + format_shortest(norm));
    }
}

void check_angle(double theta, double lo, double hi, const char* what) {
    if (!std::isfinite(theta) || theta < lo || theta > hi) {
        throw DomainError(std::string(what) + " out of range: " + format_shortest(theta));
    }
}

void check_envelope(const Envelope& envelope) {
    if (const auto* g = std::get_if<GaussianCone>(&envelope)) {
        check_angle(g->theta0, 0, kPi, "gaussian-cone theta0");
        if (!std::isfinite(g->width) || g->width < 0) {
            throw DomainError("gaussian-cone width must be finite and >= 0");
        }
    } else if (const auto* u = std::get_if<UniformCap>(&envelope)) {
        if (!std::isfinite(u->theta_max) || u->theta_max <= 0 || u->theta_max > kPi) {
            throw DomainError("uniform-cap theta_max must lie in (0, pi]");
        }
    } else {
        check_angle(std::get<Ring>(envelope).theta0, 0, kPi, "ring theta0");
    }
}

bool excluded(double theta, const SamplingOptions& options) {
    return theta <= kTolerance || std::abs(theta - kPi / 2) < options.equator_band;
}

bool in_band(const FourMomentum& p, const SamplingOptions& options) {
    return std::abs(p.theta() - kPi / 2) < options.equator_band;
}

// Logical coefficients (++, +-, -+, --) of alpha Phi+ + beta Phi-.
Vector4c logical_coefficients(Complex alpha, Complex beta) {
    return Vector4c(alpha + beta, 0, 0, alpha - beta) / kSqrt2;
}

double net_phase_deviation(const LorentzTransform& lambda, const MomentumPair& pair) {
    double w1 = wigner_angle_numeric(lambda, pair.p1);
    double w2 = wigner_angle_numeric(lambda, pair.p2);
    return std::abs(std::polar(1.0, -(w1 + w2)) - 1.0);
}

// Gamma1 axis for one pair: the projected, renormalized Phi-. Where that
// vanishes (cos theta = 0) the limit direction is used.
Vector4c gamma1_axis(const MomentumPair& pair) {
    try {
        return pt_project(bell(pair, BellKind::PhiMinus)).amps;
    } catch (const NullOutcomeError&) {
        double sum = pair.p1.phi() + pair.p2.phi();
        return Vector4c(std::polar(1.0, -sum), 0, 0, -std::polar(1.0, sum)) / kSqrt2;
    }
}

}  // namespace

std::string describe(const Envelope& envelope) {
    if (const auto* g = std::get_if<GaussianCone>(&envelope)) {
        return "gaussian-cone(theta0=" + format_shortest(g->theta0) + ",width=" + format_shortest(g->width) + ")";
    }
    if (const auto* u = std::get_if<UniformCap>(&envelope)) {
        return "uniform-cap(theta_max=" + format_shortest(u->theta_max) + ")";
    }
    return "ring(theta0=" + format_shortest(std::get<Ring>(envelope).theta0) + ")";
}

std::vector<Direction> sample_directions(const Envelope& envelope, std::size_t n, std::uint64_t seed) {
    check_envelope(envelope);
    std::vector<Direction> out;
    out.reserve(n);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    if (const auto* g = std::get_if<GaussianCone>(&envelope)) {
        std::normal_distribution<double> normal(0.0, 1.0);
        for (std::size_t k = 0; k < n; k++) {
            double theta = std::fmod(std::abs(g->theta0 + g->width * normal(rng)), kTwoPi);
            if (theta > kPi) {
                theta = kTwoPi - theta;
            }
            out.push_back({theta, kTwoPi * uniform(rng)});
        }
    } else if (const auto* u = std::get_if<UniformCap>(&envelope)) {
        double lo = std::cos(u->theta_max);
        for (std::size_t k = 0; k < n; k++) {
            double c = lo + (1 - lo) * uniform(rng);
            out.push_back({std::acos(std::clamp(c, -1.0, 1.0)), kTwoPi * uniform(rng)});
        }
    } else {
        double theta = std::get<Ring>(envelope).theta0;
        for (std::size_t k = 0; k < n; k++) {
            out.push_back({theta, kTwoPi * static_cast<double>(k) / static_cast<double>(n)});
        }
    }
    return out;
}

WavePacketQubit build_packet(Complex alpha, Complex beta, const Envelope& envelope, std::size_t n,
                             std::uint64_t seed, Correlation correlation, const SamplingOptions& options) {
    check_amplitudes(alpha, beta);
    if (n == 0) {
        throw DomainError("a packet needs at least one sample");
    }
    if (correlation != Correlation::PhiA && correlation != Correlation::None) {
        throw DomainError("packets are built on phi-a pairs (or none as a control)");
    }
    bool independent = correlation == Correlation::None;
    auto dirs = sample_directions(envelope, independent ? 2 * n : n, seed);

    WavePacketQubit packet{alpha, beta, {}, {}, correlation};
    packet.quadrature = {envelope, seed, n, 0, options, {}};
    for (std::size_t k = 0; k < n; k++) {
        const Direction& d1 = dirs[k];
        if (excluded(d1.theta, options) || (independent && excluded(dirs[n + k].theta, options))) {
            packet.quadrature.excluded++;
            continue;
        }
        MomentumPair pair = independent
                                ? MomentumPair{FourMomentum::from_angles(d1.theta, d1.phi),
                                               FourMomentum::from_angles(dirs[n + k].theta, dirs[n + k].phi),
                                               Correlation::None}
                                : correlated_pair(d1.theta, d1.phi, correlation);
        packet.samples.push_back({pair, 1.0});
    }
    if (packet.samples.empty()) {
        throw EmptyPacketError("every sample of " + describe(envelope) + " fell in an exclusion band");
    }
    double f = 1 / std::sqrt(static_cast<double>(packet.samples.size()));
    for (auto& s : packet.samples) {
        s.f = f;
    }
    return packet;
}

WavePacketQubit with_amplitudes(const WavePacketQubit& packet, Complex alpha, Complex beta) {
    check_amplitudes(alpha, beta);
    WavePacketQubit out = packet;
    out.alpha = alpha;
    out.beta = beta;
    return out;
}

WavePacketQubit transform_packet(const WavePacketQubit& packet, const LorentzTransform& lambda,
                                 const TransformOptions& options) {
    if (packet.correlation == Correlation::None) {
        throw DomainError("transform_packet needs correlated pairs; audit uncorrelated packets instead");
    }
    WavePacketQubit out = packet;
    out.quadrature.band_crossings.clear();
    for (std::size_t k = 0; k < out.samples.size(); k++) {
        PacketSample& s = out.samples[k];
        if (options.verify) {
            double dev = net_phase_deviation(lambda, s.pair);
            if (!(dev <= options.tolerance)) {
                throw ConsistencyError("sample " + std::to_string(k) + " picks up net phase deviation " +
                                       format_shortest(dev));
            }
        }
        TransformedMomentum q1 = apply_with_doppler(lambda, s.pair.p1);
        TransformedMomentum q2 = apply_with_doppler(lambda, s.pair.p2);
        Correlation tag = satisfies(s.pair.tag, q1.momentum, q2.momentum, 1e-10) ? s.pair.tag : Correlation::None;
        s.pair = {q1.momentum, q2.momentum, tag};
        s.doppler1 *= q1.doppler;
        s.doppler2 *= q2.doppler;
        if (in_band(q1.momentum, packet.quadrature.options) || in_band(q2.momentum, packet.quadrature.options)) {
            out.quadrature.band_crossings.push_back(k);
        }
    }
    return out;
}

InvarianceAudit audit_invariance(const WavePacketQubit& packet, const LorentzTransform& lambda) {
    InvarianceAudit audit{0.0, 0.0};
    Vector4c c = logical_coefficients(packet.alpha, packet.beta);
    for (const auto& s : packet.samples) {
        TwoModeState moved = transform_bell(from_coefficients(s.pair, c), lambda);
        double amp = (helicity_coefficients(moved) - c).cwiseAbs().maxCoeff();
        audit.max_amplitude_deviation = std::max(audit.max_amplitude_deviation, amp);
        audit.max_phase_deviation = std::max(audit.max_phase_deviation, net_phase_deviation(lambda, s.pair));
    }
    return audit;
}

std::string_view to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::Gamma1: return "gamma1";
        case Outcome::Gamma2: return "gamma2";
        case Outcome::Null: return "null";
    }
    return "null";
}

MeasurementRecord measure_packet(const WavePacketQubit& packet) {
    if (packet.samples.empty()) {
        throw EmptyPacketError("cannot measure an empty packet");
    }
    Vector4c c = logical_coefficients(packet.alpha, packet.beta);
    double detect = 0;
    double gamma1 = 0;
    for (const auto& s : packet.samples) {
        TwoModeState projected;
        try {
            projected = pt_project(from_coefficients(s.pair, c));
        } catch (const NullOutcomeError&) {
            continue;
        }
        double w = std::norm(s.f) * projected.norm_weight;
        detect += w;
        gamma1 += w * std::norm(gamma1_axis(s.pair).dot(projected.amps));
    }
    if (detect < kNullNorm) {
        throw NullOutcomeError("no sample of the packet survives the transverse projection");
    }
    double p1 = std::clamp(gamma1 / detect, 0.0, 1.0);
    return {detect, p1, 1 - p1};
}

ShotCounts sample_shots(const MeasurementRecord& record, std::size_t shots, std::uint64_t seed) {
    ShotCounts counts{seed, shots, 0, 0, 0};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (std::size_t k = 0; k < shots; k++) {
        if (uniform(rng) >= record.detect_prob) {
            counts.null++;
        } else if (uniform(rng) < record.p_gamma1) {
            counts.gamma1++;
        } else {
            counts.gamma2++;
        }
    }
    return counts;
}

Eigen::Matrix4cd detected_density_matrix(const WavePacketQubit& packet) {
    Vector4c c = logical_coefficients(packet.alpha, packet.beta);
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    for (const auto& s : packet.samples) {
        const Eigen::VectorXcd& a = from_coefficients(s.pair, c).amps;
        Vector4c u(a[0], a[1], a[3], a[4]);
        rho += std::norm(s.f) * u * u.adjoint();
    }
    double trace = rho.trace().real();
    if (trace < kNullNorm) {
        throw NullOutcomeError("no sample of the packet survives the transverse projection");
    }
    return rho / trace;
}

SingleModePacket build_single_mode(Complex alpha, Complex beta, const Envelope& envelope, std::size_t n,
                                   std::uint64_t seed, const SamplingOptions& options) {
    check_amplitudes(alpha, beta);
    if (n == 0) {
        throw DomainError("a packet needs at least one sample");
    }
    SingleModePacket packet{alpha, beta, {}, {envelope, seed, n, 0, options, {}}};
    for (const Direction& d : sample_directions(envelope, n, seed)) {
        if (excluded(d.theta, options)) {
            packet.quadrature.excluded++;
            continue;
        }
        packet.samples.push_back({FourMomentum::from_angles(d.theta, d.phi), 1.0});
    }
    if (packet.samples.empty()) {
        throw EmptyPacketError("every sample of " + describe(envelope) + " fell in an exclusion band");
    }
    double f = 1 / std::sqrt(static_cast<double>(packet.samples.size()));
    for (auto& s : packet.samples) {
        s.f = f;
    }
    return packet;
}

SingleModePacket with_amplitudes(const SingleModePacket& packet, Complex alpha, Complex beta) {
    check_amplitudes(alpha, beta);
    SingleModePacket out = packet;
    out.alpha = alpha;
    out.beta = beta;
    return out;
}

SingleModePacket transform_single_mode(const SingleModePacket& packet, const LorentzTransform& lambda) {
    SingleModePacket out = packet;
    out.quadrature.band_crossings.clear();
    for (std::size_t k = 0; k < out.samples.size(); k++) {
        SingleModeSample& s = out.samples[k];
        s.phase *= std::polar(1.0, -wigner_angle_numeric(lambda, s.p));
        TransformedMomentum q = apply_with_doppler(lambda, s.p);
        s.p = q.momentum;
        s.doppler *= q.doppler;
        if (in_band(s.p, packet.quadrature.options)) {
            out.quadrature.band_crossings.push_back(k);
        }
    }
    return out;
}

EffectiveDensityMatrix effective_density_matrix(const SingleModePacket& packet) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    for (const auto& s : packet.samples) {
        Vector3c v = packet.alpha * s.phase * triad(s.p, Helicity::Plus).v +
                     packet.beta * std::conj(s.phase) * triad(s.p, Helicity::Minus).v;
        Vector2c floored = v.head<2>();
        m += std::norm(s.f) * floored * floored.adjoint();
    }
    double trace = m.trace().real();
    if (!(trace >= kNullNorm)) {
        throw NullOutcomeError("effective density matrix has zero trace");
    }
    Eigen::Matrix2cd normalized = m / trace;
    normalized = (0.5 * (normalized + normalized.adjoint())).eval();
    return {normalized, trace, 1 - trace};
}

double helstrom_error(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
        throw DomainError("helstrom_error needs square matrices of equal size");
    }
    Eigen::MatrixXcd d = a - b;
    d = (0.5 * (d + d.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(d, Eigen::EigenvaluesOnly);
    double trace_norm = solver.eigenvalues().cwiseAbs().sum();
    return std::max(0.0, 0.5 - 0.25 * trace_norm);
}

std::vector<DistinguishabilityRow> distinguishability_report(const std::vector<Vector2c>& alpha_beta,
                                                             const std::vector<ReportLambda>& lambdas,
                                                             const ReportParams& params) {
    if (alpha_beta.empty() || lambdas.empty() || params.widths.empty()) {
        throw DomainError("distinguishability report needs amplitudes, transformations and widths");
    }
    std::vector<DistinguishabilityRow> rows;
    for (double width : params.widths) {
        Envelope envelope = GaussianCone{params.theta0, width};
        for (std::size_t k = 0; k < alpha_beta.size(); k++) {
            Complex alpha = alpha_beta[k][0];
            Complex beta = alpha_beta[k][1];
            Complex alpha_orth = -std::conj(beta);
            Complex beta_orth = std::conj(alpha);
            WavePacketQubit bell_packet = build_packet(alpha, beta, envelope, params.samples, params.seed);
            SingleModePacket single = build_single_mode(alpha, beta, envelope, params.samples, params.seed);
            for (const auto& lam : lambdas) {
                std::string desc = lam.desc;
                if (params.widths.size() > 1) {
                    desc += ";width=" + format_shortest(width);
                }
                if (alpha_beta.size() > 1) {
                    desc += ";pair=" + std::to_string(k);
                }
                WavePacketQubit moved = transform_packet(bell_packet, lam.lambda);
                double bell_error = helstrom_error(detected_density_matrix(moved),
                                                   detected_density_matrix(with_amplitudes(moved, alpha_orth, beta_orth)));
                rows.push_back({desc, "bell", bell_error, measure_packet(moved).detect_prob});

                SingleModePacket single_moved = transform_single_mode(single, lam.lambda);
                EffectiveDensityMatrix rho = effective_density_matrix(single_moved);
                EffectiveDensityMatrix rho_orth =
                    effective_density_matrix(with_amplitudes(single_moved, alpha_orth, beta_orth));
                rows.push_back({desc, "single-mode", helstrom_error(rho.m, rho_orth.m), rho.trace});
            }
        }
    }
    return rows;
}

}  // namespace heliwave
