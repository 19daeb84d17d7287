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

#include "cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/json_config.hpp"
#include "heliwave/errors.hpp"
#include "heliwave/fixed_points.hpp"
#include "heliwave/format.hpp"
#include "heliwave/packet_io.hpp"
#include "heliwave/parallel.hpp"
#include "heliwave/wavepacket.hpp"
#include "json.hpp"

namespace heliwave::cli {

namespace {

using json = nlohmann::ordered_json;

struct EnvelopeArgs {
    std::string kind = "gaussian-cone";
    double theta0 = 0.3;
    double width = 0.05;
    double theta_max = 0.5;
    double equator_band = 1e-3;
    std::size_t samples = 256;
    std::uint64_t seed = 1;

    Envelope envelope() const {
        if (kind == "gaussian-cone") {
            return GaussianCone{theta0, width};
        }
        if (kind == "uniform-cap") {
            return UniformCap{theta_max};
        }
        return Ring{theta0};
    }

    SamplingOptions options() const { return {equator_band}; }
};

void add_envelope_options(CLI::App* cmd, EnvelopeArgs& args) {
    cmd->add_option("--envelope", args.kind, "envelope shape")
        ->check(CLI::IsMember({"gaussian-cone", "uniform-cap", "ring"}))
        ->capture_default_str();
    cmd->add_option("--theta0", args.theta0, "cone axis / ring polar angle")->capture_default_str();
    cmd->add_option("--width", args.width, "gaussian-cone width")->capture_default_str();
    cmd->add_option("--theta-max", args.theta_max, "uniform-cap opening angle")->capture_default_str();
    cmd->add_option("--equator-band", args.equator_band, "half width of the excluded band around theta = pi/2")
        ->capture_default_str();
    cmd->add_option("--samples", args.samples, "number of momentum samples")->capture_default_str();
    cmd->add_option("--seed", args.seed, "random seed")->capture_default_str();
}

void require_finite(std::initializer_list<std::pair<const char*, double>> values) {
    for (const auto& [name, v] : values) {
        if (!std::isfinite(v)) {
            throw DomainError(std::string("--") + name + " must be finite");
        }
    }
}

Complex parse_amplitude(const std::vector<double>& parts, const char* name) {
    if (parts.empty() || parts.size() > 2) {
        throw DomainError(std::string("--") + name + " takes re or re,im");
    }
    Complex z(parts[0], parts.size() == 2 ? parts[1] : 0.0);
    require_finite({{name, z.real()}, {name, z.imag()}});
    return z;
}

std::pair<Complex, Complex> normalized_amplitudes(const std::vector<double>& a, const std::vector<double>& b,
                                                  std::ostream& err) {
    Complex alpha = parse_amplitude(a, "alpha");
    Complex beta = parse_amplitude(b, "beta");
    double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
    if (!(norm > 0)) {
        throw DomainError("(alpha, beta) must not both vanish");
    }
    if (std::abs(norm - 1) > 1e-12) {
        err << "note: normalizing (alpha, beta) by " << format_shortest(norm) << "\n";
    }
    return {alpha / norm, beta / norm};
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path == "-") {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw DomainError("cannot open '" + path + "' for writing");
    }
    file << content;
    if (!file) {
        throw DomainError("failed writing '" + path + "'");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw DomainError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

std::string csv_row(std::initializer_list<std::string> cells) {
    std::string row;
    for (const auto& c : cells) {
        if (!row.empty()) {
            row += ',';
        }
        row += c;
    }
    return row + '\n';
}

std::string points_path_for(const std::string& out) {
    auto dot = out.rfind('.');
    auto slash = out.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return out + ".points.csv";
    }
    return out.substr(0, dot) + ".points" + out.substr(dot);
}

// fixed-points ---------------------------------------------------------------

struct FixedPointsArgs {
    std::string family = "phi";
    double theta1 = 0.9;
    double phi1 = 0.7;
    std::vector<double> varpi{0.3, 0.7, 1.2};
    int grid = 128;
    std::string out = "-";
    std::string points_out;
    std::string format = "csv";
    bool check = false;
};

int cmd_fixed_points(const FixedPointsArgs& a, int threads, std::ostream& out, std::ostream& err) {
    require_finite({{"theta1", a.theta1}, {"phi1", a.phi1}});
    for (double v : a.varpi) {
        require_finite({{"varpi", v}});
    }
    Family family = parse_family(a.family);
    CurveSet set = fixed_point_curves(a.varpi, a.theta1, a.phi1, family, a.grid, threads);
    std::vector<double> misses = fixed_point_misses(set);

    for (std::size_t k = 0; k < set.sweeps.size(); k++) {
        const auto& s = set.sweeps[k];
        err << "varpi=" << format_shortest(s.varpi);
        if (s.singular_lhs) {
            err << ": tangent of (theta1, phi1) is singular, no curves\n";
            continue;
        }
        err << ": " << s.curves << " curves, " << s.blocked_cells << " singular cells, fixed-point miss "
            << format_shortest(misses[k]) << "\n";
    }

    if (a.format == "json") {
        json curves = json::array();
        for (const auto& c : set.curves) {
            json pts = json::array();
            for (const auto& p : c.points) {
                pts.push_back({p.x, p.y});
            }
            curves.push_back({{"varpi", c.varpi}, {"curve_id", c.curve_id}, {"points", std::move(pts)}});
        }
        json fps = json::array();
        for (const auto& p : set.fixed_points) {
            fps.push_back({{"label", std::string(1, p.label)}, {"x", p.x}, {"y", p.y}});
        }
        json sweeps = json::array();
        for (std::size_t k = 0; k < set.sweeps.size(); k++) {
            const auto& s = set.sweeps[k];
            sweeps.push_back({{"varpi", s.varpi},
                              {"curves", s.curves},
                              {"blocked_cells", s.blocked_cells},
                              {"singular_lhs", s.singular_lhs}});
        }
        json doc = {{"family", a.family}, {"theta1", a.theta1},  {"phi1", a.phi1},         {"grid", a.grid},
                    {"cell", set.cell},   {"curves", curves},    {"fixed_points", fps},    {"sweeps", sweeps}};
        write_output(a.out, doc.dump(2) + "\n", out);
    } else {
        std::string curves = "varpi,curve_id,x,y\n";
        for (const auto& c : set.curves) {
            std::string v = format_full(c.varpi);
            std::string id = std::to_string(c.curve_id);
            for (const auto& p : c.points) {
                curves += csv_row({v, id, format_full(p.x), format_full(p.y)});
            }
        }
        std::string points = "label,x,y\n";
        for (const auto& p : set.fixed_points) {
            points += csv_row({std::string(1, p.label), format_full(p.x), format_full(p.y)});
        }
        if (a.out == "-" && a.points_out.empty()) {
            write_output("-", curves + "\n" + points, out);
        } else {
            write_output(a.out, curves, out);
            write_output(a.points_out.empty() ? points_path_for(a.out) : a.points_out, points, out);
        }
    }

    if (a.check) {
        double bound = std::sqrt(2.0) * set.cell;
        for (std::size_t k = 0; k < misses.size(); k++) {
            if (!set.sweeps[k].singular_lhs && !(misses[k] <= bound)) {
                err << "check failed: varpi=" << format_shortest(set.sweeps[k].varpi)
                    << " misses a fixed point by " << format_shortest(misses[k]) << "\n";
                return kExitCheckFailed;
            }
        }
    }
    return kExitOk;
}

// invariance -----------------------------------------------------------------

struct InvarianceArgs {
    EnvelopeArgs env;
    std::size_t lambdas = 100;
    std::string correlation = "phi-a";
    double max_rapidity = 2.0;
    double tolerance = 1e-10;
    std::string out = "-";
    std::string format = "json";
};

int cmd_invariance(const InvarianceArgs& a, int threads, std::ostream& out, std::ostream& err) {
    require_finite({{"max-rapidity", a.max_rapidity}, {"tolerance", a.tolerance}});
    if (a.max_rapidity < 0 || a.max_rapidity > kMaxRapidity) {
        throw DomainError("--max-rapidity must lie in [0, 50]");
    }
    Correlation tag = parse_correlation(a.correlation);
    WavePacketQubit packet =
        build_packet(1.0, 0.0, a.env.envelope(), a.env.samples, a.env.seed, tag, a.env.options());

    struct Case {
        LorentzTransform lambda;
        Complex alpha;
        Complex beta;
        InvarianceAudit audit{};
    };
    std::vector<Case> cases;
    std::mt19937_64 rng(a.env.seed + 1);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (std::size_t k = 0; k < a.lambdas; k++) {
        double lambda = kTwoPi * uniform(rng);
        double varpi = kPi * uniform(rng);
        double eta = a.max_rapidity * (2 * uniform(rng) - 1);
        Complex alpha(normal(rng), normal(rng));
        Complex beta(normal(rng), normal(rng));
        double n = std::sqrt(std::norm(alpha) + std::norm(beta));
        cases.push_back({normal_form(lambda, varpi, eta), alpha / n, beta / n});
    }
    parallel_for(cases.size(), threads, [&](std::size_t k) {
        cases[k].audit = audit_invariance(with_amplitudes(packet, cases[k].alpha, cases[k].beta), cases[k].lambda);
    });

    bool all_pass = true;
    json rows = json::array();
    std::string csv = "lambda_desc,max_amplitude_deviation,max_phase_deviation,pass\n";
    double worst = 0;
    for (const auto& c : cases) {
        bool pass = c.audit.max_amplitude_deviation <= a.tolerance && c.audit.max_phase_deviation <= a.tolerance;
        all_pass &= pass;
        worst = std::max({worst, c.audit.max_amplitude_deviation, c.audit.max_phase_deviation});
        rows.push_back({{"lambda", c.lambda.describe()},
                        {"alpha", complex_json(c.alpha)},
                        {"beta", complex_json(c.beta)},
                        {"max_amplitude_deviation", c.audit.max_amplitude_deviation},
                        {"max_phase_deviation", c.audit.max_phase_deviation},
                        {"pass", pass}});
        csv += csv_row({c.lambda.describe(), format_full(c.audit.max_amplitude_deviation),
                        format_full(c.audit.max_phase_deviation), pass ? "true" : "false"});
    }
    if (a.format == "json") {
        json doc = {{"correlation", std::string(to_string(tag))},
                    {"envelope", json::parse(envelope_to_json(a.env.envelope()))},
                    {"samples", packet.samples.size()},
                    {"seed", a.env.seed},
                    {"tolerance", a.tolerance},
                    {"lambdas", std::move(rows)},
                    {"pass", all_pass}};
        write_output(a.out, doc.dump(2) + "\n", out);
    } else {
        write_output(a.out, csv, out);
    }
    err << cases.size() << " transformations, " << packet.samples.size() << " samples, worst deviation "
        << format_shortest(worst) << (all_pass ? ": pass\n" : ": FAIL\n");
    return all_pass ? kExitOk : kExitCheckFailed;
}

// measure --------------------------------------------------------------------

struct MeasureArgs {
    EnvelopeArgs env;
    std::vector<double> alpha{1.0};
    std::vector<double> beta{0.0};
    double rz = 0;
    double ry = 0;
    double bz = 0;
    std::size_t shots = 0;
    std::string packet_in;
    std::string packet_out;
    std::string out = "-";
    std::string format = "json";
};

int cmd_measure(const MeasureArgs& a, std::ostream& out, std::ostream& err) {
    require_finite({{"rz", a.rz}, {"ry", a.ry}, {"bz", a.bz}});
    WavePacketQubit packet;
    if (!a.packet_in.empty()) {
        packet = packet_from_json(read_file(a.packet_in));
    } else {
        auto [alpha, beta] = normalized_amplitudes(a.alpha, a.beta, err);
        packet = build_packet(alpha, beta, a.env.envelope(), a.env.samples, a.env.seed, Correlation::PhiA,
                              a.env.options());
    }
    if (!a.packet_out.empty()) {
        write_output(a.packet_out, packet_to_json(packet), out);
    }
    LorentzTransform lambda = normal_form(a.rz, a.ry, a.bz);
    WavePacketQubit moved = transform_packet(packet, lambda, {true, 1e-10});
    MeasurementRecord record = measure_packet(moved);
    if (!moved.quadrature.band_crossings.empty()) {
        err << moved.quadrature.band_crossings.size() << " samples moved into the equator band\n";
    }

    json doc = {{"alpha", complex_json(packet.alpha)},
                {"beta", complex_json(packet.beta)},
                {"lambda", lambda.describe()},
                {"envelope", json::parse(envelope_to_json(packet.quadrature.envelope))},
                {"samples", packet.samples.size()},
                {"seed", packet.quadrature.seed},
                {"detect_prob", record.detect_prob},
                {"p_gamma1", record.p_gamma1},
                {"p_gamma2", record.p_gamma2},
                {"band_crossings", moved.quadrature.band_crossings.size()}};
    std::string csv = "quantity,value\n";
    csv += csv_row({"detect_prob", format_full(record.detect_prob)});
    csv += csv_row({"p_gamma1", format_full(record.p_gamma1)});
    csv += csv_row({"p_gamma2", format_full(record.p_gamma2)});
    if (a.shots > 0) {
        ShotCounts counts = sample_shots(record, a.shots, a.env.seed);
        std::size_t detected = counts.gamma1 + counts.gamma2;
        double freq = detected ? static_cast<double>(counts.gamma1) / static_cast<double>(detected) : 0.0;
        doc["shots"] = {{"seed", counts.seed},     {"count", counts.shots}, {"gamma1", counts.gamma1},
                        {"gamma2", counts.gamma2}, {"null", counts.null},   {"freq_gamma1", freq}};
        csv += csv_row({"shots", std::to_string(counts.shots)});
        csv += csv_row({"shots_gamma1", std::to_string(counts.gamma1)});
        csv += csv_row({"shots_gamma2", std::to_string(counts.gamma2)});
        csv += csv_row({"shots_null", std::to_string(counts.null)});
        csv += csv_row({"freq_gamma1", format_full(freq)});
    }
    write_output(a.out, a.format == "json" ? doc.dump(2) + "\n" : csv, out);
    return kExitOk;
}

// compare --------------------------------------------------------------------

struct CompareArgs {
    std::vector<double> widths{0.05, 0.1, 0.2, 0.3, 0.4};
    double theta0 = 0.0;
    std::vector<std::string> lambdas{"identity", "ry(0.9)", "rz(0.4)*ry(0.9)*bz(0.6)"};
    std::vector<double> alpha{1.0};
    std::vector<double> beta{0.0};
    std::size_t samples = 256;
    std::uint64_t seed = 1;
    double tolerance = 1e-10;
    std::string out = "-";
    std::string format = "csv";
};

int cmd_compare(const CompareArgs& a, std::ostream& out, std::ostream& err) {
    require_finite({{"theta0", a.theta0}, {"tolerance", a.tolerance}});
    for (double w : a.widths) {
        require_finite({{"widths", w}});
    }
    auto [alpha, beta] = normalized_amplitudes(a.alpha, a.beta, err);
    std::vector<ReportLambda> lambdas;
    for (const auto& text : a.lambdas) {
        LorentzTransform l = parse_lambda(text);
        lambdas.push_back({l.describe(), l});
    }
    ReportParams params{a.widths, a.theta0, a.samples, a.seed};
    auto rows = distinguishability_report({Vector2c(alpha, beta)}, lambdas, params);

    bool pass = true;
    for (const auto& r : rows) {
        if (r.encoding == "bell" && !(r.error_prob < a.tolerance)) {
            pass = false;
            err << "bell encoding error " << format_shortest(r.error_prob) << " at " << r.lambda_desc << "\n";
        }
    }
    if (a.format == "json") {
        json doc = json::array();
        for (const auto& r : rows) {
            doc.push_back({{"lambda_desc", r.lambda_desc},
                           {"encoding", r.encoding},
                           {"error_prob", r.error_prob},
                           {"detect_prob", r.detect_prob}});
        }
        write_output(a.out, doc.dump(2) + "\n", out);
    } else {
        std::string csv = "lambda_desc,encoding,error_prob,detect_prob\n";
        for (const auto& r : rows) {
            csv += csv_row({r.lambda_desc, r.encoding, format_full(r.error_prob), format_full(r.detect_prob)});
        }
        write_output(a.out, csv, out);
    }
    return pass ? kExitOk : kExitCheckFailed;
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string_view::npos ? std::string() : std::string(s.substr(b, e - b + 1));
}

}  // namespace

LorentzTransform parse_lambda(std::string_view text) {
    std::string t = trim(text);
    LorentzTransform result;
    if (t.empty()) {
        throw DomainError("empty transformation; use 'identity'");
    }
    if (t == "identity") {
        return result;
    }
    std::size_t pos = 0;
    while (pos <= t.size()) {
        std::size_t star = t.find('*', pos);
        std::string factor = trim(std::string_view(t).substr(pos, star == std::string::npos ? std::string::npos : star - pos));
        auto open = factor.find('(');
        if (open == std::string::npos || factor.back() != ')') {
            throw DomainError("malformed transformation factor '" + factor + "'");
        }
        std::string name = trim(factor.substr(0, open));
        std::string arg = trim(factor.substr(open + 1, factor.size() - open - 2));
        double value = 0;
        auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
        if (ec != std::errc() || ptr != arg.data() + arg.size() || !std::isfinite(value)) {
            throw DomainError("bad parameter in '" + factor + "'");
        }
        LorentzTransform f;
        if (name == "rz") {
            f = rz(value);
        } else if (name == "ry") {
            f = ry(value);
        } else if (name == "bz") {
            f = bz(value);
        } else {
            throw DomainError("unknown generator '" + name + "' (expected rz, ry or bz)");
        }
        result = result.factors().empty() ? f : compose(result, f);
        if (star == std::string::npos) {
            break;
        }
        pos = star + 1;
    }
    return result;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lorentz-invariant photonic wave packets: fixed-point curves, invariance audits, measurement"};
    app.name("heliwave");
    app.config_formatter(std::make_shared<JsonConfig>());
    app.set_config("--config", "", "JSON file of option values; command-line flags take precedence");
    app.require_subcommand(1);
    app.fallthrough();

    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0: $HELIWAVE_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber);

    FixedPointsArgs fp;
    auto* fp_cmd = app.add_subcommand("fixed-points", "zero curves of the fixed-point residual and the four solutions");
    fp_cmd->add_option("--family", fp.family, "phi or psi")
        ->check(CLI::IsMember({"phi", "psi"}, CLI::ignore_case))
        ->capture_default_str();
    fp_cmd->add_option("--theta1", fp.theta1)->capture_default_str();
    fp_cmd->add_option("--phi1", fp.phi1)->capture_default_str();
    fp_cmd->add_option("--varpi", fp.varpi, "rotation angles about y")->delimiter(',')->capture_default_str();
    fp_cmd->add_option("--grid", fp.grid, "cells per axis")->check(CLI::Range(2, 1 << 14))->capture_default_str();
    fp_cmd->add_option("--out", fp.out, "curve output ('-' for stdout)")->capture_default_str();
    fp_cmd->add_option("--points-out", fp.points_out, "fixed-point CSV (default: <out>.points.csv)");
    fp_cmd->add_option("--format", fp.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    fp_cmd->add_flag("--check", fp.check, "exit 1 unless every sweep passes within one cell of all four points");

    InvarianceArgs inv;
    auto* inv_cmd = app.add_subcommand("invariance", "audit Wigner-phase cancellation over random transformations");
    add_envelope_options(inv_cmd, inv.env);
    inv_cmd->add_option("--lambdas", inv.lambdas, "number of random rz*ry*bz transformations")->capture_default_str();
    inv_cmd->add_option("--correlation", inv.correlation, "phi-a or none")
        ->check(CLI::IsMember({"phi-a", "none"}, CLI::ignore_case))
        ->capture_default_str();
    inv_cmd->add_option("--max-rapidity", inv.max_rapidity)->capture_default_str();
    inv_cmd->add_option("--tolerance", inv.tolerance)->capture_default_str();
    inv_cmd->add_option("--out", inv.out)->capture_default_str();
    inv_cmd->add_option("--format", inv.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    MeasureArgs meas;
    auto* meas_cmd = app.add_subcommand("measure", "transform a packet and apply the Gamma1/Gamma2 measurement");
    add_envelope_options(meas_cmd, meas.env);
    meas_cmd->add_option("--alpha", meas.alpha, "re[,im]")->delimiter(',')->expected(1, 2);
    meas_cmd->add_option("--beta", meas.beta, "re[,im]")->delimiter(',')->expected(1, 2);
    meas_cmd->add_option("--rz", meas.rz, "rotation about z")->capture_default_str();
    meas_cmd->add_option("--ry", meas.ry, "rotation about y")->capture_default_str();
    meas_cmd->add_option("--bz", meas.bz, "rapidity along z")->capture_default_str();
    meas_cmd->add_option("--shots", meas.shots, "single-shot draws (0: exact only)")->capture_default_str();
    meas_cmd->add_option("--packet-in", meas.packet_in, "load the packet from JSON instead of sampling");
    meas_cmd->add_option("--packet-out", meas.packet_out, "save the untransformed packet as JSON");
    meas_cmd->add_option("--out", meas.out)->capture_default_str();
    meas_cmd->add_option("--format", meas.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    CompareArgs cmp;
    auto* cmp_cmd = app.add_subcommand("compare", "error probabilities of the two-mode and single-mode encodings");
    cmp_cmd->add_option("--widths", cmp.widths, "gaussian-cone widths")->delimiter(',')->capture_default_str();
    cmp_cmd->add_option("--theta0", cmp.theta0, "cone axis")->capture_default_str();
    cmp_cmd->add_option("--lambda", cmp.lambdas, "transformations, e.g. rz(0.4)*ry(0.9)")->capture_default_str();
    cmp_cmd->add_option("--alpha", cmp.alpha, "re[,im]")->delimiter(',')->expected(1, 2);
    cmp_cmd->add_option("--beta", cmp.beta, "re[,im]")->delimiter(',')->expected(1, 2);
    cmp_cmd->add_option("--samples", cmp.samples)->capture_default_str();
    cmp_cmd->add_option("--seed", cmp.seed)->capture_default_str();
    cmp_cmd->add_option("--tolerance", cmp.tolerance)->capture_default_str();
    cmp_cmd->add_option("--out", cmp.out)->capture_default_str();
    cmp_cmd->add_option("--format", cmp.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*fp_cmd) {
            return cmd_fixed_points(fp, threads, out, err);
        }
        if (*inv_cmd) {
            return cmd_invariance(inv, threads, out, err);
        }
        if (*meas_cmd) {
            return cmd_measure(meas, out, err);
        }
        return cmd_compare(cmp, out, err);
    } catch (const ConsistencyError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}

}  // namespace heliwave::cli
