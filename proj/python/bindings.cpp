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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli/commands.hpp"
#include "heliwave/bell.hpp"
#include "heliwave/errors.hpp"
#include "heliwave/fixed_points.hpp"
#include "heliwave/little_group.hpp"
#include "heliwave/packet_io.hpp"
#include "heliwave/wavepacket.hpp"

namespace py = pybind11;
using namespace heliwave;

namespace {

Envelope make_envelope(const std::string& kind, double theta0, double width, double theta_max) {
    if (kind == "gaussian-cone") {
        return GaussianCone{theta0, width};
    }
    if (kind == "uniform-cap") {
        return UniformCap{theta_max};
    }
    if (kind == "ring") {
        return Ring{theta0};
    }
    throw DomainError("unknown envelope '" + kind + "'");
}

py::dict record_dict(const MeasurementRecord& r) {
    py::dict d;
    d["detect_prob"] = r.detect_prob;
    d["p_gamma1"] = r.p_gamma1;
    d["p_gamma2"] = r.p_gamma2;
    return d;
}

}  // namespace

PYBIND11_MODULE(_heliwave, m) {
    m.doc() = "Wigner phases and two-photon helicity encodings";

    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<DomainError>(m, "DomainError", error.ptr());
    py::register_exception<RangeError>(m, "RangeError", error.ptr());
    py::register_exception<SingularityError>(m, "SingularityError", error.ptr());
    py::register_exception<ExcludedDirectionError>(m, "ExcludedDirectionError", error.ptr());
    py::register_exception<NullOutcomeError>(m, "NullOutcomeError", error.ptr());
    py::register_exception<EmptyPacketError>(m, "EmptyPacketError", error.ptr());
    py::register_exception<ConsistencyError>(m, "ConsistencyError", error.ptr());

    py::class_<FourMomentum>(m, "FourMomentum")
        .def(py::init<>())
        .def_static("from_angles", &FourMomentum::from_angles, py::arg("theta"), py::arg("phi"))
        .def_property_readonly("theta", &FourMomentum::theta)
        .def_property_readonly("phi", &FourMomentum::phi)
        .def("vector", &FourMomentum::vector)
        .def("__repr__", [](const FourMomentum& p) {
            std::ostringstream s;
            s << "FourMomentum(theta=" << p.theta() << ", phi=" << p.phi() << ")";
            return s.str();
        });

    py::class_<LorentzTransform>(m, "LorentzTransform")
        .def(py::init<>())
        .def_property_readonly("matrix", &LorentzTransform::matrix)
        .def("describe", &LorentzTransform::describe)
        .def("__matmul__", [](const LorentzTransform& a, const LorentzTransform& b) { return compose(a, b); })
        .def("__call__", [](const LorentzTransform& a, const FourMomentum& p) { return apply(a, p); })
        .def("__repr__", &LorentzTransform::describe);

    m.def("rz", &rz, py::arg("angle"));
    m.def("ry", &ry, py::arg("angle"));
    m.def("bz", &bz, py::arg("rapidity"));
    m.def("normal_form", &normal_form, py::arg("rz"), py::arg("ry"), py::arg("bz"));
    m.def("parse_lambda", [](const std::string& text) { return cli::parse_lambda(text); });

    m.def("wigner_angle_ry", &wigner_angle_ry, py::arg("varpi"), py::arg("theta"), py::arg("phi"));
    m.def("wigner_angle", &wigner_angle_numeric, py::arg("transform"), py::arg("momentum"));

    m.def(
        "fixed_point_curves",
        [](std::vector<double> varpis, double theta1, double phi1, const std::string& family, int grid, int threads) {
            CurveSet set = fixed_point_curves(varpis, theta1, phi1, parse_family(family), grid, threads);
            py::list curves;
            for (const auto& c : set.curves) {
                std::vector<std::pair<double, double>> pts;
                for (const auto& p : c.points) {
                    pts.emplace_back(p.x, p.y);
                }
                py::dict d;
                d["varpi"] = c.varpi;
                d["curve_id"] = c.curve_id;
                d["points"] = pts;
                curves.append(d);
            }
            py::dict points;
            for (const auto& p : set.fixed_points) {
                points[py::str(std::string(1, p.label))] = std::make_pair(p.x, p.y);
            }
            py::dict out;
            out["cell"] = set.cell;
            out["curves"] = curves;
            out["fixed_points"] = points;
            out["misses"] = fixed_point_misses(set);
            return out;
        },
        py::arg("varpis"), py::arg("theta1"), py::arg("phi1"), py::arg("family") = "phi", py::arg("grid") = 128,
        py::arg("threads") = 0);

    m.def(
        "measure",
        [](Complex alpha, Complex beta, const std::string& envelope, double theta0, double width, double theta_max,
           std::size_t samples, std::uint64_t seed, const LorentzTransform& lambda) {
            auto packet = build_packet(alpha, beta, make_envelope(envelope, theta0, width, theta_max), samples, seed);
            return record_dict(measure_packet(transform_packet(packet, lambda, {true, 1e-10})));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("envelope") = "gaussian-cone", py::arg("theta0") = 0.3,
        py::arg("width") = 0.05, py::arg("theta_max") = 0.5, py::arg("samples") = 256, py::arg("seed") = 1,
        py::arg("transform") = LorentzTransform());

    m.def(
        "compare",
        [](Complex alpha, Complex beta, std::vector<std::string> lambdas, std::vector<double> widths, double theta0,
           std::size_t samples, std::uint64_t seed) {
            std::vector<ReportLambda> ls;
            for (const auto& text : lambdas) {
                LorentzTransform l = cli::parse_lambda(text);
                ls.push_back({l.describe(), l});
            }
            py::list rows;
            for (const auto& r :
                 distinguishability_report({Vector2c(alpha, beta)}, ls, {widths, theta0, samples, seed})) {
                py::dict d;
                d["lambda_desc"] = r.lambda_desc;
                d["encoding"] = r.encoding;
                d["error_prob"] = r.error_prob;
                d["detect_prob"] = r.detect_prob;
                rows.append(d);
            }
            return rows;
        },
        py::arg("alpha") = Complex(1), py::arg("beta") = Complex(0),
        py::arg("lambdas") = std::vector<std::string>{"identity", "ry(0.9)"},
        py::arg("widths") = std::vector<double>{0.3}, py::arg("theta0") = 0.0, py::arg("samples") = 256,
        py::arg("seed") = 1);

    m.def(
        "effective_density_matrix",
        [](Complex alpha, Complex beta, double theta0, double width, std::size_t samples, std::uint64_t seed,
           const LorentzTransform& lambda) {
            auto packet = build_single_mode(alpha, beta, GaussianCone{theta0, width}, samples, seed);
            return effective_density_matrix(transform_single_mode(packet, lambda)).m;
        },
        py::arg("alpha"), py::arg("beta"), py::arg("theta0") = 0.0, py::arg("width") = 0.3,
        py::arg("samples") = 256, py::arg("seed") = 1, py::arg("transform") = LorentzTransform());

    m.def("run_cli", [](std::vector<std::string> args) {
        args.insert(args.begin(), "heliwave");
        std::vector<const char*> argv;
        for (const auto& a : args) {
            argv.push_back(a.c_str());
        }
        std::ostringstream out, err;
        int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
