/*
 * Copyright 2026 The rnsg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rnsg/commands.hpp"
#include "rnsg/counterexample.hpp"
#include "rnsg/error.hpp"
#include "rnsg/expm.hpp"
#include "rnsg/renorm.hpp"

namespace py = pybind11;
using namespace rnsg;

namespace {

// Python scalars broadcast; sequences give one value per atom.
L0Scalar to_scalar(const py::object& v, const AtomSpace& space) {
  if (py::isinstance<py::float_>(v) || py::isinstance<py::int_>(v) || PyComplex_Check(v.ptr())) {
    return L0Scalar::constant(space, v.cast<Complex>());
  }
  auto values = v.cast<std::vector<Complex>>();
  if (values.size() != space.size()) raise(ErrorCode::ShapeMismatch, "scalar needs one value per atom");
  return {space, std::move(values)};
}

std::vector<double> real_list(const L0Scalar& s) {
  std::vector<double> out;
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s.re(i));
  return out;
}

RNVector to_vector(const CMatrix& data, const AtomSpace& space) { return {space, data}; }

py::dict envelope_dict(const GrowthEnvelope& e) {
  py::dict d;
  d["M"] = real_list(e.M);
  d["tau"] = real_list(e.tau);
  d["global"] = e.global;
  d["strategy"] = std::string(strategy_name(e.strategy));
  return d;
}

py::tuple command_result(const CommandResult& r) { return py::make_tuple(r.exit_code, dump(r.report)); }

RunConfig config_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    raise(ErrorCode::ConfigParseError, e.what());
  }
  return parse_config(j);
}

}  // namespace

PYBIND11_MODULE(_rnsg, m) {
  m.doc() = "Random normed module semigroups and Hille-Yosida checks over finite atom spaces";

  // Messages start with the error code name, e.g. "SingularShift: ...".
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<AtomSpace>(m, "AtomSpace")
      .def(py::init([](std::vector<double> probs, bool normalize) { return AtomSpace::make(std::move(probs), normalize); }),
           py::arg("probs"), py::arg("normalize") = false)
      .def_property_readonly("size", &AtomSpace::size)
      .def_property_readonly("probs", [](const AtomSpace& s) {
        return std::vector<double>(s.probs().begin(), s.probs().end());
      });

  py::class_<Generator>(m, "Generator")
      .def(py::init([](const AtomSpace& space, std::vector<CMatrix> mats) {
             return Generator(ModuleHom(space, std::move(mats)));
           }),
           py::arg("space"), py::arg("matrices"))
      .def_property_readonly("space", &Generator::space)
      .def_property_readonly("dim", &Generator::dim)
      .def_property_readonly("matrices", [](const Generator& G) { return G.op().mats(); })
      .def_property_readonly("spectral_abscissa", [](const Generator& G) { return real_list(G.spectral_abscissa()); })
      .def_property_readonly("log_norm", [](const Generator& G) { return real_list(G.log_norm()); });

  m.def("l0_norm", [](const AtomSpace& s, const CMatrix& x) { return real_list(l0_norm(to_vector(x, s))); },
        py::arg("space"), py::arg("x"));
  m.def("exceedance_probability",
        [](const AtomSpace& s, const CMatrix& x, double eps) { return exceedance_probability(to_vector(x, s), eps); },
        py::arg("space"), py::arg("x"), py::arg("eps"));
  m.def("op_norm",
        [](const AtomSpace& s, std::vector<CMatrix> mats) { return real_list(op_norm(ModuleHom(s, std::move(mats)))); },
        py::arg("space"), py::arg("matrices"));
  m.def("expm", &expm, py::arg("a"));
  m.def("evaluate", [](const Generator& G, double t) { return evaluate(G, t).mats(); }, py::arg("generator"),
        py::arg("t"));
  m.def("semigroup_law_residual",
        [](const Generator& G, double s, double t) { return real_list(semigroup_law_residual(G, s, t)); },
        py::arg("generator"), py::arg("s"), py::arg("t"));
  m.def("certified_envelope", [](const Generator& G) { return envelope_dict(certified_envelope(G)); },
        py::arg("generator"));
  m.def("is_asu_bounded", [](const Generator& G) { return is_asu_bounded(G).bounded; }, py::arg("generator"));

  m.def(
      "resolve_direct",
      [](const Generator& G, const py::object& xi) {
        const auto r = resolve_direct(G, to_scalar(xi, G.space()));
        return py::make_tuple(r.R.mats(), real_list(r.error_bound));
      },
      py::arg("generator"), py::arg("xi"));
  m.def(
      "resolve_laplace",
      [](const Generator& G, const py::object& xi, const CMatrix& x) {
        const auto r = resolve_laplace(G, to_scalar(xi, G.space()), to_vector(x, G.space()));
        py::dict d;
        d["value"] = r.value.data();
        d["tail_certificate"] = real_list(r.tail_certificate);
        d["quadrature_estimate"] = real_list(r.quadrature_estimate);
        d["s_max"] = r.s_max;
        d["panels"] = r.panels;
        return d;
      },
      py::arg("generator"), py::arg("xi"), py::arg("x"));

  m.def(
      "eta_norm",
      [](const Generator& G, const py::object& eta, const CMatrix& x, int n_max, int k) {
        const auto r = eta_norm(G, to_scalar(eta, G.space()), to_vector(x, G.space()), {n_max, k});
        py::dict d;
        d["value"] = real_list(r.value);
        d["power_bound"] = real_list(r.power_bound);
        d["tail_flag"] = r.tail_flag;
        return d;
      },
      py::arg("generator"), py::arg("eta"), py::arg("x"), py::arg("n_max") = 64, py::arg("stabilization_k") = 8);
  m.def(
      "bar_norm",
      [](const Generator& G, const CMatrix& x, const std::vector<py::object>& grid, int n_max, int k) {
        std::vector<L0Scalar> g;
        for (const auto& e : grid) g.push_back(to_scalar(e, G.space()));
        const auto r = bar_norm(G, to_vector(x, G.space()), g, {n_max, k});
        py::dict d;
        d["value"] = real_list(r.value);
        d["collapse_ok"] = r.collapse_ok;
        d["tail_flag"] = r.tail_flag;
        return d;
      },
      py::arg("generator"), py::arg("x"), py::arg("eta_grid"), py::arg("n_max") = 64, py::arg("stabilization_k") = 8);
  m.def(
      "orbit_sup_norm",
      [](const Generator& G, const CMatrix& x, const std::vector<double>& grid) {
        return real_list(orbit_sup_norm(G, to_vector(x, G.space()), grid).value);
      },
      py::arg("generator"), py::arg("x"), py::arg("t_grid"));

  m.def("verify_hy", [](const std::string& cfg) { return command_result(cmd_verify_hy(config_from_text(cfg))); },
        py::arg("config_json"));
  m.def("renorm", [](const std::string& cfg) { return command_result(cmd_renorm(config_from_text(cfg))); },
        py::arg("config_json"));
  m.def(
      "counterexample_report",
      [](std::uint64_t seed) {
        auto cfg = default_config();
        cfg.seed = seed;
        return command_result(cmd_counterexample(cfg));
      },
      py::arg("seed") = 0);

  namespace ce = counterexample;
  m.def(
      "diff_quotient_exceedance",
      [](const std::string& t, const std::string& t0, const std::string& eps) {
        return ce::to_string(
            ce::diff_quotient_exceedance(ce::parse_rational(t), ce::parse_rational(t0), ce::parse_rational(eps)));
      },
      py::arg("t"), py::arg("t0"), py::arg("eps"), "Exact exceedance for rational input given as strings.");
  m.def("ftc_gap", [] {
    const auto g = ce::ftc_gap();
    return py::make_tuple(ce::to_string(g.endpoint_difference), ce::to_string(g.integral));
  });
}
