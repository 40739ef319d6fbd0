/*
   Copyright 2026 The astwist Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "astwist/bsd.hpp"
#include "astwist/error.hpp"
#include "astwist/oracle.hpp"
#include "astwist/report.hpp"
#include "astwist/sha.hpp"
#include "astwist/verify.hpp"

namespace py = pybind11;
using namespace astwist;

namespace {

std::vector<std::string> decimal(const std::vector<mpz_class>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Caps caps_from(u64 ambient, u64 enumeration) {
  Caps caps = Caps{}.with_env();
  if (ambient != 0) caps.ambient = ambient;
  if (enumeration != 0) caps.enumeration = enumeration;
  return caps;
}

OraclePath path_from(const std::string& name) {
  if (name == "transform") return OraclePath::Transform;
  if (name == "naive") return OraclePath::Naive;
  throw Error(ErrorKind::Validation, "path must be transform or naive");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "BSD invariants of y^2 = x^3 + t^q - t over F_r(t).";

  py::register_exception<Error>(m, "AstwistError", PyExc_ValueError);

  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  m.def(
      "l_polynomial",
      [](u64 p, int nu, int f, bool sextic, u64 cap_ambient, u64 cap_enum) {
        const TwistContext ctx(TwistParams::make(p, nu, f), caps_from(cap_ambient, cap_enum));
        return decimal((sextic ? l_poly_sextic(ctx) : l_poly_orbit(ctx)).coeffs);
      },
      py::arg("p"), py::arg("nu") = 1, py::arg("f") = 1, py::arg("sextic") = false, py::arg("cap_ambient") = 0,
      py::arg("cap_enum") = 0, "L(E, T) coefficients as decimal strings, constant term first.");

  m.def(
      "dossier",
      [](u64 p, int nu, int f, int oracle_max, int generator_rank, int psi_unit, u64 cap_ambient, u64 cap_enum) {
        const Choices choices{generator_rank, psi_unit};
        const TwistContext ctx(TwistParams::make(p, nu, f), caps_from(cap_ambient, cap_enum), choices);
        return dump_canonical(dossier_json(build_report(ctx, ReportOptions{oracle_max}), choices));
      },
      py::arg("p"), py::arg("nu") = 1, py::arg("f") = 1, py::arg("oracle_max") = 0, py::arg("generator_rank") = 0,
      py::arg("psi_unit") = 1, py::arg("cap_ambient") = 0, py::arg("cap_enum") = 0,
      "Canonical JSON dossier text.");

  m.def(
      "oracle",
      [](u64 p, int nu, int f, int n_max, const std::string& path) {
        const Caps caps = Caps{}.with_env();
        const OraclePath op = path_from(path);
        return decimal(taylor_oracle(TwistParams::make(p, nu, f), n_max, op,
                                     op == OraclePath::Naive ? caps.oracle_naive : caps.oracle));
      },
      py::arg("p"), py::arg("nu") = 1, py::arg("f") = 1, py::arg("n_max") = 4, py::arg("path") = "transform",
      "c_1..c_nmax with -log L = sum c_n T^n / n, from point counts.");

  m.def(
      "orbits",
      [](u64 p, int nu, int f, int n) {
        const TwistContext ctx(TwistParams::make(p, nu, f), Caps{}.with_env());
        return dump_canonical(orbits_json(ctx, n));
      },
      py::arg("p"), py::arg("nu") = 1, py::arg("f") = 1, py::arg("n") = 6, "Orbit table as JSON text.");

  m.def(
      "sha",
      [](u64 p, int nu, int f) {
        return dump_canonical(sha_json(TwistParams::make(p, nu, f), Caps{}.with_env().enumeration));
      },
      py::arg("p"), py::arg("nu") = 1, py::arg("f") = 1, "Sha orbit statistics as JSON text.");

  m.def(
      "dim_sha", [](u64 p, int nu, int f) { return dim_sha(TwistParams::make(p, nu, f)); }, py::arg("p"),
      py::arg("nu") = 1, py::arg("f") = 1);

  m.def(
      "verify",
      [](const std::vector<std::tuple<u64, int, int>>& grid, const std::vector<std::string>& only, int oracle_max) {
        std::vector<GridPoint> points;
        for (const auto& [p, nu, f] : grid) points.push_back(GridPoint{p, nu, f});
        if (points.empty()) points = default_grid();
        VerifyOptions opts;
        opts.only = {only.begin(), only.end()};
        opts.oracle_max = oracle_max;
        opts.caps = Caps{}.with_env();
        return dump_canonical(verify_json(run_verify(points, opts)));
      },
      py::arg("grid") = std::vector<std::tuple<u64, int, int>>{}, py::arg("only") = std::vector<std::string>{},
      py::arg("oracle_max") = 4, "Run the invariant suite; JSON summary text.");

  m.def(
      "sweep",
      [](u64 p, int nu, const std::vector<int>& f_list) { return sweep_csv(p, nu, f_list, Caps{}.with_env()); },
      py::arg("p"), py::arg("nu"), py::arg("f_list"), "Brauer-Siegel sweep as CSV text.");
}
