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


// astwist: BSD dossiers for y^2 = x^3 + t^q - t over F_r(t).

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "astwist/bsd.hpp"
#include "astwist/error.hpp"
#include "astwist/lfunction.hpp"
#include "astwist/report.hpp"
#include "astwist/verify.hpp"

namespace {

using namespace astwist;

constexpr int kExitValidation = 2;
constexpr int kExitCap = 3;
constexpr int kExitIdentity = 4;

struct Common {
  unsigned long long p = 0;
  int nu = 1;
  int f = 1;
  std::string format = "json";
  std::string out;
  unsigned long long cap_ambient = 0;
  unsigned long long cap_enum = 0;
  unsigned long long cap_oracle = 0;
  int generator_rank = 0;
  int psi_unit = 1;
};

void add_params(CLI::App* cmd, Common& c) {
  cmd->add_option("--p", c.p, "characteristic, a prime > 3")->required();
  cmd->add_option("--nu", c.nu, "r = p^nu")->check(CLI::PositiveNumber);
  cmd->add_option("--f", c.f, "q = p^f")->check(CLI::PositiveNumber);
}

void add_output(CLI::App* cmd, Common& c, const std::vector<std::string>& formats) {
  cmd->add_option("--format", c.format)->check(CLI::IsMember(formats));
  cmd->add_option("--out", c.out, "write here instead of stdout");
}

void add_caps(CLI::App* cmd, Common& c) {
  cmd->add_option("--cap-ambient", c.cap_ambient, "largest ambient field size")->check(CLI::PositiveNumber);
  cmd->add_option("--cap-enum", c.cap_enum, "largest enumerated set")->check(CLI::PositiveNumber);
  cmd->add_option("--cap-oracle", c.cap_oracle, "largest oracle field size")->check(CLI::PositiveNumber);
}

void add_choices(CLI::App* cmd, Common& c) {
  cmd->add_option("--generator-rank", c.generator_rank, "use the k-th generator of the ambient field")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--psi-unit", c.psi_unit, "psi_p(1) = zeta_p^s")->check(CLI::PositiveNumber);
}

Caps caps_of(const Common& c) {
  Caps caps = Caps{}.with_env();
  if (c.cap_ambient) caps.ambient = c.cap_ambient;
  if (c.cap_enum) caps.enumeration = c.cap_enum;
  if (c.cap_oracle) caps.oracle = c.cap_oracle;
  return caps;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(c.out, std::ios::binary);
  if (!os) throw Error(ErrorKind::Validation, "cannot open " + c.out);
  os << text;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<GridPoint> parse_grid(const std::string& s) {
  std::vector<GridPoint> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    const auto v = parse_int_list(item);
    if (v.size() != 3) throw Error(ErrorKind::Validation, "grid points are p,nu,f");
    out.push_back(GridPoint{static_cast<u64>(v[0]), v[1], v[2]});
  }
  return out;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::CapExceeded:
      return kExitCap;
    case ErrorKind::NonPrime:
    case ErrorKind::Validation:
    case ErrorKind::OutOfRange:
    case ErrorKind::WrongResidue:
      return kExitValidation;
    default:
      return kExitIdentity;
  }
}

int cmd_lfun(const Common& c, int oracle_max) {
  const auto params = TwistParams::make(c.p, c.nu, c.f);
  const Choices choices{c.generator_rank, c.psi_unit};
  TwistContext ctx(params, caps_of(c), choices);
  ReportOptions ro;
  ro.oracle_max = oracle_max;
  const BsdReport rep = build_report(ctx, ro);
  if (!rep.all_pass()) {
    for (const auto& ch : rep.checks)
      if (!ch.pass) std::cerr << "identity failure: " << ch.name << " " << ch.detail << "\n";
    return kExitIdentity;
  }
  if (c.format == "json") {
    emit(c, dump_canonical(dossier_json(rep, choices)));
  } else if (c.format == "csv") {
    emit(c, std::string(kSweepHeader) + "\n" + sweep_row(c.p, c.nu, c.f, caps_of(c)) + "\n");
  } else {
    emit(c, report_text(rep));
  }
  return 0;
}

int cmd_verify(const Common& c, const std::string& grid_spec, const std::string& only, int oracle_max) {
  VerifyOptions vo;
  vo.caps = caps_of(c);
  vo.oracle_max = oracle_max;
  for (const auto& g : CLI::detail::split(only, ',')) {
    if (g.empty()) continue;
    if (std::find(verify_groups().begin(), verify_groups().end(), g) == verify_groups().end()) {
      throw Error(ErrorKind::Validation, "unknown group " + g);
    }
    vo.only.insert(g);
  }
  const auto grid = grid_spec.empty() ? default_grid() : parse_grid(grid_spec);
  const auto checks = run_verify(grid, vo);
  const auto j = verify_json(checks);
  if (c.format == "json") {
    emit(c, dump_canonical(j));
  } else {
    std::ostringstream os;
    for (const auto& ch : checks) {
      os << (ch.result.pass ? "ok   " : "FAIL ") << "(" << ch.point.p << "," << ch.point.nu << "," << ch.point.f
         << ") " << ch.group << "/" << ch.result.name << "\n";
    }
    os << j["passed"].get<std::size_t>() << " passed, " << j["failed"].get<std::size_t>() << " failed\n";
    emit(c, os.str());
  }
  for (const auto& ch : checks) {
    if (!ch.result.pass) {
      std::cerr << dump_canonical(nlohmann::json{{"counterexample",
                                                  {{"p", std::to_string(ch.point.p)},
                                                   {"nu", ch.point.nu},
                                                   {"f", ch.point.f},
                                                   {"group", ch.group},
                                                   {"name", ch.result.name},
                                                   {"detail", ch.result.detail}}}});
      return 1;
    }
  }
  return 0;
}

int cmd_orbits(const Common& c, int n) {
  if (n != 2 && n != 3 && n != 6) throw Error(ErrorKind::Validation, "--n must be 2, 3 or 6");
  const auto params = TwistParams::make(c.p, c.nu, c.f);
  TwistContext ctx(params, caps_of(c), Choices{c.generator_rank, c.psi_unit});
  emit(c, dump_canonical(orbits_json(ctx, n)));
  return 0;
}

int cmd_sha(const Common& c) {
  const auto params = TwistParams::make(c.p, c.nu, c.f);
  emit(c, dump_canonical(sha_json(params, caps_of(c).enumeration)));
  return 0;
}

int cmd_sweep(const Common& c, const std::string& f_list) {
  if (c.p == 0) throw Error(ErrorKind::Validation, "--p is required");
  const auto fs = parse_int_list(f_list);
  for (int f : fs)
    if (f < 1) throw Error(ErrorKind::Validation, "f values must be positive");
  TwistParams::make(c.p, c.nu, 1);
  emit(c, sweep_csv(c.p, c.nu, fs, caps_of(c)));
  return 0;
}

int cmd_oracle(const Common& c, int n_max, const std::string& path, bool compare) {
  const auto params = TwistParams::make(c.p, c.nu, c.f);
  const Caps caps = caps_of(c);
  const OraclePath op = path == "naive" ? OraclePath::Naive : OraclePath::Transform;
  const u64 cap = op == OraclePath::Naive ? std::min(caps.oracle, caps.oracle_naive) : caps.oracle;
  std::vector<mpz_class> from_poly;
  if (compare) {
    TwistContext ctx(params, caps);
    from_poly = taylor_from_poly(l_poly_orbit(ctx), n_max);
  }
  const auto j = oracle_json(params, n_max, op, cap, compare ? &from_poly : nullptr);
  emit(c, dump_canonical(j));
  if (compare && !j["agree"].get<bool>()) return kExitIdentity;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BSD invariants of y^2 = x^3 + t^q - t over F_r(t)"};
  app.require_subcommand(1);
  Common c;

  auto* lfun = app.add_subcommand("lfun", "L-polynomial and BSD dossier");
  add_params(lfun, c);
  add_output(lfun, c, {"json", "text", "csv"});
  add_caps(lfun, c);
  add_choices(lfun, c);
  int lfun_oracle = 0;
  lfun->add_option("--oracle-max", lfun_oracle, "check c_1..c_N against point counts")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "run the invariant suite over a grid");
  std::string grid_spec, only;
  int verify_oracle = 4;
  verify->add_option("--grid", grid_spec, "p,nu,f;p,nu,f;... (default: the standard grid)");
  verify->add_option("--only", only, "comma-separated groups: gauss,lfun,oracle,orbits,rank,ord,sha,choice,bs");
  verify->add_option("--oracle-max", verify_oracle, "oracle prefix depth")->check(CLI::NonNegativeNumber);
  add_output(verify, c, {"json", "text"});
  add_caps(verify, c);

  auto* orbits = app.add_subcommand("orbits", "orbit table as JSON");
  int n = 6;
  add_params(orbits, c);
  orbits->add_option("--n", n, "2, 3 or 6");
  add_output(orbits, c, {"json"});
  add_caps(orbits, c);
  add_choices(orbits, c);

  auto* sha = app.add_subcommand("sha", "Sha orbit statistics");
  add_params(sha, c);
  add_output(sha, c, {"json"});
  add_caps(sha, c);

  auto* sweep = app.add_subcommand("sweep", "Brauer-Siegel sweep as CSV");
  std::string f_list;
  sweep->add_option("--p", c.p, "characteristic")->required();
  sweep->add_option("--nu", c.nu, "r = p^nu")->check(CLI::PositiveNumber);
  sweep->add_option("--f-list", f_list, "comma-separated f values");
  add_output(sweep, c, {"csv"});
  add_caps(sweep, c);

  auto* oracle = app.add_subcommand("oracle", "point-count Taylor coefficients");
  int oracle_n = 4;
  std::string path = "transform";
  bool compare = false;
  add_params(oracle, c);
  oracle->add_option("--oracle-max", oracle_n, "compute c_1..c_N")->check(CLI::PositiveNumber);
  oracle->add_option("--path", path)->check(CLI::IsMember({"transform", "naive"}));
  oracle->add_flag("--compare", compare, "also expand L and compare");
  add_output(oracle, c, {"json"});
  add_caps(oracle, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  try {
    if (*lfun) return cmd_lfun(c, lfun_oracle);
    if (*verify) return cmd_verify(c, grid_spec, only, verify_oracle);
    if (*orbits) return cmd_orbits(c, n);
    if (*sha) return cmd_sha(c);
    if (*sweep) return cmd_sweep(c, f_list);
    if (*oracle) return cmd_oracle(c, oracle_n, path, compare);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
