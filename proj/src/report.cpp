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


#include "astwist/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "astwist/error.hpp"
#include "astwist/lfunction.hpp"
#include "astwist/sha.hpp"

namespace astwist {

using nlohmann::json;

namespace {

std::string dec(u64 v) { return std::to_string(v); }

json coeffs_json(const std::vector<mpz_class>& coeffs) {
  json arr = json::array();
  for (const auto& c : coeffs) arr.push_back(c.get_str());
  return arr;
}

json point_json(const OrbitPoint& pt) { return json{{"i", pt.i}, {"j", dec(pt.j)}}; }

}  // namespace

std::string format_real(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Lg", v);
  return buf;
}

json params_json(const TwistParams& params) {
  return json{{"p", dec(params.p)}, {"nu", params.nu}, {"f", params.f}, {"r", dec(params.r)}, {"q", dec(params.q)}};
}

json choices_json(const Choices& choices) {
  return json{{"generator_rank", choices.generator_rank}, {"psi_unit", choices.psi_unit}};
}

json dossier_json(const BsdReport& rep, const Choices& choices) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["params"] = params_json(rep.params);
  j["choices"] = choices_json(choices);
  j["l_function"] = json{{"coefficients", coeffs_json(rep.L.coeffs)},
                         {"degree", rep.L.degree()},
                         {"digest", digest(rep.L)},
                         {"functional_equation_sign", rep.fe_sign}};
  j["rank"] = json{{"analytic", rep.rank}, {"formula", rep.rank_formula}, {"formula_literal", rep.rank_formula_literal}};
  j["special_value"] = json{{"lstar", cyclo::rational_string(rep.lstar)}, {"ord_p", rep.ord_p_lstar}};
  j["reg_sha"] = json{{"value", cyclo::rational_string(rep.reg_sha)},
                      {"is_sha_order", rep.rank == 0},
                      {"ord_p", cyclo::padic_ord(rep.reg_sha, static_cast<unsigned long>(rep.params.p))}};
  j["dim_sha"] = rep.dim_sha;
  j["brauer_siegel"] = json{{"direct", format_real(rep.bs.direct)},
                            {"decomposed", format_real(rep.bs.decomposed)},
                            {"height_exponent", dec(rep.constants.height_exponent)}};
  const auto& c = rep.constants;
  j["structural"] = json{{"height_exponent", dec(c.height_exponent)},
                         {"height_case", c.height_case},
                         {"bsd_exponent", dec(c.bsd_exponent)},
                         {"conductor_degree", dec(c.conductor_degree)},
                         {"l_degree", dec(c.l_degree)},
                         {"reduction_finite", c.reduction_finite},
                         {"finite_bad_places", dec(c.finite_bad_places)},
                         {"reduction_infinity", c.reduction_infinity},
                         {"j_invariant", c.j_invariant},
                         {"discriminant", c.discriminant},
                         {"torsion_order", c.torsion_order},
                         {"tamagawa_product", c.tamagawa_product}};
  if (rep.params.p % 6 == 5) {
    json eps = json::array();
    for (const auto& e : rep.epsilon) {
      eps.push_back(json{{"size", e.size}, {"zeta6_exponent", e.zeta6_exponent}, {"count", e.count}});
    }
    j["epsilon"] = eps;
  } else {
    j["epsilon"] = nullptr;
  }
  j["orbit_partition"] = json{{"unitary", rep.unitary_orbits}, {"non_unitary", rep.non_unitary_orbits}};
  json checks = json::array();
  for (const auto& ch : rep.checks) checks.push_back(json{{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
  j["checks"] = checks;
  return j;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

bool round_trip_identical(const std::string& text) { return dump_canonical(json::parse(text)) == text; }

std::string report_text(const BsdReport& rep) {
  std::ostringstream os;
  const auto& pr = rep.params;
  os << "E: y^2 = x^3 + t^" << pr.q << " - t over F_" << pr.r << "(t)  (p=" << pr.p << ", nu=" << pr.nu
     << ", f=" << pr.f << ")\n";
  os << "L(E,T) degree " << rep.L.degree() << ": ";
  for (std::size_t k = 0; k < rep.L.coeffs.size(); ++k) os << (k ? " " : "") << rep.L.coeffs[k].get_str();
  os << "\n";
  os << "rank " << rep.rank << " (formula " << rep.rank_formula << ", without the lambda condition "
     << rep.rank_formula_literal << ")\n";
  os << "L* = " << cyclo::rational_string(rep.lstar) << ", ord_p L* = " << rep.ord_p_lstar << "\n";
  os << (rep.rank == 0 ? "|Sha| = " : "Reg |Sha| = ") << cyclo::rational_string(rep.reg_sha) << "\n";
  os << "dim Sha = " << rep.dim_sha << "\n";
  os << "BS = " << format_real(rep.bs.direct) << "\n";
  for (const auto& ch : rep.checks) {
    os << (ch.pass ? "  ok   " : "  FAIL ") << ch.name;
    if (!ch.detail.empty()) os << "  (" << ch.detail << ")";
    os << "\n";
  }
  return os.str();
}

json orbits_json(const TwistContext& ctx, int n) {
  const auto& params = ctx.params();
  const auto orbits = n == 6 ? ctx.orbits6() : enumerate_orbits(params, n, true, ctx.caps().enumeration);
  json arr = json::array();
  for (const auto& o : orbits) {
    json e;
    e["representative"] = point_json(o.rep);
    e["size"] = o.size;
    e["alpha_degree"] = o.alpha_degree;
    json elems = json::array();
    for (const auto& pt : o.elements) elems.push_back(point_json(pt));
    e["elements"] = elems;
    e["gauss_sum"] = coeffs_json(ctx.gauss(o).coeffs());
    if (n == 6) {
      const auto m = multipliers(params, o);
      e["m2"] = m.m2;
      e["n6"] = m.n6;
      e["pi2"] = point_json(project(params, o, 2).rep);
      e["pi3"] = point_json(project(params, o, 3).rep);
      e["conjugate"] = point_json(conjugate_orbit(params, o).rep);
    }
    arr.push_back(e);
  }
  json j;
  j["schema_version"] = kSchemaVersion;
  j["params"] = params_json(params);
  j["choices"] = choices_json(ctx.choices());
  j["n"] = n;
  j["conductor"] = ctx.conductor();
  j["alpha_encoding"] = "alpha = h_q^j, h_q the generator of F_q^x fixed by the tower";
  j["orbits"] = arr;
  return j;
}

json sha_json(const TwistParams& params, u64 enum_cap) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["params"] = params_json(params);
  j["dim_sha"] = dim_sha(params, enum_cap);
  j["floor_q6"] = dec(params.q / 6);
  if (params.p % 6 == 5) {
    json arr = json::array();
    for (const auto& o : sha_orbits(params, enum_cap)) {
      arr.push_back(json{{"representative", json{{"b", o.rep.b}, {"a", dec(o.rep.a)}}},
                         {"size", o.size},
                         {"in_s0", o.in_s0},
                         {"in_s1", o.in_s1},
                         {"d", o.d}});
    }
    j["orbits"] = arr;
    j["ord_gj"] = nullptr;
  } else {
    j["orbits"] = nullptr;
    try {
      const auto t = ord_gj_check(params);
      json rows = json::array();
      for (const auto& r : t.rows) {
        rows.push_back(json{{"j", dec(r.j)},
                            {"ord", cyclo::rational_string(r.ord)},
                            {"claimed", cyclo::rational_string(r.claimed)},
                            {"matches", r.ord == r.claimed}});
      }
      j["ord_gj"] = json{{"m", t.m},
                         {"rows", rows},
                         {"matches", t.matches},
                         {"total", t.rows.size()},
                         {"complementary", t.complementary},
                         {"frobenius_invariant", t.frobenius_invariant},
                         {"bounded", t.bounded},
                         {"cubic_exact", t.cubic_exact}};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CapExceeded) throw;
      j["ord_gj"] = json{{"skipped", e.what()}};
    }
  }
  return j;
}

json oracle_json(const TwistParams& params, int n_max, OraclePath path, u64 cap, const std::vector<mpz_class>* from_poly) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["params"] = params_json(params);
  j["path"] = path == OraclePath::Transform ? "transform" : "naive";
  const auto c = taylor_oracle(params, n_max, path, cap);
  j["c"] = coeffs_json(c);
  if (from_poly != nullptr) {
    j["from_l_polynomial"] = coeffs_json(*from_poly);
    j["agree"] = *from_poly == c;
  }
  return j;
}

json verify_json(const std::vector<VerifyCheck>& checks) {
  json arr = json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    if (!c.result.pass) ++failed;
    arr.push_back(json{{"p", dec(c.point.p)},
                       {"nu", c.point.nu},
                       {"f", c.point.f},
                       {"group", c.group},
                       {"name", c.result.name},
                       {"pass", c.result.pass},
                       {"detail", c.result.detail}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"checks", arr},
              {"passed", checks.size() - failed},
              {"failed", failed}};
}

std::string sweep_row(u64 p, int nu, int f, const Caps& caps) {
  std::ostringstream os;
  try {
    const auto params = TwistParams::make(p, nu, f);
    TwistContext ctx(params, caps);
    const auto L = l_poly_orbit(ctx);
    const int rank = analytic_rank(L);
    const mpq_class lstar = special_value(L);
    const mpq_class rs = reg_sha(params, lstar);
    const long double log_r = static_cast<long double>(nu) * std::log(static_cast<long double>(p));
    const auto bs = brauer_siegel(params, lstar);
    os << p << "," << nu << "," << f << "," << params.q << ",ok," << rank << ",\"" << cyclo::rational_string(lstar)
       << "\"," << format_real(log_rational(lstar) / log_r) << ",\"" << cyclo::rational_string(rs) << "\","
       << format_real(log_rational(rs) / log_r) << "," << format_real(bs.direct) << ","
       << (params.q / 6) * static_cast<u64>(nu) << "," << cyclo::padic_ord(rs, static_cast<unsigned long>(p));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
    os.str("");
    u64 q = 0;
    try {
      q = TwistParams::make(p, nu, f).q;
    } catch (const Error&) {
    }
    os << p << "," << nu << "," << f << "," << q << ",skipped,,,,,,,,";
  }
  return os.str();
}

std::string sweep_csv(u64 p, int nu, const std::vector<int>& f_list, const Caps& caps) {
  std::string out = std::string(kSweepHeader) + "\n";
  for (int f : f_list) out += sweep_row(p, nu, f, caps) + "\n";
  return out;
}

}  // namespace astwist
