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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "astwist/bsd.hpp"
#include "astwist/error.hpp"
#include "astwist/oracle.hpp"
#include "astwist/report.hpp"
#include "astwist/sha.hpp"
#include "astwist/verify.hpp"

using namespace astwist;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Point {
  GridPoint g;
  TwistParams params;
  std::unique_ptr<TwistContext> ctx;
};

std::vector<Point>& grid() {
  static std::vector<Point> points = [] {
    std::vector<Point> out;
    for (const GridPoint& g : default_grid()) {
      Point pt;
      pt.g = g;
      pt.params = TwistParams::make(g.p, g.nu, g.f);
      out.push_back(std::move(pt));
    }
    return out;
  }();
  return points;
}

const TwistContext& context(Point& pt) {
  if (!pt.ctx) pt.ctx = std::make_unique<TwistContext>(pt.params);
  return *pt.ctx;
}

std::string label(const TwistParams& p) {
  return "(" + std::to_string(p.p) + "," + std::to_string(p.nu) + "," + std::to_string(p.f) + ")";
}

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

Outcome triple_identity() {
  Outcome o;
  for (Point& pt : grid()) {
    const TwistContext& ctx = context(pt);
    const auto L = l_poly_orbit(ctx);
    const auto S = l_poly_sextic(ctx);
    if (!(L == S)) fail(o, label(pt.params) + ": orbit and sextic products differ");
    if (static_cast<u64>(L.degree()) != 2 * (pt.params.q - 1)) fail(o, label(pt.params) + ": wrong degree");
    if (L.coeffs[0] != 1) fail(o, label(pt.params) + ": constant term");
  }
  if (o.pass) o.detail = "8 grid points, exact agreement, degree 2(q-1), constant term 1";
  return o;
}

Outcome point_count_oracle() {
  Outcome o;
  struct Case {
    u64 p;
    int n;
  };
  for (const Case c : {Case{5, 8}, Case{7, 6}}) {
    const auto params = TwistParams::make(c.p, 1, 1);
    const TwistContext ctx(params);
    const auto from_poly = taylor_from_poly(l_poly_orbit(ctx), c.n);
    const auto counted = taylor_oracle(params, c.n, OraclePath::Transform, Caps{}.oracle);
    if (counted != from_poly) fail(o, label(params) + ": Taylor prefix mismatch");
    if (c.p == 5 && (counted[0] != 0 || counted[1] != -200)) fail(o, "c_1, c_2 at (5,1,1)");
  }
  if (o.pass) o.detail = "c_1..c_8 at (5,1,1) and c_1..c_6 at (7,1,1) match";
  return o;
}

Outcome ord_lstar_ordinary() {
  Outcome o;
  std::ostringstream d;
  for (Point& pt : grid()) {
    if (pt.params.p % 6 != 1) continue;
    const mpq_class lstar = special_value(l_poly_orbit(context(pt)));
    const long ord = cyclo::padic_ord(lstar, static_cast<unsigned long>(pt.params.p));
    const long expect = -static_cast<long>((pt.params.q - 1) / 6) * pt.params.nu;
    if (ord != expect) fail(o, label(pt.params) + ": ord " + std::to_string(ord) + " vs " + std::to_string(expect));
    d << label(pt.params) << " ord=" << ord << " ";
  }
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome full_rank_point() {
  Outcome o;
  for (Point& pt : grid()) {
    if (!(pt.g.p == 11 && pt.g.nu == 2 && pt.g.f == 1)) continue;
    const auto& params = pt.params;
    if (!astwist::full_rank_case(params)) fail(o, "hypotheses do not hold");
    const auto L = l_poly_orbit(context(pt));
    mpz_class binom = 1, rp = 1;
    for (int k = 0; k <= 20; ++k) {
      const mpz_class expect = (k % 2 ? -1 : 1) * binom * rp;
      if (k > L.degree() || L.coeffs[static_cast<std::size_t>(k)] != expect) fail(o, "L != (1 - 121T)^20");
      binom = binom * (20 - k) / (k + 1);
      rp *= 121;
    }
    if (analytic_rank(L) != 20) fail(o, "rank");
    const mpq_class lstar = special_value(L);
    if (lstar != 1) fail(o, "L* = " + cyclo::rational_string(lstar));
    if (reg_sha(params, lstar) != 121) fail(o, "reg_sha");
  }
  if (o.pass) o.detail = "(11,2,1): L = (1 - 121T)^20, rank 20, L* = 1, reg_sha = 121";
  return o;
}

Outcome sha_combinatorics() {
  Outcome o;
  std::vector<TwistParams> points;
  for (const Point& pt : grid())
    if (pt.params.p % 6 == 5) points.push_back(pt.params);
  points.push_back(TwistParams::make(5, 1, 3));
  std::ostringstream d;
  for (const auto& params : points) {
    long total = 0;
    for (const auto& orb : sha_orbits(params)) {
      if (orb.in_s0 != orb.in_s1) fail(o, label(params) + ": unequal split");
      total += orb.d;
    }
    if (total != static_cast<long>(params.q / 6)) fail(o, label(params) + ": sum d(o) = " + std::to_string(total));
    d << label(params) << "=" << total << " ";
  }
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome gauss_suite() {
  Outcome o;
  std::size_t n = 0;
  for (Point& pt : grid()) {
    for (const auto& c : gauss_checks(context(pt))) {
      ++n;
      if (!c.pass) fail(o, label(pt.params) + ": " + c.name + " " + c.detail);
    }
  }
  if (o.pass) o.detail = std::to_string(n) + " identity checks over the grid";
  return o;
}

Outcome choice_independence() {
  Outcome o;
  for (Point& pt : grid()) {
    if (!((pt.g.p == 5 || pt.g.p == 7) && pt.g.nu == 1 && pt.g.f == 1)) continue;
    const TwistContext& ctx = context(pt);
    const auto rep = build_report(ctx);
    for (const auto& c : choice_checks(ctx, rep)) {
      if (!c.pass) fail(o, label(pt.params) + ": " + c.name + " " + c.detail);
    }
  }
  if (o.pass) o.detail = "(5,1,1), (7,1,1): L and dossier identical under another generator and psi unit";
  return o;
}

Outcome rank_consistency() {
  Outcome o;
  std::string literal_diff;
  for (Point& pt : grid()) {
    const TwistContext& ctx = context(pt);
    const auto L = l_poly_orbit(ctx);
    const int rank = analytic_rank(L);
    if (rank != rank_by_formula(ctx)) fail(o, label(pt.params) + ": formula disagrees");
    const int literal = rank_by_formula_literal(ctx);
    if (literal != rank) literal_diff += " " + label(pt.params) + " (" + std::to_string(literal) + " vs " + std::to_string(rank) + ")";
    if (pt.params.p % 6 == 1) {
      const auto rs = reg_sha(pt.params, special_value(L));
      if (rank != 0) fail(o, label(pt.params) + ": nonzero rank");
      if (cyclo::padic_ord(rs, static_cast<unsigned long>(pt.params.p)) != 0) fail(o, label(pt.params) + ": reg_sha not a unit");
    }
  }
  if (o.pass) o.detail = "formula = analytic rank on 8 points; p = 1 mod 6 points have rank 0 and unit reg_sha";
  if (!literal_diff.empty()) o.detail += "; count without lambda(alpha) differs at" + literal_diff;
  return o;
}

Outcome brauer_siegel_identity() {
  Outcome o;
  long double worst = 0;
  for (Point& pt : grid()) {
    const auto bs = brauer_siegel(pt.params, special_value(l_poly_orbit(context(pt))));
    worst = std::max(worst, std::fabs(bs.direct - bs.decomposed));
  }
  if (!(worst < 1e-12L)) fail(o, "two-way difference " + format_real(worst));
  const std::vector<int> fs{1, 2, 3};
  const std::string csv = sweep_csv(5, 1, fs, Caps{}.with_env());
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  std::string bs_values;
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() < 11 || cells[4] != "ok") {
      fail(o, "sweep row not computed: " + line);
      continue;
    }
    const double v = std::stod(cells[10]);
    if (!std::isfinite(v)) fail(o, "non-finite BS in sweep");
    bs_values += cells[10] + " ";
  }
  if (rows != 3) fail(o, "sweep produced " + std::to_string(rows) + " rows");
  if (o.pass) o.detail = "max two-way gap " + format_real(worst) + "; sweep r=5 BS: " + bs_values;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"triple L-identity on the grid", triple_identity},
      {"point-count oracle prefixes", point_count_oracle},
      {"ord_p L* for p = 1 mod 6", ord_lstar_ordinary},
      {"full rank case (11,2,1)", full_rank_point},
      {"Sha orbit combinatorics", sha_combinatorics},
      {"Gauss and Jacobi sum identities", gauss_suite},
      {"choice independence", choice_independence},
      {"rank consistency", rank_consistency},
      {"Brauer-Siegel identity and sweep", brauer_siegel_identity},
  };
  bool all = true;
  int k = 0;
  for (const auto& [name, run] : criteria) {
    ++k;
    const auto t0 = Clock::now();
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    all = all && out.pass;
    std::printf("%s %d. %s: %s (%.2fs)\n", out.pass ? "PASS" : "FAIL", k, name.c_str(), out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
