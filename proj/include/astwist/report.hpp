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


#ifndef ASTWIST_REPORT_HPP
#define ASTWIST_REPORT_HPP

// Serialization: JSON dossiers (schema_version 1), orbit and Sha tables,
// oracle output, and the Brauer-Siegel sweep CSV.
//
// JSON objects use sorted keys, big integers and rationals are decimal
// strings, and reals are strings with 15 significant digits, so a parse and
// re-emit reproduces the bytes.

#include <json.hpp>

#include <string>
#include <vector>

#include "astwist/bsd.hpp"
#include "astwist/context.hpp"
#include "astwist/oracle.hpp"
#include "astwist/verify.hpp"

namespace astwist {

inline constexpr int kSchemaVersion = 1;

/// "%.15g".
std::string format_real(long double v);

nlohmann::json params_json(const TwistParams& params);
nlohmann::json choices_json(const Choices& choices);
nlohmann::json dossier_json(const BsdReport& report, const Choices& choices);

/// Two-space indented dump with a trailing newline.
std::string dump_canonical(const nlohmann::json& j);
bool round_trip_identical(const std::string& text);

std::string report_text(const BsdReport& report);

nlohmann::json orbits_json(const TwistContext& ctx, int n);
nlohmann::json sha_json(const TwistParams& params, u64 enum_cap);
nlohmann::json oracle_json(const TwistParams& params, int n_max, OraclePath path, u64 cap,
                           const std::vector<mpz_class>* from_poly);
nlohmann::json verify_json(const std::vector<VerifyCheck>& checks);

inline const char* kSweepHeader =
    "p,nu,f,q,status,rank,lstar,log_r_lstar,reg_sha,log_r_reg_sha,bs,floor_q6_nu,ord_p_reg_sha";

/// One CSV row for (p, nu, f); caps exceeded yield a "skipped" row.
std::string sweep_row(u64 p, int nu, int f, const Caps& caps);
std::string sweep_csv(u64 p, int nu, const std::vector<int>& f_list, const Caps& caps);

}  // namespace astwist

#endif
