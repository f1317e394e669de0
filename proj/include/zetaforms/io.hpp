#pragma once

#include <chrono>
#include <ctime>
#include <set>
#include <string>

#include <json.hpp>

#include "zetaforms/pipeline.hpp"

namespace zetaforms {

using nlohmann::json;

inline const char* kToolVersion = "0.1.0";

inline std::string iso_timestamp() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

inline json params_to_json(const Params& par) {
  return json{{"a", par.a}, {"r", par.r}, {"N", par.N},
              {"n", par.n}, {"p", par.p}, {"T", par.T}};
}

inline Params params_from_json(const json& j) {
  Params par;
  par.a = j.at("a").get<long>();
  par.r = j.at("r").get<long>();
  par.N = j.at("N").get<long>();
  par.n = j.at("n").get<long>();
  par.p = j.value("p", 0L);
  par.T = j.value("T", 1L);
  return par;
}

inline PeriodicFunction periodic_from_json(const json& j, long default_T) {
  if (!j.contains("f")) {
    std::vector<PeriodicFunction::Value> vals(
        size_t(default_T), PeriodicFunction::Value(Rational(0)));
    vals[0] = PeriodicFunction::Value(Rational(1));
    if (default_T == 1) vals[0] = PeriodicFunction::Value(Rational(1));
    return PeriodicFunction(default_T, std::move(vals));
  }
  std::vector<PeriodicFunction::Value> vals;
  for (const auto& v : j.at("f"))
    vals.push_back(PeriodicFunction::Value(
        rational_from_string(v.get<std::string>())));
  long T = long(vals.size());
  return PeriodicFunction(T, std::move(vals));
}

inline json ball_to_json(const CBall& v) {
  char buf[32];
  snprintf(buf, sizeof buf, "%.6e", v.rad);
  return json{{"mid_re", v.re.str()}, {"mid_im", v.im.str()}, {"rad", buf}};
}

inline json verdict(bool ok) {
  return json{{"status", ok ? "pass" : "fail"}};
}
inline json skipped(const std::string& reason) {
  return json{{"status", "skipped"}, {"reason", reason}};
}

struct CertificateOptions {
  std::set<std::string> checks = {"integrality", "orders", "product", "rank",
                                  "lambda"};
  long kmax = 0;         // 0 = default cap
  long lambda_kmax = 3;
  Ctx ctx = Ctx();
};

// Runs the selected checks on one instance and reports a certificate plus
// an overall pass flag.
inline std::pair<json, bool> make_certificate(const Params& par,
                                              const PeriodicFunction& f,
                                              const CertificateOptions& opt) {
  json cert;
  cert["tool"] = "zetaforms";
  cert["version"] = kToolVersion;
  cert["timestamp"] = iso_timestamp();
  cert["params"] = params_to_json(par);
  cert["d0"] = par.d0();
  bool all_ok = true;
  auto note = [&](const char* name, const json& v) {
    cert["checks"][name] = v;
    if (v.contains("status") && v["status"] == "fail") all_ok = false;
  };

  FormFamily fam;
  try {
    fam = build_family(par, opt.kmax);
  } catch (const std::exception& e) {
    cert["checks"]["construction"] = json{{"status", "fail"},
                                          {"reason", e.what()}};
    return {cert, false};
  }
  cert["k_max"] = fam.K;
  cert["delta_n"] = fam.delta.get_str();

  if (opt.checks.count("integrality")) {
    // build_family certifies integrality of every s_{k,i}; reaching this
    // point means it held, so record it together with the denominator lemma
    note("integrality", verdict(true));
    note("denominators", verdict(check_denominators(fam.table, par)));
  }
  if (opt.checks.count("orders")) {
    note("order_zero", verdict(check_order_at_zero(fam)));
    note("order_infinity", verdict(check_order_at_infinity(fam)));
    note("order_unity", verdict(check_order_at_unity(fam)));
  }
  if (opt.checks.count("product")) {
    note("transfer", verdict(transfer_agrees(fam, 3)));
    MMatrix M = build_M(par, fam.delta);
    PMatrix P = build_P_matrix(fam);
    note("product", verdict(verify_product(M, P, fam)));
  }
  if (opt.checks.count("rank")) {
    PMatrix P = build_P_matrix(fam);
    long rank = rank_of_P(P);
    long target = par.a + par.N;
    json v = verdict(rank == target);
    v["rank"] = rank;
    v["rank_target"] = target;
    note("rank", v);
  }
  cert["basis_hash"] = basis_hash(column_space_basis(s_matrix_rows(fam)));
  cert["zero_row"] = has_expected_zero_row(fam);
  if (opt.checks.count("lambda")) {
    json rows = json::array();
    for (long k = 1; k <= std::min(opt.lambda_kmax, fam.K); ++k) {
      LinearFormValue v = lambda_check(fam, f, k, opt.ctx);
      char gap[32], bound[32];
      snprintf(gap, sizeof gap, "%.6e", v.gap);
      snprintf(bound, sizeof bound, "%.6e", v.bound);
      json row{{"k", k},
               {"status", v.verdict ? "pass" : "fail"},
               {"gap", gap},
               {"bound", bound}};
      if (!v.verdict) all_ok = false;
      rows.push_back(row);
    }
    cert["checks"]["lambda"] = rows;
  }
  return {cert, all_ok};
}

inline json bound_report(long a, long N, const Ctx& ctx = Ctx()) {
  double la = std::log(double(a));
  long r = long(double(a) / (la * la));
  BoundParams b = alpha_beta(a, r, N, ctx);
  double bound = 1.0 - b.log_alpha.to_double() / b.log_beta.to_double() -
                 double(N);
  json out;
  out["a"] = a;
  out["N"] = N;
  out["r"] = r;
  out["alpha"] = b.log_alpha.exp().str(25);
  out["beta"] = b.log_beta.exp().str(25);
  out["log_alpha"] = b.log_alpha.to_double();
  out["log_beta"] = b.log_beta.to_double();
  out["bound"] = bound;
  // limit ratio 1/(1+log 2) of Theorem 1
  out["ratio_to_limit"] = bound * (1.0 + std::log(2.0)) / la;
  return out;
}

inline json plan_to_json(const EliminationPlan& plan) {
  json out;
  out["epsilon"] = to_string(plan.epsilon);
  out["a"] = plan.a;
  out["D"] = plan.D.get_str();
  json divs = json::array();
  for (const auto& d : plan.divisors) divs.push_back(d.get_str());
  out["divisors"] = divs;
  out["delta"] = plan.delta;
  out["exponents"] = plan.exponents;
  json wv = json::array();
  for (const auto& v : plan.w) wv.push_back(v.get_str());
  out["w"] = wv;
  out["size_ok"] = plan.size_ok;
  out["log_delta"] = plan.log_delta;
  out["log_delta_target"] = plan.log_delta_target;
  return out;
}

}  // namespace zetaforms
