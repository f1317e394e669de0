// zetaforms: construct, verify and report on the linear-form instances.
//
// Subcommands: construct, verify, bounds, sweep, fsz.
// Exit codes: 0 = all pass, 1 = check failure, 2 = usage/parameter error.

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "zetaforms/io.hpp"

namespace zf = zetaforms;
using nlohmann::json;

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_output(const json& doc, const std::string& out_path) {
  std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    out << text;
  }
}

int cmd_construct(const std::string& file, const std::string& out_path) {
  json j = read_json_file(file);
  zf::Params par = zf::params_from_json(j);
  bool allow_regime = j.value("allow_regime_violation", false);
  auto problems = allow_regime ? par.violations() : par.violations_strict();
  if (!problems.empty()) {
    for (const auto& p : problems) std::cerr << "error: " << p << "\n";
    return 2;
  }
  zf::FormFamily fam = zf::build_family(par);
  json dump;
  dump["tool"] = "zetaforms";
  dump["version"] = zf::kToolVersion;
  dump["timestamp"] = zf::iso_timestamp();
  dump["params"] = zf::params_to_json(par);
  dump["d0"] = par.d0();
  dump["k_max"] = fam.K;
  dump["delta_n"] = fam.delta.get_str();
  json table = json::array();
  for (long j_ = 1; j_ <= par.a; ++j_) {
    json row = json::array();
    for (long h = 0; h <= par.n / par.N; ++h)
      row.push_back(zf::to_string(fam.table.entry(j_, h)));
    table.push_back(row);
  }
  dump["partial_fractions"] = table;
  json smat = json::array();
  for (long k = 1; k <= fam.K; ++k) {
    json row = json::array();
    for (long i = 2; i <= par.a + par.N; ++i)
      row.push_back(fam.ski(k, i).get_str());
    smat.push_back(row);
  }
  dump["s"] = smat;
  write_output(dump, out_path);
  return 0;
}

const std::set<std::string> kKnownChecks = {"integrality", "orders", "product",
                                            "rank", "lambda"};

int cmd_verify(const std::string& file, const std::string& checks_csv,
               long kmax, long bits, const std::string& out_path) {
  json j = read_json_file(file);
  zf::Params par = zf::params_from_json(j);
  auto problems = par.violations();
  if (!problems.empty()) {
    for (const auto& p : problems) std::cerr << "error: " << p << "\n";
    return 2;
  }
  zf::CertificateOptions opt;
  if (!checks_csv.empty()) {
    opt.checks.clear();
    std::stringstream ss(checks_csv);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (!kKnownChecks.count(name)) {
        std::cerr << "error: unknown check '" << name << "'\n";
        return 2;
      }
      opt.checks.insert(name);
    }
  }
  opt.kmax = kmax;
  if (bits > 0) opt.ctx = zf::Ctx(bits, std::pow(2.0, -double(bits) / 2));
  zf::PeriodicFunction f = zf::periodic_from_json(j, par.T);
  auto [cert, ok] = zf::make_certificate(par, f, opt);
  write_output(cert, out_path);
  return ok ? 0 : 1;
}

int cmd_bounds(long a, long N, const std::string& eps_str,
               const std::string& out_path) {
  if (a < 2 || N < 1) {
    std::cerr << "error: need a >= 2 and N >= 1\n";
    return 2;
  }
  json out = zf::bound_report(a, N);
  if (!eps_str.empty()) {
    zf::Rational eps = zf::rational_from_string(eps_str);
    zf::EliminationPlan plan = zf::primorial_D(eps, a);
    // eliminate the first delta-1 odd exponents >= 3
    for (long i = 3; long(plan.exponents.size()) + 1 < plan.delta; i += 2)
      plan.exponents.push_back(i);
    plan.w = zf::solve_w(plan.divisors, plan.exponents);
    out["plan"] = zf::plan_to_json(plan);
  }
  write_output(out, out_path);
  return 0;
}

int cmd_sweep(const std::string& file, const std::string& n_list,
              long kmax, long bits, const std::string& out_path) {
  json j = read_json_file(file);
  zf::Params base = zf::params_from_json(j);
  std::vector<long> ns;
  {
    std::stringstream ss(n_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) ns.push_back(std::stol(tok));
  }
  if (ns.empty()) {
    std::cerr << "error: empty n-list\n";
    return 2;
  }
  zf::CertificateOptions opt;
  opt.kmax = kmax;
  if (bits > 0) opt.ctx = zf::Ctx(bits, std::pow(2.0, -double(bits) / 2));

  long pool = 1;
  if (const char* env = std::getenv("ZETAFORMS_THREADS"))
    pool = std::max(1L, std::atol(env));
  pool = std::min<long>(pool, long(ns.size()));

  struct Slot {
    json cert;
    bool ok = false;
    std::string hash;
  };
  std::vector<Slot> slots(ns.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> any_fail{false};
  auto worker = [&]() {
    for (;;) {
      size_t idx = next.fetch_add(1);
      if (idx >= ns.size()) return;
      zf::Params par = base;
      par.n = ns[idx];
      auto problems = par.violations();
      if (!problems.empty()) {
        json err{{"params", zf::params_to_json(par)},
                 {"status", "fail"},
                 {"reason", problems.front()}};
        slots[idx] = Slot{err, false, ""};
        any_fail = true;
        continue;
      }
      zf::PeriodicFunction f = zf::periodic_from_json(j, par.T);
      auto [cert, ok] = zf::make_certificate(par, f, opt);
      if (!ok) any_fail = true;
      slots[idx] = Slot{cert, ok, cert.value("basis_hash", std::string())};
    }
  };
  std::vector<std::thread> threads;
  for (long t = 0; t < pool; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  std::ostringstream lines;
  for (const auto& s : slots) lines << s.cert.dump() << "\n";
  bool stable = true;
  json pairs = json::array();
  for (size_t i = 1; i < slots.size(); ++i) {
    bool same = !slots[i - 1].hash.empty() &&
                slots[i - 1].hash == slots[i].hash;
    if (!same) stable = false;
    pairs.push_back(json{{"n_prev", ns[i - 1]},
                         {"n", ns[i]},
                         {"same_column_space", same}});
  }
  json verdict{{"column_space_stable", stable}, {"pairs", pairs}};
  lines << verdict.dump() << "\n";
  if (out_path.empty()) {
    std::cout << lines.str();
  } else {
    std::ofstream out(out_path);
    out << lines.str();
  }
  return any_fail ? 1 : 0;
}

int cmd_fsz(const std::string& file, long bits, const std::string& out_path) {
  json j = read_json_file(file);
  zf::Params par;
  par.a = j.at("a").get<long>();
  par.r = j.at("r").get<long>();
  par.n = j.at("n").get<long>();
  par.p = j.value("p", 0L);
  par.N = j.at("D").get<long>();
  par.T = 1;
  zf::Integer D(par.N);
  std::vector<zf::Integer> divisors, w;
  for (const auto& v : j.at("divisors"))
    divisors.push_back(zf::Integer(v.get<std::string>()));
  for (const auto& v : j.at("w")) w.push_back(zf::Integer(v.get<std::string>()));
  zf::Ctx ctx = bits > 0 ? zf::Ctx(bits, std::pow(2.0, -double(bits) / 2))
                         : zf::Ctx(256, 1e-24);
  zf::FszResult res = zf::fsz_equivalence(par, D, divisors, w, ctx);
  json out;
  out["tool"] = "zetaforms";
  out["version"] = zf::kToolVersion;
  out["timestamp"] = zf::iso_timestamp();
  out["params"] = zf::params_to_json(par);
  out["lhs"] = zf::ball_to_json(res.lhs);
  out["rhs"] = zf::ball_to_json(res.rhs);
  char gap[32], bound[32];
  snprintf(gap, sizeof gap, "%.6e", res.gap);
  snprintf(bound, sizeof bound, "%.6e", res.bound);
  out["gap"] = gap;
  out["bound"] = bound;
  out["status"] = res.verdict ? "pass" : "fail";
  write_output(out, out_path);
  return res.verdict ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and certified computations with linear forms in "
               "L-values"};
  app.require_subcommand(1);

  std::string file, out_path, checks_csv, n_list, eps_str;
  long kmax = 0, bits = 0, arg_a = 0, arg_N = 1;

  auto* c_construct = app.add_subcommand("construct", "build one instance");
  c_construct->add_option("instance", file)->required();
  c_construct->add_option("--out", out_path);

  auto* c_verify = app.add_subcommand("verify", "run checks on one instance");
  c_verify->add_option("instance", file)->required();
  c_verify->add_option("--checks", checks_csv);
  c_verify->add_option("--kmax", kmax);
  c_verify->add_option("--precision-bits", bits);
  c_verify->add_option("--out", out_path);

  auto* c_bounds = app.add_subcommand("bounds", "alpha/beta bound report");
  c_bounds->add_option("a", arg_a)->required();
  c_bounds->add_option("N", arg_N)->required();
  c_bounds->add_option("epsilon", eps_str);
  c_bounds->add_option("--out", out_path);

  auto* c_sweep = app.add_subcommand("sweep", "certificates over an n grid");
  c_sweep->add_option("template", file)->required();
  c_sweep->add_option("--n-list", n_list)->required();
  c_sweep->add_option("--kmax", kmax);
  c_sweep->add_option("--precision-bits", bits);
  c_sweep->add_option("--out", out_path);

  auto* c_fsz = app.add_subcommand("fsz", "FSZ equivalence verdict");
  c_fsz->add_option("plan", file)->required();
  c_fsz->add_option("--precision-bits", bits);
  c_fsz->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_construct->parsed()) return cmd_construct(file, out_path);
    if (c_verify->parsed())
      return cmd_verify(file, checks_csv, kmax, bits, out_path);
    if (c_bounds->parsed()) return cmd_bounds(arg_a, arg_N, eps_str, out_path);
    if (c_sweep->parsed())
      return cmd_sweep(file, n_list, kmax, bits, out_path);
    if (c_fsz->parsed()) return cmd_fsz(file, bits, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
