// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failing criteria.  All tolerances are pinned here.

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "zetaforms/pipeline.hpp"

using namespace zetaforms;

namespace {

struct Template {
  long a, r, N, T;
  std::vector<long> n_grid;       // first 4 multiples of N
  std::vector<Rational> f_vals;
};

const std::vector<Template> kTemplates = {
    {4, 1, 1, 1, {1, 2, 3, 4}, {Rational(1)}},
    {7, 2, 2, 2, {2, 4, 6, 8}, {Rational(1), Rational(0)}},
    {10, 1, 3, 3, {3, 6, 9, 12}, {Rational(1), Rational(0), Rational(0)}},
};

PeriodicFunction make_f(const Template& t) {
  std::vector<PeriodicFunction::Value> vals;
  for (const auto& v : t.f_vals) vals.push_back(PeriodicFunction::Value(v));
  return PeriodicFunction(t.T, std::move(vals));
}

struct Instance {
  size_t tmpl;
  Params par;
  FormFamily fam;
};

int g_failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  if (!pass) ++g_failures;
  std::printf("criterion %2d [%-22s] %s  %s\n", id, name,
              pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  // Build every constructible sweep instance once; instances whose d0 < 2
  // are structurally undefined and noted as skipped.
  std::vector<Instance> inst;
  std::vector<std::string> skipped;
  for (size_t ti = 0; ti < kTemplates.size(); ++ti) {
    const Template& t = kTemplates[ti];
    for (long n : t.n_grid) {
      for (long p : {0L, 1L}) {
        Params par{t.a, t.r, t.N, n, p, t.T};
        if (!par.violations().empty()) {
          if (p == 0)
            skipped.push_back("(a=" + std::to_string(t.a) +
                              ",n=" + std::to_string(n) + ": d0=" +
                              std::to_string(par.d0()) + ")");
          continue;
        }
        inst.push_back({ti, par, build_family(par)});
      }
    }
  }

  // 1. integrality: build_family certifies every s_{k,i} in Z for
  //    k <= min(K_max, d0-1); tolerance exact.
  {
    std::string detail = std::to_string(inst.size()) + " instances built";
    if (!skipped.empty()) {
      detail += "; skipped undefined";
      for (const auto& s : skipped) detail += " " + s;
    }
    report(1, "integrality", !inst.empty(), detail);
  }

  // 2. vanishing orders at 0, infinity and the roots of unity; exact.
  {
    bool ok = true;
    for (const auto& I : inst)
      ok = ok && check_order_at_zero(I.fam) && check_order_at_infinity(I.fam) &&
           check_order_at_unity(I.fam);
    report(2, "pade orders", ok, "3 checks x " + std::to_string(inst.size()));
  }

  // 3. exact cyclotomic factorization [s] = M P.
  {
    bool ok = true;
    for (const auto& I : inst) {
      MMatrix M = build_M(I.par, I.fam.delta);
      PMatrix P = build_P_matrix(I.fam);
      ok = ok && verify_product(M, P, I.fam);
    }
    report(3, "matrix factorization", ok, "exact equality");
  }

  // 4. rank q-1 from some n0 onward per template/parity; never above q-1.
  {
    bool ok = true;
    std::string detail;
    for (size_t ti = 0; ti < kTemplates.size(); ++ti) {
      for (long p : {0L, 1L}) {
        std::vector<long> ranks;
        long target = kTemplates[ti].a + kTemplates[ti].N;
        for (const auto& I : inst)
          if (I.tmpl == ti && I.par.p == p)
            ranks.push_back(rank_of_P(build_P_matrix(I.fam)));
        bool saturated = false;
        bool never_above = true;
        for (size_t i = 0; i < ranks.size(); ++i) {
          if (ranks[i] > target) never_above = false;
          bool tail = true;
          for (size_t j = i; j < ranks.size(); ++j) tail = tail && ranks[j] == target;
          if (tail) saturated = true;
        }
        if (!(saturated && never_above)) {
          ok = false;
          detail += " template a=" + std::to_string(kTemplates[ti].a) + ",p=" +
                    std::to_string(p) + " ranks";
          for (long r : ranks) detail += " " + std::to_string(r);
          detail += " target " + std::to_string(target) + ";";
        }
      }
    }
    report(4, "rank saturation", ok,
           ok ? "rank reaches q-1 on every template" : "no n0 exists:" + detail);
  }

  // 5. canonical column-space bases agree at the two largest tested n.
  {
    bool ok = true;
    std::string detail;
    for (size_t ti = 0; ti < kTemplates.size(); ++ti) {
      for (long p : {0L, 1L}) {
        std::vector<const Instance*> sel;
        for (const auto& I : inst)
          if (I.tmpl == ti && I.par.p == p) sel.push_back(&I);
        if (sel.size() < 2) continue;
        auto b1 = column_space_basis(s_matrix_rows(sel[sel.size() - 2]->fam));
        auto b2 = column_space_basis(s_matrix_rows(sel.back()->fam));
        if (!(b1 == b2)) {
          ok = false;
          detail += " a=" + std::to_string(kTemplates[ti].a) + ",p=" +
                    std::to_string(p) + " n=" +
                    std::to_string(sel[sel.size() - 2]->par.n) + " vs n=" +
                    std::to_string(sel.back()->par.n) + ";";
        }
      }
    }
    report(5, "column-space stability", ok,
           ok ? "bases agree" : "bases differ:" + detail);
  }

  // 6. zero row a+1+N/2 for p = 0 and N in {2, 4}; exact.
  {
    bool ok = true;
    long count = 0;
    for (const auto& I : inst)
      if (I.par.p == 0 && I.par.N % 2 == 0) {
        ++count;
        ok = ok && has_expected_zero_row(I.fam);
      }
    for (long n : {4L, 8L}) {
      Params par{13, 1, 4, n, 0, 4};
      FormFamily fam = build_family(par, 6);
      ++count;
      ok = ok && has_expected_zero_row(fam);
    }
    report(6, "zero row", ok, std::to_string(count) + " instances, N in {2,4}");
  }

  // 7. central identity for k in {1,2,3} at 256 bits; every combined error
  //    bound must lie below 1e-30.  Levels with k > d0-1 do not exist and
  //    are outside the family by construction.
  {
    bool ok = true;
    double worst = 0.0;
    Ctx ctx(256, 1e-34);
    for (const auto& I : inst) {
      PeriodicFunction f = make_f(kTemplates[I.tmpl]);
      for (long k = 1; k <= std::min<long>(3, I.fam.K); ++k) {
        LinearFormValue v = lambda_check(I.fam, f, k, ctx);
        ok = ok && v.verdict && v.bound < 1e-30;
        worst = std::max(worst, v.bound);
      }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max bound %.3e < 1e-30", worst);
    report(7, "central identity", ok, buf);
  }

  // 8. denominator lemma; exact.
  {
    bool ok = true;
    for (const auto& I : inst) ok = ok && check_denominators(I.fam.table, I.par);
    report(8, "denominator lemma", ok, "exact divisibility");
  }

  // 9. cross-oracles: the two partial-fraction algorithms agree entrywise and
  //    the transfer operator reproduces the recurrences for k <= 3.
  {
    bool ok = true;
    for (const auto& I : inst) {
      FactoredF F(I.par);
      ok = ok && (partial_fractions_product(F) == partial_fractions_solve(F));
      ok = ok && transfer_agrees(I.fam, 3);
    }
    report(9, "cross-oracle", ok, "partial fractions + transfer operator");
  }

  // 10. FSZ specialization: D = 2, a = 5, r = 1, n in {4, 8}, p = 1,
  //     w = (8, -1); combined bounds <= 1e-20.
  {
    bool ok = true;
    double worst = 0.0;
    for (long n : {4L, 8L}) {
      Params par{5, 1, 2, n, 1, 1};
      FszResult res =
          fsz_equivalence(par, Integer(2), {Integer(1), Integer(2)},
                          {Integer(8), Integer(-1)}, Ctx(256, 1e-24));
      ok = ok && res.verdict && res.bound <= 1e-20;
      worst = std::max(worst, res.bound);
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max bound %.3e <= 1e-20", worst);
    report(10, "fsz specialization", ok, buf);
  }

  // 11. asymptotic constant: |eps_a| strictly decreasing over the grid.
  {
    double limit = 1.0 / (1.0 + std::log(2.0));
    std::vector<long> grid = {10000, 1000000, 100000000, 1000000000000L};
    bool ok = true;
    double prev = 1e9;
    std::string detail = "|eps_a| =";
    for (long a : grid) {
      double eps = theorem1_bound(a, 1) / (limit * std::log(double(a))) - 1.0;
      ok = ok && std::abs(eps) < prev;
      prev = std::abs(eps);
      char buf[32];
      std::snprintf(buf, sizeof buf, " %.4f", std::abs(eps));
      detail += buf;
    }
    report(11, "asymptotic constant", ok, detail);
  }

  // 12. growth trend at the largest n of each template:
  //     log max_i |s_{1,i}| / n <= log beta + 2 (slack 2 absorbs the o(n));
  //     no template reaches alpha < 1 at these sizes, so the small-form side
  //     stays informational.
  {
    bool ok = true;
    bool any_small_alpha = false;
    std::string detail;
    Ctx ctx;
    for (size_t ti = 0; ti < kTemplates.size(); ++ti) {
      const Instance* largest = nullptr;
      for (const auto& I : inst)
        if (I.tmpl == ti && I.par.p == 1) largest = &I;
      if (largest == nullptr) continue;
      const Params& par = largest->par;
      BoundParams b = alpha_beta(par.a, par.r, par.N, ctx);
      if (b.log_alpha.to_double() < 0) any_small_alpha = true;
      double smax = 0.0;
      for (long i = 2; i <= par.a + par.N; ++i)
        smax = std::max(smax,
                        std::abs(Rational(largest->fam.ski(1, i)).get_d()));
      double lhs = std::log(std::max(smax, 1.0)) / double(par.n);
      double rhs = b.log_beta.to_double() + 2.0;
      ok = ok && lhs <= rhs;
      char buf[64];
      std::snprintf(buf, sizeof buf, " a=%ld: %.2f<=%.2f;", par.a, lhs, rhs);
      detail += buf;
    }
    if (!any_small_alpha) detail += " alpha<1 unreachable at these sizes";
    report(12, "growth trend", ok, detail);
  }

  std::printf("%d of 12 criteria passed\n", 12 - g_failures);
  return g_failures;
}
