#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zetaforms/pade.hpp"

using namespace zetaforms;

namespace {
FormFamily family_a4() { return build_family(Params{4, 1, 1, 2, 1, 1}); }
FormFamily family_a7() { return build_family(Params{7, 1, 2, 2, 1, 1}); }
}  // namespace

TEST_CASE("vanishing orders at zero, infinity and unity") {
  for (Params par :
       {Params{4, 1, 1, 2, 1, 1}, Params{7, 2, 2, 2, 0, 2},
        Params{10, 1, 3, 6, 0, 3}}) {
    FormFamily fam = build_family(par, 3);
    CHECK(check_order_at_zero(fam));
    CHECK(check_order_at_infinity(fam));
    CHECK(check_order_at_unity(fam));
  }
}

TEST_CASE("unity order check rejects a corrupted family") {
  FormFamily fam = family_a4();
  fam.Pj[0] = fam.Pj[0] + DensePoly(Rational(1));
  CHECK(!check_order_at_unity(fam));
}

TEST_CASE("transfer operator reproduces the recurrence levels") {
  CHECK(transfer_agrees(family_a4(), 3));
  CHECK(transfer_agrees(family_a7(), 3));

  // k = 1 is the initial-vector identity itself
  FormFamily fam = family_a7();
  auto P = transfer_initial_vector(fam);
  REQUIRE(long(P.size()) == fam.par.a + fam.par.N + 1);
  const auto& base = fam.level(1);
  CHECK(P[0] == laurent_to_ratfun(lift_laurent(base.P[0])));
  CHECK(P[size_t(fam.par.a)] ==
        laurent_to_ratfun(lift_laurent(base.U + base.V)));
  CHECK(P[size_t(fam.par.a + 1)] ==
        laurent_to_ratfun(laurent_at_scaled_arg(base.V, fam.par.N, 1)));
}

TEST_CASE("M matrix entries for a = 3, N = 2, p = 1") {
  Params par{3, 1, 2, 2, 1, 1};
  MMatrix M = build_M(par, Integer(2));
  // rows 2..5, columns 2..6; omega_2 = -1
  for (long i = 2; i <= 4; ++i) {
    for (long j = 2; j <= 4; ++j)
      CHECK(M.at(i, j) == (i == j ? CycloNumber(2) : CycloNumber(0)));
  }
  // row a+1 = 4: (delta/N)((-1)^p - 1) = -2 on the last N columns
  CHECK(M.at(4, 5) == CycloNumber(-2));
  CHECK(M.at(4, 6) == CycloNumber(-2));
  // row a+1+1 = 5: (delta/N)((-1)^p omega^l - omega^{-l})
  CHECK(M.at(5, 5) == CycloNumber(2));
  CHECK(M.at(5, 6) == CycloNumber(-2));
  CHECK(M.at(5, 2) == CycloNumber(0));
}

TEST_CASE("product identity [s] = M P") {
  for (Params par :
       {Params{4, 1, 1, 2, 1, 1}, Params{7, 2, 2, 2, 1, 2},
        Params{10, 1, 3, 3, 0, 3}}) {
    FormFamily fam = build_family(par);
    MMatrix M = build_M(par, fam.delta);
    PMatrix P = build_P_matrix(fam);
    CHECK(verify_product(M, P, fam));
    // negative control: a single corrupted s entry breaks the equality
    FormFamily bad = fam;
    bad.s[0][0] += 1;
    CHECK(!verify_product(M, P, bad));
  }
}

TEST_CASE("exact rank over the cyclotomic field") {
  std::vector<std::vector<CycloNumber>> I5(
      5, std::vector<CycloNumber>(5, CycloNumber(0)));
  for (int i = 0; i < 5; ++i) I5[size_t(i)][size_t(i)] = CycloNumber(1);
  CHECK(rank_over_cyclotomic(I5) == 5);
  std::vector<std::vector<CycloNumber>> Z(
      3, std::vector<CycloNumber>(4, CycloNumber(0)));
  CHECK(rank_over_cyclotomic(Z) == 0);
  // dependent rows
  CycloNumber w = CycloNumber::root_of_unity(4, 1);
  std::vector<std::vector<CycloNumber>> A = {
      {CycloNumber(1), w}, {w, w * w}};  // row2 = w * row1
  CHECK(rank_over_cyclotomic(A) == 1);
}

TEST_CASE("rank of the P matrix saturates at q - 1") {
  FormFamily fam = family_a4();
  PMatrix P = build_P_matrix(fam);
  CHECK(rank_of_P(P) == 5);
  CHECK(fam.par.a + fam.par.N == 5);
}

TEST_CASE("canonical column-space basis") {
  std::vector<std::vector<Rational>> mat = {{Rational(2)}, {Rational(4)}};
  auto basis = column_space_basis(mat);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == std::vector<Rational>{Rational(1), Rational(2)});

  // scaling columns leaves the canonical basis unchanged
  std::vector<std::vector<Rational>> scaled = {{Rational(3)}, {Rational(6)}};
  CHECK(column_space_basis(scaled) == basis);
}

TEST_CASE("basis hash is stable across n for the first template") {
  FormFamily f2 = build_family(Params{4, 1, 1, 2, 1, 1});
  FormFamily f4 = build_family(Params{4, 1, 1, 4, 1, 1});
  std::string h2 = basis_hash(column_space_basis(s_matrix_rows(f2)));
  std::string h4 = basis_hash(column_space_basis(s_matrix_rows(f4)));
  CHECK(h2 == "8dadd66eb70d7ce3");
  CHECK(h2 == h4);
}

TEST_CASE("zero row for even p and even N") {
  FormFamily fam = build_family(Params{7, 2, 2, 2, 0, 2});
  CHECK(has_expected_zero_row(fam));
  long i = fam.par.a + 1 + fam.par.N / 2;
  for (long k = 1; k <= fam.K; ++k) CHECK(fam.ski(k, i) == 0);

  FormFamily odd = build_family(Params{7, 2, 2, 2, 1, 2});
  CHECK(!has_expected_zero_row(odd));
}

TEST_CASE("equation/unknown count balance") {
  for (Params par :
       {Params{4, 1, 1, 1, 0, 1}, Params{4, 1, 1, 4, 1, 1},
        Params{7, 2, 2, 2, 0, 2}, Params{7, 2, 2, 4, 1, 2},
        Params{10, 1, 3, 3, 0, 3}, Params{10, 1, 3, 12, 1, 3}}) {
    CHECK(check_count_balance(par));
  }
}

TEST_CASE("aggregate report") {
  PadeReport rep = run_pade_checks(family_a4());
  CHECK(rep.order_zero);
  CHECK(rep.order_infinity);
  CHECK(rep.order_unity);
  CHECK(rep.transfer_ok);
  CHECK(rep.product_ok);
  CHECK(rep.rank == rep.rank_target);
  CHECK(!rep.zero_row);  // p = 1
  CHECK(rep.all_ok());
}
