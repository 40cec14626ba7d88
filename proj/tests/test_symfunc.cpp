#include <doctest.h>

#include "csf/symfunc.hpp"
#include "csf/tableaux.hpp"

using namespace csf;

TEST_CASE("basis names and expansion formatting") {
  CHECK(basis_name(Basis::s) == "s");
  CHECK(parse_basis("h") == Basis::h);
  CHECK_THROWS_AS(parse_basis("q"), std::invalid_argument);

  SymExpansion x;
  x.basis = Basis::s;
  x.add({2, 2}, Int(2));
  x.add({4}, Int(8));
  x.add({3, 1}, Int(4));
  CHECK(x.to_string() == "8 s[4] + 4 s[3,1] + 2 s[2,2]");
  CHECK(x.all_t_free());
  x.add({3, 1}, TPoly{0, 1});  // a t-graded term
  CHECK_FALSE(x.all_t_free());

  SymExpansion zeroed;
  zeroed.basis = Basis::h;
  zeroed.add({2}, Int(1));
  zeroed.add({2}, Int(-1));  // cancels away entirely
  CHECK(zeroed.terms.empty());
  CHECK(zeroed.to_string() == "0");
}

TEST_CASE("determinantal h-expansions of Schur functions") {
  auto x = jacobi_trudi_h({1, 1, 1});
  CHECK(x.basis == Basis::h);
  CHECK(x.to_string() == "h[3] + -2 h[2,1] + h[1,1,1]");
  CHECK(jacobi_trudi_h({3}).to_string() == "h[3]");
  CHECK(jacobi_trudi_h({2, 1}).to_string() == "-1 h[3] + h[2,1]");
  // e-form of the same Schur function, as polynomials in n variables.
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : partitions_of(n, n))
      CHECK(expansion_to_polynomial(jacobi_trudi_h(lam), n) ==
            expansion_to_polynomial(jacobi_trudi_e(lam), n));
}

TEST_CASE("s_to_h and the e/h involution") {
  SymExpansion s;
  s.basis = Basis::s;
  s.add({2, 1}, Int(3));
  auto h = s_to_h(s);
  CHECK(h.to_string() == "-3 h[3] + 3 h[2,1]");
  auto w = omega_on_s(s);
  CHECK(w.basis == Basis::s);
  CHECK(w.terms.count({2, 1}) == 1);  // (2,1) is self-conjugate
  CHECK_THROWS_AS(s_to_h(h), std::invalid_argument);
}

TEST_CASE("coloring polynomial against partition-counted colorings") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& f : enumerate_hessenberg(n)) {
      auto poly = brute_chromatic(f, n, true);
      auto counts = coloring_type_counts(f, n, true);
      // Rebuild the bucketed counts from the raw polynomial.
      PartitionMap<TPoly> rebuilt;
      for (const auto& [expo, c] : poly.terms) {
        Partition lam(expo);
        std::sort(lam.begin(), lam.end(), std::greater<int>());
        lam = trim_zeros(lam);
        tpoly_add(rebuilt[lam], c);
      }
      CHECK(rebuilt == counts);
    }
  }
}

TEST_CASE("monomial coefficients divide out arrangements exactly") {
  auto f = HessenbergFunction::parse("2,3,4,4");
  auto mc = monomial_coefficients(f, false);
  // Coefficient of x1 x2 x3 x4 for the path on 4 vertices: every coloring
  // with all four colors distinct is proper, so 4! of them.
  CHECK(tpoly_at_one(mc.at({1, 1, 1, 1})) == 24);
  CHECK(mc.count({4}) == 0);  // no proper coloring is monochromatic
}

TEST_CASE("e-extraction by dominance peeling") {
  // e_2 e_1 = (x1x2 + ...)(x1 + ...) has monomial coeffs m_{21}: 1, m_{111}: 3.
  EPeelTable table(3);
  CHECK(table.e_monomial_coeff({2, 1}, {2, 1}) == 1);
  CHECK(table.e_monomial_coeff({2, 1}, {1, 1, 1}) == 3);
  CHECK(table.e_monomial_coeff({3}, {1, 1, 1}) == 1);
  CHECK(table.e_monomial_coeff({3}, {2, 1}) == 0);
  PartitionMap<TPoly> m;
  m[{2, 1}] = tpoly_const(Int(1));
  m[{1, 1, 1}] = tpoly_const(Int(3));
  auto e = table.peel(m);
  CHECK(e.size() == 1);
  CHECK(tpoly_at_one(e.at({2, 1})) == 1);
  // Peeling is unimodular on partition-keyed input, so negative e-basis
  // coefficients are produced rather than rejected.
  PartitionMap<TPoly> mixed;
  mixed[{1, 1, 1}] = tpoly_const(Int(1));
  mixed[{2, 1}] = tpoly_const(Int(1));
  auto e2 = table.peel(mixed);
  CHECK(tpoly_at_one(e2.at({2, 1})) == 1);
  CHECK(tpoly_at_one(e2.at({3})) == -2);
  // Coefficients keyed by the wrong weight leave a remainder.
  PartitionMap<TPoly> bad;
  bad[{2}] = tpoly_const(Int(1));
  CHECK_THROWS_AS(table.peel(bad), std::runtime_error);
}

TEST_CASE("coloring-only e-expansions match published small cases") {
  CHECK(e_expansion_oracle(HessenbergFunction::parse("1,3,4,4"), false).to_string() ==
        "3 e[3,1] + e[2,1,1]");
  CHECK(e_expansion_oracle(HessenbergFunction::parse("3,3,3"), false).to_string() ==
        "6 e[3]");
  CHECK(e_expansion_oracle(HessenbergFunction::parse("1,2,3"), false).to_string() ==
        "e[1,1,1]");
}

TEST_CASE("tableau-counted h-coefficients agree with colorings, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& f : enumerate_hessenberg(n)) {
      auto via_colorings = e_expansion_oracle(f, false);
      auto via_tableaux = coefficients_in_h(f);
      REQUIRE(via_colorings.terms.size() == via_tableaux.terms.size());
      for (const auto& [lam, c] : via_tableaux.terms) {
        REQUIRE(via_colorings.terms.count(lam) == 1);
        CHECK(via_colorings.terms.at(lam) == c);
      }
    }
  }
}
