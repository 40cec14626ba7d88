#include <doctest.h>

#include "csf/injections.hpp"
#include "csf/verifier.hpp"

using namespace csf;

TEST_CASE("tilde sets are literal differences") {
  auto f = HessenbergFunction::parse("2,4,5,6,6,6");
  TableauCache cache(f);
  // Non-partition removed shape: nothing is subtracted.
  auto whole = tilde_set(cache, {3, 3, 0}, {2, 3, 1}, 1, -1);
  CHECK((Int)whole.members.size() == cache.count({3, 3}));
  CHECK(whole.sign == -1);

  auto g = HessenbergFunction::parse("1,3,4,4");
  TableauCache gcache(g);
  std::vector<MapTrace> pairings;
  std::vector<std::string> problems;
  auto t = tilde_set(gcache, {3, 1, 0}, {2, 1, 1}, 1, 1, &pairings, &problems);
  CHECK(problems.empty());
  CHECK((Int)pairings.size() == gcache.count({2, 1, 1}));
  CHECK((Int)t.members.size() == gcache.count({3, 1}) - gcache.count({2, 1, 1}));
  for (const auto& p : pairings) {
    CHECK(p.input.shape() == Composition{2, 1, 1});
    CHECK(p.output.shape() == Composition{3, 1});
    CHECK(is_f_tableau(g, p.output));
    // The subtracted images are exactly the ones missing from the tilde set.
    for (const auto& m : t.members) CHECK(m != p.output);
  }

  // Shapes longer than the bounce number carry no tableaux.
  CHECK(tilde_set(gcache, {2, 1, 1}, {1, 1, 1, 1}, 1, 1).members.empty() ==
        (gcache.count({2, 1, 1}) == 0));
}

TEST_CASE("two-row merge on a hand-checked example") {
  auto f = HessenbergFunction::parse("2,4,5,6,6,6");
  auto r = sigma21_tilde(f, FTableau::parse("1,2,3;4,5,6"));
  CHECK(r.out.to_string() == "1,2,3,6;4,5");
  CHECK(r.tag.has_value());
  CHECK(r.tag->kind == 1);
}

TEST_CASE("two-row merge rejects inputs outside the tilde domain") {
  // f = (2,3,5,6,7,8,8,8): row-2 head 4 precedes row-1 tail 8, so the
  // entry condition a2 not-before d1 fails.
  auto f = HessenbergFunction::parse("2,3,5,6,7,8,8,8");
  FTableau bad = FTableau::parse("2,1,5,6,8;4,3,7");
  if (is_f_tableau(f, bad)) CHECK_THROWS_AS(sigma21_tilde(f, bad), PreconditionViolated);
}

TEST_CASE("case II map on a hand-checked example") {
  auto f = HessenbergFunction::parse("2,3,4,5,5");
  auto r = phi_case2(f, FTableau::parse("1,2,4;3;5"));
  CHECK(r.out.to_string() == "1,2,4;3,5");
  CHECK(r.subcase == "(1-1)");
}

TEST_CASE("case III map on a hand-checked example") {
  auto f = HessenbergFunction::parse("1,3,4,4");
  auto r = phi_case3(f, FTableau::parse("1,2;3,4"));
  CHECK(r.out.to_string() == "1,2,4;3");
  CHECK(r.subcase == "<1-1>");
}

TEST_CASE("case IV pair splits the last column both ways") {
  auto [a, b] = phi_case4(FTableau::parse("1;2;3"));
  CHECK(a.to_string() == "1,2;3");
  CHECK(b.to_string() == "1,3;2");
  auto f = HessenbergFunction::parse("1,2,3");
  CHECK(is_f_tableau(f, a));
  CHECK(is_f_tableau(f, b));
}

TEST_CASE("bounce-2 move") {
  auto f = HessenbergFunction::parse("2,3,4,4");
  CHECK(phi_bounce2(f, FTableau::parse("1,2;3,4")).to_string() == "1,2,4;3");
}

TEST_CASE("full case runs on worked examples") {
  {
    auto f = HessenbergFunction::parse("1,3,4,4");
    TableauCache cache(f);
    auto run = run_case(cache, {3, 1});
    CHECK(run.mode == "III");
    CHECK(run.ok());
    CHECK(run.residual() == 3);
    CHECK(run.residual() == coefficient_c(f, {3, 1}));
    bool saw_example = false;
    for (const auto& p : run.pairings)
      if (p.input.to_string() == "1,2;3,4" && p.output.to_string() == "1,2,4;3")
        saw_example = true;
    CHECK(saw_example);
  }
  {
    // Perfect matching: both tableaux of the target shape are images.
    auto f = HessenbergFunction::parse("1,2,3");
    TableauCache cache(f);
    auto run = run_case(cache, {2, 1});
    CHECK(run.mode == "IV");
    CHECK(run.ok());
    CHECK(run.residual() == 0);
  }
  {
    auto f = HessenbergFunction::parse("2,3,4,4");
    TableauCache cache(f);
    auto run = run_case(cache, {2, 2});
    CHECK(run.mode == "bounce2");
    CHECK(run.ok());
    CHECK(run.residual() == 2);
  }
  {
    // Complete graph: the source shape (2,1) has no tableaux, so nothing
    // cancels and all 6 one-row tableaux survive.
    auto f = HessenbergFunction::parse("3,3,3");
    TableauCache cache(f);
    auto run = run_case(cache, {3});
    CHECK(run.mode == "bounce2");
    CHECK(run.ok());
    CHECK(run.residual() == 6);
  }
  {
    // Three-part mu with bounce below 3: every contributing set is empty.
    auto f = HessenbergFunction::parse("2,3,4,4");
    TableauCache cache(f);
    auto run = run_case(cache, {2, 1, 1});
    CHECK(run.mode == "trivial");
    CHECK(run.ok());
    CHECK(run.residual() == 0);
  }
}

TEST_CASE("every matching run certifies the signed sum, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& f : enumerate_hessenberg(n)) {
      if (f.bounce_number() > 3) continue;
      TableauCache cache(f);
      for (const auto& mu : partitions_of(n, 3)) {
        auto run = run_case(cache, mu);
        CHECK(run.ok());
        CHECK(run.residual() == coefficient_c(f, mu, &cache));
        // Residual tableaux really are unmatched members of the target set.
        for (const auto& t : run.residual_positive) {
          CHECK(is_f_tableau(f, t));
          CHECK(trim_zeros(t.shape()) == mu);
        }
      }
    }
  }
}

TEST_CASE("run serialization carries the checks") {
  auto f = HessenbergFunction::parse("1,3,4,4");
  TableauCache cache(f);
  auto j = run_case(cache, {3, 1}).to_json(true);
  CHECK(j["mode"] == "III");
  CHECK(j["residual"] == 3);
  CHECK(j["checks"]["injective"] == true);
  CHECK(j["pairings"].is_array());
  CHECK(run_case(cache, {3, 1}).to_json(false).count("pairings") == 0);
}
