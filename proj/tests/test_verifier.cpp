#include <doctest.h>

#include <cstdlib>

#include "csf/verifier.hpp"

using namespace csf;

namespace {

const MuRecord& record_for(const Certificate& cert, const Partition& mu) {
  for (const auto& r : cert.records)
    if (r.mu == mu) return r;
  REQUIRE(false);
  return cert.records.front();
}

}  // namespace

TEST_CASE("single-function certificates on worked examples") {
  {
    auto cert = verify_function(HessenbergFunction::parse("1,3,4,4"));
    CHECK(cert.passed());
    CHECK(cert.n == 4);
    CHECK(cert.bounce == 3);
    auto& r = record_for(cert, {3, 1});
    CHECK(r.case_tag == "III");
    CHECK(r.c_via_signed_sum == 3);
    CHECK(r.c_via_oracle == 3);
    CHECK(r.c_via_matching == 3);
    CHECK(r.checks.all());
    CHECK(record_for(cert, {2, 1, 1}).c_via_matching == 1);
    CHECK(record_for(cert, {4}).c_via_matching == 0);
    CHECK(record_for(cert, {2, 2}).c_via_matching == 0);
  }
  {
    auto cert = verify_function(HessenbergFunction::parse("3,3,3"));
    CHECK(cert.passed());
    CHECK(cert.bounce == 1);
    CHECK(record_for(cert, {3}).c_via_matching == 6);
  }
  {
    auto cert = verify_function(HessenbergFunction::parse("1,2,3"));
    CHECK(cert.passed());
    CHECK(cert.bounce == 3);
    CHECK(record_for(cert, {1, 1, 1}).c_via_matching == 1);
    CHECK(record_for(cert, {2, 1}).c_via_matching == 0);
  }
  CHECK_THROWS_AS(verify_function(HessenbergFunction::parse("1,2,3,4")), BounceTooLarge);
}

TEST_CASE("certificate serialization") {
  auto j = verify_function(HessenbergFunction::parse("1,3,4,4")).to_json();
  CHECK(j["schema"] == "csf-cert/1");
  CHECK(j["f"] == std::vector<int>{1, 3, 4, 4});
  CHECK(j["bounce"] == 3);
  CHECK(j["passed"] == true);
  CHECK(j["mu"].is_array());  // one record per partition of n with <= 3 parts
  CHECK(j["mu"].size() == 4);
}

TEST_CASE("range verification matches the published counts") {
  auto s4 = verify_range(4);
  CHECK(s4.n_max == 4);
  CHECK(s4.functions == 22);  // 1 + 2 + 5 + 14
  CHECK(s4.failures == 0);
  CHECK((long long)s4.certificates.size() == s4.functions);
  // Deterministic enumeration order regardless of thread count.
  auto s4b = verify_range(4, std::nullopt, 3);
  CHECK(s4b.functions == 22);
  for (size_t i = 0; i < s4.certificates.size(); ++i)
    CHECK(s4.certificates[i].to_json() == s4b.certificates[i].to_json());

  auto s3 = verify_range(3, 3);
  CHECK(s3.functions == 1);  // only f = (1,2,3) has bounce 3
  CHECK(s3.failures == 0);
  CHECK(s3.certificates.at(0).f == std::vector<int>{1, 2, 3});

  auto s1 = verify_range(1);
  CHECK(s1.functions == 1);
  CHECK(s1.failures == 0);

  auto j = s3.to_json(false);
  CHECK(j["functions"] == 1);
  CHECK(j.count("certificates") == 0);
  CHECK_FALSE(s3.table().empty());
}

TEST_CASE("range verification respects the budget") {
  if (std::getenv("CSF_BUDGET") == nullptr) CHECK(configured_budget() == 8);
  CHECK_THROWS(verify_range(configured_budget() + 1));
}

TEST_CASE("independent expansion routes coincide as polynomials") {
  CHECK(oracle_crosscheck(HessenbergFunction::parse("2,3,4,4")));
  CHECK(oracle_crosscheck(HessenbergFunction::parse("1,3,4,4")));
  CHECK(oracle_crosscheck(HessenbergFunction::parse("4,4,4,4")));
  CHECK(oracle_crosscheck(HessenbergFunction::parse("1,2,3")));
  for (const auto& f : enumerate_hessenberg(5))
    if (f.bounce_number() <= 3) CHECK(oracle_crosscheck(f));
}
