#include "csf/verifier.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace csf {

bool MuRecord::passed() const {
  return c_via_signed_sum == c_via_oracle && c_via_oracle == c_via_matching &&
         c_via_matching >= 0 && checks.all() && counterexamples.empty();
}

nlohmann::json MuRecord::to_json() const {
  nlohmann::json sizes = nlohmann::json::object();
  for (const auto& [name, v] : set_sizes) sizes[name] = v.str();
  return {{"mu", mu},
          {"case", case_tag},
          {"c_via_signed_sum", c_via_signed_sum.str()},
          {"c_via_oracle", c_via_oracle.str()},
          {"c_via_matching", c_via_matching.str()},
          {"set_sizes", sizes},
          {"checks",
           {{"well_defined", checks.well_defined},
            {"injective", checks.injective},
            {"disjoint", checks.disjoint},
            {"codomain_ok", checks.codomain_ok}}},
          {"counterexamples", counterexamples},
          {"passed", passed()}};
}

bool Certificate::passed() const {
  if (!problems.empty()) return false;
  for (const auto& r : records)
    if (!r.passed()) return false;
  return true;
}

nlohmann::json Certificate::to_json() const {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records) recs.push_back(r.to_json());
  return {{"schema", "csf-cert/1"}, {"f", f},       {"n", n},
          {"bounce", bounce},       {"mu", recs},   {"problems", problems},
          {"passed", passed()}};
}

nlohmann::json Summary::to_json(bool include_certificates) const {
  nlohmann::json j = {{"schema", "csf-cert/1"},
                      {"n_max", n_max},
                      {"functions", functions},
                      {"failures", failures},
                      {"elapsed_ms", elapsed_ms}};
  if (bounce_filter) j["bounce_filter"] = *bounce_filter;
  if (include_certificates) {
    nlohmann::json certs = nlohmann::json::array();
    for (const auto& c : certificates) certs.push_back(c.to_json());
    j["certificates"] = certs;
  }
  return j;
}

std::string Summary::table() const {
  std::ostringstream os;
  os << "n_max " << n_max;
  if (bounce_filter) os << "  bounce " << *bounce_filter;
  os << "  functions " << functions << "  failures " << failures << "  elapsed "
     << elapsed_ms << " ms\n";
  for (const auto& c : certificates)
    if (!c.passed()) {
      os << "FAILED f=" << format_csv(c.f) << "\n";
      for (const auto& p : c.problems) os << "  " << p << "\n";
      for (const auto& r : c.records)
        if (!r.passed())
          os << "  mu=" << format_csv(r.mu) << " case " << r.case_tag << " c="
             << r.c_via_signed_sum.str() << "/" << r.c_via_oracle.str() << "/"
             << r.c_via_matching.str() << "\n";
    }
  return os.str();
}

int configured_budget() {
  if (const char* env = std::getenv("CSF_BUDGET")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (...) {
    }
  }
  return 8;
}

Certificate verify_function(const HessenbergFunction& f) {
  Certificate cert;
  cert.f = f.values();
  cert.n = f.n();
  cert.bounce = f.bounce_number();
  if (cert.bounce > 3) throw BounceTooLarge("verification needs bounce number <= 3");

  // Coloring-route coefficients: X = sum c_mu e_mu, so the e-coefficients
  // of X are exactly the h-coefficients of omega X.
  PartitionMap<TPoly> oracle_e;
  try {
    EPeelTable table(cert.n);
    oracle_e = table.peel(monomial_coefficients(f, /*with_t=*/false));
  } catch (const std::exception& e) {
    cert.problems.push_back(std::string("coloring oracle failed: ") + e.what());
    return cert;
  }
  // Support outside Par(n, <=3) would contradict the length bound.
  for (const auto& [lam, c] : oracle_e)
    if ((int)lam.size() > cert.bounce && !tpoly_is_zero(c))
      cert.problems.push_back("oracle coefficient at " + format_csv(lam) +
                              " exceeds the length bound");

  TableauCache cache(f);
  for (const Partition& mu : partitions_of(cert.n, 3)) {
    MuRecord rec;
    rec.mu = mu;
    auto it = oracle_e.find(mu);
    rec.c_via_oracle = it == oracle_e.end() ? Int(0) : tpoly_at_one(it->second);
    rec.c_via_signed_sum = coefficient_c(f, mu, &cache);
    CaseRun run = run_case(cache, mu);
    rec.case_tag = run.mode;
    rec.c_via_matching = run.residual();
    rec.set_sizes = run.set_sizes;
    rec.checks = run.checks;
    rec.counterexamples = run.problems;
    cert.records.push_back(std::move(rec));
  }
  return cert;
}

namespace {

// Fallback for bounce number > 3, where the signed-sum and matching
// machinery does not apply: cross-check the coloring-derived e-coefficients
// against the Jacobi-Trudi h-expansion of the tableau-counting route.
Certificate schur_crosscheck_certificate(const HessenbergFunction& f) {
  Certificate cert;
  cert.f = f.values();
  cert.n = f.n();
  cert.bounce = f.bounce_number();
  try {
    EPeelTable table(cert.n);
    PartitionMap<TPoly> oracle_e = table.peel(monomial_coefficients(f, false));
    PartitionMap<TPoly> via_schur = s_to_h(schur_expansion(f)).terms;
    for (auto* m : {&oracle_e, &via_schur})
      std::erase_if(*m, [](const auto& kv) { return tpoly_is_zero(kv.second); });
    if (oracle_e != via_schur)
      cert.problems.push_back("coloring and tableau coefficient routes disagree");
  } catch (const std::exception& e) {
    cert.problems.push_back(std::string("cross-check failed: ") + e.what());
  }
  return cert;
}

}  // namespace

Summary verify_range(int n_max, std::optional<int> bounce_filter, int threads) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  if (n_max > configured_budget())
    throw std::invalid_argument("n_max exceeds the configured budget (" +
                                std::to_string(configured_budget()) +
                                "); set CSF_BUDGET to raise it");
  auto start = std::chrono::steady_clock::now();

  std::vector<HessenbergFunction> fns;
  for (int n = 1; n <= n_max; ++n)
    for (auto& f : enumerate_hessenberg(n, bounce_filter)) fns.push_back(std::move(f));

  Summary s;
  s.n_max = n_max;
  s.bounce_filter = bounce_filter;
  s.functions = (long long)fns.size();
  s.certificates.resize(fns.size());

  if (threads <= 0) threads = (int)std::thread::hardware_concurrency();
  if (threads < 1) threads = 1;
  threads = std::min<int>(threads, std::max<size_t>(fns.size(), 1));

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < fns.size(); i = next.fetch_add(1))
      s.certificates[i] = fns[i].bounce_number() <= 3
                              ? verify_function(fns[i])
                              : schur_crosscheck_certificate(fns[i]);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& c : s.certificates)
    if (!c.passed()) ++s.failures;
  s.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return s;
}

bool oracle_crosscheck(const HessenbergFunction& f) {
  const int n = f.n();
  OraclePolynomial colorings = brute_chromatic(f, n, /*with_t=*/false);
  // Tableau route: omega X = sum d_lam s_lam, so X = sum d_lam s_{lam'}.
  OraclePolynomial via_schur =
      expansion_to_polynomial(omega_on_s(schur_expansion(f)), n);
  if (!(colorings == via_schur)) return false;
  // Signed-sum route: X = sum c_mu e_mu.
  SymExpansion e_form;
  e_form.basis = Basis::e;
  for (const auto& [mu, c] : h_expansion_via_signed_sums(f).terms) e_form.add(mu, c);
  return colorings == expansion_to_polynomial(e_form, n);
}

}  // namespace csf
