#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "csf/verifier.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void emit(const nlohmann::json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot open " + out_path);
    os << j.dump(2) << "\n";
  }
}

csf::SymExpansion expand(const csf::HessenbergFunction& f, csf::Basis basis, bool with_t) {
  using csf::Basis;
  if (with_t && (basis == Basis::s || basis == Basis::h))
    throw CLI::ValidationError("--t is supported for the e and m bases only");
  switch (basis) {
    case Basis::s:
      return csf::schur_expansion(f);
    case Basis::h:
      if (f.bounce_number() <= 3) return csf::h_expansion_via_signed_sums(f);
      return csf::s_to_h(csf::schur_expansion(f));
    case Basis::e: {
      if (with_t) return csf::e_expansion_oracle(f, true);
      csf::SymExpansion h = f.bounce_number() <= 3
                                ? csf::h_expansion_via_signed_sums(f)
                                : csf::s_to_h(csf::schur_expansion(f));
      h.basis = Basis::e;
      return h;
    }
    case Basis::m: {
      csf::SymExpansion x;
      x.basis = Basis::m;
      for (auto& [lam, c] : csf::monomial_coefficients(f, with_t)) x.add(lam, c);
      return x;
    }
  }
  throw CLI::ValidationError("unknown basis");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic symmetric functions of unit interval graphs: expansions, "
               "tableau counts and coefficient certification"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string out_path;
  app.add_flag("--json", as_json, "emit JSON instead of text");
  app.add_option("--out", out_path, "write JSON output to this file");

  std::string f_str, shape_str, mu_str, basis_str = "s";
  int n = 0, bounce = 0, threads = 0;
  bool with_t = false, count_only = false;

  auto* list = app.add_subcommand("list", "list Hessenberg functions on [n]");
  list->add_option("--n", n, "ground set size")->required()->check(CLI::PositiveNumber);
  list->add_option("--bounce", bounce, "keep only this bounce number");

  auto* exp = app.add_subcommand("expand", "basis expansion of the chromatic symmetric "
                                           "function (e/m) or its omega image (s/h)");
  exp->add_option("--f", f_str, "function values, comma separated")->required();
  exp->add_option("--basis", basis_str, "e, h, s or m")->capture_default_str();
  exp->add_flag("--t", with_t, "grade by the ascent statistic (e/m only)");

  auto* tab = app.add_subcommand("tableaux", "enumerate tableaux of a shape");
  tab->add_option("--f", f_str)->required();
  tab->add_option("--shape", shape_str, "shape, comma separated")->required();
  tab->add_flag("--count-only", count_only, "print only the count");

  auto* ver = app.add_subcommand("verify", "certify all coefficients three ways");
  ver->add_option("--f", f_str, "a single function to certify");
  ver->add_option("--n", n, "certify every function with ground set up to n")
      ->check(CLI::PositiveNumber);
  ver->add_option("--bounce", bounce, "restrict to this bounce number");
  ver->add_option("--threads", threads, "worker threads (default: hardware)");

  auto* tr = app.add_subcommand("trace", "matching trace for one coefficient");
  tr->add_option("--f", f_str)->required();
  tr->add_option("--mu", mu_str, "target partition, comma separated")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (list->parsed()) {
      auto fns = csf::enumerate_hessenberg(
          n, bounce ? std::optional<int>(bounce) : std::nullopt);
      if (as_json || !out_path.empty()) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& f : fns) {
          nlohmann::json parts = nlohmann::json::array();
          for (auto [a, b] : f.bounce_data().parts) parts.push_back({a, b});
          j.push_back({{"f", f.values()}, {"bounce", f.bounce_number()}, {"parts", parts}});
        }
        emit(j, out_path);
      } else {
        for (const auto& f : fns)
          std::cout << f.to_string() << "  bounce " << f.bounce_number() << "\n";
        std::cout << fns.size() << " functions\n";
      }
      return 0;
    }

    if (exp->parsed()) {
      auto f = csf::HessenbergFunction::parse(f_str);
      auto x = expand(f, csf::parse_basis(basis_str), with_t);
      if (as_json || !out_path.empty())
        emit(x.to_json(), out_path);
      else
        std::cout << x.to_string() << "\n";
      return 0;
    }

    if (tab->parsed()) {
      auto f = csf::HessenbergFunction::parse(f_str);
      auto shape = csf::parse_csv_ints(shape_str);
      auto ts = csf::enumerate_tableaux(f, shape);
      if (as_json || !out_path.empty()) {
        nlohmann::json j = {{"f", f.values()},
                            {"shape", shape},
                            {"count", (long long)ts.size()}};
        if (!count_only) {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& t : ts) arr.push_back(t.to_string());
          j["tableaux"] = arr;
        }
        emit(j, out_path);
      } else {
        if (!count_only)
          for (const auto& t : ts) std::cout << t.to_string() << "\n";
        std::cout << ts.size() << "\n";
      }
      return 0;
    }

    if (ver->parsed()) {
      if (f_str.empty() == (n == 0))
        throw CLI::ValidationError("verify needs exactly one of --f and --n");
      if (!f_str.empty()) {
        auto cert = csf::verify_function(csf::HessenbergFunction::parse(f_str));
        if (as_json || !out_path.empty())
          emit(cert.to_json(), out_path);
        else
          std::cout << (cert.passed() ? "PASS " : "FAIL ") << f_str << "\n";
        return cert.passed() ? 0 : kExitFailure;
      }
      auto summary = csf::verify_range(
          n, bounce ? std::optional<int>(bounce) : std::nullopt, threads);
      if (as_json || !out_path.empty()) emit(summary.to_json(), out_path);
      std::cout << summary.table();
      return summary.failures == 0 ? 0 : kExitFailure;
    }

    if (tr->parsed()) {
      auto f = csf::HessenbergFunction::parse(f_str);
      auto mu = csf::parse_csv_ints(mu_str);
      csf::TableauCache cache(f);
      auto run = csf::run_case(cache, mu);
      nlohmann::json j = run.to_json(/*include_pairings=*/true);
      j["f"] = f.values();
      if ((int)csf::trim_zeros(mu).size() == 3 && f.bounce_number() == 3)
        j["diagram"] = csf::case_diagram(mu);
      emit(j, out_path);
      return run.ok() ? 0 : kExitFailure;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
