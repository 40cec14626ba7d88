#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "csf/verifier.hpp"

namespace py = pybind11;
using namespace csf;

namespace {

HessenbergFunction make_f(const std::vector<int>& values) {
  return HessenbergFunction::from_values(values);
}

py::object json_to_py(const nlohmann::json& j) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(j.dump());
}

std::string expand_str(const std::vector<int>& values, const std::string& basis) {
  auto f = make_f(values);
  Basis b = parse_basis(basis);
  switch (b) {
    case Basis::s:
      return schur_expansion(f).to_string();
    case Basis::h: {
      if (f.bounce_number() <= 3) return h_expansion_via_signed_sums(f).to_string();
      auto h = s_to_h(schur_expansion(f));
      std::erase_if(h.terms, [](const auto& kv) { return tpoly_is_zero(kv.second); });
      return h.to_string();
    }
    case Basis::e: {
      return e_expansion_oracle(f, false).to_string();
    }
    case Basis::m: {
      SymExpansion x;
      x.basis = Basis::m;
      x.terms = monomial_coefficients(f, false);
      std::erase_if(x.terms, [](const auto& kv) { return tpoly_is_zero(kv.second); });
      return x.to_string();
    }
  }
  throw std::invalid_argument("unknown basis");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Chromatic symmetric function expansions and injective matchings "
            "for natural unit interval orders";

  m.def("bounce_number", [](const std::vector<int>& v) { return make_f(v).bounce_number(); },
        py::arg("f"), "Bounce number of the function given by its value list.");

  m.def("graph_edges", [](const std::vector<int>& v) { return make_f(v).graph_edges(); },
        py::arg("f"), "Edges {i, j} with i < j <= f(i), 1-based.");

  m.def("enumerate_functions",
        [](int n, std::optional<int> bounce) {
          std::vector<std::vector<int>> out;
          for (const auto& f : enumerate_hessenberg(n, bounce)) out.push_back(f.values());
          return out;
        },
        py::arg("n"), py::arg("bounce") = std::nullopt,
        "Value lists of all non-decreasing f:[n]->[n] with f(i) >= i.");

  m.def("expand", &expand_str, py::arg("f"), py::arg("basis") = "s",
        "Expansion of the (co)chromatic symmetric function in basis s/h/e/m, "
        "as the canonical display string.");

  m.def("expansion",
        [](const std::vector<int>& v, const std::string& basis) {
          auto f = make_f(v);
          Basis b = parse_basis(basis);
          SymExpansion x;
          if (b == Basis::s) {
            x = schur_expansion(f);
          } else if (b == Basis::h) {
            if (f.bounce_number() <= 3) {
              x = h_expansion_via_signed_sums(f);
            } else {
              x = s_to_h(schur_expansion(f));
              std::erase_if(x.terms, [](const auto& kv) { return tpoly_is_zero(kv.second); });
            }
          } else if (b == Basis::e) {
            x = e_expansion_oracle(f, false);
          } else {
            x.basis = Basis::m;
            x.terms = monomial_coefficients(f, false);
            std::erase_if(x.terms, [](const auto& kv) { return tpoly_is_zero(kv.second); });
          }
          return json_to_py(x.to_json());
        },
        py::arg("f"), py::arg("basis") = "s",
        "Expansion as a JSON-like dict with basis and term list.");

  m.def("tableau_count",
        [](const std::vector<int>& v, const std::vector<int>& shape) {
          return count_d(make_f(v), shape).str();
        },
        py::arg("f"), py::arg("shape"),
        "Number of tableaux of the given shape, as a decimal string.");

  m.def("tableaux",
        [](const std::vector<int>& v, const std::vector<int>& shape) {
          std::vector<std::vector<std::vector<int>>> out;
          for (const auto& t : enumerate_tableaux(make_f(v), shape)) out.push_back(t.rows);
          return out;
        },
        py::arg("f"), py::arg("shape"), "All tableaux of the given shape, as row lists.");

  m.def("coefficient",
        [](const std::vector<int>& v, const std::vector<int>& mu) {
          return coefficient_c(make_f(v), mu).str();
        },
        py::arg("f"), py::arg("mu"),
        "h-coefficient c_mu computed by the signed tableau-count sums "
        "(bounce number at most 3).");

  m.def("verify",
        [](const std::vector<int>& v) { return json_to_py(verify_function(make_f(v)).to_json()); },
        py::arg("f"),
        "Certificate dict: every coefficient three ways plus injection checks.");

  m.def("verify_range",
        [](int n_max, std::optional<int> bounce, int threads, bool certificates) {
          return json_to_py(verify_range(n_max, bounce, threads).to_json(certificates));
        },
        py::arg("n_max"), py::arg("bounce") = std::nullopt, py::arg("threads") = 0,
        py::arg("certificates") = false,
        "Summary dict over all functions with n <= n_max.");

  m.def("trace",
        [](const std::vector<int>& v, const std::vector<int>& mu) {
          auto f = make_f(v);
          TableauCache cache(f);
          return json_to_py(run_case(cache, mu).to_json(true));
        },
        py::arg("f"), py::arg("mu"),
        "Full matching run for one coefficient, including every pairing.");

  m.def("oracle_crosscheck",
        [](const std::vector<int>& v) { return oracle_crosscheck(make_f(v)); }, py::arg("f"),
        "True iff the coloring, tableau and signed-sum routes agree as polynomials.");
}
