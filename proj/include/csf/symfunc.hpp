#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "csf/hessenberg.hpp"
#include "csf/partition.hpp"

namespace csf {

enum class Basis { e, h, s, m };

std::string basis_name(Basis b);
Basis parse_basis(const std::string& s);

// A finite integer combination of basis elements indexed by partitions,
// with coefficients that may carry a t-grading.
struct SymExpansion {
  Basis basis = Basis::s;
  PartitionMap<TPoly> terms;

  void add(const Partition& lam, const TPoly& c);
  void add(const Partition& lam, const Int& c) { add(lam, tpoly_const(c)); }

  bool operator==(const SymExpansion& o) const = default;
  bool all_t_free() const;

  // "8 s[4] + 4 s[3,1] + 2 s[2,2]"; terms in descending lexicographic
  // order of the indexing partition.
  std::string to_string() const;
  nlohmann::json to_json() const;
};

// Signed h-expansion of the Schur function s_lam via the determinant
// det(h_{lam_i - i + j}).
SymExpansion jacobi_trudi_h(const Partition& lam);
// e-form determinant det(e_{lam'_i - i + j}), also expanding s_lam.
SymExpansion jacobi_trudi_e(const Partition& lam);

// Expands every s_lam term through jacobi_trudi_h; input must be s-basis.
SymExpansion s_to_h(const SymExpansion& x);
// Image under the involution swapping e and h: s_lam -> s_{lam'}.
SymExpansion omega_on_s(const SymExpansion& x);

// Explicit polynomial in num_vars commuting variables, keyed by exponent
// vector, coefficients in Z[t].
struct OraclePolynomial {
  int num_vars = 0;
  std::map<std::vector<int>, TPoly> terms;

  bool operator==(const OraclePolynomial& o) const = default;
  void add(const std::vector<int>& expo, const TPoly& c);
};

// Brute-force chromatic polynomial of the graph of f in num_vars colors:
// sum over proper colorings kappa of t^{asc(kappa)} x_{kappa(1)}...x_{kappa(n)}.
// Enumeration visits only proper colorings (colors filtered per vertex);
// throws std::length_error if the visited leaf count would exceed budget.
OraclePolynomial brute_chromatic(const HessenbergFunction& f, int num_vars, bool with_t,
                                 long long budget = 400000000LL);

// Evaluates an e/h/s/m expansion as an explicit polynomial.
OraclePolynomial expansion_to_polynomial(const SymExpansion& x, int num_vars);

// Proper-coloring counts bucketed by the sorted color-multiplicity
// partition, t-graded by ascents.  Equivalent information to
// brute_chromatic for a symmetric function but far smaller.
PartitionMap<TPoly> coloring_type_counts(const HessenbergFunction& f, int num_vars,
                                         bool with_t, long long budget = 400000000LL);

// Extracts e-basis coefficients from monomial coefficients (keyed by
// partitions of n) by peeling along dominance order; throws
// std::runtime_error if a nonzero remainder survives.
class EPeelTable {
 public:
  explicit EPeelTable(int n);
  PartitionMap<TPoly> peel(PartitionMap<TPoly> m_coeffs) const;
  const Int& e_monomial_coeff(const Partition& lam, const Partition& nu) const;

 private:
  int n_;
  std::vector<Partition> order_;                    // descending lexicographic
  PartitionMap<PartitionMap<Int>> ecoeff_;          // [lam][nu] coeff of x^nu in e_lam
};

// Monomial coefficients of X_{G(f)} restricted to partition exponents,
// derived from coloring_type_counts by exact division.
PartitionMap<TPoly> monomial_coefficients(const HessenbergFunction& f, bool with_t,
                                          long long budget = 400000000LL);

// e-basis expansion of X_{G(f)} computed from colorings alone (no tableau
// machinery); with_t grades by ascents.
SymExpansion e_expansion_oracle(const HessenbergFunction& f, bool with_t,
                                long long budget = 400000000LL);

// h-coefficients of omega X_{G(f)} via the Schur expansion counted by
// f-tableaux (declared here, defined with the tableau machinery).
SymExpansion coefficients_in_h(const HessenbergFunction& f);

}  // namespace csf
