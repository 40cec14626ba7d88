#pragma once

#include <nlohmann/json.hpp>

#include "csf/tableaux.hpp"

namespace csf {

struct BounceTooLarge : std::domain_error {
  using std::domain_error::domain_error;
};

// Composition with an attached sign, e.g. an entry of the signed set of a
// partition.
struct SignedComposition {
  Composition parts;  // always 3 entries here, possibly negative
  int sign = 1;       // +1 or -1
  bool operator==(const SignedComposition&) const = default;
};

// The six signed compositions attached to a partition with at most three
// parts; signs (+,-,-,+,+,-) in this order.
std::array<SignedComposition, 6> signed_set_S(const Partition& lam);

enum class CaseTag { I, II, III, IV };
std::string case_name(CaseTag t);

// Case split on (mu1 == mu2+1?, mu2 == mu3+1?) with mu padded to 3 parts.
CaseTag case_of(const Partition& mu);

// Compositions alpha that sort to mu and appear in some signed set:
// always (mu1,mu2,mu3); plus (mu2,mu1,mu3) when mu1==mu2+1; plus
// (mu1,mu3,mu2) when mu2==mu3+1.
std::vector<Composition> c_set(const Partition& mu);

// Partitions lam of n (length <= 3) whose signed set contains alpha, with
// the sign of alpha in that set.
std::vector<std::pair<Partition, int>> k_set(const Composition& alpha, int n);

// Coefficient of h_mu in omega X_{G(f)} computed as the signed sum of
// tableau counts; requires bounce number <= 3.
Int coefficient_c(const HessenbergFunction& f, const Partition& mu,
                  TableauCache* cache = nullptr);

// All h-coefficients at once through the signed sums.
SymExpansion h_expansion_via_signed_sums(const HessenbergFunction& f,
                                         TableauCache* cache = nullptr);

// Diagram of the partitions contributing to c_mu: nodes carry composition,
// sign, multiplicity and an obsolete flag (non-partition), arrows carry the
// row move (j -> i, k cells).
nlohmann::json case_diagram(const Partition& mu);

}  // namespace csf
