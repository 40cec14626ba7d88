#pragma once

#include <functional>
#include <optional>

#include "csf/coefficients.hpp"

namespace csf {

struct PreconditionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CaseMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BounceMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct MapTrace {
  std::string map;      // "sigma31^1", "sigma31^2", "phi1", "phi2", "phi", ...
  std::string subcase;  // "<2-1>", "(3-2)", "(1)R2:2(0)", ...
  FTableau input;
  FTableau output;
  nlohmann::json to_json() const;
};

// A tableau set with a sigma_{3->1} image subtracted.
struct TildeSet {
  Composition shape;
  int sign = 1;
  std::vector<FTableau> members;  // canonical (sorted) order
  std::string removed_via;
};

// Literal set difference T(target) - sigma_{3->1}(T(removed_source)); the
// subtracted pairings are appended to *pairings when given, and any image
// falling outside the target set is reported into *problems.
TildeSet tilde_set(TableauCache& cache, const Composition& target_shape,
                   const Composition& removed_source_shape, int move_width, int sign,
                   std::vector<MapTrace>* pairings = nullptr,
                   std::vector<std::string>* problems = nullptr);

// Subcase tag of the two-row row-merge map: kind 1 is the plain append; kind
// 2 carries the swap depth i (i = TAIL_INF denotes the unbounded subcase).
inline constexpr int TAIL_INF = 1 << 20;
struct Phi1Tag {
  int kind = 1;  // 1 or 2
  int i = 0;     // meaningful when kind == 2
  bool operator==(const Phi1Tag&) const = default;
};

struct SubcaseResult {
  FTableau out;
  std::string subcase;
  std::optional<Phi1Tag> tag;  // filled by sigma21_tilde
};

// Row-merge injection on reduced shape (m+k, m) -> (m+k+1, m-1); the input
// must satisfy the tilde-domain entry condition (first row-2 entry does not
// precede the last row-1 entry).
SubcaseResult sigma21_tilde(const HessenbergFunction& f, const FTableau& s);

// Row-merge injection on reduced shape (m+k+1, m-2, 1) -> (m+k+1, m-1), m>=3.
SubcaseResult sigma32_tilde(const HessenbergFunction& f, const FTableau& s);

// Classifier for membership in the traced image of the first-phase map:
// returns the recorded subcase tag when the candidate equals some traced
// image, nothing otherwise.
using TPlusClassifier = std::function<std::optional<Phi1Tag>(const FTableau&)>;

struct Phi2Result {
  FTableau out;
  std::string subcase;
  // intermediates the construction declares to be f-tableaux, for checking
  std::vector<std::pair<std::string, FTableau>> intermediates;
};

// Second-phase map on reduced shape (m+k+1, m-2, 1), rerouting around the
// traced image of the first-phase map (the classifier decides membership).
// Structural violations of the claimed side conditions are reported into
// *problems instead of thrown.
Phi2Result phi2_case1(const HessenbergFunction& f, const FTableau& s,
                      const TPlusClassifier& classify,
                      std::vector<std::string>* problems = nullptr);

// Case II map on reduced shape (m+2, m, 1) -> (m+2, m+1).
SubcaseResult phi_case2(const HessenbergFunction& f, const FTableau& s);

// Case III map on reduced shape (2+k, 2) -> (3+k, 1).
SubcaseResult phi_case3(const HessenbergFunction& f, const FTableau& t);

// Case IV pair on a full tableau whose last column has height 3.
std::pair<FTableau, FTableau> phi_case4(const FTableau& t);

// Bounce-2 map: moves the last row-2 entry to the end of row 1.
FTableau phi_bounce2(const HessenbergFunction& f, const FTableau& t);

struct InjectionChecks {
  bool well_defined = true;
  bool injective = true;
  bool disjoint = true;
  bool codomain_ok = true;
  bool all() const { return well_defined && injective && disjoint && codomain_ok; }
};

// Complete matching run for one (f, mu): all cancellations, the fine maps,
// and the unmatched positive tableaux whose count certifies the coefficient.
struct CaseRun {
  Partition mu;
  std::string mode;  // "I", "II", "III", "IV", "bounce2", "trivial"
  std::vector<MapTrace> pairings;
  std::vector<FTableau> residual_positive;
  InjectionChecks checks;
  std::vector<std::string> problems;
  std::vector<std::pair<std::string, Int>> set_sizes;

  Int residual() const { return (Int)residual_positive.size(); }
  bool ok() const { return checks.all() && problems.empty(); }
  nlohmann::json to_json(bool include_pairings) const;
};

// Dispatches on the bounce number of f and the case of mu.
CaseRun run_case(TableauCache& cache, const Partition& mu);

}  // namespace csf
