#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "csf/partition.hpp"

namespace csf {

// Validation failures for the defining inequalities i <= f(i) <= n and
// f(i) <= f(i+1).
enum class HessenbergError { EmptyInput, OutOfRange, BelowDiagonal, NotNonDecreasing };

struct InvalidHessenberg : std::invalid_argument {
  HessenbergError kind;
  InvalidHessenberg(HessenbergError k, const std::string& msg)
      : std::invalid_argument(msg), kind(k) {}
};

// Decomposition of [n] into the intervals cut out by the bounce path of
// the area below the function graph.
struct BounceData {
  int bounce_number = 0;
  // parts[l] = {first, last} labels (1-based, inclusive) of P_{l+1}.
  std::vector<std::pair<int, int>> parts;
  int part_of(int i) const;  // 1-based part index containing label i
};

// A non-decreasing function f:[n] -> [n] with f(i) >= i, stored 1-based.
// Labels are always 1-based in this API.
class HessenbergFunction {
 public:
  static HessenbergFunction from_values(const std::vector<int>& values);
  static HessenbergFunction parse(const std::string& csv);  // "2,3,4,4"

  int n() const { return n_; }
  int value(int i) const;  // f(i)
  const std::vector<int>& values() const { return values_; }
  std::string to_string() const { return format_csv(values_); }

  // i comes strictly before j in the induced order, i.e. f(i) < j.
  bool precedes(int i, int j) const {
    check_label(i);
    check_label(j);
    return (succ_[i - 1] >> (j - 1)) & 1u;
  }
  bool comparable(int i, int j) const { return precedes(i, j) || precedes(j, i); }

  // Unit square in row i, column j (i < j) lies below the function graph;
  // equivalently {i, j} is an edge of the associated graph.
  bool square_below_path(int i, int j) const;

  // Edges {i, j} with i < j and j <= f(i), lexicographically sorted.
  std::vector<std::pair<int, int>> graph_edges() const;

  const BounceData& bounce_data() const { return bounce_; }
  int bounce_number() const { return bounce_.bounce_number; }

  bool operator==(const HessenbergFunction& o) const { return values_ == o.values_; }

 private:
  explicit HessenbergFunction(std::vector<int> values);
  void check_label(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("label out of range");
  }

  int n_;
  std::vector<int> values_;
  std::vector<uint64_t> succ_;  // succ_[i-1] bit (j-1): i precedes j
  BounceData bounce_;
};

// All such functions on [n] in lexicographic order of their value vectors;
// optionally filtered by bounce number.
std::vector<HessenbergFunction> enumerate_hessenberg(int n,
                                                     std::optional<int> bounce = std::nullopt);

}  // namespace csf
