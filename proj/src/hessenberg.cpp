#include "csf/hessenberg.hpp"

namespace csf {

int BounceData::part_of(int i) const {
  for (size_t l = 0; l < parts.size(); ++l)
    if (i >= parts[l].first && i <= parts[l].second) return (int)l + 1;
  throw std::out_of_range("label outside all bounce parts");
}

HessenbergFunction::HessenbergFunction(std::vector<int> values)
    : n_((int)values.size()), values_(std::move(values)) {
  succ_.assign(n_, 0);
  for (int i = 1; i <= n_; ++i)
    for (int j = values_[i - 1] + 1; j <= n_; ++j) succ_[i - 1] |= uint64_t(1) << (j - 1);
  int start = 1;
  while (start <= n_) {
    int end = values_[start - 1];
    bounce_.parts.emplace_back(start, end);
    start = end + 1;
  }
  bounce_.bounce_number = (int)bounce_.parts.size();
}

HessenbergFunction HessenbergFunction::from_values(const std::vector<int>& values) {
  if (values.empty())
    throw InvalidHessenberg(HessenbergError::EmptyInput, "empty value list");
  int n = (int)values.size();
  if (n > 60) throw InvalidHessenberg(HessenbergError::OutOfRange, "n too large");
  for (int i = 1; i <= n; ++i) {
    if (values[i - 1] > n)
      throw InvalidHessenberg(HessenbergError::OutOfRange,
                              "f(" + std::to_string(i) + ") exceeds n");
    if (values[i - 1] < i)
      throw InvalidHessenberg(HessenbergError::BelowDiagonal,
                              "f(" + std::to_string(i) + ") below diagonal");
    if (i > 1 && values[i - 1] < values[i - 2])
      throw InvalidHessenberg(HessenbergError::NotNonDecreasing,
                              "values decrease at position " + std::to_string(i));
  }
  return HessenbergFunction(values);
}

HessenbergFunction HessenbergFunction::parse(const std::string& csv) {
  return from_values(parse_csv_ints(csv));
}

int HessenbergFunction::value(int i) const {
  check_label(i);
  return values_[i - 1];
}

bool HessenbergFunction::square_below_path(int i, int j) const {
  check_label(i);
  check_label(j);
  if (i >= j) return false;
  return j <= values_[i - 1];
}

std::vector<std::pair<int, int>> HessenbergFunction::graph_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= values_[i - 1]; ++j) out.emplace_back(i, j);
  return out;
}

static void enum_rec(int n, int i, std::vector<int>& vals,
                     std::optional<int> bounce, std::vector<HessenbergFunction>& out) {
  if (i > n) {
    HessenbergFunction f = HessenbergFunction::from_values(vals);
    if (!bounce || f.bounce_number() == *bounce) out.push_back(std::move(f));
    return;
  }
  int lo = std::max(i, i > 1 ? vals[i - 2] : 1);
  for (int v = lo; v <= n; ++v) {
    vals[i - 1] = v;
    enum_rec(n, i + 1, vals, bounce, out);
  }
}

std::vector<HessenbergFunction> enumerate_hessenberg(int n, std::optional<int> bounce) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<int> vals(n);
  std::vector<HessenbergFunction> out;
  enum_rec(n, 1, vals, bounce, out);
  return out;
}

}  // namespace csf
