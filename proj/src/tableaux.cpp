#include "csf/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace csf {

Composition FTableau::shape() const {
  Composition s;
  s.reserve(rows.size());
  for (const auto& r : rows) s.push_back((int)r.size());
  return s;
}

int FTableau::size() const {
  int n = 0;
  for (const auto& r : rows) n += (int)r.size();
  return n;
}

std::string FTableau::to_string() const {
  std::string out;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ';';
    out += format_csv(rows[i]);
  }
  return out;
}

FTableau FTableau::parse(const std::string& s) {
  FTableau t;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, ';')) t.rows.push_back(parse_csv_ints(row));
  if (t.rows.empty()) throw std::invalid_argument("empty tableau text");
  return t;
}

bool is_f_tableau(const HessenbergFunction& f, const FTableau& t) {
  int n = f.n();
  std::vector<char> seen(n + 1, 0);
  int total = 0;
  for (const auto& row : t.rows) {
    for (int x : row) {
      if (x < 1 || x > n || seen[x]) return false;
      seen[x] = 1;
      ++total;
    }
  }
  if (total != n) return false;
  for (size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    for (size_t c = 0; c < row.size(); ++c) {
      if (c > 0 && f.precedes(row[c], row[c - 1])) return false;
      if (r > 0 && c < t.rows[r - 1].size() && !f.precedes(t.rows[r - 1][c], row[c]))
        return false;
      // a cell with nothing directly above it (beyond the first row) would
      // mean the shape is not left-justified rows of a diagram; allowed here,
      // column condition only applies where both cells exist
    }
  }
  return true;
}

namespace {

// Column-major backtracking; cells visited column by column, top to bottom.
struct Enumerator {
  const HessenbergFunction& f;
  const Composition& shape;
  std::vector<std::pair<int, int>> cells;  // (row, col), 0-based
  FTableau t;
  uint64_t used = 0;
  std::vector<FTableau>* out;

  void run(size_t k) {
    if (k == cells.size()) {
      out->push_back(t);
      return;
    }
    auto [r, c] = cells[k];
    for (int x = 1; x <= f.n(); ++x) {
      if ((used >> x) & 1) continue;
      if (c > 0 && f.precedes(x, t.rows[r][c - 1])) continue;
      if (r > 0 && c < (int)t.rows[r - 1].size() && !f.precedes(t.rows[r - 1][c], x)) continue;
      t.rows[r][c] = x;
      used |= uint64_t(1) << x;
      run(k + 1);
      used &= ~(uint64_t(1) << x);
    }
  }
};

}  // namespace

std::vector<FTableau> enumerate_tableaux(const HessenbergFunction& f, const Composition& shape) {
  std::vector<FTableau> out;
  Composition sh = shape;
  while (!sh.empty() && sh.back() == 0) sh.pop_back();
  if (!is_partition_shape(sh)) return out;
  if (weight(sh) != f.n()) return out;
  if (sh.empty()) return out;

  Enumerator e{f, sh, {}, {}, 0, &out};
  e.t.rows.resize(sh.size());
  for (size_t r = 0; r < sh.size(); ++r) e.t.rows[r].assign(sh[r], 0);
  for (int c = 0; c < sh[0]; ++c)
    for (size_t r = 0; r < sh.size(); ++r)
      if (c < sh[r]) e.cells.emplace_back((int)r, c);
  e.run(0);
  std::sort(out.begin(), out.end());
  return out;
}

Int count_d(const HessenbergFunction& f, const Composition& shape) {
  return (Int)enumerate_tableaux(f, shape).size();
}

SymExpansion schur_expansion(const HessenbergFunction& f) {
  SymExpansion x;
  x.basis = Basis::s;
  for (const Partition& lam : partitions_of(f.n(), f.bounce_number())) {
    Int d = count_d(f, lam);
    if (d != 0) x.add(lam, d);
  }
  return x;
}

SymExpansion coefficients_in_h(const HessenbergFunction& f) {
  return s_to_h(schur_expansion(f));
}

FTableau sigma_move(const FTableau& t, int from_row, int to_row, int width) {
  if (from_row < 1 || from_row > (int)t.rows.size() || to_row < 1 ||
      to_row > (int)t.rows.size() || from_row == to_row)
    throw std::invalid_argument("bad rows for sigma move");
  if (width < 1 || width > (int)t.rows[from_row - 1].size())
    throw std::invalid_argument("bad width for sigma move");
  FTableau out = t;
  auto& src = out.rows[from_row - 1];
  auto& dst = out.rows[to_row - 1];
  dst.insert(dst.end(), src.end() - width, src.end());
  src.erase(src.end() - width, src.end());
  if (src.empty()) out.rows.erase(out.rows.begin() + (from_row - 1));
  return out;
}

std::pair<FTableau, FTableau> split_left(const FTableau& t, int m) {
  FTableau left, right;
  for (const auto& row : t.rows) {
    int cut = std::min<int>(m, (int)row.size());
    left.rows.emplace_back(row.begin(), row.begin() + cut);
    right.rows.emplace_back(row.begin() + cut, row.end());
  }
  while (!left.rows.empty() && left.rows.back().empty()) left.rows.pop_back();
  while (!right.rows.empty() && right.rows.back().empty()) right.rows.pop_back();
  return {left, right};
}

FTableau concat_tableaux(const FTableau& r, const FTableau& s) {
  FTableau out = r;
  if (s.rows.size() > out.rows.size()) out.rows.resize(s.rows.size());
  for (size_t i = 0; i < s.rows.size(); ++i)
    out.rows[i].insert(out.rows[i].end(), s.rows[i].begin(), s.rows[i].end());
  while (!out.rows.empty() && out.rows.back().empty()) out.rows.pop_back();
  return out;
}

const std::vector<FTableau>& TableauCache::set_of(const Composition& shape) {
  Composition key = shape;
  while (!key.empty() && key.back() == 0) key.pop_back();
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, enumerate_tableaux(f_, key)).first;
  return it->second;
}

}  // namespace csf
