#include "csf/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace csf {

bool is_weakly_decreasing(const Composition& a) {
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] > a[i - 1]) return false;
  return true;
}

bool is_partition_shape(const Composition& a) {
  if (!is_weakly_decreasing(a)) return false;
  for (int x : a)
    if (x < 0) return false;
  return true;
}

Partition trim_zeros(Composition a) {
  if (!is_partition_shape(a)) throw std::invalid_argument("not a partition shape: " + format_csv(a));
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int weight(const Composition& a) {
  int s = 0;
  for (int x : a) s += x;
  return s;
}

Partition conjugate(const Partition& lam) {
  if (lam.empty()) return {};
  Partition out(lam[0], 0);
  for (int part : lam)
    for (int j = 0; j < part; ++j) ++out[j];
  return out;
}

Composition pad_to(const Partition& lam, int len) {
  Composition out(lam.begin(), lam.end());
  while (!out.empty() && out.back() == 0) out.pop_back();
  if ((int)out.size() > len) throw std::invalid_argument("partition longer than pad length");
  out.resize(len, 0);
  return out;
}

static void partitions_rec(int n, int max_part, int max_len, Partition& cur,
                           std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n, int max_len) {
  std::vector<Partition> out;
  Partition cur;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  partitions_rec(n, n, max_len, cur, out);
  return out;  // recursion emits descending lexicographic order already
}

Composition parse_csv_ints(const std::string& s) {
  Composition out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer list: " + s);
    }
    while (pos < tok.size() && std::isspace((unsigned char)tok[pos])) ++pos;
    if (pos != tok.size()) throw std::invalid_argument("bad integer list: " + s);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::string format_csv(const Composition& a) {
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s;
}

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int arrangement_count(const Partition& lam, int n) {
  Int denom = factorial(n - (int)lam.size());  // multiplicity of the part 0
  size_t i = 0;
  while (i < lam.size()) {
    size_t j = i;
    while (j < lam.size() && lam[j] == lam[i]) ++j;
    denom *= factorial((int)(j - i));
    i = j;
  }
  return factorial(n) / denom;
}

std::string tpoly_to_string(const TPoly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    if (!s.empty()) s += " + ";
    if (k == 0)
      s += p[k].str();
    else if (p[k] == 1)
      s += "t" + (k > 1 ? "^" + std::to_string(k) : "");
    else
      s += p[k].str() + "*t" + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return s;
}

}  // namespace csf
