#include "csf/symfunc.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace csf {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::e: return "e";
    case Basis::h: return "h";
    case Basis::s: return "s";
    case Basis::m: return "m";
  }
  return "?";
}

Basis parse_basis(const std::string& s) {
  if (s == "e") return Basis::e;
  if (s == "h") return Basis::h;
  if (s == "s") return Basis::s;
  if (s == "m") return Basis::m;
  throw std::invalid_argument("unknown basis: " + s);
}

void SymExpansion::add(const Partition& lam, const TPoly& c) {
  if (tpoly_is_zero(c)) return;
  auto it = terms.find(lam);
  if (it == terms.end()) {
    terms.emplace(lam, c);
  } else {
    tpoly_add(it->second, c);
    if (tpoly_is_zero(it->second)) terms.erase(it);
  }
}

bool SymExpansion::all_t_free() const {
  for (const auto& [lam, c] : terms)
    if (c.size() > 1) return false;
  return true;
}

std::string SymExpansion::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [lam, c] : terms) {
    if (!out.empty()) out += " + ";
    std::string coeff;
    if (c.size() == 1) {
      coeff = c[0].str();
      if (coeff == "1") coeff.clear();
    } else {
      coeff = "(" + tpoly_to_string(c) + ")";
    }
    if (!coeff.empty()) coeff += " ";
    out += coeff + basis_name(basis) + "[" + format_csv(lam) + "]";
  }
  return out;
}

static nlohmann::json json_int(const Int& v) {
  if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max())
    return (int64_t)v;
  return v.str();
}

nlohmann::json SymExpansion::to_json() const {
  nlohmann::json out;
  out["basis"] = basis_name(basis);
  out["terms"] = nlohmann::json::array();
  for (const auto& [lam, c] : terms) {
    nlohmann::json t;
    t["partition"] = lam;
    if (c.size() <= 1) {
      t["coeff"] = json_int(c.empty() ? Int(0) : c[0]);
    } else {
      nlohmann::json ct = nlohmann::json::array();
      for (const Int& x : c) ct.push_back(json_int(x));
      t["coeff_t"] = ct;
    }
    out["terms"].push_back(t);
  }
  return out;
}

namespace {

// Permutation expansion of det(h_{a_i - i + j}) with negative subscripts
// pruned; a is the 1-based "diagonal" sequence.
void det_rec(const std::vector<int>& a, int row, uint32_t used_cols, int sign,
             std::vector<int>& subs, SymExpansion& out) {
  int l = (int)a.size();
  if (row == l) {
    Partition lam = subs;
    std::erase(lam, 0);
    std::sort(lam.rbegin(), lam.rend());
    out.add(lam, Int(sign));
    return;
  }
  for (int col = 0; col < l; ++col) {
    if ((used_cols >> col) & 1) continue;
    int sub = a[row] - (row + 1) + (col + 1);
    if (sub < 0) continue;
    // parity contribution: count of already-used columns greater than col
    int inv = 0;
    for (int c2 = col + 1; c2 < l; ++c2) inv += (used_cols >> c2) & 1;
    subs.push_back(sub);
    det_rec(a, row + 1, used_cols | (1u << col), inv % 2 ? -sign : sign, subs, out);
    subs.pop_back();
  }
}

SymExpansion jacobi_trudi_det(const std::vector<int>& a, Basis basis) {
  SymExpansion out;
  out.basis = basis;
  if (a.empty()) {
    out.add({}, Int(1));
    return out;
  }
  std::vector<int> subs;
  det_rec(a, 0, 0, 1, subs, out);
  return out;
}

}  // namespace

SymExpansion jacobi_trudi_h(const Partition& lam) { return jacobi_trudi_det(lam, Basis::h); }

SymExpansion jacobi_trudi_e(const Partition& lam) {
  return jacobi_trudi_det(conjugate(lam), Basis::e);
}

SymExpansion s_to_h(const SymExpansion& x) {
  if (x.basis != Basis::s) throw std::invalid_argument("s_to_h needs an s-expansion");
  SymExpansion out;
  out.basis = Basis::h;
  for (const auto& [lam, c] : x.terms) {
    SymExpansion jt = jacobi_trudi_h(lam);
    for (const auto& [mu, sgn] : jt.terms) {
      TPoly scaled = c;
      for (Int& v : scaled) v *= sgn[0];
      out.add(mu, scaled);
    }
  }
  return out;
}

SymExpansion omega_on_s(const SymExpansion& x) {
  if (x.basis != Basis::s) throw std::invalid_argument("omega_on_s needs an s-expansion");
  SymExpansion out;
  out.basis = Basis::s;
  for (const auto& [lam, c] : x.terms) out.add(conjugate(lam), c);
  return out;
}

void OraclePolynomial::add(const std::vector<int>& expo, const TPoly& c) {
  if (tpoly_is_zero(c)) return;
  auto it = terms.find(expo);
  if (it == terms.end()) {
    terms.emplace(expo, c);
  } else {
    tpoly_add(it->second, c);
    if (tpoly_is_zero(it->second)) terms.erase(it);
  }
}

namespace {

struct ColoringEnum {
  const HessenbergFunction& f;
  int n, num_vars;
  bool with_t;
  long long budget, visited = 0;
  std::vector<uint64_t> smaller_nbr;  // bitmask of neighbours j < i (1-based bits)
  std::vector<int> color;             // color of vertex i at index i-1
  std::vector<int> counts;            // usage count per color

  // leaf callback gets (counts, ascents)
  template <class Leaf>
  void run(int v, int asc, Leaf&& leaf) {
    if (v > n) {
      if (++visited > budget) throw std::length_error("coloring budget exceeded");
      leaf(counts, asc);
      return;
    }
    for (int c = 0; c < num_vars; ++c) {
      bool ok = true;
      int dasc = 0;
      uint64_t nb = smaller_nbr[v - 1];
      while (nb && ok) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (color[u - 1] == c) ok = false;
        else if (with_t && color[u - 1] < c) ++dasc;
      }
      if (!ok) continue;
      color[v - 1] = c;
      ++counts[c];
      run(v + 1, asc + dasc, leaf);
      --counts[c];
    }
  }
};

ColoringEnum make_enum(const HessenbergFunction& f, int num_vars, bool with_t,
                       long long budget) {
  ColoringEnum e{f, f.n(), num_vars, with_t, budget};
  e.smaller_nbr.assign(e.n, 0);
  for (auto [i, j] : f.graph_edges()) e.smaller_nbr[j - 1] |= uint64_t(1) << i;
  e.color.assign(e.n, -1);
  e.counts.assign(num_vars, 0);
  return e;
}

void bump(TPoly& p, int k) {
  if ((int)p.size() <= k) p.resize(k + 1);
  p[k] += 1;
}

}  // namespace

OraclePolynomial brute_chromatic(const HessenbergFunction& f, int num_vars, bool with_t,
                                 long long budget) {
  if (num_vars < 1) throw std::invalid_argument("need at least one color");
  OraclePolynomial out;
  out.num_vars = num_vars;
  auto e = make_enum(f, num_vars, with_t, budget);
  e.run(1, 0, [&](const std::vector<int>& counts, int asc) {
    bump(out.terms[counts], with_t ? asc : 0);
  });
  return out;
}

PartitionMap<TPoly> coloring_type_counts(const HessenbergFunction& f, int num_vars,
                                         bool with_t, long long budget) {
  PartitionMap<TPoly> out;
  auto e = make_enum(f, num_vars, with_t, budget);
  std::vector<int> key;
  e.run(1, 0, [&](const std::vector<int>& counts, int asc) {
    key.assign(counts.begin(), counts.end());
    std::sort(key.rbegin(), key.rend());
    while (!key.empty() && key.back() == 0) key.pop_back();
    bump(out[key], with_t ? asc : 0);
  });
  return out;
}

namespace {

// Full monomial expansion of e_k in num_vars variables (as exponent maps).
std::map<std::vector<int>, Int> monomials_of_ek(int k, int num_vars) {
  std::map<std::vector<int>, Int> out;
  std::vector<int> expo(num_vars, 0);
  // iterate k-subsets of the variables
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > num_vars) return out;
  while (true) {
    std::fill(expo.begin(), expo.end(), 0);
    for (int i : idx) expo[i] = 1;
    out[expo] = 1;
    int i = k - 1;
    while (i >= 0 && idx[i] == num_vars - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::map<std::vector<int>, Int> monomials_of_hk(int k, int num_vars) {
  std::map<std::vector<int>, Int> out;
  std::vector<int> expo(num_vars, 0);
  // multisets of size k over num_vars variables
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (var == num_vars - 1) {
      expo[var] = rem;
      out[expo] = 1;
      expo[var] = 0;
      return;
    }
    for (int c = 0; c <= rem; ++c) {
      expo[var] = c;
      self(self, var + 1, rem - c);
    }
    expo[var] = 0;
  };
  if (num_vars > 0) rec(rec, 0, k);
  return out;
}

std::map<std::vector<int>, Int> poly_mul(const std::map<std::vector<int>, Int>& a,
                                         const std::map<std::vector<int>, Int>& b) {
  std::map<std::vector<int>, Int> out;
  std::vector<int> expo;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      expo = ea;
      for (size_t i = 0; i < expo.size(); ++i) expo[i] += eb[i];
      out[expo] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::map<std::vector<int>, Int> monomials_of_product(const Partition& lam, int num_vars,
                                                     bool elementary) {
  std::map<std::vector<int>, Int> acc{{std::vector<int>(num_vars, 0), Int(1)}};
  for (int part : lam)
    acc = poly_mul(acc, elementary ? monomials_of_ek(part, num_vars)
                                   : monomials_of_hk(part, num_vars));
  return acc;
}

std::map<std::vector<int>, Int> monomials_of_mlam(const Partition& lam, int num_vars) {
  std::map<std::vector<int>, Int> out;
  if ((int)lam.size() > num_vars) return out;
  std::vector<int> expo(lam.begin(), lam.end());
  expo.resize(num_vars, 0);
  std::sort(expo.begin(), expo.end());
  do {
    out[expo] = 1;
  } while (std::next_permutation(expo.begin(), expo.end()));
  return out;
}

}  // namespace

OraclePolynomial expansion_to_polynomial(const SymExpansion& x, int num_vars) {
  const SymExpansion* src = &x;
  SymExpansion converted;
  if (x.basis == Basis::s) {
    converted = s_to_h(x);
    src = &converted;
  }
  OraclePolynomial out;
  out.num_vars = num_vars;
  for (const auto& [lam, c] : src->terms) {
    std::map<std::vector<int>, Int> mono =
        src->basis == Basis::m ? monomials_of_mlam(lam, num_vars)
                               : monomials_of_product(lam, num_vars, src->basis == Basis::e);
    for (const auto& [expo, coeff] : mono) {
      TPoly scaled = c;
      for (Int& v : scaled) v *= coeff;
      out.add(expo, scaled);
    }
  }
  return out;
}

EPeelTable::EPeelTable(int n) : n_(n) {
  order_ = partitions_of(n, n);
  for (const Partition& lam : order_) {
    auto mono = monomials_of_product(lam, n, /*elementary=*/true);
    PartitionMap<Int> row;
    for (const Partition& nu : order_) {
      auto it = mono.find(pad_to(nu, n));
      if (it != mono.end()) row[nu] = it->second;
    }
    ecoeff_[lam] = std::move(row);
  }
}

const Int& EPeelTable::e_monomial_coeff(const Partition& lam, const Partition& nu) const {
  static const Int zero = 0;
  auto it = ecoeff_.find(lam);
  if (it == ecoeff_.end()) return zero;
  auto jt = it->second.find(nu);
  return jt == it->second.end() ? zero : jt->second;
}

PartitionMap<TPoly> EPeelTable::peel(PartitionMap<TPoly> m_coeffs) const {
  PartitionMap<TPoly> out;
  // e_lam = m_{lam'} + (dominance-lower monomials); descending lexicographic
  // order refines dominance, so peel top down.
  for (const Partition& mu : order_) {
    auto it = m_coeffs.find(mu);
    if (it == m_coeffs.end() || tpoly_is_zero(it->second)) continue;
    TPoly b = it->second;
    Partition lam = conjugate(mu);
    out[lam] = b;
    for (const auto& [nu, ec] : ecoeff_.at(lam)) {
      TPoly delta = b;
      for (Int& v : delta) v *= ec;
      TPoly& slot = m_coeffs[nu];
      for (size_t i = 0; i < delta.size(); ++i) {
        if (slot.size() <= i) slot.resize(i + 1);
        slot[i] -= delta[i];
      }
      tpoly_trim(slot);
    }
  }
  for (const auto& [nu, rem] : m_coeffs)
    if (!tpoly_is_zero(rem))
      throw std::runtime_error("monomial coefficients are not symmetric-triangular");
  return out;
}

namespace {

// Counts proper colorings whose i-th color class has exactly lam[i]
// vertices, by layering independent sets over a subset DP.
Int colorings_with_class_sizes(const std::vector<std::vector<uint32_t>>& indep_by_size,
                               const Partition& lam, int n) {
  std::vector<Int> ways(size_t(1) << n, 0);
  ways[0] = 1;
  for (int part : lam) {
    std::vector<Int> next(size_t(1) << n, 0);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (ways[mask] == 0) continue;
      for (uint32_t ind : indep_by_size[part])
        if ((ind & mask) == 0) next[mask | ind] += ways[mask];
    }
    ways = std::move(next);
  }
  return ways[(size_t(1) << n) - 1];
}

}  // namespace

PartitionMap<TPoly> monomial_coefficients(const HessenbergFunction& f, bool with_t,
                                          long long budget) {
  int n = f.n();
  PartitionMap<TPoly> out;
  if (with_t) {
    auto buckets = coloring_type_counts(f, n, with_t, budget);
    for (auto& [lam, cnt] : buckets) {
      Int a = arrangement_count(lam, n);
      if (!tpoly_divide_exact(cnt, a))
        throw std::runtime_error("coloring bucket not divisible by arrangement count");
      out[lam] = std::move(cnt);
    }
    return out;
  }
  if (n > 20) throw std::length_error("subset DP limited to n <= 20");
  // adjacency bitmasks, then the independent sets grouped by size
  std::vector<uint32_t> adj(n, 0);
  for (auto [i, j] : f.graph_edges()) {
    adj[i - 1] |= 1u << (j - 1);
    adj[j - 1] |= 1u << (i - 1);
  }
  std::vector<std::vector<uint32_t>> indep_by_size(n + 1);
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int v = 0; ok && v < n; ++v)
      if ((mask >> v) & 1u) ok = (adj[v] & mask) == 0;
    if (ok && mask) indep_by_size[std::popcount(mask)].push_back(mask);
  }
  for (const Partition& lam : partitions_of(n, n)) {
    Int c = colorings_with_class_sizes(indep_by_size, lam, n);
    if (c != 0) out[lam] = tpoly_const(c);
  }
  return out;
}

SymExpansion e_expansion_oracle(const HessenbergFunction& f, bool with_t, long long budget) {
  EPeelTable table(f.n());
  auto coeffs = table.peel(monomial_coefficients(f, with_t, budget));
  SymExpansion out;
  out.basis = Basis::e;
  for (auto& [lam, c] : coeffs) out.add(lam, c);
  return out;
}

}  // namespace csf
