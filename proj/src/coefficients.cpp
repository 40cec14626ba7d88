#include "csf/coefficients.hpp"

#include <algorithm>

namespace csf {

namespace {

Composition pad3(const Partition& p) {
  if ((int)p.size() > 3) throw std::invalid_argument("partition has more than 3 parts");
  return pad_to(p, 3);
}

bool is_par3(const Composition& a) {
  return a.size() == 3 && a[0] >= a[1] && a[1] >= a[2] && a[2] >= 0;
}

}  // namespace

std::array<SignedComposition, 6> signed_set_S(const Partition& lam) {
  auto l = pad3(lam);
  return {{
      {{l[0], l[1], l[2]}, +1},
      {{l[0], l[1] + 1, l[2] - 1}, -1},
      {{l[0] + 1, l[1] - 1, l[2]}, -1},
      {{l[0] + 1, l[1] + 1, l[2] - 2}, +1},
      {{l[0] + 2, l[1] - 1, l[2] - 1}, +1},
      {{l[0] + 2, l[1], l[2] - 2}, -1},
  }};
}

std::string case_name(CaseTag t) {
  switch (t) {
    case CaseTag::I: return "I";
    case CaseTag::II: return "II";
    case CaseTag::III: return "III";
    case CaseTag::IV: return "IV";
  }
  return "?";
}

CaseTag case_of(const Partition& mu) {
  auto m = pad3(mu);
  bool first = m[0] == m[1] + 1;
  bool second = m[1] == m[2] + 1;
  if (!first && !second) return CaseTag::I;
  if (first && !second) return CaseTag::II;
  if (!first && second) return CaseTag::III;
  return CaseTag::IV;
}

std::vector<Composition> c_set(const Partition& mu) {
  auto m = pad3(mu);
  std::vector<Composition> out{{m[0], m[1], m[2]}};
  if (m[0] == m[1] + 1) out.push_back({m[1], m[0], m[2]});
  if (m[1] == m[2] + 1) out.push_back({m[0], m[2], m[1]});
  return out;
}

std::vector<std::pair<Partition, int>> k_set(const Composition& alpha, int n) {
  if (alpha.size() != 3) throw std::invalid_argument("alpha must have 3 parts");
  if (weight(alpha) != n) return {};
  const int a1 = alpha[0], a2 = alpha[1], a3 = alpha[2];
  // candidates lam with alpha in S(lam), listed with the sign of alpha there
  const std::array<std::pair<Composition, int>, 6> raw{{
      {{a1 - 2, a2, a3 + 2}, -1},      // alpha = (l1+2, l2, l3-2)
      {{a1 - 2, a2 + 1, a3 + 1}, +1},  // alpha = (l1+2, l2-1, l3-1)
      {{a1 - 1, a2 - 1, a3 + 2}, +1},  // alpha = (l1+1, l2+1, l3-2)
      {{a1 - 1, a2 + 1, a3}, -1},      // alpha = (l1+1, l2-1, l3)
      {{a1, a2 - 1, a3 + 1}, -1},      // alpha = (l1, l2+1, l3-1)
      {{a1, a2, a3}, +1},
  }};
  std::vector<std::pair<Partition, int>> out;
  for (const auto& [lam, sgn] : raw)
    if (is_par3(lam)) out.emplace_back(trim_zeros(lam), sgn);
  return out;
}

Int coefficient_c(const HessenbergFunction& f, const Partition& mu, TableauCache* cache) {
  if (f.bounce_number() > 3)
    throw BounceTooLarge("signed-sum coefficients need bounce number at most 3");
  if ((int)mu.size() > 3 || weight(mu) != f.n())
    throw std::invalid_argument("mu must be a partition of n with at most 3 parts");
  std::optional<TableauCache> local;
  if (!cache) {
    local.emplace(f);
    cache = &*local;
  }
  Int c = 0;
  for (const Composition& alpha : c_set(mu))
    for (const auto& [lam, sgn] : k_set(alpha, f.n())) c += sgn * cache->count(lam);
  return c;
}

SymExpansion h_expansion_via_signed_sums(const HessenbergFunction& f, TableauCache* cache) {
  std::optional<TableauCache> local;
  if (!cache) {
    local.emplace(f);
    cache = &*local;
  }
  SymExpansion out;
  out.basis = Basis::h;
  for (const Partition& mu : partitions_of(f.n(), 3))
    out.add(mu, coefficient_c(f, mu, cache));
  return out;
}

namespace {

nlohmann::json node_json(const Composition& parts, int sign, int multiplicity) {
  nlohmann::json n;
  n["parts"] = parts;
  n["sign"] = sign;
  n["multiplicity"] = multiplicity;
  n["obsolete"] = !is_par3(parts);
  return n;
}

nlohmann::json arrow_json(int from, int to, int j, int i, int k) {
  nlohmann::json a;
  a["from"] = from;
  a["to"] = to;
  a["move"] = {{"from_row", j}, {"to_row", i}, {"cells", k}};
  return a;
}

}  // namespace

nlohmann::json case_diagram(const Partition& mu) {
  auto m = pad3(mu);
  const int m1 = m[0], m2 = m[1], m3 = m[2];
  CaseTag tag = case_of(mu);
  nlohmann::json out;
  out["mu"] = m;
  out["case"] = case_name(tag);
  nlohmann::json nodes = nlohmann::json::array();
  nlohmann::json arrows = nlohmann::json::array();
  switch (tag) {
    case CaseTag::I:
      nodes.push_back(node_json({m1 - 2, m2, m3 + 2}, -1, 1));
      nodes.push_back(node_json({m1 - 2, m2 + 1, m3 + 1}, +1, 1));
      nodes.push_back(node_json({m1 - 1, m2 - 1, m3 + 2}, +1, 1));
      nodes.push_back(node_json({m1 - 1, m2 + 1, m3}, -1, 1));
      nodes.push_back(node_json({m1, m2 - 1, m3 + 1}, -1, 1));
      nodes.push_back(node_json({m1, m2, m3}, +1, 1));
      arrows.push_back(arrow_json(0, 1, 3, 2, 1));
      arrows.push_back(arrow_json(0, 2, 2, 1, 1));
      arrows.push_back(arrow_json(0, 5, 3, 1, 2));
      arrows.push_back(arrow_json(1, 3, 3, 1, 1));
      arrows.push_back(arrow_json(1, 4, 2, 1, 2));
      arrows.push_back(arrow_json(2, 4, 3, 1, 1));
      arrows.push_back(arrow_json(2, 3, 3, 2, 2));
      arrows.push_back(arrow_json(3, 5, 2, 1, 1));
      arrows.push_back(arrow_json(4, 5, 3, 2, 1));
      break;
    case CaseTag::II:
      nodes.push_back(node_json({m1 - 1, m2 - 1, m3 + 2}, +1, 1));
      nodes.push_back(node_json({m1 - 1, m2, m3 + 1}, -1, 1));
      nodes.push_back(node_json({m1, m2 - 1, m3 + 1}, -1, 1));
      nodes.push_back(node_json({m1, m2, m3}, +1, 1));
      arrows.push_back(arrow_json(0, 1, 3, 2, 1));
      arrows.push_back(arrow_json(0, 2, 3, 1, 1));
      arrows.push_back(arrow_json(1, 2, 2, 1, 1));
      arrows.push_back(arrow_json(1, 3, 3, 1, 1));
      arrows.push_back(arrow_json(2, 3, 3, 2, 1));
      break;
    case CaseTag::III:
      nodes.push_back(node_json({m1 - 2, m2 + 1, m3 + 1}, +1, 1));
      nodes.push_back(node_json({m1 - 1, m2, m3 + 1}, -1, 1));
      nodes.push_back(node_json({m1 - 1, m2 + 1, m3}, -1, 1));
      nodes.push_back(node_json({m1, m2, m3}, +1, 1));
      arrows.push_back(arrow_json(0, 1, 2, 1, 1));
      arrows.push_back(arrow_json(0, 2, 3, 1, 1));
      arrows.push_back(arrow_json(1, 2, 3, 2, 1));
      arrows.push_back(arrow_json(1, 3, 3, 1, 1));
      arrows.push_back(arrow_json(2, 3, 2, 1, 1));
      break;
    case CaseTag::IV:
      nodes.push_back(node_json({m1 - 1, m2, m3 + 1}, -1, 2));
      nodes.push_back(node_json({m1, m2, m3}, +1, 1));
      arrows.push_back(arrow_json(0, 1, 3, 1, 1));
      break;
  }
  out["nodes"] = nodes;
  out["arrows"] = arrows;
  return out;
}

}  // namespace csf
