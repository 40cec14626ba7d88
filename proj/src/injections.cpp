#include "csf/injections.hpp"

#include <algorithm>
#include <set>

namespace csf {

nlohmann::json MapTrace::to_json() const {
  return {{"map", map}, {"subcase", subcase}, {"input", input.to_string()},
          {"output", output.to_string()}};
}

TildeSet tilde_set(TableauCache& cache, const Composition& target_shape,
                   const Composition& removed_source_shape, int move_width, int sign,
                   std::vector<MapTrace>* pairings, std::vector<std::string>* problems) {
  TildeSet out;
  out.shape = target_shape;
  out.sign = sign;
  out.removed_via = "sigma31^" + std::to_string(move_width) + "(T(" +
                    format_csv(removed_source_shape) + "))";
  const auto& target = cache.set_of(target_shape);
  std::set<FTableau> remaining(target.begin(), target.end());
  std::string map_name = "sigma31^" + std::to_string(move_width);
  for (const FTableau& t : cache.set_of(removed_source_shape)) {
    FTableau image = sigma_move(t, 3, 1, move_width);
    bool valid = is_f_tableau(cache.function(), image);
    auto it = remaining.find(image);
    if (!valid || it == remaining.end()) {
      if (problems)
        problems->push_back(map_name + " image " + image.to_string() + " of " +
                            t.to_string() + (valid ? " not in target set" : " invalid"));
      continue;
    }
    remaining.erase(it);
    if (pairings) pairings->push_back({map_name, "", t, image});
  }
  out.members.assign(remaining.begin(), remaining.end());
  return out;
}

namespace {

// Entry roles of a two-row tableau of shape (m+k, m); indices 0-based.
struct TwoRow {
  const std::vector<int>&r0, &r1;
  int m, k;
  explicit TwoRow(const FTableau& t) : r0(t.rows[0]), r1(t.rows[1]) {
    m = (int)r1.size();
    k = (int)r0.size() - m;
  }
  int d1(int j) const { return r0[(int)r0.size() - 1 - j]; }  // d1(k) = c1
  int b2(int j) const { return r1[m - 2 - j]; }               // b2(m-2) = a2
  int a2() const { return r1[0]; }
  int c2() const { return r1[m - 1]; }
};

std::vector<int> slice(const std::vector<int>& v, int from, int count) {
  return {v.begin() + from, v.begin() + from + count};
}

}  // namespace

SubcaseResult sigma21_tilde(const HessenbergFunction& f, const FTableau& s) {
  if (s.rows.size() != 2 || s.rows[0].size() < s.rows[1].size() || s.rows[1].empty())
    throw PreconditionViolated("row-merge input must have shape (m+k, m)");
  TwoRow v(s);
  const int m = v.m, k = v.k;
  if (f.precedes(v.a2(), v.d1(0)))
    throw PreconditionViolated("input outside the tilde domain: " + s.to_string());
  SubcaseResult res;
  if (!f.precedes(v.c2(), v.d1(0))) {
    // <1>: append c2 to row 1
    res.out.rows = {s.rows[0], slice(s.rows[1], 0, m - 1)};
    res.out.rows[0].push_back(v.c2());
    res.subcase = "<1>";
    res.tag = Phi1Tag{1, 0};
  } else {
    if (m < 2 || k < 1)
      throw PreconditionViolated("tail-swap subcase impossible at this width: " +
                                 s.to_string());
    int lim = std::min(k - 1, m - 2);
    int i = -1;
    for (int t = 0; t <= lim; ++t)
      if (!f.precedes(v.b2(t), v.d1(t + 1))) {
        i = t;
        break;
      }
    if (i >= 0) {
      // <2-i>: swap the length-(i+1) tails of the rows, then append c2
      std::vector<int> top = slice(s.rows[0], 0, m + k - 1 - i);
      for (int j = i; j >= 0; --j) top.push_back(v.b2(j));
      top.push_back(v.c2());
      std::vector<int> bottom = slice(s.rows[1], 0, m - 2 - i);
      for (int j = i; j >= 0; --j) bottom.push_back(v.d1(j));
      res.out.rows = {top, bottom};
      res.subcase = "<2-" + std::to_string(i) + ">";
      res.tag = Phi1Tag{2, i};
    } else {
      // <2-inf>: only possible when m-2 < k-1
      if (!(m - 2 < k - 1))
        throw PreconditionViolated("unbounded tail swap at impossible width: " +
                                   s.to_string());
      std::vector<int> top = slice(s.rows[0], 0, k);
      top.push_back(v.d1(0));
      for (int j = 0; j < m - 1; ++j) top.push_back(s.rows[1][j]);
      top.push_back(v.c2());
      std::vector<int> bottom;
      for (int j = m - 2; j >= 1; --j) bottom.push_back(v.d1(j));
      bottom.push_back(v.d1(m - 1));
      res.out.rows = {top, bottom};
      res.subcase = "<2-inf>";
      res.tag = Phi1Tag{2, TAIL_INF};
    }
  }
  if (res.out.rows[1].empty()) res.out.rows.pop_back();
  return res;
}

namespace {

// Entry roles of a three-row tableau of shape (m+k+1, m-2, 1), m >= 3.
struct ThreeRow {
  const std::vector<int>&r0, &r1;
  int m, k, a3;
  explicit ThreeRow(const FTableau& t) : r0(t.rows[0]), r1(t.rows[1]) {
    m = (int)r1.size() + 2;
    k = (int)r0.size() - m - 1;
    a3 = t.rows[2][0];
  }
  int e1() const { return r0.back(); }
  int d1(int j) const { return r0[(int)r0.size() - 2 - j]; }  // d1(-1) = e1, d1(k) = c1
  int b1(int j) const { return r0[m - 2 - j]; }               // b1(0) = b1, b1(m-2) = a1
  int a2() const { return r1[0]; }
  // first interior row-2 entry; exists only for m >= 4 (at m = 3 the second
  // row is a2 alone, so conditions quantifying over it hold vacuously)
  bool has_b2() const { return m >= 4; }
  int bm3() const { return r1[1]; }
};

// Shapes (m+k+1, m-2, 1) with m >= 3 and k >= 0, plus the degenerate
// k = -2 (first row one longer than the second) where the last first-row
// entry plays both right-edge roles at once.
bool three_row_shape_ok(const FTableau& t) {
  if (t.rows.size() != 3 || t.rows[2].size() != 1 || t.rows[1].empty()) return false;
  size_t m = t.rows[1].size() + 2;
  return t.rows[0].size() >= m + 1 || t.rows[0].size() == m - 1;
}

// rows 2..3 merged: [x] ++ row1[1..] ++ [a3]
std::vector<int> merged_second_row(const ThreeRow& v, const FTableau& s, int x) {
  std::vector<int> row{x};
  row.insert(row.end(), s.rows[1].begin() + 1, s.rows[1].end());
  row.push_back(v.a3);
  return row;
}

}  // namespace

SubcaseResult sigma32_tilde(const HessenbergFunction& f, const FTableau& s) {
  if (!three_row_shape_ok(s))
    throw PreconditionViolated("input must have shape (m+k+1, m-2, 1) with m >= 3");
  ThreeRow v(s);
  const int m = v.m, k = v.k;
  if (v.has_b2() && f.precedes(v.bm3(), v.e1()))
    throw PreconditionViolated("input outside the tilde domain: " + s.to_string());
  SubcaseResult res;
  if (f.precedes(v.b1(0), v.a3)) {
    // (1): append a3 to row 2
    res.out.rows = {s.rows[0], s.rows[1]};
    res.out.rows[1].push_back(v.a3);
    res.subcase = "(1)";
  } else if (!v.has_b2() || !f.precedes(v.bm3(), v.b1(0))) {
    // (2): swap a2 up into b1's cell, b1 heads row 2
    res.out.rows = {s.rows[0], merged_second_row(v, s, v.b1(0))};
    res.out.rows[0][m - 2] = v.a2();
    res.subcase = "(2)";
  } else if (k < 0) {
    // with the two right-edge roles collapsed the previous branch condition
    // contradicts the tilde-domain condition, so this is unreachable
    throw PreconditionViolated("collapsed-edge input reached the swap branch: " +
                               s.to_string());
  } else if (!f.precedes(v.e1(), v.a3) ||
             (f.precedes(v.e1(), v.a3) && f.precedes(v.a2(), v.d1(0)))) {
    // (3-1): a2 to b1's cell, b1 to e1's cell, e1 heads row 2
    res.out.rows = {s.rows[0], merged_second_row(v, s, v.e1())};
    res.out.rows[0][m - 2] = v.a2();
    res.out.rows[0].back() = v.b1(0);
    res.subcase = "(3-1)";
  } else {
    // (3-2): rotate the d-run into the b-run
    int i = -1;
    while (i + 2 <= m - 2 && i <= k && f.precedes(v.d1(i), v.b1(i + 2))) ++i;
    if (i + 2 > m - 2 || i > k)
      throw PreconditionViolated("no pivot index for the rotating subcase: " +
                                 s.to_string());
    std::vector<int> top = slice(s.rows[0], 0, m - 3 - i);   // a1 .. b1(i+2)
    for (int j = i; j >= -1; --j) top.push_back(v.d1(j));    // d1(i) .. d1(0), e1
    for (int j = k; j >= i + 1; --j) top.push_back(v.d1(j)); // c1 .. d1(i+1)
    for (int j = i + 1; j >= 0; --j) top.push_back(v.b1(j)); // b1(i+1) .. b1
    std::vector<int> bottom = s.rows[1];
    bottom.push_back(v.a3);
    res.out.rows = {top, bottom};
    res.subcase = "(3-2)";
  }
  return res;
}

Phi2Result phi2_case1(const HessenbergFunction& f, const FTableau& s,
                      const TPlusClassifier& classify, std::vector<std::string>* problems) {
  if (!three_row_shape_ok(s))
    throw PreconditionViolated("input must have shape (m+k+1, m-2, 1) with m >= 3");
  ThreeRow v(s);
  const int m = v.m, k = v.k;
  auto note = [&](const std::string& msg) {
    if (problems) problems->push_back(msg + " at " + s.to_string());
  };
  SubcaseResult base = sigma32_tilde(f, s);
  auto base_tag = classify(base.out);
  Phi2Result res;
  res.out = base.out;
  res.subcase = base.subcase;

  if (base.subcase == "(1)") {
    res.intermediates.emplace_back("R0", base.out);
    if (base_tag && base_tag->kind == 2) note("first-branch base image hits a kind-2 slot");
    if (!base_tag || base_tag->kind != 1) {
      res.subcase = "(1)R0";
      return res;
    }
    if (k < 0) {
      note("collapsed-edge image unexpectedly needs rerouting");
      return res;
    }
    // R1: a2 to e1's cell, e1 heads row 2
    FTableau r1;
    r1.rows = {s.rows[0], merged_second_row(v, s, v.e1())};
    r1.rows[0].back() = v.a2();
    res.intermediates.emplace_back("R1", r1);
    auto r1_tag = classify(r1);
    if (r1_tag && r1_tag->kind == 1) note("rerouted tableau hits a kind-1 slot");
    if (!r1_tag || r1_tag->kind != 2) {
      res.out = r1;
      res.subcase = "(1)R1";
      return res;
    }
    const int i = r1_tag->i;
    auto d1_at = [&](int j) { return s.rows[0][(int)s.rows[0].size() - 2 - j]; };
    FTableau r2;
    if (i != TAIL_INF && i < m - 2) {
      // prefix through d1(i+1), then b2(i..1), a3, e1
      std::vector<int> top = slice(s.rows[0], 0, m + k - 1 - i);
      for (int j = i; j >= 1; --j) top.push_back(s.rows[1][m - 2 - j]);
      top.push_back(v.a3);
      top.push_back(v.e1());
      std::vector<int> bottom = slice(s.rows[1], 0, m - 2 - i);
      for (int j = i; j >= 1; --j) bottom.push_back(d1_at(j));
      bottom.push_back(v.d1(0));
      r2.rows = {top, bottom};
      res.subcase = "(1)R2:2(" + std::to_string(i) + ")";
    } else {
      // both wide variants share the second row [a2, d1(m-3)..d1(1), d1]
      std::vector<int> bottom{v.a2()};
      for (int j = m - 3; j >= 1; --j) bottom.push_back(d1_at(j));
      bottom.push_back(v.d1(0));
      std::vector<int> top = slice(s.rows[0], 0, m - 1);          // a1 .. b1
      for (int j = k; j >= m; --j) top.push_back(d1_at(j));       // c1 .. d1(m)
      if (i == m - 2) {
        top.push_back(d1_at(m - 1));
        top.push_back(v.e1());
        for (size_t c = 1; c < s.rows[1].size(); ++c) top.push_back(s.rows[1][c]);
        top.push_back(v.a3);
        top.push_back(d1_at(m - 2));
        res.subcase = "(1)R2:2(" + std::to_string(m - 2) + ")";
      } else {
        top.push_back(v.a3);
        top.push_back(v.e1());
        for (size_t c = 1; c < s.rows[1].size(); ++c) top.push_back(s.rows[1][c]);
        top.push_back(d1_at(m - 1));
        top.push_back(d1_at(m - 2));
        res.subcase = "(1)R2:2(inf)";
      }
      r2.rows = {top, bottom};
    }
    res.out = r2;
    return res;
  }

  if (base.subcase == "(2)") {
    res.intermediates.emplace_back("Q0", base.out);
    if (base_tag && base_tag->kind == 2) note("second-branch base image hits a kind-2 slot");
    if (!base_tag || base_tag->kind != 1) {
      res.subcase = "(2)Q0";
      return res;
    }
    if (k < 0) {
      note("collapsed-edge image unexpectedly needs rerouting");
      return res;
    }
    FTableau q1;
    q1.rows = {s.rows[0], merged_second_row(v, s, v.e1())};
    q1.rows[0][m - 2] = v.a2();
    q1.rows[0].back() = v.b1(0);
    res.out = q1;
    res.subcase = "(2)Q1";
    return res;
  }

  // (3): pass through, but the image must avoid both traced slot kinds
  if (base_tag) note("third-branch image hits a traced slot");
  res.subcase = "(3)" + base.subcase;
  return res;
}

SubcaseResult phi_case2(const HessenbergFunction& f, const FTableau& s) {
  if (!(s.rows.size() == 3 && s.rows[2].size() == 1 &&
        s.rows[0].size() == s.rows[1].size() + 2 && s.rows[1].size() >= 1))
    throw PreconditionViolated("input must have shape (m+2, m, 1)");
  const auto& r0 = s.rows[0];
  const auto& r1 = s.rows[1];
  const int m = (int)r1.size();
  const int a1 = r0[0], d1 = r0[m], e1 = r0[m + 1];
  const int a2 = r1[0], a3 = s.rows[2][0];
  // the interior row-2 entry exists only for m >= 2; conditions on it hold
  // vacuously when it is absent
  const bool has_b2 = m >= 2;
  const int b2 = has_b2 ? r1[1] : 0;
  if (has_b2 && f.precedes(b2, e1))
    throw PreconditionViolated("input outside the tilde domain: " + s.to_string());
  auto merged = [&](int head) {
    std::vector<int> row{head};
    row.insert(row.end(), r1.begin() + 1, r1.end());
    row.push_back(a3);
    return row;
  };
  SubcaseResult res;
  if (f.precedes(d1, a3)) {
    if (!f.precedes(a2, e1)) {
      res.out.rows = {r0, r1};
      res.out.rows[1].push_back(a3);
      res.subcase = "(1-1)";
    } else {
      res.out.rows = {r0, merged(e1)};
      res.out.rows[0][m + 1] = a2;
      res.subcase = "(1-2)";
    }
  } else if (!has_b2 || !f.precedes(b2, d1)) {
    if (!f.precedes(d1, e1)) {
      res.out.rows = {r0, merged(d1)};
      res.out.rows[0][m] = a2;
      res.subcase = "(2-1)";
    } else {
      res.out.rows = {r0, merged(e1)};
      res.out.rows[0][m] = a2;
      res.out.rows[0][m + 1] = d1;
      res.subcase = "(2-2)";
    }
  } else {
    if (f.precedes(a1, e1)) {
      res.out.rows = {r0, merged(e1)};
      res.out.rows[0][m] = a2;
      res.out.rows[0][m + 1] = d1;
      res.subcase = "(3-1)";
    } else {
      res.out.rows = {r0, r1};
      res.out.rows[0][m] = e1;
      res.out.rows[0][m + 1] = d1;
      res.out.rows[1].push_back(a3);
      res.subcase = "(3-2)";
    }
  }
  return res;
}

SubcaseResult phi_case3(const HessenbergFunction& f, const FTableau& t) {
  if (!(t.rows.size() == 2 && t.rows[1].size() == 2 && t.rows[0].size() >= 2))
    throw PreconditionViolated("input must have shape (2+k, 2)");
  const auto& r0 = t.rows[0];
  const int a1 = r0[0], b1 = r0[1], d1 = r0.back();
  const int c1 = r0[std::min<size_t>(2, r0.size() - 1)];  // right-edge role when k = 0
  const int a2 = t.rows[1][0], b2 = t.rows[1][1];
  if (f.precedes(a2, d1))
    throw PreconditionViolated("input outside the tilde domain: " + t.to_string());
  SubcaseResult res;
  res.out.rows = {r0, {}};
  if (!f.precedes(b2, d1)) {
    if (!f.precedes(a2, b2)) {
      res.out.rows[0].push_back(b2);
      res.out.rows[1] = {a2};
      res.subcase = "<1-1>";
    } else {
      res.out.rows[0].push_back(a2);
      res.out.rows[1] = {b2};
      res.subcase = "<1-2>";
    }
  } else {
    if (!f.precedes(a1, b2) && !f.precedes(c1, a1)) {
      std::swap(res.out.rows[0][0], res.out.rows[0][1]);
      res.out.rows[0].push_back(a2);
      res.out.rows[1] = {b2};
      res.subcase = "<2-1>";
    } else if (!f.precedes(a1, b2)) {
      res.out.rows[0].back() = a2;
      res.out.rows[0].push_back(b2);
      res.out.rows[1] = {d1};
      res.subcase = "<2-2>";
    } else {
      res.out.rows[0].push_back(a2);
      res.out.rows[1] = {b2};
      res.subcase = "<2-3>";
    }
  }
  return res;
}

std::pair<FTableau, FTableau> phi_case4(const FTableau& t) {
  if (!(t.rows.size() == 3 && t.rows[0].size() == t.rows[1].size() &&
        t.rows[1].size() == t.rows[2].size() && !t.rows[0].empty()))
    throw CaseMismatch("input must be a rectangle of height 3");
  const int c2 = t.rows[1].back(), c3 = t.rows[2].back();
  FTableau p1 = t, p2 = t;
  p1.rows[0].push_back(c2);
  p1.rows[1].back() = c3;
  p1.rows[2].pop_back();
  p2.rows[0].push_back(c3);
  p2.rows[2].pop_back();
  for (FTableau* p : {&p1, &p2})
    while (!p->rows.empty() && p->rows.back().empty()) p->rows.pop_back();
  return {p1, p2};
}

FTableau phi_bounce2(const HessenbergFunction& f, const FTableau& t) {
  if (f.bounce_number() > 2) throw BounceMismatch("map applies to bounce number <= 2");
  if (t.rows.size() != 2 || t.rows[1].empty())
    throw PreconditionViolated("input must have two rows");
  return sigma_move(t, 2, 1, 1);
}

namespace {

struct Matcher {
  TableauCache& cache;
  const HessenbergFunction& f;
  CaseRun& run;
  std::set<FTableau> codomain;        // remaining unmatched positives
  std::set<FTableau> image_so_far;    // all fine-map images (across map kinds)
  std::map<FTableau, std::string> image_owner;

  // Registers one fine-map image; updates the check flags.
  void claim(const std::string& map, const std::string& subcase, const FTableau& in,
             const FTableau& out) {
    if (!is_f_tableau(f, out)) {
      run.checks.well_defined = false;
      run.problems.push_back(map + subcase + " output invalid: " + in.to_string() +
                             " -> " + out.to_string());
      return;
    }
    auto prev = image_owner.find(out);
    if (prev != image_owner.end()) {
      if (prev->second == map)
        run.checks.injective = false;
      else
        run.checks.disjoint = false;
      run.problems.push_back(map + subcase + " image collision at " + out.to_string());
      return;
    }
    image_owner.emplace(out, map);
    auto it = codomain.find(out);
    if (it == codomain.end()) {
      run.checks.codomain_ok = false;
      run.problems.push_back(map + subcase + " image outside codomain: " +
                             out.to_string());
      return;
    }
    codomain.erase(it);
    run.pairings.push_back({map, subcase, in, out});
  }

  void finish() { run.residual_positive.assign(codomain.begin(), codomain.end()); }
};

Composition node(int a, int b, int c) { return {a, b, c}; }

void size_entry(CaseRun& run, TableauCache& cache, const std::string& name,
                const Composition& shape) {
  run.set_sizes.emplace_back("d(" + format_csv(shape) + ")" + (name.empty() ? "" : " " + name),
                             cache.count(shape));
}

void run_case1(TableauCache& cache, CaseRun& run, const Composition& m3) {
  const auto& f = cache.function();
  const int m1 = m3[0], m2 = m3[1], mu3 = m3[2];
  auto A = node(m1 - 2, m2, mu3 + 2), B = node(m1 - 2, m2 + 1, mu3 + 1),
       C = node(m1 - 1, m2 - 1, mu3 + 2), D = node(m1 - 1, m2 + 1, mu3),
       E = node(m1, m2 - 1, mu3 + 1), F = node(m1, m2, mu3);
  for (auto& [n, s] : std::initializer_list<std::pair<const char*, Composition>>{
           {"A", A}, {"B", B}, {"C", C}, {"D", D}, {"E", E}, {"F", F}})
    size_entry(run, cache, n, s);

  TildeSet tF = tilde_set(cache, F, A, 2, +1, &run.pairings, &run.problems);
  TildeSet tE = tilde_set(cache, E, C, 1, -1, &run.pairings, &run.problems);
  TildeSet tD = tilde_set(cache, D, B, 1, -1, &run.pairings, &run.problems);
  if (!run.problems.empty()) run.checks.well_defined = false;

  Matcher match{cache, f, run, {tF.members.begin(), tF.members.end()}, {}, {}};
  std::map<FTableau, Phi1Tag> phi1_tags;  // keyed by full-shape image

  for (const FTableau& t : tD.members) {
    auto [rect, s] = split_left(t, mu3);
    try {
      SubcaseResult r = sigma21_tilde(f, s);
      FTableau u = concat_tableaux(rect, r.out);
      if (r.tag) phi1_tags[u] = *r.tag;
      match.claim("phi1", r.subcase, t, u);
    } catch (const PreconditionViolated& e) {
      run.checks.well_defined = false;
      run.problems.push_back(std::string("phi1 ") + e.what());
    }
  }
  for (const FTableau& t : tE.members) {
    auto [rect, s] = split_left(t, mu3);
    TPlusClassifier classify = [&](const FTableau& cand) -> std::optional<Phi1Tag> {
      auto it = phi1_tags.find(concat_tableaux(rect, cand));
      if (it == phi1_tags.end()) return std::nullopt;
      return it->second;
    };
    try {
      Phi2Result r = phi2_case1(f, s, classify, &run.problems);
      for (const auto& [label, mid] : r.intermediates)
        if (!is_f_tableau(f, concat_tableaux(rect, mid)))
          run.problems.push_back("phi2 intermediate " + label + " invalid for " +
                                 t.to_string());
      match.claim("phi2", r.subcase, t, concat_tableaux(rect, r.out));
    } catch (const PreconditionViolated& e) {
      run.checks.well_defined = false;
      run.problems.push_back(std::string("phi2 ") + e.what());
    }
  }
  match.finish();
}

void run_case2(TableauCache& cache, CaseRun& run, const Composition& m3) {
  const auto& f = cache.function();
  const int m1 = m3[0], m2 = m3[1], mu3 = m3[2];
  auto C = node(m1 - 1, m2 - 1, mu3 + 2), N = node(m1 - 1, m2, mu3 + 1),
       E = node(m1, m2 - 1, mu3 + 1), F = node(m1, m2, mu3);
  for (auto& [n, s] : std::initializer_list<std::pair<const char*, Composition>>{
           {"C", C}, {"N", N}, {"E", E}, {"F", F}})
    size_entry(run, cache, n, s);
  TildeSet tF = tilde_set(cache, F, N, 1, +1, &run.pairings, &run.problems);
  TildeSet tE = tilde_set(cache, E, C, 1, -1, &run.pairings, &run.problems);
  if (!run.problems.empty()) run.checks.well_defined = false;
  Matcher match{cache, f, run, {tF.members.begin(), tF.members.end()}, {}, {}};
  for (const FTableau& t : tE.members) {
    auto [rect, s] = split_left(t, mu3);
    try {
      SubcaseResult r = phi_case2(f, s);
      match.claim("phi", r.subcase, t, concat_tableaux(rect, r.out));
    } catch (const PreconditionViolated& e) {
      run.checks.well_defined = false;
      run.problems.push_back(std::string("phi ") + e.what());
    }
  }
  match.finish();
}

void run_case3(TableauCache& cache, CaseRun& run, const Composition& m3) {
  const auto& f = cache.function();
  const int m1 = m3[0], m2 = m3[1], mu3 = m3[2];
  auto B = node(m1 - 2, m2 + 1, mu3 + 1), N = node(m1 - 1, m2, mu3 + 1),
       D = node(m1 - 1, m2 + 1, mu3), F = node(m1, m2, mu3);
  for (auto& [n, s] : std::initializer_list<std::pair<const char*, Composition>>{
           {"B", B}, {"N", N}, {"D", D}, {"F", F}})
    size_entry(run, cache, n, s);
  TildeSet tF = tilde_set(cache, F, N, 1, +1, &run.pairings, &run.problems);
  TildeSet tD = tilde_set(cache, D, B, 1, -1, &run.pairings, &run.problems);
  if (!run.problems.empty()) run.checks.well_defined = false;
  Matcher match{cache, f, run, {tF.members.begin(), tF.members.end()}, {}, {}};
  for (const FTableau& t : tD.members) {
    auto [rect, s] = split_left(t, mu3);
    try {
      SubcaseResult r = phi_case3(f, s);
      match.claim("phi", r.subcase, t, concat_tableaux(rect, r.out));
    } catch (const PreconditionViolated& e) {
      run.checks.well_defined = false;
      run.problems.push_back(std::string("phi ") + e.what());
    }
  }
  match.finish();
}

void run_case4(TableauCache& cache, CaseRun& run, const Composition& m3) {
  const auto& f = cache.function();
  auto Nu = node(m3[0] - 1, m3[1], m3[2] + 1), F = node(m3[0], m3[1], m3[2]);
  size_entry(run, cache, "N", Nu);
  size_entry(run, cache, "F", F);
  const auto& target = cache.set_of(F);
  Matcher match{cache, f, run, {target.begin(), target.end()}, {}, {}};
  for (const FTableau& t : cache.set_of(Nu)) {
    try {
      auto [p1, p2] = phi_case4(t);
      match.claim("phi1", "", t, p1);
      match.claim("phi2", "", t, p2);
    } catch (const CaseMismatch& e) {
      run.checks.well_defined = false;
      run.problems.push_back(e.what());
    }
  }
  match.finish();
}

void run_bounce2(TableauCache& cache, CaseRun& run, const Partition& mu) {
  const auto& f = cache.function();
  Composition m2 = pad_to(mu, 2);
  Composition source{m2[0] - 1, m2[1] + 1};
  size_entry(run, cache, "source", source);
  size_entry(run, cache, "target", m2);
  const auto& target = cache.set_of(m2);
  Matcher match{cache, f, run, {target.begin(), target.end()}, {}, {}};
  for (const FTableau& t : cache.set_of(source)) {
    try {
      match.claim("phi", "", t, phi_bounce2(f, t));
    } catch (const std::exception& e) {
      run.checks.well_defined = false;
      run.problems.push_back(e.what());
    }
  }
  match.finish();
}

}  // namespace

CaseRun run_case(TableauCache& cache, const Partition& mu) {
  const auto& f = cache.function();
  if (f.bounce_number() > 3)
    throw BounceMismatch("matching machinery needs bounce number at most 3");
  if ((int)mu.size() > 3 || weight(mu) != f.n() || !is_partition_shape(mu))
    throw std::invalid_argument("mu must be a partition of n with at most 3 parts");
  CaseRun run;
  run.mu = trim_zeros(mu);
  if (f.bounce_number() <= 2) {
    if ((int)run.mu.size() <= 2) {
      run.mode = "bounce2";
      run_bounce2(cache, run, run.mu);
    } else {
      run.mode = "trivial";  // every contributing set is empty
      size_entry(run, cache, "target", pad_to(run.mu, 3));
    }
    return run;
  }
  Composition m3 = pad_to(run.mu, 3);
  switch (case_of(run.mu)) {
    case CaseTag::I:
      run.mode = "I";
      run_case1(cache, run, m3);
      break;
    case CaseTag::II:
      run.mode = "II";
      run_case2(cache, run, m3);
      break;
    case CaseTag::III:
      run.mode = "III";
      run_case3(cache, run, m3);
      break;
    case CaseTag::IV:
      run.mode = "IV";
      run_case4(cache, run, m3);
      break;
  }
  return run;
}

nlohmann::json CaseRun::to_json(bool include_pairings) const {
  nlohmann::json j;
  j["mu"] = mu;
  j["mode"] = mode;
  j["residual"] = (long long)residual_positive.size();
  j["checks"] = {{"well_defined", checks.well_defined},
                 {"injective", checks.injective},
                 {"disjoint", checks.disjoint},
                 {"codomain_ok", checks.codomain_ok}};
  j["problems"] = problems;
  nlohmann::json sizes = nlohmann::json::object();
  for (const auto& [name, v] : set_sizes) sizes[name] = (long long)v;
  j["set_sizes"] = sizes;
  if (include_pairings) {
    nlohmann::json p = nlohmann::json::array();
    for (const MapTrace& t : pairings) p.push_back(t.to_json());
    j["pairings"] = p;
    nlohmann::json r = nlohmann::json::array();
    for (const FTableau& t : residual_positive) r.push_back(t.to_string());
    j["residual_positive"] = r;
  }
  return j;
}

}  // namespace csf
