// Acceptance gate: nine checks, one printed line each, nonzero exit when a
// check fails.  Tolerances and expected values are pinned here on purpose so
// a regression shows up as a failed line rather than a silently moved target.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "boolsch/constants.hpp"
#include "boolsch/fast_type_a.hpp"
#include "boolsch/kostant_kumar.hpp"
#include "boolsch/triples.hpp"
#include "boolsch/weyl_group.hpp"

using namespace boolsch;

namespace {

constexpr double kMaxExampleSeconds = 1.0;
constexpr double kMaxLogLogSlope = 2.3;
constexpr std::uint64_t kBenchSeed = 12345;
constexpr int kBenchSamples = 100;

struct Criterion {
  std::string description;
  bool passed = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Criterion check_worked_example() {
  Criterion c{"thirteen strand worked example agrees across all three routes"};
  auto start = std::chrono::steady_clock::now();

  RootSystem rs(LieType::A, 13);
  BooleanElement u = BooleanElement::from_reduced_word(rs, {4, 3, 8, 11, 12});
  BooleanElement v = BooleanElement::from_reduced_word(rs, {2, 3, 7, 6, 8, 12});
  BooleanElement w =
      BooleanElement::from_reduced_word(rs, {7, 6, 5, 4, 2, 3, 9, 8, 11, 13, 12});

  long long ordinary = ordinary_constant(rs, u, v, w);
  Poly equivariant = equivariant_constant(rs, u, v, w);
  Poly recursion = kk_constant(rs, u, v, w);

  auto path = find_insertion_path_type_a(rs, u, v, w);
  std::vector<int> order;
  if (path)
    for (const InsertionStep& s : path->steps) order.push_back(s.root);
  const std::vector<int> expected_order{2, 6, 7, 8, 3, 12};

  double elapsed = seconds_since(start);
  c.passed = ordinary == 1 && equivariant == Poly::one(13) && recursion == Poly::one(13) &&
             path.has_value() && order == expected_order &&
             fast_ordinary_constant_type_a(rs, u, v, w) == 1 && elapsed < kMaxExampleSeconds;
  std::ostringstream os;
  os << "value " << ordinary << ", insertion order";
  for (int r : order) os << ' ' << r;
  os << ", " << elapsed << "s";
  c.detail = os.str();
  return c;
}

Criterion check_branch_vertex_targets() {
  Criterion c{"rank seven branch vertex insertions hit the expected diagrams"};
  RootSystem rs(LieType::E, 7);
  BooleanElement u = BooleanElement::from_reduced_word(rs, {3, 5, 4, 7});

  std::vector<InsertionStep> inside = insertion_targets(rs, u, 4);
  bool ok = inside.size() == 5;
  if (ok) {
    ok = inside[0].kind == StepKind::Equivariant && inside[0].target == u &&
         inside[0].weight ==
             Poly::variable(7, 3) + Poly::variable(7, 4) + Poly::variable(7, 5);
    std::set<BooleanElement> grown;
    for (size_t k = 1; k < inside.size(); ++k) {
      ok = ok && inside[k].kind == StepKind::AddReachable && inside[k].multiplicity == 1;
      grown.insert(inside[k].target);
    }
    ok = ok &&
         grown ==
             std::set<BooleanElement>{
                 BooleanElement::from_diagram(rs, {1, 3, 4, 5, 7}, {{3, 1}, {4, 3}, {4, 5}}),
                 BooleanElement::from_diagram(rs, {2, 3, 4, 5, 7}, {{4, 2}, {4, 3}, {4, 5}}),
                 BooleanElement::from_diagram(rs, {3, 4, 5, 6, 7},
                                              {{4, 3}, {4, 5}, {5, 6}, {6, 7}}),
                 BooleanElement::from_diagram(rs, {3, 4, 5, 6, 7},
                                              {{4, 3}, {4, 5}, {5, 6}, {7, 6}})};
  }

  std::vector<InsertionStep> outside = insertion_targets(rs, u, 6);
  ok = ok && outside.size() == 4;
  std::set<BooleanElement> free_orientations;
  for (const InsertionStep& s : outside) {
    ok = ok && s.kind == StepKind::AddRoot && s.multiplicity == 1;
    free_orientations.insert(s.target);
  }
  ok = ok && free_orientations.size() == 4;

  c.passed = ok;
  c.detail = std::to_string(inside.size()) + " targets at the branch, " +
             std::to_string(outside.size()) + " free orientations";
  return c;
}

Criterion check_doubled_arrow() {
  Criterion c{"doubled arrow contributes weight 2t2+2t3+t4 and multiplicity 2"};
  RootSystem rs(LieType::C, 4);
  BooleanElement u = BooleanElement::from_reduced_word(rs, {2, 3, 4});
  BooleanElement s4 = BooleanElement::from_reduced_word(rs, {4});
  BooleanElement w = BooleanElement::from_reduced_word(rs, {1, 2, 3, 4});

  Poly weight = equivariant_step_weight(rs, u, 4);
  Poly expected =
      Poly::variable(4, 2) * 2 + Poly::variable(4, 3) * 2 + Poly::variable(4, 4);
  long long mult = step_multiplicity(rs, u, 4, w);
  long long value = ordinary_constant(rs, u, s4, w);

  c.passed = weight == expected && equivariant_constant(rs, u, s4, u) == expected &&
             mult == 2 && value == 2;
  c.detail = "weight " + weight.str() + ", multiplicity " + std::to_string(mult) +
             ", value " + std::to_string(value);
  return c;
}

Criterion check_recursion_agreement() {
  Criterion c{"insertion sums equal the divided difference recursion exhaustively"};
  const std::vector<std::pair<LieType, int>> systems{
      {LieType::A, 4}, {LieType::B, 3}, {LieType::C, 3}, {LieType::C, 4},
      {LieType::D, 4}, {LieType::G, 2}, {LieType::F, 4}};
  long long checked = 0, bad = 0;
  for (auto [type, rank] : systems) {
    RootSystem rs(type, rank);
    for (const BooleanElement& w : enumerate_boolean(rs)) {
      std::vector<BooleanElement> subs = subdiagrams(w);
      for (const BooleanElement& u : subs)
        for (const BooleanElement& v : subs) {
          if (!(equivariant_constant(rs, u, v, w) == kk_constant(rs, u, v, w))) ++bad;
          ++checked;
        }
    }
  }
  c.passed = bad == 0 && checked > 0;
  c.detail = std::to_string(checked) + " triples over 7 systems, " + std::to_string(bad) +
             " mismatches";
  return c;
}

Criterion check_zero_one() {
  Criterion c{"ordinary type A constants are always zero or one up to rank six"};
  long long checked = 0, bad = 0;
  for (int n = 1; n <= 6; ++n) {
    RootSystem rs(LieType::A, n);
    for (const BooleanElement& w : enumerate_boolean(rs)) {
      std::vector<BooleanElement> subs = subdiagrams(w);
      for (const BooleanElement& u : subs)
        for (const BooleanElement& v : subs) {
          long long value = ordinary_constant(rs, u, v, w);
          if (value != 0 && value != 1) ++bad;
          ++checked;
        }
    }
  }
  c.passed = bad == 0 && checked > 0;
  c.detail = std::to_string(checked) + " triples, " + std::to_string(bad) +
             " out of range";
  return c;
}

Criterion check_full_group_projection() {
  Criterion c{"single reflection products match the full group expansion"};
  const std::vector<std::pair<LieType, int>> systems{
      {LieType::A, 3}, {LieType::B, 3}, {LieType::C, 3}, {LieType::D, 4}, {LieType::G, 2}};
  long long checked = 0, bad = 0;
  for (auto [type, rank] : systems) {
    RootSystem rs(type, rank);
    WeylGroup group(rs);
    for (const BooleanElement& v : enumerate_boolean(rs)) {
      int vidx = group.index_of(v);
      for (int i = 1; i <= rank; ++i) {
        std::map<BooleanElement, Poly> from_steps = chevalley_boolean_product(rs, v, i);
        WeylGroup::ClassVector full =
            group.chevalley_multiply({{vidx, Poly::one(rank)}}, i);
        std::map<BooleanElement, Poly> projected;
        for (const auto& [idx, value] : full)
          if (group.is_boolean(idx)) projected.emplace(group.boolean_of(idx), value);
        if (from_steps != projected) ++bad;
        ++checked;
      }
    }
  }
  c.passed = bad == 0 && checked > 0;
  c.detail = std::to_string(checked) + " products over 5 systems, " + std::to_string(bad) +
             " mismatches";
  return c;
}

Criterion check_ordering_and_uniqueness() {
  Criterion c{"expansions ignore insertion order and reach each endpoint once"};
  const std::vector<std::pair<LieType, int>> systems{
      {LieType::A, 4}, {LieType::B, 3}, {LieType::C, 3}, {LieType::G, 2}};
  long long orderings = 0, endpoints = 0, bad = 0;
  for (auto [type, rank] : systems) {
    RootSystem rs(type, rank);
    std::vector<BooleanElement> all = enumerate_boolean(rs);
    for (const BooleanElement& u : all) {
      for (unsigned mask = 1; mask < (1u << rank); ++mask) {
        std::vector<int> roots;
        for (int i = 1; i <= rank; ++i)
          if (mask & (1u << (i - 1))) roots.push_back(i);

        std::map<BooleanElement, Poly> reference = boolean_product_expansion(rs, u, roots);
        std::vector<int> perm = roots;
        while (std::next_permutation(perm.begin(), perm.end())) {
          if (!(boolean_product_expansion(rs, u, perm) == reference)) ++bad;
          ++orderings;
        }

        for (const BooleanElement& w : all) {
          if (!diagram_contains(u, w)) continue;
          size_t paths =
              enumerate_paths(rs, u, roots, w, PathMode::kNonEquivariant).size();
          if (paths > 1) ++bad;
          ++endpoints;
        }
      }
    }
  }
  c.passed = bad == 0 && orderings > 0 && endpoints > 0;
  c.detail = std::to_string(orderings) + " reorderings and " + std::to_string(endpoints) +
             " endpoints, " + std::to_string(bad) + " violations";
  return c;
}

Criterion check_word_independence() {
  Criterion c{"recursion value is word independent with nonnegative coefficients"};
  const std::vector<std::pair<LieType, int>> systems{
      {LieType::A, 1}, {LieType::A, 2}, {LieType::A, 3}, {LieType::A, 4},
      {LieType::B, 2}, {LieType::B, 3}, {LieType::B, 4}, {LieType::C, 2},
      {LieType::C, 3}, {LieType::C, 4}, {LieType::D, 4}, {LieType::G, 2},
      {LieType::F, 4}};
  long long checked = 0, bad = 0;
  for (auto [type, rank] : systems) {
    RootSystem rs(type, rank);
    for (const BooleanElement& w : enumerate_boolean(rs)) {
      std::vector<std::vector<int>> words = all_reduced_words(w);
      std::vector<BooleanElement> subs = subdiagrams(w);
      for (const BooleanElement& u : subs)
        for (const BooleanElement& v : subs) {
          Poly reference = kk_constant(rs, u, v, w, words.front());
          if (!reference.has_nonnegative_coeffs()) ++bad;
          for (size_t k = 1; k < words.size(); ++k)
            if (!(kk_constant(rs, u, v, w, words[k]) == reference)) ++bad;
          ++checked;
        }
    }
  }
  c.passed = bad == 0 && checked > 0;
  c.detail = std::to_string(checked) + " pairs over 13 systems, " + std::to_string(bad) +
             " violations";
  return c;
}

Criterion check_scaling() {
  Criterion c{"path search cost grows at most quadratically"};
  std::vector<BenchPoint> points;
  for (int n : {16, 32, 64, 128, 256})
    points.push_back(bench_fast_path(n, kBenchSeed * 1000003 + n, kBenchSamples));
  double slope = loglog_slope(points);
  c.passed = slope <= kMaxLogLogSlope;
  std::ostringstream os;
  os << "log-log slope " << slope << " (limit " << kMaxLogLogSlope << ")";
  c.detail = os.str();
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  results.push_back(check_worked_example());
  results.push_back(check_branch_vertex_targets());
  results.push_back(check_doubled_arrow());
  results.push_back(check_recursion_agreement());
  results.push_back(check_zero_one());
  results.push_back(check_full_group_projection());
  results.push_back(check_ordering_and_uniqueness());
  results.push_back(check_word_independence());
  results.push_back(check_scaling());

  int failures = 0;
  for (size_t k = 0; k < results.size(); ++k) {
    const Criterion& c = results[k];
    if (!c.passed) ++failures;
    std::printf("[%s] criterion %zu: %s (%s)\n", c.passed ? "PASS" : "FAIL", k + 1,
                c.description.c_str(), c.detail.c_str());
  }
  if (failures) std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
