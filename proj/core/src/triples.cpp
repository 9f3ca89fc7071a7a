#include "boolsch/triples.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "boolsch/fast_type_a.hpp"

namespace boolsch {

std::uint64_t TripleGenerator::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

BooleanTriple TripleGenerator::complementary_triple(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<int> support;
  for (int i = 1; i <= n; ++i)
    if (flip()) support.push_back(i);

  std::vector<std::pair<int, int>> edges;
  for (int a : support)
    for (int b : rs.neighbors(a))
      if (b > a && std::binary_search(support.begin(), support.end(), b)) {
        if (flip())
          edges.emplace_back(a, b);
        else
          edges.emplace_back(b, a);
      }
  BooleanElement w = BooleanElement::from_diagram(rs, support, std::move(edges));

  std::vector<int> usupp, vsupp;
  for (int i : w.support()) (flip() ? usupp : vsupp).push_back(i);

  BooleanTriple t;
  t.u = restrict_diagram(w, usupp);
  t.v = restrict_diagram(w, vsupp);
  t.w = std::move(w);
  return t;
}

BenchPoint bench_fast_path(int n, std::uint64_t seed, int samples) {
  using clock = std::chrono::steady_clock;
  const RootSystem rs(LieType::A, n);
  TripleGenerator gen(seed);

  std::vector<BooleanTriple> corpus;
  corpus.reserve(samples);
  for (int s = 0; s < samples; ++s) corpus.push_back(gen.complementary_triple(rs));

  // Repeat each timed call until the window comfortably exceeds the clock
  // resolution; smaller ranks get more repetitions.
  const int reps = std::max(1, 1 << std::max(0, 14 - 2 * static_cast<int>(std::log2(n))));

  std::vector<double> ns;
  ns.reserve(samples);
  double total = 0;
  for (const BooleanTriple& t : corpus) {
    auto t0 = clock::now();
    for (int r = 0; r < reps; ++r) {
      auto path = find_insertion_path_type_a(rs, t.u, t.v, t.w);
      if (path && path->steps.size() > static_cast<size_t>(n)) std::abort();  // keep the call alive
    }
    auto t1 = clock::now();
    double per_call =
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count() / double(reps);
    ns.push_back(per_call);
    total += per_call;
  }
  std::sort(ns.begin(), ns.end());
  BenchPoint p;
  p.n = n;
  p.median_ns = ns.empty() ? 0 : ns[ns.size() / 2];
  p.mean_ns = ns.empty() ? 0 : total / ns.size();
  return p;
}

double loglog_slope(const std::vector<BenchPoint>& points) {
  const size_t m = points.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const BenchPoint& p : points) {
    double x = std::log(double(p.n));
    double y = std::log(p.median_ns);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace boolsch
