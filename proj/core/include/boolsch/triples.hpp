#pragma once

// Deterministic pseudo-random boolean triples and the timing loop used by
// the bench command.  Randomness comes from a splitmix64 stream seeded
// explicitly, so a fixed seed reproduces the same corpus on any platform;
// std::random distributions are avoided on purpose.

#include <cstdint>
#include <vector>

#include "boolsch/boolean_element.hpp"
#include "boolsch/root_system.hpp"

namespace boolsch {

struct BooleanTriple {
  BooleanElement u, v, w;
};

class TripleGenerator {
 public:
  explicit TripleGenerator(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  bool flip() { return next() & 1; }

  // w: vertices kept with probability 1/2, orientations uniform.
  // u: a random subdiagram of w.  v: the complementary support, with w's
  // orientations, so that lengths add up and the search is non-trivial.
  BooleanTriple complementary_triple(const RootSystem& rs);

 private:
  std::uint64_t state_;
};

struct BenchPoint {
  int n = 0;
  double median_ns = 0;
  double mean_ns = 0;
};

// Median and mean wall time per call of find_insertion_path_type_a on
// `samples` generated triples in A_n, each timed over enough repetitions to
// dominate clock granularity.
BenchPoint bench_fast_path(int n, std::uint64_t seed, int samples);

// Least-squares slope of log(median_ns) against log(n).
double loglog_slope(const std::vector<BenchPoint>& points);

}  // namespace boolsch
