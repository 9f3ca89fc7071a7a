#include "boolsch/constants.hpp"

#include <algorithm>
#include <stdexcept>

#include "boolsch/insertion.hpp"

namespace boolsch {

namespace {

// Accumulates multiplicity * weight over all insertion paths without
// materializing the step lists; this is the hot loop of the sweeps.
void accumulate_paths(const RootSystem& rs, const BooleanElement& current,
                      const std::vector<int>& roots, size_t depth, const BooleanElement& w,
                      PathMode mode, const Poly& weight, long long mult, Poly& sum) {
  if (depth == roots.size()) {
    if (current == w) sum += weight * mult;
    return;
  }
  for (const InsertionStep& s : insertion_targets(rs, current, roots[depth])) {
    if (mode == PathMode::kNonEquivariant && s.kind == StepKind::Equivariant) continue;
    if (!diagram_contains(s.target, w)) continue;
    accumulate_paths(rs, s.target, roots, depth + 1, w, mode,
                     mode == PathMode::kNonEquivariant ? weight : weight * s.weight,
                     mult * s.multiplicity, sum);
  }
}

std::vector<int> resolve_ordering(const BooleanElement& v, const ConstantOptions& options) {
  if (!options.ordering) return v.support();
  std::vector<int> ord = *options.ordering;
  std::vector<int> sorted = ord;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != v.support())
    throw std::invalid_argument("ordering is not a permutation of supp(v)");
  return ord;
}

Poly constant_impl(const RootSystem& rs, const BooleanElement& u, const BooleanElement& v,
                   const BooleanElement& w, const ConstantOptions& options, PathMode mode) {
  Poly zero = Poly::zero(rs.rank());
  if (!diagram_contains(u, w) || !diagram_contains(v, w)) return zero;
  if (u.length() + v.length() < w.length()) return zero;
  std::vector<int> ordering = resolve_ordering(v, options);

  // Existence gate in the opposite direction; any insertion order works since
  // path existence does not depend on it.
  if (!insertion_path_exists(rs, v, u.support(), w, mode)) return zero;

  Poly sum = zero;
  accumulate_paths(rs, u, ordering, 0, w, mode, Poly::one(rs.rank()), 1, sum);
  return sum;
}

}  // namespace

Poly equivariant_constant(const RootSystem& rs, const BooleanElement& u,
                          const BooleanElement& v, const BooleanElement& w,
                          const ConstantOptions& options) {
  return constant_impl(rs, u, v, w, options, PathMode::kAll);
}

long long ordinary_constant(const RootSystem& rs, const BooleanElement& u,
                            const BooleanElement& v, const BooleanElement& w,
                            const ConstantOptions& options) {
  Poly p = constant_impl(rs, u, v, w, options, PathMode::kNonEquivariant);
  return p.constant_term();
}

std::map<std::pair<BooleanElement, BooleanElement>, Poly> constant_table(
    const RootSystem& rs, const BooleanElement& w, bool equivariant) {
  std::map<std::pair<BooleanElement, BooleanElement>, Poly> table;
  std::vector<BooleanElement> subs = subdiagrams(w);
  for (const BooleanElement& u : subs) {
    for (const BooleanElement& v : subs) {
      Poly d = equivariant ? equivariant_constant(rs, u, v, w)
                           : Poly::constant(rs.rank(), ordinary_constant(rs, u, v, w));
      if (!d.is_zero()) table.emplace(std::make_pair(u, v), std::move(d));
    }
  }
  return table;
}

}  // namespace boolsch
