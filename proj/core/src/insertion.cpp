#include "boolsch/insertion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace boolsch {

namespace {

// Number of directed multigraph paths from `from` to `to` respecting the
// orientation of b.  The underlying graph is a tree, so the vertex path is
// unique and the count is the product of edge multiplicities along it;
// 0 when `to` is not reachable.
long long arrow_path_count(const RootSystem& rs, const BooleanElement& b, int from, int to) {
  std::vector<long long> count(rs.rank() + 1, 0);
  count[from] = 1;
  std::vector<int> queue{from};
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    if (x == to) return count[x];
    for (auto [f, t] : b.edges()) {
      if (f != x || count[t] != 0) continue;
      count[t] = count[x] * rs.edge_mult(f, t);
      queue.push_back(t);
    }
  }
  return 0;
}

void check_root_index(const RootSystem& rs, int root) {
  if (root < 1 || root > rs.rank())
    throw std::invalid_argument("simple root index " + std::to_string(root) + " out of range");
}

// Targets obtained by adding `gamma` to u with every orientation of the new
// edges; keeps those where `accept` holds, recording the multiplicity.
template <typename Accept>
void add_vertex_targets(const RootSystem& rs, const BooleanElement& u, int root, int gamma,
                        StepKind kind, Accept accept, std::vector<InsertionStep>& out) {
  std::vector<int> touched;  // supported neighbors of gamma
  for (int x : rs.neighbors(gamma))
    if (u.in_support(x)) touched.push_back(x);

  std::vector<int> support = u.support();
  support.insert(std::lower_bound(support.begin(), support.end(), gamma), gamma);

  const size_t k = touched.size();
  for (unsigned long bits = 0; bits < (1UL << k); ++bits) {
    std::vector<std::pair<int, int>> edges = u.edges();
    for (size_t e = 0; e < k; ++e) {
      if (bits & (1UL << e))
        edges.emplace_back(gamma, touched[e]);
      else
        edges.emplace_back(touched[e], gamma);
    }
    std::sort(edges.begin(), edges.end());
    BooleanElement v = make_element_unchecked(support, std::move(edges));
    long long mult = 1;
    if (!accept(v, mult)) continue;
    InsertionStep step;
    step.source = u;
    step.root = root;
    step.target = std::move(v);
    step.kind = kind;
    step.weight = Poly::one(rs.rank());
    step.multiplicity = mult;
    out.push_back(std::move(step));
  }
}

}  // namespace

Poly equivariant_step_weight(const RootSystem& rs, const BooleanElement& u, int root) {
  check_root_index(rs, root);
  if (!u.in_support(root))
    throw std::invalid_argument("equivariant step needs the root inside the support");
  Poly w(rs.rank());
  std::vector<long long> count(rs.rank() + 1, 0);
  count[root] = 1;
  std::vector<int> queue{root};
  w.add_term([&] {
    Poly::Exponents e(rs.rank(), 0);
    e[root - 1] = 1;
    return e;
  }(), 1);
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (auto [f, t] : u.edges()) {
      if (f != x || count[t] != 0) continue;
      count[t] = count[x] * rs.edge_mult(f, t);
      queue.push_back(t);
      Poly::Exponents e(rs.rank(), 0);
      e[t - 1] = 1;
      w.add_term(e, count[t]);
    }
  }
  return w;
}

std::vector<InsertionStep> insertion_targets(const RootSystem& rs, const BooleanElement& u,
                                             int root) {
  check_root_index(rs, root);
  std::vector<InsertionStep> out;

  if (u.in_support(root)) {
    InsertionStep eq;
    eq.source = u;
    eq.root = root;
    eq.target = u;
    eq.kind = StepKind::Equivariant;
    eq.weight = equivariant_step_weight(rs, u, root);
    eq.multiplicity = 1;
    out.push_back(std::move(eq));

    // Candidate new vertices: outside the support, Dynkin-adjacent to it.
    std::vector<int> candidates;
    for (int x : u.support())
      for (int g : rs.neighbors(x))
        if (!u.in_support(g) &&
            std::find(candidates.begin(), candidates.end(), g) == candidates.end())
          candidates.push_back(g);
    std::sort(candidates.begin(), candidates.end());

    std::vector<InsertionStep> grown;
    for (int gamma : candidates) {
      add_vertex_targets(rs, u, root, gamma, StepKind::AddReachable,
                         [&](const BooleanElement& v, long long& mult) {
                           mult = arrow_path_count(rs, v, root, gamma);
                           return mult != 0;
                         },
                         grown);
    }
    std::sort(grown.begin(), grown.end(),
              [](const InsertionStep& a, const InsertionStep& b) { return a.target < b.target; });
    for (auto& s : grown) out.push_back(std::move(s));
  } else {
    add_vertex_targets(rs, u, root, root, StepKind::AddRoot,
                       [](const BooleanElement&, long long&) { return true; }, out);
    std::sort(out.begin(), out.end(),
              [](const InsertionStep& a, const InsertionStep& b) { return a.target < b.target; });
  }
  return out;
}

long long step_multiplicity(const RootSystem& rs, const BooleanElement& u, int root,
                            const BooleanElement& v) {
  check_root_index(rs, root);
  if (v == u) {
    if (!u.in_support(root))
      throw std::invalid_argument("fixed-diagram step needs the root inside the support");
    return 1;
  }
  if (v.length() != u.length() + 1 || !diagram_contains(u, v))
    throw std::invalid_argument("target is not a one-vertex extension of the source");
  int gamma = 0;
  for (int i : v.support())
    if (!u.in_support(i)) gamma = i;

  if (!u.in_support(root)) {
    if (gamma != root)
      throw std::invalid_argument("inserting an unsupported root must add that root");
    return 1;
  }
  long long mult = arrow_path_count(rs, v, root, gamma);
  if (mult == 0)
    throw std::invalid_argument("new vertex is not reachable from the inserted root");
  return mult;
}

namespace {

void check_distinct_roots(const std::vector<int>& roots) {
  std::vector<int> s = roots;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("insertion root list has a duplicate");
}

bool walk_paths(const RootSystem& rs, const BooleanElement& current,
                const std::vector<int>& roots, size_t depth, const BooleanElement& w,
                PathMode mode, bool stop_at_first, std::vector<InsertionStep>* trail,
                std::vector<InsertionPath>* out) {
  if (depth == roots.size()) {
    if (!(current == w)) return false;
    if (out) {
      InsertionPath p;
      p.weight = Poly::one(rs.rank());
      p.multiplicity = 1;
      if (trail) {
        p.steps = *trail;
        for (const InsertionStep& s : p.steps) {
          p.weight = p.weight * s.weight;
          p.multiplicity *= s.multiplicity;
        }
      }
      out->push_back(std::move(p));
    }
    return true;
  }
  bool found = false;
  for (InsertionStep& step : insertion_targets(rs, current, roots[depth])) {
    if (mode == PathMode::kNonEquivariant && step.kind == StepKind::Equivariant) continue;
    if (!diagram_contains(step.target, w)) continue;
    BooleanElement next = step.target;
    if (trail) trail->push_back(std::move(step));
    bool hit = walk_paths(rs, next, roots, depth + 1, w, mode, stop_at_first, trail, out);
    if (trail) trail->pop_back();
    if (hit) {
      found = true;
      if (stop_at_first) return true;
    }
  }
  return found;
}

}  // namespace

std::vector<InsertionPath> enumerate_paths(const RootSystem& rs, const BooleanElement& u,
                                           const std::vector<int>& roots,
                                           const BooleanElement& w, PathMode mode) {
  for (int r : roots) check_root_index(rs, r);
  check_distinct_roots(roots);
  std::vector<InsertionPath> out;
  if (!diagram_contains(u, w)) return out;
  std::vector<InsertionStep> trail;
  walk_paths(rs, u, roots, 0, w, mode, /*stop_at_first=*/false, &trail, &out);
  return out;
}

bool insertion_path_exists(const RootSystem& rs, const BooleanElement& u,
                           const std::vector<int>& roots, const BooleanElement& w,
                           PathMode mode) {
  for (int r : roots) check_root_index(rs, r);
  check_distinct_roots(roots);
  if (!diagram_contains(u, w)) return false;
  return walk_paths(rs, u, roots, 0, w, mode, /*stop_at_first=*/true, nullptr, nullptr);
}

std::map<BooleanElement, Poly> chevalley_boolean_product(const RootSystem& rs,
                                                         const BooleanElement& v, int root) {
  std::map<BooleanElement, Poly> out;
  for (const InsertionStep& s : insertion_targets(rs, v, root)) {
    Poly contrib = s.weight * s.multiplicity;
    auto [it, fresh] = out.emplace(s.target, contrib);
    if (!fresh) it->second += contrib;
  }
  return out;
}

std::map<BooleanElement, Poly> boolean_product_expansion(const RootSystem& rs,
                                                         const BooleanElement& u,
                                                         const std::vector<int>& ordering) {
  for (int r : ordering) check_root_index(rs, r);
  check_distinct_roots(ordering);
  std::map<BooleanElement, Poly> acc;
  // Depth-first product expansion; weights multiply along the way.
  auto rec = [&](auto&& self, const BooleanElement& cur, size_t depth, const Poly& wt,
                 long long mult) -> void {
    if (depth == ordering.size()) {
      Poly contrib = wt * mult;
      auto [it, fresh] = acc.emplace(cur, contrib);
      if (!fresh) it->second += contrib;
      return;
    }
    for (const InsertionStep& s : insertion_targets(rs, cur, ordering[depth]))
      self(self, s.target, depth + 1, wt * s.weight, mult * s.multiplicity);
  };
  rec(rec, u, 0, Poly::one(rs.rank()), 1);
  return acc;
}

}  // namespace boolsch
