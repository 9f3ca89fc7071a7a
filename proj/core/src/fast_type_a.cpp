#include "boolsch/fast_type_a.hpp"

#include <algorithm>
#include <stdexcept>

namespace boolsch {

namespace {

// Orientation of the path edge {e, e+1}: +1 when the arrow is (e -> e+1),
// -1 when it is (e+1 -> e), 0 when absent.
struct PathDiagram {
  std::vector<char> in;          // 1..n
  std::vector<signed char> dir;  // 1..n-1, indexed by the lower endpoint

  explicit PathDiagram(int n) : in(n + 1, 0), dir(std::max(n, 1), 0) {}

  void load(const BooleanElement& b) {
    for (int i : b.support()) in[i] = 1;
    for (auto [f, t] : b.edges()) {
      if (t == f + 1)
        dir[f] = +1;
      else
        dir[t] = -1;
    }
  }
};

struct Inserter {
  int n;
  PathDiagram b;
  const PathDiagram& w;
  std::vector<int> lo, hi;  // cached reach interval per root; 0 = unset
  std::vector<std::pair<int, int>> record;  // (root, added vertex)

  Inserter(int n_, const PathDiagram& w_) : n(n_), b(n_), w(w_), lo(n_ + 1, 0), hi(n_ + 1, 0) {}

  // Adds `gamma`, orienting its edges toward present neighbors as in w.
  // Valid only when gamma and those neighbors all lie in supp(w).
  void add_vertex(int root, int gamma) {
    b.in[gamma] = 1;
    if (gamma > 1 && b.in[gamma - 1]) b.dir[gamma - 1] = w.dir[gamma - 1];
    if (gamma < n && b.in[gamma + 1]) b.dir[gamma] = w.dir[gamma];
    record.emplace_back(root, gamma);
  }

  // Reach of `root` along the arrows is an interval; it only grows as the
  // diagram grows, so the cached endpoints extend monotonically and the
  // total extension work per root is O(n).
  void extend(int i) {
    if (lo[i] == 0) lo[i] = hi[i] = i;
    while (lo[i] > 1 && b.in[lo[i] - 1] && b.dir[lo[i] - 1] == -1) --lo[i];
    while (hi[i] < n && b.in[hi[i] + 1] && b.dir[hi[i]] == +1) ++hi[i];
  }
};

}  // namespace

std::optional<InsertionPath> find_insertion_path_type_a(const RootSystem& rs,
                                                        const BooleanElement& u,
                                                        const BooleanElement& v,
                                                        const BooleanElement& w) {
  if (rs.type() != LieType::A)
    throw std::invalid_argument("find_insertion_path_type_a requires type A");
  const int n = rs.rank();
  if (!diagram_contains(u, w)) return std::nullopt;

  PathDiagram wd(n);
  wd.load(w);
  Inserter ins(n, wd);
  ins.b.load(u);

  std::vector<int> roots = v.support();  // ascending
  std::vector<char> active(roots.size(), 1);
  size_t remaining = roots.size();

  // Phase 1: apply every insertion whose new vertex is forced, sweeping the
  // pending roots in ascending order until nothing changes.  A root outside
  // the current support can only add itself; a supported root can only add a
  // vertex adjacent to its reach interval, which is forced when the other
  // side is closed off.  Zero admissible vertices for a pending root can
  // never be repaired later, so that aborts.
  bool changed = true;
  while (changed && remaining > 0) {
    changed = false;
    for (size_t k = 0; k < roots.size(); ++k) {
      if (!active[k]) continue;
      const int i = roots[k];
      if (!ins.b.in[i]) {
        if (!wd.in[i]) return std::nullopt;
        ins.add_vertex(i, i);
      } else {
        ins.extend(i);
        const int gl = ins.lo[i] - 1, gr = ins.hi[i] + 1;
        const bool cand_l = gl >= 1 && !ins.b.in[gl];
        const bool cand_r = gr <= n && !ins.b.in[gr];
        const bool ok_l = cand_l && wd.in[gl] && wd.dir[gl] == -1;
        const bool ok_r = cand_r && wd.in[gr] && wd.dir[gr - 1] == +1;
        if (!ok_l && !ok_r) return std::nullopt;
        if (cand_l && cand_r) continue;  // ambiguous, settled in phase 2
        ins.add_vertex(i, cand_l ? gl : gr);
      }
      active[k] = 0;
      --remaining;
      changed = true;
    }
  }

  // Phase 2: match the surviving roots with the still-missing vertices of w,
  // both in increasing order, and check each pairing is a legal insertion.
  std::vector<int> missing;
  for (int j = 1; j <= n; ++j)
    if (wd.in[j] && !ins.b.in[j]) missing.push_back(j);
  if (missing.size() != remaining) return std::nullopt;
  size_t m = 0;
  for (size_t k = 0; k < roots.size(); ++k) {
    if (!active[k]) continue;
    const int i = roots[k];
    const int j = missing[m++];
    if (!ins.b.in[i]) {
      if (j != i) return std::nullopt;
      ins.add_vertex(i, i);
      continue;
    }
    ins.extend(i);
    const int gl = ins.lo[i] - 1, gr = ins.hi[i] + 1;
    if (j == gl && gl >= 1 && !ins.b.in[gl] && wd.in[gl] && wd.dir[gl] == -1)
      ins.add_vertex(i, gl);
    else if (j == gr && gr <= n && !ins.b.in[gr] && wd.in[gr] && wd.dir[gr - 1] == +1)
      ins.add_vertex(i, gr);
    else
      return std::nullopt;
  }

  // Replay the record into a path.  Every intermediate diagram is the
  // restriction of w to its support, so snapshots are cheap.
  InsertionPath path;
  path.weight = Poly::one(n);
  path.multiplicity = 1;
  std::vector<int> support = u.support();
  BooleanElement cur = u;
  for (auto [root, gamma] : ins.record) {
    support.insert(std::lower_bound(support.begin(), support.end(), gamma), gamma);
    BooleanElement next = restrict_diagram(w, support);
    InsertionStep step;
    step.source = cur;
    step.root = root;
    step.target = next;
    step.kind = (root == gamma) ? StepKind::AddRoot : StepKind::AddReachable;
    step.weight = Poly::one(n);
    step.multiplicity = 1;
    path.steps.push_back(std::move(step));
    cur = std::move(next);
  }
  return path;
}

int fast_ordinary_constant_type_a(const RootSystem& rs, const BooleanElement& u,
                                  const BooleanElement& v, const BooleanElement& w) {
  return find_insertion_path_type_a(rs, u, v, w) &&
                 find_insertion_path_type_a(rs, v, u, w)
             ? 1
             : 0;
}

}  // namespace boolsch
