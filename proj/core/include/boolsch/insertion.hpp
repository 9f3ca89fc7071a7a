#pragma once

// The insertion calculus on boolean elements.  Inserting a simple root i
// into u either fixes u and contributes a linear weight in the torus
// variables (the equivariant step), or grows the diagram by one vertex:
// a vertex reachable from i when i lies in the support, or the vertex i
// itself with free orientations on its new edges when it does not.

#include <map>
#include <vector>

#include "boolsch/boolean_element.hpp"
#include "boolsch/poly.hpp"
#include "boolsch/root_system.hpp"

namespace boolsch {

enum class StepKind {
  AddReachable,  // i in supp(u): new vertex reachable from i through the arrows
  Equivariant,   // i in supp(u): u unchanged, weight sum_gamma (#paths i->gamma) t_gamma
  AddRoot,       // i not in supp(u): new vertex i, new edges oriented freely
};

struct InsertionStep {
  BooleanElement source;
  int root = 0;
  BooleanElement target;
  StepKind kind = StepKind::Equivariant;
  Poly weight;              // 1 for the growing kinds
  long long multiplicity = 1;
};

// Every admissible single insertion of `root` into u, deterministic order:
// the equivariant step first (when defined), then growing steps sorted by
// target.  Weights and multiplicities are filled in.
std::vector<InsertionStep> insertion_targets(const RootSystem& rs, const BooleanElement& u,
                                             int root);

// Weight of the equivariant step: sum over vertices gamma reachable from
// `root` in B(u) of (number of multigraph arrow paths root -> gamma) * t_gamma.
// The empty path contributes t_root.  Requires root in supp(u).
Poly equivariant_step_weight(const RootSystem& rs, const BooleanElement& u, int root);

// Multiplicity of the step u -> v inserting `root`: the number of directed
// multigraph paths from root to the new vertex that respect the orientation
// of B(v), i.e. the product of edge multiplicities along the tree path.
// Equivariant and new-root steps have multiplicity 1.  Throws
// std::invalid_argument if v is not an admissible target.
long long step_multiplicity(const RootSystem& rs, const BooleanElement& u, int root,
                            const BooleanElement& v);

struct InsertionPath {
  std::vector<InsertionStep> steps;
  Poly weight;                 // product of step weights
  long long multiplicity = 1;  // product of step multiplicities
};

enum class PathMode {
  kAll,             // equivariant steps allowed
  kNonEquivariant,  // growing steps only
};

// All insertion paths from u to w inserting `roots` in the given order, every
// intermediate diagram contained in w.  Monotonicity of the diagrams makes
// the containment filter safe to apply at each step.  Duplicate roots are
// rejected.
std::vector<InsertionPath> enumerate_paths(const RootSystem& rs, const BooleanElement& u,
                                           const std::vector<int>& roots,
                                           const BooleanElement& w,
                                           PathMode mode = PathMode::kAll);

// Existence test with early exit; same contract as enumerate_paths.
bool insertion_path_exists(const RootSystem& rs, const BooleanElement& u,
                           const std::vector<int>& roots, const BooleanElement& w,
                           PathMode mode = PathMode::kAll);

// Expansion of (class of v) * (class of s_root) over boolean elements:
// target -> multiplicity * weight for each admissible step.
std::map<BooleanElement, Poly> chevalley_boolean_product(const RootSystem& rs,
                                                         const BooleanElement& v, int root);

// Expansion of u * prod_{i in ordering} s_i over boolean elements, summing
// multiplicity * weight over all insertion paths.  The result does not
// depend on the ordering; duplicate entries are rejected.
std::map<BooleanElement, Poly> boolean_product_expansion(const RootSystem& rs,
                                                         const BooleanElement& u,
                                                         const std::vector<int>& ordering);

}  // namespace boolsch
