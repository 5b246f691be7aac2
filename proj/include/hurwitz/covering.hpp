// Labeled coverings of Schreier graphs: residues mod N on arrows encode the
// index shift in the fiber. Labels around an x-triangle sum to -1, the two
// labels of a y-edge sum to 1 (x-loops: 3a = -1, y-loops: 2a = 1, mod N).
#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/orbit.hpp"
#include "hurwitz/schreier.hpp"

namespace hurwitz {

struct LabeledCovering {
  SchreierGraph g;
  int N = 1;
  std::vector<int> x_label;  // label of arrow v -> x(v); for x-loops the loop label
  std::vector<int> y_label;  // label of arrow v -> y(v); for y-loops the loop label
  // spanning tree arrows carrying label 0 (as (kind, source): 'x' means
  // v->x(v), 'y' means v->y(v)); empty for coverings not built from a tree
  std::vector<std::pair<char, int>> tree;
};

// Checks ranges and the triangle/pair/loop congruences; throws
// std::invalid_argument on failure.
void validate_covering(const LabeledCovering& c);

// Reads the labels of an actual orbit off its quotient: BFS spanning tree from
// g.v0 (x-arrows visited before y-arrows), sections propagated along tree
// arrows, every arrow labeled by the induced fiber shift.
LabeledCovering derive_labels(const HurwitzOrbit& o, const SchreierGraph& g,
                              QuotientMap& q);

// Label sum along an xy- or yx-cycle (gauge invariant). kind is "xy" or "yx".
// Throws std::invalid_argument if the vertex list is not a cycle of that kind.
int cycle_label(const LabeledCovering& c, const std::vector<int>& cycle,
                const std::string& kind);

struct ConstraintEntry {
  std::string what;
  bool pass = false;
};
struct ConstraintReport {
  std::vector<ConstraintEntry> entries;
  bool pass = true;
  void add(std::string what, bool ok);
};

// Structural congruences plus the label consequences of simple intersection:
// cycles through x-/y-fixed vertices have label 0 (when the graph has more
// than one vertex), and xy/yx-paths between two vertices sharing both kinds of
// cycles have distinct labels.
ConstraintReport check_constraints(const LabeledCovering& c);

struct LiftedSpace {
  int N = 1;
  SchreierGraph g;    // the base graph
  Perm s1, s2;        // braid generator actions on points (v, i) = v*N + i
  int size() const { return g.n * N; }
  int point(int v, int i) const { return v * N + i; }
  int vertex_of(int p) const { return p / N; }
  int fiber_index(int p) const { return p % N; }
};

// Explicit homogeneous space over the covering: the x-generator maps (v,i) to
// (x(v), i + x_label), the y-generator to (y(v), i + y_label); sigma1 = x-gen
// after y-gen, sigma2 = y-gen after x-gen. Verifies the braid relation and the
// central element acting as i -> i+1; throws std::logic_error with the violated
// instance otherwise.
LiftedSpace lift_covering(const LabeledCovering& c);

// Per-vertex sigma cycle lengths through any fiber point over v:
//   first  = |C_xy(v)|  * N / gcd(label(C_xy(v)), N)
//   second = |C_yx(v)|  * N / gcd(label(C_yx(v)), N)
std::pair<long long, long long> sigma_cycle_lengths(const LabeledCovering& c, int v);

// Exhaustive enumeration of coverings with simply intersecting cycles:
// for each N <= N_max, free labels (non-tree arrows modulo the congruences)
// are enumerated, pre-filtered by the label constraints, then certified on the
// lift. Deterministic order: N ascending, then label vectors lexicographic.
std::vector<LabeledCovering> enumerate_coverings(const SchreierGraph& g, int N_max);

// ---- label templates for the stock graphs ----

// affine label c0 + ca*a + cb*b + cc*c in the symbols (a,b,c)
struct AffineLabel {
  int c0 = 0, ca = 0, cb = 0, cc = 0;
  int eval(int a, int b, int c, int N) const {
    long long v = c0 + static_cast<long long>(ca) * a + static_cast<long long>(cb) * b +
                  static_cast<long long>(cc) * c;
    return static_cast<int>(((v % N) + N) % N);
  }
  std::string str() const;
};

struct GraphTemplate {
  std::string name;
  SchreierGraph g;
  std::vector<AffineLabel> x_label, y_label;
  int nsyms = 0;

  LabeledCovering instantiate(int N, int a, int b, int c) const;
  std::vector<std::string> x_label_strings() const;
  std::vector<std::string> y_label_strings() const;
};

struct TemplateCovering {
  int N;
  std::array<int, 3> syms;  // (a, b, c); unused symbols are 0
  LabeledCovering covering;
};

// Same contract as enumerate_coverings but over the template's symbols, so
// results are reported in the template's gauge.
std::vector<TemplateCovering> enumerate_template_coverings(const GraphTemplate& t, int N_max);

// Equivariant bijection test between two spaces with sigma1/sigma2 actions.
bool equivariant_isomorphic(const Perm& a1, const Perm& a2, const Perm& b1, const Perm& b2);

}  // namespace hurwitz
