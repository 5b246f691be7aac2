// Quotients of Hurwitz orbits by the center of the braid group, presented as
// pointed Schreier graphs of the modular group with generators
//   x = s2^-1 s1^-1   (order 3)      y = s1 s2 s1   (order 2)
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/orbit.hpp"
#include "hurwitz/perm.hpp"

namespace hurwitz {

struct SchreierGraph {
  int n = 0;
  Perm x;       // x^3 = id
  Perm y;       // y^2 = id
  int v0 = -1;  // distinguished vertex, -1 when unset

  bool has_point() const { return v0 >= 0; }
};

// Throws std::invalid_argument unless x^3 = y^2 = id, both are permutations of
// the same size, and the graph is connected.
void validate_graph(const SchreierGraph& g);

struct FixedSets {
  std::vector<int> vx;   // x(v) = v
  std::vector<int> vy;   // y(v) = v
  std::vector<int> vxy;  // x(y(v)) = v
};
FixedSets classify_fixed(const SchreierGraph& g);

struct QuotientMap {
  std::vector<int> fiber_of;  // orbit point -> vertex
  int N = 1;                  // common fiber size
  std::vector<int> section;   // per vertex, the point chosen as v[0]
};

// Vertices are the <Delta>-orbits, ordered by their minimal contained point
// index; v0 is the vertex of the orbit base point. Throws std::logic_error if
// fibers come out with unequal sizes (an upstream bug).
std::pair<SchreierGraph, QuotientMap> quotient(const HurwitzOrbit& o);
std::pair<SchreierGraph, QuotientMap> quotient_of_action(const Perm& s1, const Perm& s2,
                                                         int base_point);

std::vector<std::vector<int>> xy_cycles(const SchreierGraph& g);
std::vector<std::vector<int>> yx_cycles(const SchreierGraph& g);

// "n{l1,...,lk}" with xy-cycle lengths sorted descending
std::string signature(const SchreierGraph& g);

// True iff some vertex bijection commutes with x and y (and maps v0 to v0 when
// respect_point). Returns the mapping when found.
std::optional<Perm> find_isomorphism(const SchreierGraph& a, const SchreierGraph& b,
                                     bool respect_point);
bool are_isomorphic(const SchreierGraph& a, const SchreierGraph& b, bool respect_point);

// DOT digraph: x-arrows solid, y-edges dashed (each rendered once), loops as
// self-edges. Optional per-arrow labels: x_labels[v] annotates v->x(v),
// y_labels[v] annotates v->y(v).
std::string export_dot(const SchreierGraph& g,
                       const std::vector<std::string>* x_labels = nullptr,
                       const std::vector<std::string>* y_labels = nullptr);

}  // namespace hurwitz
