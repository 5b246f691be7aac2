// Monotonic cellular automata over finite sets, given by clauses
// "all points of req present => target present". The orbit rule has one tuple
// (p, s2 p, s1 s2 p) per point: whenever two tuple members are present the
// third appears.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hurwitz/perm.hpp"

namespace hurwitz {

struct SubsetState {
  int n = 0;
  std::vector<uint64_t> w;

  SubsetState() = default;
  explicit SubsetState(int size) : n(size), w((size + 63) / 64, 0) {}
  static SubsetState of(int size, const std::vector<int>& members);

  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  int count() const;
  bool is_full() const { return count() == n; }
  bool contains(const SubsetState& other) const;  // other subset of this
  std::vector<int> members() const;
  std::string hex() const;

  bool operator==(const SubsetState& o) const { return n == o.n && w == o.w; }
};

struct AutomatonRule {
  int n = 0;
  // clauses in CSR form
  std::vector<int> clause_target;
  std::vector<int> req_start;
  std::vector<int> req_point;
  // raw orbit tuples (p, s2 p, s1 s2 p), kept for the quarantine
  // characterization; empty for offset rules
  std::vector<std::array<int, 3>> tuples;
  // incidence: point -> clauses requiring it
  std::vector<int> inc_start, inc_clause;

  int clause_count() const { return static_cast<int>(clause_target.size()); }
  void add_clause(int target, const std::vector<int>& req);
  void finalize();
};

// Rule of the homogeneous space with generator actions s1, s2.
AutomatonRule orbit_rule(const Perm& s1, const Perm& s2);

// Rule on Z_m: w appears when all of w - a_1, ..., w - a_r are present.
// Offsets must be nonzero mod m; throws std::invalid_argument otherwise.
AutomatonRule zm_rule(int m, const std::vector<int>& offsets);

// One synchronous application of the local rule.
SubsetState step(const AutomatonRule& rule, const SubsetState& s);

// Least fixpoint of step containing s (worklist propagation).
SubsetState closure(const AutomatonRule& rule, const SubsetState& s);

// Closure restricted to a point mask: only clauses whose target and
// requirements lie inside the mask fire, and the seed is intersected with it.
SubsetState closure_masked(const AutomatonRule& rule, const SubsetState& s,
                           const SubsetState& mask);

bool is_quarantine(const AutomatonRule& rule, const SubsetState& s);
bool is_plague(const AutomatonRule& rule, const SubsetState& s);
bool spreads_to(const AutomatonRule& rule, const SubsetState& from, const SubsetState& to);

}  // namespace hurwitz
