// Exact minimal-plague search with an exhaustive oracle, immunity, the
// cycle-length weight matrix, and the immunity <= weight comparison.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/automaton.hpp"
#include "hurwitz/covering.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

struct PlagueResult {
  SubsetState witness;
  int size = 0;
  bool certified_minimal = false;
  uint64_t nodes_explored = 0;
  uint64_t pruned = 0;
};

struct SearchOptions {
  int certify_cap = 30;  // ground sets above this only get an uncertified bound
  // automorphisms of the rule (as point permutations); used for root-level
  // symmetry reduction
  std::vector<Perm> automorphisms;
};

int certify_cap_from_env(int fallback = 30);  // HURWITZ_SEARCH_CAP override

// Exact minimum via ascending-size depth-first search; candidate points
// already inside the closure of the partial set are skipped, identical
// closures are memoized, and the first chosen point ranges over automorphism
// orbit minima. Above the cap, returns a greedy witness with
// certified_minimal = false.
PlagueResult minimal_plague(const AutomatonRule& rule, const SearchOptions& opts = {});

// Plain enumeration of every subset of size 1..k_max (no pruning); the trusted
// slow path. Ground set must have at most 24 points.
std::optional<int> exhaustive_oracle(const AutomatonRule& rule, int k_max,
                                     SubsetState* witness = nullptr);

// Minimal plague size / ground size. Throws std::runtime_error when the
// minimum is not certified.
Rational immunity(const AutomatonRule& rule, const SearchOptions& opts = {});
Rational immunity_from_result(const PlagueResult& r, int ground);

// Weight matrix entry, indices clamped to 5 (the table stabilizes); symmetric.
Rational omega_prime(long long i, long long j);

// ---- special-case registry for the weight ----

struct RegistryEntry {
  std::string id;
  // match keys: quotient size, fiber size, sorted multiset of xy- and
  // yx-cycle labels (empty = wildcard), optional signature (empty = wildcard)
  int quotient_size = 0;
  int N = 0;
  std::vector<int> cycle_labels;
  std::string sig;
  Rational correction;
  // designated fiber: all vertices, the x-loop vertices, the y-loop vertices,
  // or an explicit vertex index
  enum class Fiber { all, x_loop, y_loop, index } fiber = Fiber::all;
  int fiber_index = -1;
  Rational expected_base;  // the matrix value the correction is added to
  bool verified = false;   // transcribed from the defining catalog or not
};

struct SignatureRegistry {
  std::vector<RegistryEntry> entries;
  static SignatureRegistry builtin();
};

struct WeightResult {
  Rational value;
  std::vector<std::string> notes;  // registry matches, skipped corrections
};

WeightResult weight(const LabeledCovering& cov, const SignatureRegistry& reg);
Rational weight_value(const LabeledCovering& cov);  // with the builtin registry

// ---- conjectured bound: immunity <= weight ----

struct ConjectureResult {
  Rational immunity_value;  // exact when exact == true, else a verified upper bound
  bool exact = false;
  Rational omega;
  std::string verdict;  // "holds" | "inconclusive" | "fails"
  PlagueResult plague;
  std::vector<std::string> notes;
};

ConjectureResult check_conjecture(const LabeledCovering& cov,
                                  const SignatureRegistry& reg = SignatureRegistry::builtin(),
                                  const SearchOptions& opts = {});

// Greedy plague witness (upper bound only).
PlagueResult greedy_plague(const AutomatonRule& rule);

}  // namespace hurwitz
