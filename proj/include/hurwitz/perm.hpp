// Small helpers for permutations stored as image vectors: p[i] is the image of i.
#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hurwitz {

using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// (f after g)[i] = f[g[i]]
inline Perm compose(const Perm& f, const Perm& g) {
  if (f.size() != g.size()) throw std::invalid_argument("compose: size mismatch");
  Perm r(f.size());
  for (size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

inline bool is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

// Cycles in deterministic order: each cycle starts at its smallest unvisited point.
inline std::vector<std::vector<int>> cycles_of(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    int j = static_cast<int>(i);
    while (!seen[j]) {
      seen[j] = 1;
      c.push_back(j);
      j = p[j];
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<int> cycle_lengths(const Perm& p) {
  std::vector<int> ls;
  for (const auto& c : cycles_of(p)) ls.push_back(static_cast<int>(c.size()));
  return ls;
}

inline long long perm_order(const Perm& p) {
  long long o = 1;
  for (const auto& c : cycles_of(p)) o = std::lcm(o, static_cast<long long>(c.size()));
  return o;
}

// Transitivity of the group generated by the given permutations.
inline bool is_transitive(int n, const std::vector<const Perm*>& gens) {
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Perm* g : gens) {
      int w = (*g)[v];
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        stack.push_back(w);
      }
    }
  }
  return cnt == n;
}

}  // namespace hurwitz
