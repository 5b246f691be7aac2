#include "hurwitz/metrics.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

namespace hurwitz {

int certify_cap_from_env(int fallback) {
  if (const char* env = std::getenv("HURWITZ_SEARCH_CAP")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return fallback;
}

namespace {

struct BitsetKey {
  std::vector<uint64_t> w;
  int budget;
  bool operator==(const BitsetKey& o) const { return budget == o.budget && w == o.w; }
};
struct BitsetKeyHash {
  size_t operator()(const BitsetKey& k) const {
    uint64_t h = 1469598103934665603ULL ^ static_cast<uint64_t>(k.budget);
    for (uint64_t v : k.w) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
  }
};

struct Searcher {
  const AutomatonRule& rule;
  int k;  // target size
  std::vector<int> chosen;
  SubsetState best;
  uint64_t nodes = 0;
  uint64_t pruned = 0;
  std::unordered_map<BitsetKey, char, BitsetKeyHash> failed;
  std::vector<int> root_candidates;

  explicit Searcher(const AutomatonRule& r) : rule(r), best(r.n) {}

  bool dfs(const SubsetState& cl, int next, int remaining) {
    ++nodes;
    if (cl.is_full()) return true;
    if (remaining == 0) return false;

    BitsetKey key{cl.w, remaining};
    if (failed.count(key)) {
      ++pruned;
      return false;
    }
    const std::vector<int>* cands = nullptr;
    if (chosen.empty()) cands = &root_candidates;
    bool ok = false;
    if (cands) {
      for (int q : *cands) {
        if (cl.test(q)) continue;
        SubsetState with = cl;
        with.set(q);
        chosen.push_back(q);
        if (dfs(closure(rule, with), q + 1, remaining - 1)) {
          ok = true;
          break;
        }
        chosen.pop_back();
      }
    } else {
      for (int q = next; q < rule.n; ++q) {
        if (cl.test(q)) continue;  // adding a point inside the closure never helps
        SubsetState with = cl;
        with.set(q);
        chosen.push_back(q);
        if (dfs(closure(rule, with), q + 1, remaining - 1)) {
          ok = true;
          break;
        }
        chosen.pop_back();
      }
    }
    if (!ok && failed.size() < (1u << 22)) failed.emplace(std::move(key), 1);
    return ok;
  }
};

std::vector<int> orbit_minima(int n, const std::vector<Perm>& gens) {
  if (gens.empty()) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<int> rep;
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    rep.push_back(i);  // first unseen point is its orbit minimum
    std::vector<int> stack{i};
    seen[i] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Perm& g : gens)
        if (!seen[g[v]]) {
          seen[g[v]] = 1;
          stack.push_back(g[v]);
        }
    }
  }
  return rep;
}

}  // namespace

PlagueResult greedy_plague(const AutomatonRule& rule) {
  PlagueResult res;
  std::vector<int> picked;
  SubsetState cl(rule.n);
  while (!cl.is_full()) {
    int best_q = -1, best_gain = -1;
    for (int q = 0; q < rule.n; ++q) {
      if (cl.test(q)) continue;
      SubsetState with = cl;
      with.set(q);
      int gain = closure(rule, with).count();
      if (gain > best_gain) {
        best_gain = gain;
        best_q = q;
      }
    }
    picked.push_back(best_q);
    cl.set(best_q);
    cl = closure(rule, cl);
  }
  res.witness = SubsetState::of(rule.n, picked);
  res.size = static_cast<int>(picked.size());
  res.certified_minimal = false;
  return res;
}

PlagueResult minimal_plague(const AutomatonRule& rule, const SearchOptions& opts) {
  if (rule.n == 0) throw std::invalid_argument("minimal_plague: empty ground set");
  if (rule.n > opts.certify_cap) {
    PlagueResult res = greedy_plague(rule);
    return res;
  }

  for (int k = 1; k <= rule.n; ++k) {
    Searcher s(rule);
    s.k = k;
    s.root_candidates = orbit_minima(rule.n, opts.automorphisms);
    SubsetState empty(rule.n);
    if (s.dfs(empty, 0, k)) {
      PlagueResult res;
      res.witness = SubsetState::of(rule.n, s.chosen);
      res.size = k;
      res.certified_minimal = true;
      res.nodes_explored = s.nodes;
      res.pruned = s.pruned;
      return res;
    }
  }
  throw std::logic_error("minimal_plague: the full set is always a plague");
}

std::optional<int> exhaustive_oracle(const AutomatonRule& rule, int k_max, SubsetState* witness) {
  if (rule.n > 24) throw std::invalid_argument("exhaustive oracle capped at 24 points");
  for (int k = 1; k <= std::min(k_max, rule.n); ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      SubsetState s = SubsetState::of(rule.n, idx);
      if (is_plague(rule, s)) {
        if (witness) *witness = s;
        return k;
      }
      // next k-combination of {0..n-1}
      int i = k - 1;
      while (i >= 0 && idx[i] == rule.n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

Rational immunity_from_result(const PlagueResult& r, int ground) {
  if (!r.certified_minimal)
    throw std::runtime_error("immunity requires a certified minimal plague");
  return Rational(r.size, ground);
}

Rational immunity(const AutomatonRule& rule, const SearchOptions& opts) {
  return immunity_from_result(minimal_plague(rule, opts), rule.n);
}

Rational omega_prime(long long i, long long j) {
  if (i < 1 || j < 1) throw std::invalid_argument("omega_prime indices start at 1");
  int a = static_cast<int>(std::min<long long>(i, 5));
  int b = static_cast<int>(std::min<long long>(j, 5));
  static const Rational table[5][5] = {
      {Rational(1), Rational(1, 3), Rational(11, 24), Rational(1, 2), Rational(1, 2)},
      {Rational(1, 3), Rational(1, 3), Rational(1, 3), Rational(1, 3), Rational(1, 3)},
      {Rational(11, 24), Rational(1, 3), Rational(7, 24), Rational(7, 24), Rational(7, 24)},
      {Rational(1, 2), Rational(1, 3), Rational(7, 24), Rational(1, 4), Rational(1, 4)},
      {Rational(1, 2), Rational(1, 3), Rational(7, 24), Rational(1, 4), Rational(1, 4)}};
  return table[a - 1][b - 1];
}

SignatureRegistry SignatureRegistry::builtin() {
  SignatureRegistry reg;
  // The three coverings with corrected weights are defined in an external
  // catalog; matches are best-effort keyed on quotient size, fiber size, and
  // cycle labels. Corrections only apply when the base matrix entry agrees
  // with the catalog value.
  RegistryEntry e1;
  e1.id = "Sigma^{5;3,2}_4A";
  e1.quotient_size = 4;
  e1.N = 5;
  e1.sig = "4{3,1}";
  e1.cycle_labels = {0, 0, 4, 4};
  e1.correction = Rational(1, 30);
  e1.fiber = RegistryEntry::Fiber::x_loop;
  e1.expected_base = Rational(7, 24);
  e1.verified = false;
  reg.entries.push_back(e1);

  RegistryEntry e2;
  e2.id = "Sigma^{4;2,2}_6A";
  e2.quotient_size = 6;
  e2.N = 4;
  e2.correction = Rational(1, 12);
  e2.fiber = RegistryEntry::Fiber::index;
  e2.fiber_index = 2;
  e2.expected_base = Rational(1, 4);
  e2.verified = false;
  reg.entries.push_back(e2);

  RegistryEntry e3;
  e3.id = "Sigma_12C_trivial";
  e3.quotient_size = 12;
  e3.N = 1;
  e3.correction = Rational(1, 24);
  e3.fiber = RegistryEntry::Fiber::all;
  e3.expected_base = Rational(7, 24);
  e3.verified = false;
  reg.entries.push_back(e3);
  return reg;
}

namespace {

std::vector<int> sorted_cycle_labels(const LabeledCovering& cov) {
  std::vector<int> labs;
  for (const auto& c : xy_cycles(cov.g)) labs.push_back(cycle_label(cov, c, "xy"));
  for (const auto& c : yx_cycles(cov.g)) labs.push_back(cycle_label(cov, c, "yx"));
  std::sort(labs.begin(), labs.end());
  return labs;
}

const RegistryEntry* match_registry(const LabeledCovering& cov, const SignatureRegistry& reg) {
  std::vector<int> labs = sorted_cycle_labels(cov);
  std::string sig = signature(cov.g);
  for (const auto& e : reg.entries) {
    if (e.quotient_size != cov.g.n || e.N != cov.N) continue;
    if (!e.sig.empty() && e.sig != sig) continue;
    if (!e.cycle_labels.empty() && e.cycle_labels != labs) continue;
    return &e;
  }
  return nullptr;
}

}  // namespace

WeightResult weight(const LabeledCovering& cov, const SignatureRegistry& reg) {
  WeightResult res;
  const RegistryEntry* entry = match_registry(cov, reg);
  std::vector<char> corrected(cov.g.n, 0);
  if (entry) {
    for (int v = 0; v < cov.g.n; ++v) {
      switch (entry->fiber) {
        case RegistryEntry::Fiber::all: corrected[v] = 1; break;
        case RegistryEntry::Fiber::x_loop: corrected[v] = cov.g.x[v] == v; break;
        case RegistryEntry::Fiber::y_loop: corrected[v] = cov.g.y[v] == v; break;
        case RegistryEntry::Fiber::index: corrected[v] = v == entry->fiber_index; break;
      }
    }
    res.notes.push_back("registry match: " + entry->id +
                        (entry->verified ? "" : " (unverified against the defining catalog)"));
  }

  Rational sum(0);
  for (int v = 0; v < cov.g.n; ++v) {
    auto [i, j] = sigma_cycle_lengths(cov, v);
    Rational base = omega_prime(i, j);
    if (entry && corrected[v]) {
      if (base == entry->expected_base) {
        base = base + entry->correction;
      } else {
        res.notes.push_back("registry match " + entry->id + " inconsistent at vertex " +
                            std::to_string(v) + " (matrix entry " + base.str() +
                            ", catalog expects " + entry->expected_base.str() +
                            "); correction skipped");
      }
    }
    sum += base;  // every fiber point over v has the same cycle lengths
  }
  res.value = sum / Rational(cov.g.n);
  return res;
}

Rational weight_value(const LabeledCovering& cov) {
  return weight(cov, SignatureRegistry::builtin()).value;
}

ConjectureResult check_conjecture(const LabeledCovering& cov, const SignatureRegistry& reg,
                                  const SearchOptions& opts) {
  ConjectureResult res;
  WeightResult w = weight(cov, reg);
  res.omega = w.value;
  res.notes = w.notes;

  LiftedSpace L = lift_covering(cov);
  AutomatonRule rule = orbit_rule(L.s1, L.s2);

  SearchOptions effective = opts;
  // the central element is always an automorphism of the rule
  Perm delta = delta_of(L.s1, L.s2);
  effective.automorphisms.push_back(delta);

  PlagueResult p = minimal_plague(rule, effective);
  res.plague = p;
  res.immunity_value = Rational(p.size, rule.n);
  res.exact = p.certified_minimal;
  if (res.exact) {
    res.verdict = res.immunity_value <= res.omega ? "holds" : "fails";
  } else {
    res.verdict = res.immunity_value <= res.omega ? "holds" : "inconclusive";
    if (res.verdict == "holds")
      res.notes.push_back("immunity bound " + res.immunity_value.str() +
                          " is an upper bound (search uncertified above cap)");
  }
  return res;
}

}  // namespace hurwitz
