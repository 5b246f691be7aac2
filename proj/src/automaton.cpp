#include "hurwitz/automaton.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

SubsetState SubsetState::of(int size, const std::vector<int>& members) {
  SubsetState s(size);
  for (int m : members) {
    if (m < 0 || m >= size) throw std::invalid_argument("subset member out of range");
    s.set(m);
  }
  return s;
}

int SubsetState::count() const {
  int c = 0;
  for (uint64_t word : w) c += std::popcount(word);
  return c;
}

bool SubsetState::contains(const SubsetState& other) const {
  if (n != other.n) throw std::invalid_argument("subset size mismatch");
  for (size_t i = 0; i < w.size(); ++i)
    if (other.w[i] & ~w[i]) return false;
  return true;
}

std::vector<int> SubsetState::members() const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

std::string SubsetState::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (int i = (n + 3) / 4; i-- > 0;) {
    int nib = 0;
    for (int b = 0; b < 4; ++b) {
      int bit = i * 4 + b;
      if (bit < n && test(bit)) nib |= 1 << b;
    }
    s.push_back(digits[nib]);
  }
  return s.empty() ? "0" : s;
}

void AutomatonRule::add_clause(int target, const std::vector<int>& req) {
  clause_target.push_back(target);
  if (req_start.empty()) req_start.push_back(0);
  for (int p : req) req_point.push_back(p);
  req_start.push_back(static_cast<int>(req_point.size()));
}

void AutomatonRule::finalize() {
  if (req_start.empty()) req_start.push_back(0);
  std::vector<int> deg(n, 0);
  for (int p : req_point) deg[p]++;
  inc_start.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) inc_start[i + 1] = inc_start[i] + deg[i];
  inc_clause.assign(req_point.size(), 0);
  std::vector<int> fill = inc_start;
  for (int cl = 0; cl < clause_count(); ++cl)
    for (int k = req_start[cl]; k < req_start[cl + 1]; ++k)
      inc_clause[fill[req_point[k]]++] = cl;
}

AutomatonRule orbit_rule(const Perm& s1, const Perm& s2) {
  const int n = static_cast<int>(s1.size());
  AutomatonRule r;
  r.n = n;

  std::set<std::array<int, 3>> sym_triples;   // sorted member sets, all distinct
  std::set<std::array<int, 2>> edges;         // degenerate tuples reduce to implications
  for (int p = 0; p < n; ++p) {
    std::array<int, 3> t{p, s2[p], s1[s2[p]]};
    r.tuples.push_back(t);
    if (t[0] != t[1] && t[1] != t[2] && t[0] != t[2]) {
      std::array<int, 3> key = t;
      std::sort(key.begin(), key.end());
      sym_triples.insert(key);
    } else if (t[0] == t[1] && t[1] == t[2]) {
      // all equal: no effect
    } else {
      // exactly two coincide; the repeated member implies the remaining one
      int src, dst;
      if (t[0] == t[1]) {
        src = t[0];
        dst = t[2];
      } else if (t[1] == t[2]) {
        src = t[1];
        dst = t[0];
      } else {
        src = t[0];
        dst = t[1];
      }
      edges.insert({src, dst});
    }
  }
  for (const auto& t : sym_triples) {
    r.add_clause(t[2], {t[0], t[1]});
    r.add_clause(t[1], {t[0], t[2]});
    r.add_clause(t[0], {t[1], t[2]});
  }
  for (const auto& e : edges) r.add_clause(e[1], {e[0]});
  r.finalize();
  return r;
}

AutomatonRule zm_rule(int m, const std::vector<int>& offsets) {
  if (m < 2) throw std::invalid_argument("zm_rule: m must be >= 2");
  if (offsets.empty()) throw std::invalid_argument("zm_rule: need at least one offset");
  AutomatonRule r;
  r.n = m;
  std::vector<int> norm;
  for (int a : offsets) {
    int v = ((a % m) + m) % m;
    if (v == 0) throw std::invalid_argument("zm_rule: offsets must be nonzero mod m");
    norm.push_back(v);
  }
  for (int w = 0; w < m; ++w) {
    std::vector<int> req;
    for (int a : norm) req.push_back(((w - a) % m + m) % m);
    std::sort(req.begin(), req.end());
    req.erase(std::unique(req.begin(), req.end()), req.end());
    r.add_clause(w, req);
  }
  r.finalize();
  return r;
}

SubsetState step(const AutomatonRule& rule, const SubsetState& s) {
  if (s.n != rule.n) throw std::invalid_argument("step: state size mismatch");
  SubsetState out = s;
  for (int cl = 0; cl < rule.clause_count(); ++cl) {
    bool all = true;
    for (int k = rule.req_start[cl]; k < rule.req_start[cl + 1] && all; ++k)
      all = s.test(rule.req_point[k]);
    if (all) out.set(rule.clause_target[cl]);
  }
  return out;
}

namespace {

SubsetState propagate(const AutomatonRule& rule, const SubsetState& seed,
                      const SubsetState* mask) {
  SubsetState cur(rule.n);
  std::vector<int> work;
  for (int i = 0; i < rule.n; ++i)
    if (seed.test(i) && (!mask || mask->test(i))) {
      cur.set(i);
      work.push_back(i);
    }

  // missing requirement counts per clause; clauses touching masked-out points
  // are disabled. Every clause has at least one (distinct) requirement, and
  // each present point decrements each clause exactly once via the worklist.
  std::vector<int> missing(rule.clause_count());
  std::vector<char> enabled(rule.clause_count(), 1);
  for (int cl = 0; cl < rule.clause_count(); ++cl) {
    missing[cl] = rule.req_start[cl + 1] - rule.req_start[cl];
    if (mask) {
      if (!mask->test(rule.clause_target[cl])) enabled[cl] = 0;
      for (int k = rule.req_start[cl]; k < rule.req_start[cl + 1]; ++k)
        if (!mask->test(rule.req_point[k])) enabled[cl] = 0;
    }
  }

  while (!work.empty()) {
    int p = work.back();
    work.pop_back();
    for (int k = rule.inc_start[p]; k < rule.inc_start[p + 1]; ++k) {
      int cl = rule.inc_clause[k];
      if (!enabled[cl]) continue;
      if (--missing[cl] == 0) {
        int t = rule.clause_target[cl];
        if (!cur.test(t)) {
          cur.set(t);
          work.push_back(t);
        }
      }
    }
  }
  return cur;
}

}  // namespace

SubsetState closure(const AutomatonRule& rule, const SubsetState& s) {
  if (s.n != rule.n) throw std::invalid_argument("closure: state size mismatch");
  return propagate(rule, s, nullptr);
}

SubsetState closure_masked(const AutomatonRule& rule, const SubsetState& s,
                           const SubsetState& mask) {
  if (s.n != rule.n || mask.n != rule.n)
    throw std::invalid_argument("closure_masked: size mismatch");
  return propagate(rule, s, &mask);
}

bool is_quarantine(const AutomatonRule& rule, const SubsetState& s) {
  return step(rule, s) == s;
}

bool is_plague(const AutomatonRule& rule, const SubsetState& s) {
  return closure(rule, s).is_full();
}

bool spreads_to(const AutomatonRule& rule, const SubsetState& from, const SubsetState& to) {
  return closure(rule, from).contains(to);
}

}  // namespace hurwitz
