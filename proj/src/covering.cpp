#include "hurwitz/covering.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

namespace {

int mod(long long v, int N) { return static_cast<int>(((v % N) + N) % N); }

// triangles as vertex lists (x-orbits of size 3), deterministic order
std::vector<std::vector<int>> x_triangles(const SchreierGraph& g) {
  std::vector<std::vector<int>> tris;
  for (const auto& c : cycles_of(g.x))
    if (c.size() == 3) tris.push_back(c);
  return tris;
}

}  // namespace

void ConstraintReport::add(std::string what, bool ok) {
  entries.push_back({std::move(what), ok});
  if (!ok) pass = false;
}

void validate_covering(const LabeledCovering& c) {
  validate_graph(c.g);
  if (c.N < 1) throw std::invalid_argument("covering: N must be >= 1");
  if (static_cast<int>(c.x_label.size()) != c.g.n ||
      static_cast<int>(c.y_label.size()) != c.g.n)
    throw std::invalid_argument("covering: label arrays must have one entry per vertex");
  for (int v = 0; v < c.g.n; ++v)
    if (c.x_label[v] < 0 || c.x_label[v] >= c.N || c.y_label[v] < 0 || c.y_label[v] >= c.N)
      throw std::invalid_argument("covering: label out of range");

  for (int v = 0; v < c.g.n; ++v) {
    if (c.g.x[v] == v) {
      if (mod(3LL * c.x_label[v] + 1, c.N) != 0)
        throw std::invalid_argument("covering: x-loop label violates 3a = -1 at vertex " +
                                    std::to_string(v));
    }
    if (c.g.y[v] == v) {
      if (mod(2LL * c.y_label[v] - 1, c.N) != 0)
        throw std::invalid_argument("covering: y-loop label violates 2a = 1 at vertex " +
                                    std::to_string(v));
    } else {
      if (mod(static_cast<long long>(c.y_label[v]) + c.y_label[c.g.y[v]] - 1, c.N) != 0)
        throw std::invalid_argument("covering: y-edge labels do not sum to 1 at vertex " +
                                    std::to_string(v));
    }
  }
  for (const auto& tri : x_triangles(c.g)) {
    long long s = 0;
    for (int v : tri) s += c.x_label[v];
    if (mod(s + 1, c.N) != 0)
      throw std::invalid_argument("covering: x-triangle labels do not sum to -1 at vertex " +
                                  std::to_string(tri[0]));
  }
}

LabeledCovering derive_labels(const HurwitzOrbit& o, const SchreierGraph& g, QuotientMap& q) {
  LabeledCovering c;
  c.g = g;
  c.N = q.N;

  const Perm& s1 = o.s1;
  const Perm& s2 = o.s2;
  Perm s1i = inverse(s1), s2i = inverse(s2);
  auto x_act = [&](int p) { return s2i[s1i[p]]; };
  auto y_act = [&](int p) { return s1[s2[s1[p]]]; };

  // BFS spanning tree from v0, x-arrows before y-arrows; entering a vertex
  // through a tree arrow fixes its section point (label 0 on tree arrows).
  auto xinv_act = [&](int p) { return s1[s2[p]]; };  // inverse of the x generator
  Perm xinv = inverse(g.x);
  int root = g.has_point() ? g.v0 : 0;
  std::vector<char> seen(g.n, 0);
  std::deque<int> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    struct Nb {
      int w;
      char kind;
      int arrow_src;  // tree arrow is arrow_src -> other endpoint
      int section;    // section point for w making the arrow label 0
    };
    const Nb nbs[3] = {{g.x[v], 'x', v, x_act(q.section[v])},
                       {xinv[v], 'x', xinv[v], xinv_act(q.section[v])},
                       {g.y[v], 'y', v, y_act(q.section[v])}};
    for (const Nb& nb : nbs) {
      if (seen[nb.w]) continue;
      seen[nb.w] = 1;
      q.section[nb.w] = nb.section;
      c.tree.emplace_back(nb.kind, nb.arrow_src);
      queue.push_back(nb.w);
    }
  }

  // fiber indexing from the sections: v[i] = Delta^i v[0]
  Perm delta = delta_of(s1, s2);
  std::vector<int> index_in_fiber(s1.size(), -1);
  for (int v = 0; v < g.n; ++v) {
    int p = q.section[v];
    for (int i = 0; i < c.N; ++i) {
      index_in_fiber[p] = i;
      p = delta[p];
    }
    if (p != q.section[v]) throw std::logic_error("derive_labels: fiber is not a Delta cycle");
  }

  c.x_label.resize(g.n);
  c.y_label.resize(g.n);
  for (int v = 0; v < g.n; ++v) {
    c.x_label[v] = index_in_fiber[x_act(q.section[v])];
    c.y_label[v] = index_in_fiber[y_act(q.section[v])];
  }
  validate_covering(c);
  for (const auto& [kind, v] : c.tree) {
    int lab = kind == 'x' ? c.x_label[v] : c.y_label[v];
    if (lab != 0) throw std::logic_error("derive_labels: tree arrow with nonzero label");
  }
  return c;
}

int cycle_label(const LabeledCovering& c, const std::vector<int>& cycle,
                const std::string& kind) {
  if (kind != "xy" && kind != "yx") throw std::invalid_argument("cycle kind must be xy or yx");
  long long sum = 0;
  for (size_t i = 0; i < cycle.size(); ++i) {
    int v = cycle[i];
    int next;
    if (kind == "xy") {
      sum += c.y_label[v] + c.x_label[c.g.y[v]];
      next = c.g.x[c.g.y[v]];
    } else {
      sum += c.x_label[v] + c.y_label[c.g.x[v]];
      next = c.g.y[c.g.x[v]];
    }
    if (next != cycle[(i + 1) % cycle.size()])
      throw std::invalid_argument("cycle_label: vertex list is not a " + kind + "-cycle");
  }
  return mod(sum, c.N);
}

ConstraintReport check_constraints(const LabeledCovering& c) {
  ConstraintReport rep;
  const SchreierGraph& g = c.g;
  const int N = c.N;

  for (int v = 0; v < g.n; ++v) {
    if (g.x[v] == v)
      rep.add("x-loop at v" + std::to_string(v) + ": 3a = -1 (mod " + std::to_string(N) + ")",
              mod(3LL * c.x_label[v] + 1, N) == 0);
    if (g.y[v] == v)
      rep.add("y-loop at v" + std::to_string(v) + ": 2a = 1 (mod " + std::to_string(N) + ")",
              mod(2LL * c.y_label[v] - 1, N) == 0);
    else if (g.y[v] > v)
      rep.add("y-edge v" + std::to_string(v) + "-v" + std::to_string(g.y[v]) + ": labels sum to 1",
              mod(static_cast<long long>(c.y_label[v]) + c.y_label[g.y[v]] - 1, N) == 0);
  }
  for (const auto& tri : x_triangles(g)) {
    long long s = 0;
    for (int v : tri) s += c.x_label[v];
    rep.add("x-triangle at v" + std::to_string(tri[0]) + ": labels sum to -1", mod(s + 1, N) == 0);
  }

  auto cxs = xy_cycles(g);
  auto cys = yx_cycles(g);
  std::vector<int> cx_of(g.n), cy_of(g.n);
  for (size_t i = 0; i < cxs.size(); ++i)
    for (int v : cxs[i]) cx_of[v] = static_cast<int>(i);
  for (size_t i = 0; i < cys.size(); ++i)
    for (int v : cys[i]) cy_of[v] = static_cast<int>(i);
  std::vector<int> cx_label(cxs.size()), cy_label(cys.size());
  for (size_t i = 0; i < cxs.size(); ++i) cx_label[i] = cycle_label(c, cxs[i], "xy");
  for (size_t i = 0; i < cys.size(); ++i) cy_label[i] = cycle_label(c, cys[i], "yx");

  // fixed vertices force label 0 on both incident cycles
  if (g.n > 1) {
    for (int v = 0; v < g.n; ++v) {
      if (g.x[v] != v && g.y[v] != v) continue;
      rep.add("cycles through fixed v" + std::to_string(v) + " have label 0",
              cx_label[cx_of[v]] == 0 && cy_label[cy_of[v]] == 0);
    }
  }

  // two vertices on a common xy- and yx-cycle: path labels must differ
  auto path_label = [&](const std::vector<int>& cyc, int v, int w, const std::string& kind) {
    long long sum = 0;
    size_t start = std::find(cyc.begin(), cyc.end(), v) - cyc.begin();
    size_t i = start;
    while (cyc[i] != w) {
      int u = cyc[i];
      if (kind == "xy")
        sum += c.y_label[u] + c.x_label[g.y[u]];
      else
        sum += c.x_label[u] + c.y_label[g.x[u]];
      i = (i + 1) % cyc.size();
    }
    return mod(sum, N);
  };
  for (int v = 0; v < g.n; ++v)
    for (int w = 0; w < g.n; ++w) {
      if (v == w) continue;
      if (cx_of[v] != cx_of[w] || cy_of[v] != cy_of[w]) continue;
      int lam = path_label(cxs[cx_of[v]], v, w, "xy");
      int mu = path_label(cys[cy_of[v]], v, w, "yx");
      rep.add("path labels v" + std::to_string(v) + " to v" + std::to_string(w) +
                  " differ (xy " + std::to_string(lam) + ", yx " + std::to_string(mu) + ")",
              lam != mu);
    }

  // vertices sharing both cycles force nontrivial coverings
  if (N == 1) {
    for (int v = 0; v < g.n; ++v) {
      bool shared = false;
      for (int w = 0; w < g.n && !shared; ++w)
        shared = w != v && cx_of[w] == cx_of[v] && cy_of[w] == cy_of[v];
      if (shared) {
        rep.add("vertex v" + std::to_string(v) +
                    " shares xy- and yx-cycles with another vertex: covering must be nontrivial",
                false);
        break;
      }
    }
  }
  return rep;
}

LiftedSpace lift_covering(const LabeledCovering& c) {
  validate_covering(c);
  LiftedSpace L;
  L.N = c.N;
  L.g = c.g;
  const int n = c.g.n, N = c.N;
  const int total = n * N;

  auto xg = [&](int p) {  // the generator mapping onto x
    int v = p / N, i = p % N;
    return c.g.x[v] * N + mod(i + c.x_label[v], N);
  };
  auto yg = [&](int p) {
    int v = p / N, i = p % N;
    return c.g.y[v] * N + mod(i + c.y_label[v], N);
  };

  L.s1.resize(total);
  L.s2.resize(total);
  for (int p = 0; p < total; ++p) {
    L.s1[p] = xg(yg(p));  // sigma1 = x-generator after y-generator
    L.s2[p] = yg(xg(p));
  }
  if (!is_permutation(L.s1) || !is_permutation(L.s2))
    throw std::logic_error("lift: generator action is not a permutation");

  for (int p = 0; p < total; ++p) {
    int lhs = L.s1[L.s2[L.s1[p]]];
    int rhs = L.s2[L.s1[L.s2[p]]];
    if (lhs != rhs)
      throw std::logic_error("lift: braid relation fails at point " + std::to_string(p));
  }
  Perm delta = delta_of(L.s1, L.s2);
  for (int p = 0; p < total; ++p) {
    int v = p / N, i = p % N;
    if (delta[p] != v * N + mod(i + 1, N))
      throw std::logic_error("lift: central element does not shift fibers by 1 at point " +
                             std::to_string(p));
  }
  return L;
}

std::pair<long long, long long> sigma_cycle_lengths(const LabeledCovering& c, int v) {
  auto cxs = xy_cycles(c.g);
  auto cys = yx_cycles(c.g);
  auto find_through = [&](const std::vector<std::vector<int>>& cs) {
    for (const auto& cyc : cs)
      if (std::count(cyc.begin(), cyc.end(), v)) return cyc;
    throw std::logic_error("cycle decomposition misses a vertex");
  };
  auto cx = find_through(cxs);
  auto cy = find_through(cys);
  long long ox = c.N / std::gcd(cycle_label(c, cx, "xy"), c.N);
  long long oy = c.N / std::gcd(cycle_label(c, cy, "yx"), c.N);
  if (cycle_label(c, cx, "xy") == 0) ox = 1;
  if (cycle_label(c, cy, "yx") == 0) oy = 1;
  return {static_cast<long long>(cx.size()) * ox, static_cast<long long>(cy.size()) * oy};
}

// ---- enumeration over a bare graph ----

namespace {

struct FreeSlots {
  // spanning tree arrows (kind, source vertex)
  std::vector<std::pair<char, int>> tree;
  std::vector<char> x_tree, y_tree;      // arrow v->x(v) / v->y(v) on the tree
  std::vector<std::pair<char, int>> free_arrows;  // slots enumerated mod N
};

// BFS tree from v0, x-arrows before y-arrows (matching derive_labels).
FreeSlots analyze_graph(const SchreierGraph& g) {
  FreeSlots fs;
  fs.x_tree.assign(g.n, 0);
  fs.y_tree.assign(g.n, 0);
  Perm xinv = inverse(g.x);
  int root = g.has_point() ? g.v0 : 0;
  std::vector<char> seen(g.n, 0);
  std::deque<int> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    struct Nb {
      int w;
      char kind;
      int arrow_src;
    };
    const Nb nbs[3] = {{g.x[v], 'x', v}, {xinv[v], 'x', xinv[v]}, {g.y[v], 'y', v}};
    for (const Nb& nb : nbs) {
      if (seen[nb.w]) continue;
      seen[nb.w] = 1;
      fs.tree.emplace_back(nb.kind, nb.arrow_src);
      (nb.kind == 'x' ? fs.x_tree : fs.y_tree)[nb.arrow_src] = 1;
      queue.push_back(nb.w);
    }
  }

  // free slots: per x-triangle all non-tree arrows but one; per non-tree
  // y-edge one of its two arrows; loops are forced by their congruence
  for (const auto& tri : x_triangles(g)) {
    std::vector<int> nontree;
    for (int v : tri)
      if (!fs.x_tree[v]) nontree.push_back(v);
    for (size_t i = 0; i + 1 < nontree.size(); ++i) fs.free_arrows.emplace_back('x', nontree[i]);
  }
  for (int v = 0; v < g.n; ++v) {
    int w = g.y[v];
    if (w <= v) continue;  // loops handled by congruence; each edge once
    if (!fs.y_tree[v] && !fs.y_tree[w]) fs.free_arrows.emplace_back('y', v);
  }
  return fs;
}

// completes a label assignment from the free slots; returns false when a loop
// congruence is unsolvable for this N
bool fill_labels(const SchreierGraph& g, const FreeSlots& fs, int N,
                 const std::vector<int>& free_vals, LabeledCovering& out) {
  out.g = g;
  out.N = N;
  out.tree = fs.tree;
  out.x_label.assign(g.n, 0);
  out.y_label.assign(g.n, 0);

  for (int v = 0; v < g.n; ++v) {
    if (g.x[v] == v) {
      if (std::gcd(3, N) != 1) return false;
      int inv3 = 1;
      while (mod(3LL * inv3, N) != 1 % N) ++inv3;  // N is small
      out.x_label[v] = mod(-1LL * inv3, N);
    }
    if (g.y[v] == v) {
      if (N % 2 == 0) return false;
      out.y_label[v] = (N + 1) / 2 % N;
    }
  }

  for (size_t i = 0; i < fs.free_arrows.size(); ++i) {
    auto [kind, v] = fs.free_arrows[i];
    (kind == 'x' ? out.x_label : out.y_label)[v] = free_vals[i];
  }
  // y-partners of determined arrows
  for (int v = 0; v < g.n; ++v) {
    int w = g.y[v];
    if (w == v) continue;
    if (fs.y_tree[v]) {
      out.y_label[v] = 0;
      out.y_label[w] = 1 % N;
    }
  }
  for (const auto& [kind, v] : fs.free_arrows) {
    if (kind != 'y') continue;
    out.y_label[g.y[v]] = mod(1LL - out.y_label[v], N);
  }
  // last non-tree arrow of each triangle balances the sum to -1
  for (const auto& tri : x_triangles(g)) {
    std::vector<int> nontree;
    for (int v : tri)
      if (!fs.x_tree[v]) nontree.push_back(v);
    if (nontree.empty()) return false;  // cannot happen: a triangle has >= 1 non-tree arrow
    long long s = 0;
    for (int v : tri)
      if (v != nontree.back()) s += out.x_label[v];
    out.x_label[nontree.back()] = mod(-1 - s, N);
  }
  return true;
}

}  // namespace

std::vector<LabeledCovering> enumerate_coverings(const SchreierGraph& g, int N_max) {
  validate_graph(g);
  FreeSlots fs = analyze_graph(g);
  std::vector<LabeledCovering> found;

  for (int N = 1; N <= N_max; ++N) {
    std::vector<int> vals(fs.free_arrows.size(), 0);
    bool done = false;
    while (!done) {
      LabeledCovering c;
      if (fill_labels(g, fs, N, vals, c)) {
        validate_covering(c);
        if (check_constraints(c).pass) {
          LiftedSpace L = lift_covering(c);
          if (check_simply_intersecting(L.s1, L.s2).simply_intersecting)
            found.push_back(std::move(c));
        }
      } else {
        break;  // loop congruence unsolvable: no assignment works for this N
      }
      // odometer
      done = true;
      for (size_t i = vals.size(); i-- > 0;) {
        if (++vals[i] < N) {
          done = false;
          break;
        }
        vals[i] = 0;
      }
      if (vals.empty()) done = true;
    }
  }
  return found;
}

// ---- templates ----

std::string AffineLabel::str() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](int coef, const char* sym) {
    if (coef == 0) return;
    if (coef == 1)
      os << (first ? "" : "+") << sym;
    else if (coef == -1)
      os << "-" << sym;
    else
      os << (first ? "" : "+") << coef << sym;
    first = false;
  };
  if (c0 != 0 || (ca == 0 && cb == 0 && cc == 0)) {
    os << c0;
    first = false;
  }
  term(ca, "a");
  term(cb, "b");
  term(cc, "c");
  return os.str();
}

LabeledCovering GraphTemplate::instantiate(int N, int a, int b, int c) const {
  LabeledCovering cov;
  cov.g = g;
  cov.N = N;
  cov.x_label.resize(g.n);
  cov.y_label.resize(g.n);
  for (int v = 0; v < g.n; ++v) {
    cov.x_label[v] = x_label[v].eval(a, b, c, N);
    cov.y_label[v] = y_label[v].eval(a, b, c, N);
  }
  validate_covering(cov);
  return cov;
}

std::vector<std::string> GraphTemplate::x_label_strings() const {
  std::vector<std::string> out;
  for (const auto& l : x_label) out.push_back(l.str());
  return out;
}
std::vector<std::string> GraphTemplate::y_label_strings() const {
  std::vector<std::string> out;
  for (const auto& l : y_label) out.push_back(l.str());
  return out;
}

std::vector<TemplateCovering> enumerate_template_coverings(const GraphTemplate& t, int N_max) {
  std::vector<TemplateCovering> found;
  for (int N = 1; N <= N_max; ++N) {
    int amax = t.nsyms >= 1 ? N : 1;
    int bmax = t.nsyms >= 2 ? N : 1;
    int cmax = t.nsyms >= 3 ? N : 1;
    for (int a = 0; a < amax; ++a)
      for (int b = 0; b < bmax; ++b)
        for (int c = 0; c < cmax; ++c) {
          LabeledCovering cov;
          try {
            cov = t.instantiate(N, a, b, c);
          } catch (const std::invalid_argument&) {
            continue;  // congruences fail for this assignment
          }
          if (!check_constraints(cov).pass) continue;
          LiftedSpace L = lift_covering(cov);
          if (!check_simply_intersecting(L.s1, L.s2).simply_intersecting) continue;
          found.push_back({N, {a, b, c}, std::move(cov)});
        }
  }
  return found;
}

bool equivariant_isomorphic(const Perm& a1, const Perm& a2, const Perm& b1, const Perm& b2) {
  if (a1.size() != b1.size()) return false;
  const int n = static_cast<int>(a1.size());
  if (n == 0) return true;
  for (int img0 = 0; img0 < n; ++img0) {
    Perm map(n, -1);
    std::vector<char> used(n, 0);
    map[0] = img0;
    used[img0] = 1;
    std::vector<int> stack{0};
    bool ok = true;
    while (!stack.empty() && ok) {
      int p = stack.back();
      stack.pop_back();
      const int nb[2] = {a1[p], a2[p]};
      const int nbi[2] = {b1[map[p]], b2[map[p]]};
      for (int k = 0; k < 2; ++k) {
        if (map[nb[k]] == -1) {
          if (used[nbi[k]]) {
            ok = false;
            break;
          }
          map[nb[k]] = nbi[k];
          used[nbi[k]] = 1;
          stack.push_back(nb[k]);
        } else if (map[nb[k]] != nbi[k]) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    for (int p = 0; p < n && ok; ++p)
      ok = map[p] >= 0 && map[a1[p]] == b1[map[p]] && map[a2[p]] == b2[map[p]];
    if (ok) return true;
  }
  return false;
}

}  // namespace hurwitz
