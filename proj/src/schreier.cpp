#include "hurwitz/schreier.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

void validate_graph(const SchreierGraph& g) {
  if (g.n <= 0) throw std::invalid_argument("graph: empty");
  if (static_cast<int>(g.x.size()) != g.n || static_cast<int>(g.y.size()) != g.n)
    throw std::invalid_argument("graph: permutation size mismatch");
  if (!is_permutation(g.x) || !is_permutation(g.y))
    throw std::invalid_argument("graph: x or y is not a permutation");
  if (!is_identity(compose(g.x, compose(g.x, g.x))))
    throw std::invalid_argument("graph: x^3 != id");
  if (!is_identity(compose(g.y, g.y)))
    throw std::invalid_argument("graph: y^2 != id");
  if (!is_transitive(g.n, {&g.x, &g.y}))
    throw std::invalid_argument("graph: not connected under <x,y>");
  if (g.v0 != -1 && (g.v0 < 0 || g.v0 >= g.n))
    throw std::invalid_argument("graph: v0 out of range");
}

FixedSets classify_fixed(const SchreierGraph& g) {
  FixedSets f;
  for (int v = 0; v < g.n; ++v) {
    if (g.x[v] == v) f.vx.push_back(v);
    if (g.y[v] == v) f.vy.push_back(v);
    if (g.x[g.y[v]] == v) f.vxy.push_back(v);
  }
  return f;
}

std::pair<SchreierGraph, QuotientMap> quotient_of_action(const Perm& s1, const Perm& s2,
                                                         int base_point) {
  const int m = static_cast<int>(s1.size());
  if (m == 0) throw std::invalid_argument("quotient: empty action");

  Perm delta = delta_of(s1, s2);
  auto fibers = cycles_of(delta);  // each starts at its smallest point

  QuotientMap q;
  q.N = static_cast<int>(fibers[0].size());
  for (const auto& f : fibers)
    if (static_cast<int>(f.size()) != q.N)
      throw std::logic_error("quotient: fibers of unequal size (orbit bug)");

  // cycles_of lists fibers by smallest contained point already
  const int nv = static_cast<int>(fibers.size());
  q.fiber_of.assign(m, -1);
  q.section.resize(nv);
  for (int v = 0; v < nv; ++v) {
    q.section[v] = fibers[v][0];
    for (int p : fibers[v]) q.fiber_of[p] = v;
  }

  SchreierGraph g;
  g.n = nv;
  g.x.resize(nv);
  g.y.resize(nv);
  Perm s1i = inverse(s1), s2i = inverse(s2);
  for (int v = 0; v < nv; ++v) {
    int p = q.section[v];
    g.x[v] = q.fiber_of[s2i[s1i[p]]];
    g.y[v] = q.fiber_of[s1[s2[s1[p]]]];
  }
  g.v0 = q.fiber_of[base_point];
  validate_graph(g);
  return {std::move(g), std::move(q)};
}

std::pair<SchreierGraph, QuotientMap> quotient(const HurwitzOrbit& o) {
  return quotient_of_action(o.s1, o.s2, o.base);
}

std::vector<std::vector<int>> xy_cycles(const SchreierGraph& g) {
  return cycles_of(compose(g.x, g.y));
}

std::vector<std::vector<int>> yx_cycles(const SchreierGraph& g) {
  return cycles_of(compose(g.y, g.x));
}

std::string signature(const SchreierGraph& g) {
  std::vector<int> ls;
  for (const auto& c : xy_cycles(g)) ls.push_back(static_cast<int>(c.size()));
  std::sort(ls.rbegin(), ls.rend());
  std::ostringstream os;
  os << g.n << "{";
  for (size_t i = 0; i < ls.size(); ++i) os << (i ? "," : "") << ls[i];
  os << "}";
  return os.str();
}

std::optional<Perm> find_isomorphism(const SchreierGraph& a, const SchreierGraph& b,
                                     bool respect_point) {
  if (a.n != b.n) return std::nullopt;
  // a map commuting with x and y is determined by the image of one vertex
  int root = a.has_point() ? a.v0 : 0;
  std::vector<int> cands;
  if (respect_point) {
    if (!a.has_point() || !b.has_point()) throw std::invalid_argument("pointed isomorphism needs v0");
    cands.push_back(b.v0);
  } else {
    for (int v = 0; v < b.n; ++v) cands.push_back(v);
  }
  for (int img : cands) {
    Perm map(a.n, -1);
    map[root] = img;
    std::vector<int> stack{root};
    bool ok = true;
    std::vector<char> used(b.n, 0);
    used[img] = 1;
    while (!stack.empty() && ok) {
      int v = stack.back();
      stack.pop_back();
      const int nb[2] = {a.x[v], a.y[v]};
      const int nbi[2] = {b.x[map[v]], b.y[map[v]]};
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
    // full commutation check
    for (int v = 0; v < a.n && ok; ++v)
      ok = map[v] >= 0 && map[a.x[v]] == b.x[map[v]] && map[a.y[v]] == b.y[map[v]];
    if (ok) return map;
  }
  return std::nullopt;
}

bool are_isomorphic(const SchreierGraph& a, const SchreierGraph& b, bool respect_point) {
  return find_isomorphism(a, b, respect_point).has_value();
}

std::string export_dot(const SchreierGraph& g, const std::vector<std::string>* x_labels,
                       const std::vector<std::string>* y_labels) {
  std::ostringstream os;
  os << "digraph schreier {\n";
  for (int v = 0; v < g.n; ++v) {
    os << "  v" << v;
    if (v == g.v0) os << " [shape=doublecircle]";
    os << ";\n";
  }
  for (int v = 0; v < g.n; ++v) {
    os << "  v" << v << " -> v" << g.x[v] << " [style=solid";
    if (x_labels && !(*x_labels)[v].empty()) os << ",label=\"" << (*x_labels)[v] << "\"";
    os << "];\n";
  }
  for (int v = 0; v < g.n; ++v) {
    int w = g.y[v];
    if (w < v) continue;  // render each y-edge once
    os << "  v" << v << " -> v" << w << " [style=dashed,dir=none";
    if (y_labels) {
      std::string lab = (*y_labels)[v];
      if (v != w && !(*y_labels)[w].empty())
        lab += (lab.empty() ? "" : " | ") + (*y_labels)[w];
      if (!lab.empty()) os << ",label=\"" << lab << "\"";
    }
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace hurwitz
