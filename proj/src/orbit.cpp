#include "hurwitz/orbit.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace hurwitz {

namespace {

uint64_t key_of(const Triple& t, int n) {
  return (static_cast<uint64_t>(t[0]) * n + t[1]) * n + t[2];
}

void check_triple(const Triple& t, const Rack& r) {
  for (int v : t)
    if (v < 0 || v >= r.size()) throw std::invalid_argument("triple component out of range");
}

}  // namespace

Triple act_sigma(int which, const Triple& t, const Rack& r) {
  check_triple(t, r);
  if (which == 1) return {r.op(t[0], t[1]), t[0], t[2]};
  if (which == 2) return {t[0], r.op(t[1], t[2]), t[1]};
  throw std::invalid_argument("sigma index must be 1 or 2");
}

Triple act_sigma_inv(int which, const Triple& t, const Rack& r) {
  check_triple(t, r);
  // sigma1^-1 (a,b,t) = (b, phi_b^-1(a), t);  sigma2^-1 (r,a,b) = (r, b, phi_b^-1(a))
  if (which == 1) return {t[1], r.inv_op(t[1], t[0]), t[2]};
  if (which == 2) return {t[0], t[2], r.inv_op(t[2], t[1])};
  throw std::invalid_argument("sigma index must be 1 or 2");
}

int HurwitzOrbit::index_of(const Triple& t) const {
  for (int i = 0; i < size(); ++i)
    if (points[i] == t) return i;
  return -1;
}

HurwitzOrbit enumerate_orbit(RackPtr rack, const Triple& seed, std::size_t cap) {
  check_triple(seed, *rack);
  const int n = rack->size();
  HurwitzOrbit o;
  o.rack = rack;
  o.base = 0;

  std::unordered_map<uint64_t, int> index;
  index.reserve(64);
  std::deque<int> queue;
  o.points.push_back(seed);
  index[key_of(seed, n)] = 0;
  queue.push_back(0);

  auto visit = [&](const Triple& t) {
    uint64_t k = key_of(t, n);
    auto it = index.find(k);
    if (it != index.end()) return it->second;
    if (o.points.size() >= cap)
      throw std::runtime_error("orbit exceeds point cap (" + std::to_string(cap) + ")");
    int idx = static_cast<int>(o.points.size());
    o.points.push_back(t);
    index.emplace(k, idx);
    queue.push_back(idx);
    return idx;
  };

  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    Triple t = o.points[i];
    visit(act_sigma(1, t, *rack));
    visit(act_sigma(2, t, *rack));
    visit(act_sigma_inv(1, t, *rack));
    visit(act_sigma_inv(2, t, *rack));
  }

  const int m = o.size();
  o.s1.resize(m);
  o.s2.resize(m);
  for (int i = 0; i < m; ++i) {
    o.s1[i] = index.at(key_of(act_sigma(1, o.points[i], *rack), n));
    o.s2[i] = index.at(key_of(act_sigma(2, o.points[i], *rack), n));
  }
  o.s1inv = inverse(o.s1);
  o.s2inv = inverse(o.s2);
  return o;
}

std::vector<HurwitzOrbit> decompose_cube(RackPtr rack, std::size_t cap) {
  const int n = rack->size();
  std::vector<char> seen(static_cast<size_t>(n) * n * n, 0);
  std::vector<HurwitzOrbit> orbits;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Triple seed{a, b, c};
        if (seen[key_of(seed, n)]) continue;
        HurwitzOrbit o = enumerate_orbit(rack, seed, cap);
        for (const Triple& t : o.points) seen[key_of(t, n)] = 1;
        orbits.push_back(std::move(o));
      }
  return orbits;
}

std::vector<std::vector<int>> sigma_cycles(const HurwitzOrbit& o, int which) {
  if (which != 1 && which != 2) throw std::invalid_argument("sigma index must be 1 or 2");
  return cycles_of(which == 1 ? o.s1 : o.s2);
}

Perm delta_of(const Perm& s1, const Perm& s2) {
  Perm g = compose(s1, s2);  // apply s2 first, then s1
  return compose(g, compose(g, g));
}

DeltaPermutation delta_permutation(const HurwitzOrbit& o) {
  DeltaPermutation d;
  d.perm = delta_of(o.s1, o.s2);
  d.order = perm_order(d.perm);
  return d;
}

SimpleIntersection check_simply_intersecting(const Perm& s1, const Perm& s2) {
  auto c1 = cycles_of(s1);
  auto c2 = cycles_of(s2);
  std::vector<int> id1(s1.size()), id2(s2.size());
  for (size_t i = 0; i < c1.size(); ++i)
    for (int p : c1[i]) id1[p] = static_cast<int>(i);
  for (size_t i = 0; i < c2.size(); ++i)
    for (int p : c2[i]) id2[p] = static_cast<int>(i);

  std::unordered_map<uint64_t, int> meet;
  meet.reserve(s1.size() * 2);
  SimpleIntersection res;
  for (size_t p = 0; p < s1.size(); ++p) {
    uint64_t k = (static_cast<uint64_t>(id1[p]) << 32) | static_cast<uint32_t>(id2[p]);
    if (++meet[k] > 1) {
      res.simply_intersecting = false;
      res.witness = std::make_pair(c1[id1[p]], c2[id2[p]]);
      return res;
    }
  }
  return res;
}

SimpleIntersection check_simply_intersecting(const HurwitzOrbit& o) {
  return check_simply_intersecting(o.s1, o.s2);
}

BraidedSizeReport check_braided_sizes(RackPtr rack) {
  if (!rack->is_braided())
    throw std::invalid_argument("check_braided_sizes requires a braided rack");
  static const int allowed[] = {1, 3, 6, 8, 9, 12, 16, 24};
  BraidedSizeReport rep;
  rep.pass = true;
  for (const auto& o : decompose_cube(rack)) {
    int s = o.size();
    rep.histogram[s]++;
    if (!std::count(std::begin(allowed), std::end(allowed), s)) {
      rep.pass = false;
      if (!std::count(rep.offending_sizes.begin(), rep.offending_sizes.end(), s))
        rep.offending_sizes.push_back(s);
    }
  }
  return rep;
}

}  // namespace hurwitz
