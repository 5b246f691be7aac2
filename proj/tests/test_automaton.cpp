#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "hurwitz/automaton.hpp"
#include "hurwitz/orbit.hpp"

using namespace hurwitz;

namespace {

HurwitzOrbit orbit8() { return enumerate_orbit(s3_transposition_quandle(), {0, 1, 2}); }

SubsetState random_subset(int n, std::mt19937& rng) {
  SubsetState s(n);
  for (int i = 0; i < n; ++i)
    if (rng() & 1) s.set(i);
  return s;
}

// direct seven-neighbor step: a point appears when it is present, or when the
// two other members of one of its three incident tuples are present
SubsetState step_seven(const HurwitzOrbit& o, const SubsetState& s) {
  SubsetState out(o.size());
  for (int w = 0; w < o.size(); ++w) {
    bool on = s.test(w) || (s.test(o.s2[w]) && s.test(o.s1[o.s2[w]])) ||
              (s.test(o.s2inv[o.s1inv[w]]) && s.test(o.s1inv[w])) ||
              (s.test(o.s2inv[w]) && s.test(o.s1[w]));
    if (on) out.set(w);
  }
  return out;
}

}  // namespace

TEST_CASE("subset state basics") {
  SubsetState s = SubsetState::of(8, {0, 3, 7});
  CHECK(s.count() == 3);
  CHECK(s.test(3));
  CHECK_FALSE(s.test(4));
  CHECK(s.members() == std::vector<int>{0, 3, 7});
  CHECK(s.hex() == "89");
  CHECK_THROWS_AS(SubsetState::of(4, {9}), std::invalid_argument);
}

TEST_CASE("orbit rule on a 1-point orbit is the identity") {
  auto o = enumerate_orbit(s3_transposition_quandle(), {0, 0, 0});
  auto rule = orbit_rule(o.s1, o.s2);
  SubsetState empty(1), full(1);
  full.set(0);
  CHECK(step(rule, empty) == empty);
  CHECK(step(rule, full) == full);
}

TEST_CASE("plagues of the 8-point orbit") {
  auto o = orbit8();
  auto rule = orbit_rule(o.s1, o.s2);
  CHECK(rule.tuples.size() == 8);

  // the two fixed-point fibers: vertex 2 holds the sigma1-fixed points {2,6},
  // vertex 3 the sigma2-fixed points {3,7}; both fibers' tuples degenerate to
  // one-way implications, so each fiber needs an external full-fiber seed.
  // Whole fixed fiber plus one point of the other fixed fiber spreads:
  CHECK(is_plague(rule, SubsetState::of(8, {2, 6, 3})));
  CHECK(is_plague(rule, SubsetState::of(8, {2, 6, 7})));

  // the x-loop fiber {1,4} plus one sigma2-fixed point stalls two points
  // short: the remaining sigma1-fixed and sigma2-fixed points imply each
  // other and nothing else implies them
  SubsetState stalled = SubsetState::of(8, {1, 4, 3});
  CHECK(step(rule, stalled).count() > 3);
  CHECK(closure(rule, stalled).count() == 6);
  CHECK_FALSE(is_plague(rule, stalled));

  // a single point is not a plague here
  CHECK_FALSE(is_plague(rule, SubsetState::of(8, {0})));
}

TEST_CASE("full and empty sets are fixed") {
  auto o = orbit8();
  auto rule = orbit_rule(o.s1, o.s2);
  SubsetState empty(8), full(8);
  for (int i = 0; i < 8; ++i) full.set(i);
  CHECK(step(rule, empty) == empty);
  CHECK(step(rule, full) == full);
  CHECK(is_quarantine(rule, full));
  CHECK(is_plague(rule, full));
}

TEST_CASE("triple-clause step equals the direct seven-neighbor step") {
  std::mt19937 rng(11);
  std::vector<HurwitzOrbit> spaces;
  for (auto& o : decompose_cube(s3_transposition_quandle())) spaces.push_back(std::move(o));
  for (auto& o : decompose_cube(dihedral_quandle(3))) spaces.push_back(std::move(o));
  for (auto& o : decompose_cube(trivial_rack(2))) spaces.push_back(std::move(o));
  for (const auto& o : spaces) {
    auto rule = orbit_rule(o.s1, o.s2);
    for (int trial = 0; trial < 50; ++trial) {
      SubsetState s = random_subset(o.size(), rng);
      CHECK(step(rule, s) == step_seven(o, s));
    }
  }
}

TEST_CASE("monotonicity and closure laws on random subsets") {
  std::mt19937 rng(23);
  auto o = orbit8();
  auto rule = orbit_rule(o.s1, o.s2);
  for (int trial = 0; trial < 200; ++trial) {
    SubsetState f = random_subset(8, rng);
    SubsetState g = random_subset(8, rng);
    for (size_t i = 0; i < g.w.size(); ++i) g.w[i] |= f.w[i];  // f subset of g

    CHECK(step(rule, f).contains(f));                      // extensive
    CHECK(step(rule, g).contains(step(rule, f)));          // monotone
    SubsetState cf = closure(rule, f);
    CHECK(cf.contains(f));
    CHECK(closure(rule, g).contains(cf));
    CHECK(closure(rule, cf) == cf);                        // idempotent
    CHECK(is_quarantine(rule, cf));
  }
}

TEST_CASE("quarantines meet no tuple in exactly two members") {
  std::mt19937 rng(37);
  for (const auto& o : decompose_cube(dihedral_quandle(3))) {
    auto rule = orbit_rule(o.s1, o.s2);
    for (int trial = 0; trial < 100; ++trial) {
      SubsetState s = random_subset(o.size(), rng);
      bool never_two = true;
      for (const auto& t : rule.tuples) {
        int hits = int(s.test(t[0])) + int(s.test(t[1])) + int(s.test(t[2]));
        if (hits == 2) never_two = false;
      }
      CHECK(is_quarantine(rule, s) == never_two);
    }
  }
}

TEST_CASE("spread is monotone in the seed") {
  std::mt19937 rng(41);
  auto o = orbit8();
  auto rule = orbit_rule(o.s1, o.s2);
  for (int trial = 0; trial < 100; ++trial) {
    SubsetState i = random_subset(8, rng);
    SubsetState j = random_subset(8, rng);
    for (size_t k = 0; k < j.w.size(); ++k) j.w[k] |= i.w[k];
    if (is_plague(rule, i)) CHECK(is_plague(rule, j));
    CHECK(spreads_to(rule, i, i));
    CHECK(spreads_to(rule, j, i));
  }
}

TEST_CASE("closure commutes with the central translation") {
  auto o = orbit8();
  auto rule = orbit_rule(o.s1, o.s2);
  Perm delta = delta_permutation(o).perm;
  std::mt19937 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    SubsetState s = random_subset(8, rng);
    SubsetState translated(8);
    for (int p = 0; p < 8; ++p)
      if (s.test(p)) translated.set(delta[p]);
    SubsetState lhs = closure(rule, translated);
    SubsetState rhs(8);
    SubsetState cl = closure(rule, s);
    for (int p = 0; p < 8; ++p)
      if (cl.test(p)) rhs.set(delta[p]);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("offset rule on residues: the three stock cases") {
  // single offset: any transversal of the subgroup generated by it spreads
  {
    auto rule = zm_rule(6, {2});
    CHECK(is_plague(rule, SubsetState::of(6, {0, 1})));
    CHECK_FALSE(is_plague(rule, SubsetState::of(6, {0})));
  }
  // offsets (1, l+1, -l) with l = 2 on Z_6: subgroup plus a transversal
  {
    auto rule = zm_rule(6, {1, 3, -2});
    CHECK(is_plague(rule, SubsetState::of(6, {0, 2, 4, 1})));
  }
  // offsets (l, l-1) with l = 2: {0,1} spreads
  for (int m = 3; m <= 12; ++m) {
    auto rule = zm_rule(m, {2, 1});
    CHECK(is_plague(rule, SubsetState::of(m, {0, 1})));
  }
  CHECK_THROWS_AS(zm_rule(6, {0}), std::invalid_argument);
  CHECK_THROWS_AS(zm_rule(6, {6}), std::invalid_argument);
  CHECK_THROWS_AS(zm_rule(1, {1}), std::invalid_argument);
}

TEST_CASE("masked closure stays inside the mask and matches closure on full mask") {
  auto o = orbit8();
  auto rule = orbit_rule(o.s1, o.s2);
  SubsetState full_mask(8);
  for (int i = 0; i < 8; ++i) full_mask.set(i);
  std::mt19937 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    SubsetState s = random_subset(8, rng);
    CHECK(closure_masked(rule, s, full_mask) == closure(rule, s));
    SubsetState mask = random_subset(8, rng);
    SubsetState res = closure_masked(rule, s, mask);
    CHECK(mask.contains(res));
    // restricted closure never exceeds the unrestricted one
    CHECK(closure(rule, s).contains(res));
  }
}
