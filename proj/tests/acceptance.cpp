// Acceptance suite: runs every shipped end-to-end claim and prints one
// pass/fail line per criterion. Exit code 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hurwitz/json_io.hpp"
#include "hurwitz/robust.hpp"
#include "hurwitz/scan.hpp"

using namespace hurwitz;

namespace {

struct Criterion {
  int id;
  std::string name;
  std::function<std::string()> run;  // returns detail; throws on failure
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

HurwitzOrbit orbit8() { return enumerate_orbit(s3_transposition_quandle(), {0, 1, 2}); }

// ---- criterion bodies ----

std::string c1_census() {
  auto orbits = decompose_cube(s3_transposition_quandle());
  require(orbits.size() == 6, "expected 6 orbits");
  int ones = 0, eights = 0;
  for (const auto& o : orbits) {
    if (o.size() == 1) ++ones;
    if (o.size() == 8) ++eights;
  }
  require(ones == 3 && eights == 3, "expected three orbits of size 1 and three of size 8");
  return "3 orbits of size 1, 3 of size 8";
}

std::string c2_worked_example() {
  auto o = orbit8();
  auto [g, q] = quotient(o);
  require(g.n == 4, "quotient must have 4 vertices");
  require(q.N == 2, "fiber size must be 2");

  auto cov = derive_labels(o, g, q);
  int loop_v = -1;
  for (int v = 0; v < g.n; ++v)
    if (g.x[v] == v) loop_v = v;
  require(loop_v >= 0, "quotient must carry an x-loop");
  require(cov.x_label[loop_v] == 1, "x-loop label a must be 1");
  int b = -1;
  for (const auto& c : xy_cycles(g)) {
    require(cycle_label(cov, c, "xy") == 0, "xy-cycle labels must vanish");
    if (c.size() == 1) b = ((1 - cycle_label(cov, c, "xy")) % 2 + 2) % 2;
  }
  for (const auto& c : yx_cycles(g))
    require(cycle_label(cov, c, "yx") == 0, "yx-cycle labels must vanish");
  require(b == 1, "y-edge label b must be 1");

  auto rule = orbit_rule(o.s1, o.s2);
  auto oracle = exhaustive_oracle(rule, 3);
  require(oracle.has_value() && *oracle == 3, "oracle-certified minimal plague must be 3");
  require(!exhaustive_oracle(rule, 2).has_value(), "no plague of size <= 2 may exist");
  PlagueResult fast = minimal_plague(rule);
  require(fast.size == 3 && fast.certified_minimal, "search must certify size 3");
  require(immunity(rule) == Rational(3, 8), "immunity must be 3/8");
  require(weight_value(cov) == Rational(3, 8), "weight must be 3/8");
  ConjectureResult cr = check_conjecture(cov);
  require(cr.exact && cr.verdict == "holds" && cr.immunity_value == cr.omega,
          "bound must hold with equality");
  return "4 vertices, N=2, a=b=1, plague 3, imm = weight = 3/8";
}

std::string c3_label_solving() {
  auto found = enumerate_template_coverings(builtin_graph("G7_52"), 21);
  require(found.size() == 1, "expected exactly one covering up to N=21, got " +
                                 std::to_string(found.size()));
  require(found[0].N == 7, "fiber size must be 7");
  require(found[0].syms == std::array<int, 3>{2, 4, 1}, "labels must be (2,4,1)");
  return "unique covering: N=7, (a,b,c)=(2,4,1)";
}

std::string c4_g7_metrics() {
  auto cov = builtin_graph("G7_52").instantiate(7, 2, 4, 1);
  require(weight_value(cov) == Rational(25, 84), "weight must be 25/84");
  auto L = lift_covering(cov);
  auto rule = orbit_rule(L.s1, L.s2);
  SubsetState P(L.size());
  for (int i = 0; i < 7; ++i) {
    P.set(L.point(0, i));  // v1[*]
    P.set(L.point(2, i));  // v3[*]
  }
  require(P.count() == 14, "plague candidate must have 14 points");
  require(is_plague(rule, P), "v1[*] u v3[*] must spread to all 49 points");
  require(Rational(2, 7) < Rational(25, 84), "2/7 < 25/84");
  return "weight 25/84; 14-point plague verified; imm <= 2/7 < 25/84";
}

std::string c5_g10_10() {
  // The criterion asks for the smallest admissible covering. The x-loop
  // forces 3a = -1 (mod N) and the lone ten-cycle through the x-fixed vertex
  // carries the gauge-invariant label a+2, which admissibility forces to 0,
  // so N divides 5; both N = 1 and N = 5 fail the simply-intersecting lift
  // test, exhaustively over the full label moduli. The remaining sub-claims
  // are verified on every labeled covering the graph does have.
  auto t = builtin_graph("G10_10");
  auto found = enumerate_template_coverings(t, 12);

  int verified = 0, total = 0;
  const int N = 5;
  for (int b = 0; b < N; ++b)
    for (int c = 0; c < N; ++c) {
      auto cov = t.instantiate(N, 3, b, c);
      auto L = lift_covering(cov);
      auto rule = orbit_rule(L.s1, L.s2);
      SubsetState P(L.size());
      for (int i = 0; i < N; ++i) {
        P.set(L.point(0, i));  // v1[*]
        P.set(L.point(2, i));  // v3[*]
      }
      P.set(L.point(8, 0));  // v9[0]
      ++total;
      if (is_plague(rule, P) && weight_value(cov) == Rational(1, 4) &&
          Rational(2 * N + 1, 10 * N) < Rational(1, 4))
        ++verified;
    }

  require(!found.empty(),
          "no admissible covering exists: N is forced to divide 5 and every label "
          "assignment fails the simply-intersecting lift check (the stated premise is "
          "empty; the plague v1[*] u v3[*] u v9[0], the bound 11/50 < 1/4, and the "
          "weight 1/4 were still verified on all " +
              std::to_string(verified) + "/" + std::to_string(total) +
              " labeled N=5 coverings of the graph)");
  // unreachable given the verified emptiness; kept for the stated contract
  return "admissible covering found";
}

std::string c6_g10_532_cases() {
  auto t = builtin_graph("G10_532");
  auto found = enumerate_template_coverings(t, 25);
  require(!found.empty(), "coverings must exist up to N=25");

  auto case_of = [&](const LabeledCovering& cov) {
    int b = -1, c = -1;
    for (const auto& cyc : xy_cycles(cov.g)) {
      if (cyc.size() == 3) b = cycle_label(cov, cyc, "xy");
      if (cyc.size() == 2) c = cycle_label(cov, cyc, "xy");
    }
    return std::make_pair(b == 0, c == 0);
  };
  const Rational expected[2][2] = {{Rational(1, 4), Rational(17, 60)},
                                   {Rational(11, 40), Rational(3, 10)}};
  bool seen[2][2] = {{false, false}, {false, false}};
  for (const auto& tc : found) {
    auto [b0, c0] = case_of(tc.covering);
    seen[b0][c0] = true;
    require(weight_value(tc.covering) == expected[b0][c0],
            "weight must match the case formula at N=" + std::to_string(tc.N));
    VerifyReport rep = verify_family_bounds(tc.covering);
    require(rep.applicable && rep.pass,
            "family plague verification must pass at N=" + std::to_string(tc.N));
  }
  std::ostringstream os;
  os << found.size() << " coverings;";
  const char* names[2][2] = {{"b!=0,c!=0", "b!=0,c=0"}, {"b=0,c!=0", "b=0,c=0"}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      os << " " << names[i][j] << (seen[i][j] ? " verified" : " unreachable (reported)") << ";";
  return os.str();
}

std::string c7_braided_sizes() {
  int checked = 0;
  for (const auto& [name, group] : small_groups_up_to(8)) {
    for (const auto& cls : conjugacy_classes(group)) {
      auto rack = conjugation_quandle(group, cls);
      if (!rack->is_braided()) continue;
      auto rep = check_braided_sizes(rack);
      require(rep.pass, "orbit size outside {1,3,6,8,9,12,16,24} for a class of " + name);
      ++checked;
    }
  }
  for (int n = 1; n <= 9; ++n) {
    auto rack = dihedral_quandle(n);
    if (!rack->is_braided()) continue;
    auto rep = check_braided_sizes(rack);
    require(rep.pass, "orbit size violation for the dihedral quandle of order " +
                          std::to_string(n));
    ++checked;
  }
  return std::to_string(checked) + " braided racks, all orbit sizes in {1,3,6,8,9,12,16,24}";
}

std::string c8_conjecture_scan() {
  RunReport rep = scan_group_class_quandles(8);
  require(rep.errors.empty(), "scan must not produce input errors");
  require(rep.failures == 0, "no instance may violate the bound");
  int holds = 0;
  for (const auto& s : rep.spaces) {
    require(s.conjecture == "holds", "space " + s.space_id + " verdict: " + s.conjecture);
    require(s.certified, "space " + s.space_id + " must be certified at this size");
    ++holds;
  }
  return std::to_string(holds) + " spaces, all certified, zero failures";
}

std::string c9_oracle_equivalence() {
  std::vector<AutomatonRule> instances;
  // orbits of stock racks up to 20 points
  std::vector<RackPtr> racks{s3_transposition_quandle(), dihedral_quandle(3),
                             dihedral_quandle(5), trivial_rack(2), trivial_rack(3)};
  Group d4 = dihedral_group(4);
  for (const auto& cls : conjugacy_classes(d4)) racks.push_back(conjugation_quandle(d4, cls));
  for (const auto& rack : racks)
    for (const auto& o : decompose_cube(rack))
      if (o.size() >= 2 && o.size() <= 20) instances.push_back(orbit_rule(o.s1, o.s2));

  // lifted coverings of the 4-vertex quotient shape, valid label grids
  SchreierGraph g4;
  g4.n = 4;
  g4.x = {3, 1, 0, 2};
  g4.y = {1, 0, 3, 2};
  g4.v0 = 0;
  for (int N = 2; N <= 5; ++N) {
    if (N % 3 == 0) continue;
    int a = 0;
    while ((3 * a + 1) % N != 0) ++a;
    for (int s = 0; s < N && instances.size() < 90; ++s)
      for (int u = 0; u < N; ++u) {
        LabeledCovering cov;
        cov.g = g4;
        cov.N = N;
        cov.x_label = {s, a, 0, ((-1 - s) % N + N) % N};
        cov.y_label = {u, (1 - u % N + N) % N, 0, 1 % N};
        validate_covering(cov);
        auto L = lift_covering(cov);
        instances.push_back(orbit_rule(L.s1, L.s2));
      }
  }
  // trivial coverings of span graphs (the lift is the graph itself)
  for (const auto& frags : std::vector<std::vector<Fragment>>{
           {Fragment::F1}, {Fragment::F2}, {Fragment::F3}, {Fragment::F4}}) {
    auto g = span_graph(0, frags);
    LabeledCovering cov;
    cov.g = g;
    cov.N = 1;
    cov.x_label.assign(g.n, 0);
    cov.y_label.assign(g.n, 0);
    auto L = lift_covering(cov);
    instances.push_back(orbit_rule(L.s1, L.s2));
  }
  std::mt19937 rng(2024);
  while (instances.size() < 100) {
    int m = 4 + static_cast<int>(rng() % 17);  // up to 20 points
    std::vector<int> offsets;
    for (int i = 0, k = 1 + static_cast<int>(rng() % 3); i < k; ++i)
      offsets.push_back(1 + static_cast<int>(rng() % (m - 1)));
    instances.push_back(zm_rule(m, offsets));
  }
  instances.resize(100);

  for (size_t i = 0; i < instances.size(); ++i) {
    const auto& rule = instances[i];
    require(rule.n <= 20, "instance too large");
    PlagueResult fast = minimal_plague(rule);
    auto slow = exhaustive_oracle(rule, rule.n);
    require(fast.certified_minimal && slow.has_value() && fast.size == *slow,
            "pruned search disagrees with the oracle on instance " + std::to_string(i) +
                " (" + std::to_string(fast.size) + " vs " +
                std::to_string(slow.value_or(-1)) + ")");
  }
  return "100 instances, pruned search = oracle on all";
}

std::string c10_automaton_laws() {
  std::vector<AutomatonRule> rules;
  for (const auto& o : decompose_cube(s3_transposition_quandle()))
    rules.push_back(orbit_rule(o.s1, o.s2));
  for (const auto& o : decompose_cube(dihedral_quandle(3)))
    rules.push_back(orbit_rule(o.s1, o.s2));
  rules.push_back(zm_rule(12, {3}));
  rules.push_back(zm_rule(9, {2, 5}));
  rules.push_back(zm_rule(15, {1, 4, 7}));

  std::mt19937 rng(4096);
  int pairs = 0;
  while (pairs < 1000) {
    const auto& rule = rules[rng() % rules.size()];
    SubsetState f(rule.n), g(rule.n);
    for (int i = 0; i < rule.n; ++i) {
      if (rng() & 1) f.set(i);
      if (rng() & 1) g.set(i);
    }
    for (size_t i = 0; i < g.w.size(); ++i) g.w[i] |= f.w[i];

    require(step(rule, f).contains(f), "step must be extensive");
    require(step(rule, g).contains(step(rule, f)), "step must be monotone");
    SubsetState cf = closure(rule, f);
    require(cf.contains(f), "closure must be extensive");
    require(closure(rule, g).contains(cf), "closure must be monotone");
    require(closure(rule, cf) == cf, "closure must be idempotent");
    require(is_quarantine(rule, cf), "closures are quarantines");

    if (!rule.tuples.empty()) {
      bool never_two = true;
      for (const auto& t : rule.tuples) {
        int hits = int(f.test(t[0])) + int(f.test(t[1])) + int(f.test(t[2]));
        if (hits == 2) never_two = false;
      }
      require(is_quarantine(rule, f) == never_two,
              "quarantine iff no tuple is hit in exactly two members");
    }
    ++pairs;
  }
  return "1000 random (rule, subset) pairs, all laws hold";
}

std::string c11_zm_plagues() {
  int checked = 0;
  for (int m = 2; m <= 30; ++m) {
    // one offset: representatives of Z_m / <l> spread
    for (int l = 1; l < m; ++l) {
      auto rule = zm_rule(m, {l});
      int g = std::gcd(l, m);
      std::vector<int> reps;
      for (int i = 0; i < g; ++i) reps.push_back(i);
      require(is_plague(rule, SubsetState::of(m, reps)),
              "transversal fails for m=" + std::to_string(m) + " l=" + std::to_string(l));
      ++checked;
    }
    // offsets (1, l+1, -l): the subgroup <l> plus a transversal spreads
    for (int l = 1; l <= m - 2; ++l) {
      auto rule = zm_rule(m, {1, l + 1, -l});
      int g = std::gcd(l, m);
      std::set<int> seed;
      for (int i = 0; i < m; i += 1) {
        // subgroup <l>
      }
      for (int v = 0, cur = 0; v < m / g; ++v, cur = (cur + l) % m) seed.insert(cur);
      for (int i = 0; i < g; ++i) seed.insert(i);
      require(is_plague(rule, SubsetState::of(m, std::vector<int>(seed.begin(), seed.end()))),
              "subgroup+transversal fails for m=" + std::to_string(m) + " l=" + std::to_string(l));
      ++checked;
    }
    // offsets (l, l-1): the first half of the residues spreads
    for (int l = 2; l < m; ++l) {
      auto rule = zm_rule(m, {l, l - 1});
      int half = (m % 2 == 1) ? (m - 1) / 2 : m / 2 - 1;
      std::vector<int> seed;
      for (int i = 0; i <= half; ++i) seed.push_back(i);
      require(static_cast<int>(seed.size()) <= (m + 1) / 2, "half-seed size bound");
      require(is_plague(rule, SubsetState::of(m, seed)),
              "half-interval fails for m=" + std::to_string(m) + " l=" + std::to_string(l));
      ++checked;
    }
    // sharper: for l = 2 the pair {0,1} already spreads
    if (m >= 3) {
      require(is_plague(zm_rule(m, {2, 1}), SubsetState::of(m, {0, 1})),
              "pair {0,1} fails for m=" + std::to_string(m));
      ++checked;
    }
  }
  return std::to_string(checked) + " offset-rule plague claims verified (m <= 30)";
}

std::string c12_roundtrips() {
  std::vector<RackPtr> racks{s3_transposition_quandle(), dihedral_quandle(3),
                             dihedral_quandle(4), dihedral_quandle(5), trivial_rack(2),
                             trivial_rack(3)};
  Group d4 = dihedral_group(4);
  for (const auto& cls : conjugacy_classes(d4)) racks.push_back(conjugation_quandle(d4, cls));
  Group q8 = quaternion_group();
  for (const auto& cls : conjugacy_classes(q8)) racks.push_back(conjugation_quandle(q8, cls));

  std::mt19937 rng(31415);
  int orbits = 0;
  for (const auto& rack : racks) {
    for (const auto& o : decompose_cube(rack)) {
      auto [g, q] = quotient(o);
      auto cov = derive_labels(o, g, q);
      auto L = lift_covering(cov);
      require(L.size() == o.size(), "lift size mismatch");
      require(equivariant_isomorphic(L.s1, L.s2, o.s1, o.s2),
              "lift of the derived covering must be the source orbit");
      auto [g2, q2] = quotient_of_action(L.s1, L.s2, 0);
      require(q2.N == cov.N && are_isomorphic(g2, cov.g, false),
              "lift quotient must return the same graph and fiber size");
      // cycle labels are independent of the section choice
      for (int trial = 0; trial < 3; ++trial) {
        LabeledCovering re = cov;
        std::vector<int> shift(g.n);
        for (int& s : shift) s = static_cast<int>(rng() % cov.N);
        for (int v = 0; v < g.n; ++v) {
          re.x_label[v] = ((cov.x_label[v] + shift[v] - shift[g.x[v]]) % cov.N + cov.N) % cov.N;
          re.y_label[v] = ((cov.y_label[v] + shift[v] - shift[g.y[v]]) % cov.N + cov.N) % cov.N;
        }
        validate_covering(re);
        for (const auto& c : xy_cycles(g))
          require(cycle_label(re, c, "xy") == cycle_label(cov, c, "xy"),
                  "xy-cycle label changed under re-sectioning");
        for (const auto& c : yx_cycles(g))
          require(cycle_label(re, c, "yx") == cycle_label(cov, c, "yx"),
                  "yx-cycle label changed under re-sectioning");
      }
      ++orbits;
    }
  }
  // template coverings round-trip as well
  for (const auto& tc : enumerate_template_coverings(builtin_graph("G7_52"), 7)) {
    auto L = lift_covering(tc.covering);
    auto [g2, q2] = quotient_of_action(L.s1, L.s2, 0);
    require(q2.N == tc.N && are_isomorphic(g2, tc.covering.g, false),
            "stock covering round-trip failed");
  }
  return std::to_string(orbits) + " orbits round-tripped, labels section-independent";
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "stock quandle orbit census", c1_census},
      {2, "worked example end to end", c2_worked_example},
      {3, "label solving on G7{5,2}", c3_label_solving},
      {4, "G7{5,2} metrics and plague", c4_g7_metrics},
      {5, "G10{10} covering and plague", c5_g10_10},
      {6, "G10{5,3,2} weight cases", c6_g10_532_cases},
      {7, "braided orbit sizes", c7_braided_sizes},
      {8, "bound scan over small group quandles", c8_conjecture_scan},
      {9, "search vs oracle on 100 instances", c9_oracle_equivalence},
      {10, "automaton laws", c10_automaton_laws},
      {11, "offset-rule plagues", c11_zm_plagues},
      {12, "round-trips", c12_roundtrips},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::printf("[%s] criterion %2d: %s — %s (%lld ms)\n", ok ? "PASS" : "FAIL", c.id,
                c.name.c_str(), detail.c_str(), static_cast<long long>(ms));
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
