#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hurwitz/json_io.hpp"
#include "hurwitz/robust.hpp"

using namespace hurwitz;

namespace {

std::vector<RackPtr> desk_racks() {
  std::vector<RackPtr> racks{s3_transposition_quandle(), dihedral_quandle(3),
                             dihedral_quandle(5), trivial_rack(2), trivial_rack(3)};
  Group d4 = dihedral_group(4);
  for (const auto& cls : conjugacy_classes(d4)) racks.push_back(conjugation_quandle(d4, cls));
  Group q8 = quaternion_group();
  for (const auto& cls : conjugacy_classes(q8)) racks.push_back(conjugation_quandle(q8, cls));
  return racks;
}

}  // namespace

TEST_CASE("lift of the derived covering reproduces each source orbit") {
  for (const auto& rack : desk_racks()) {
    for (const auto& o : decompose_cube(rack)) {
      auto [g, q] = quotient(o);
      auto cov = derive_labels(o, g, q);
      auto L = lift_covering(cov);
      REQUIRE(L.size() == o.size());
      CHECK(equivariant_isomorphic(L.s1, L.s2, o.s1, o.s2));
    }
  }
}

TEST_CASE("quotient of a lift reproduces the labeled graph and fiber size") {
  std::vector<LabeledCovering> covs;
  covs.push_back(builtin_graph("G7_52").instantiate(7, 2, 4, 1));
  covs.push_back(builtin_graph("G10_532").instantiate(5, 3, 0, 0));
  covs.push_back(builtin_graph("G10_532").instantiate(2, 1, 1, 0));
  for (const auto& tc : enumerate_template_coverings(builtin_graph("G10_10"), 6))
    covs.push_back(tc.covering);
  for (const auto& cov : covs) {
    auto L = lift_covering(cov);
    auto [g2, q2] = quotient_of_action(L.s1, L.s2, 0);
    CHECK(q2.N == cov.N);
    CHECK(are_isomorphic(g2, cov.g, false));
  }
}

TEST_CASE("cycle labels survive arbitrary re-sectioning") {
  std::mt19937 rng(99);
  for (const auto& rack : {s3_transposition_quandle(), dihedral_quandle(3)}) {
    for (const auto& o : decompose_cube(rack)) {
      auto [g, q] = quotient(o);
      auto cov = derive_labels(o, g, q);
      for (int trial = 0; trial < 10; ++trial) {
        LabeledCovering re = cov;
        std::vector<int> shift(g.n);
        for (int& s : shift) s = static_cast<int>(rng() % cov.N);
        for (int v = 0; v < g.n; ++v) {
          re.x_label[v] = ((cov.x_label[v] + shift[v] - shift[g.x[v]]) % cov.N + cov.N) % cov.N;
          re.y_label[v] = ((cov.y_label[v] + shift[v] - shift[g.y[v]]) % cov.N + cov.N) % cov.N;
        }
        validate_covering(re);
        for (const auto& c : xy_cycles(g))
          CHECK(cycle_label(re, c, "xy") == cycle_label(cov, c, "xy"));
        for (const auto& c : yx_cycles(g))
          CHECK(cycle_label(re, c, "yx") == cycle_label(cov, c, "yx"));
      }
    }
  }
}

TEST_CASE("rack json round-trip") {
  auto r = s3_transposition_quandle();
  auto r2 = rack_from_json(rack_to_json(*r));
  CHECK(r2->size() == r->size());
  CHECK(r2->table() == r->table());

  // group+class form
  Group s3 = symmetric_group(3);
  Json j;
  j["n"] = s3.n;
  std::vector<std::vector<int>> mult(s3.n, std::vector<int>(s3.n));
  for (int a = 0; a < s3.n; ++a)
    for (int b = 0; b < s3.n; ++b) mult[a][b] = s3.mul(a, b);
  j["mult"] = mult;
  std::vector<int> cls;
  for (const auto& c : conjugacy_classes(s3))
    if (c.size() == 3) cls = c;
  j["class"] = cls;
  auto r3 = rack_from_json(j);
  CHECK(r3->size() == 3);
  CHECK(r3->is_braided());
}

TEST_CASE("graph and covering json round-trips") {
  auto t = builtin_graph("G7_52");
  SchreierGraph g2 = graph_from_json(graph_to_json(t.g));
  CHECK(g2.n == t.g.n);
  CHECK(g2.x == t.g.x);
  CHECK(g2.y == t.g.y);
  CHECK(g2.v0 == t.g.v0);

  auto cov = t.instantiate(7, 2, 4, 1);
  LabeledCovering cov2 = covering_from_json(covering_to_json(cov));
  CHECK(cov2.N == cov.N);
  CHECK(cov2.x_label == cov.x_label);
  CHECK(cov2.y_label == cov.y_label);
  CHECK(cov2.g.x == cov.g.x);
}

TEST_CASE("json loaders validate") {
  Json bad = graph_to_json(builtin_graph("G7_52").g);
  bad["x"][0] = 3;  // breaks x^3 = id
  CHECK_THROWS_AS(graph_from_json(bad), std::invalid_argument);

  Json badrack;
  badrack["table"] = std::vector<std::vector<int>>{{0, 0}, {0, 1}};
  CHECK_THROWS_AS(rack_from_json(badrack), std::invalid_argument);
}

TEST_CASE("orbit json dump carries points and both actions") {
  auto o = enumerate_orbit(s3_transposition_quandle(), {0, 1, 2});
  Json j = orbit_to_json(o);
  CHECK(j["points"].size() == 8);
  CHECK(j["sigma1"].size() == 8);
  CHECK(j["sigma2"].size() == 8);
  CHECK(j["rack_n"] == 3);
}

TEST_CASE("stock rack sources resolve") {
  CHECK(resolve_rack_source("S3-transpositions")->size() == 3);
  CHECK(resolve_rack_source("S4-transpositions")->size() == 6);
  CHECK(resolve_rack_source("dihedral-3")->size() == 3);
  CHECK(resolve_rack_source("trivial-2")->size() == 2);
  CHECK_THROWS(resolve_rack_source("no-such-file.json"));
}
