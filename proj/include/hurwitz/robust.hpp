// Robust subgraph chains of pointed Schreier graphs, the fiber-set plague
// construction over them, the stock graphs G10{10}, G10{5,3,2}, G7{5,2} with
// their label templates, fragment gluing (Span graphs), and the bound
// verifications for those families.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hurwitz/covering.hpp"
#include "hurwitz/metrics.hpp"
#include "hurwitz/schreier.hpp"

namespace hurwitz {

struct RobustChain {
  SchreierGraph g;
  int v0 = 0;
  int t = 0;  // number of triangles = number of chain steps

  struct Step {
    std::vector<int> triangle;      // the triangle added (vertex list)
    std::vector<int> new_vertices;  // vertices entering at this step
    std::vector<std::pair<int, int>> new_y_edges;  // (v, y(v)), loops as (v, v)
    int m = 0;                      // y-edge increment, in {0,1,2}
  };
  std::vector<int> h0_vertices;     // the zero-triangle base subgraph
  int h0_y_edges = 1;
  std::vector<Step> steps;          // steps[j-1] builds subgraph j from j-1

  std::vector<int> K;               // step indices with m == 2 (1-based, matching steps[k-1])
  std::vector<int> join_level;      // per vertex, the subgraph index where it enters (0 = base)

  std::vector<int> vertices_up_to(int j) const;  // vertex set of subgraph j
  std::vector<int> m_profile() const;            // m_1 .. m_t
};

// Greedy chain by breadth-first accretion of whole triangles from v0.
// Requires v0 with an x-loop; throws std::invalid_argument otherwise.
RobustChain robust_chain(const SchreierGraph& g, int v0);

// True iff every prefix of the chain satisfies: connected, contains v0, whole
// triangles only, and every vertex has its y-edge or y-loop inside.
bool chain_prefixes_robust(const RobustChain& chain);

struct PkPlagueResult {
  SubsetState set;                  // over the lift
  std::vector<int> chosen;          // chosen vertex per K entry
  std::vector<bool> plague_on_level;  // per subgraph 1..t: closure covers it
  bool all_levels = false;
};

// The set v0[*] union v(k)[*] for k in K, verified to spread over the lift of
// every chain prefix (closure restricted to the prefix fibers). choice selects
// v(k) among the step's new vertices; default takes the first for which all
// levels verify, scanning choices in order.
PkPlagueResult pk_plague(const RobustChain& chain, const LabeledCovering& cov,
                         const std::vector<int>* choice = nullptr);
// Every choice function, with its verification outcome.
std::vector<PkPlagueResult> pk_plague_all_choices(const RobustChain& chain,
                                                  const LabeledCovering& cov);

// ---- stock graphs and fragments ----

// name is one of "G10_10", "G10_532", "G7_52"; the returned template carries
// the symbolic labels (a, b, c) and the fixed printed labels.
GraphTemplate builtin_graph(const std::string& name);

enum class Fragment { F1, F2, F3, F4 };
Fragment fragment_from_string(const std::string& s);

// Chain of k triangles grown from an x-loop vertex, one fragment glued on
// each of the k+1 open y-edges. Exactly k+1 fragments, at most one of F3/F4.
SchreierGraph span_graph(int k, const std::vector<Fragment>& fragments);

// ---- per-family verification ----

struct VerifyEntry {
  std::string what;
  bool pass = false;
  std::string detail;
};
struct VerifyReport {
  std::string family;       // which case the instance fell into
  std::vector<VerifyEntry> entries;
  bool applicable = true;
  bool pass = true;
  void add(std::string what, bool ok, std::string detail = "");
};

// Classifies the covering (stock graph up to isomorphism, or generic chain
// case), exhibits the family's plague, closure-verifies it on the lift, and
// checks the stated immunity bound against the weight.
VerifyReport verify_family_bounds(const LabeledCovering& cov);

}  // namespace hurwitz
