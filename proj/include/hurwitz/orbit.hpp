// Orbits of the three-strand braid group acting on triples of a finite rack:
//   sigma1 (r,s,t) = (r|>s, r, t)     sigma2 (r,s,t) = (r, s|>t, s)
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hurwitz/perm.hpp"
#include "hurwitz/rack.hpp"

namespace hurwitz {

using Triple = std::array<int, 3>;

Triple act_sigma(int which, const Triple& t, const Rack& r);      // which in {1,2}
Triple act_sigma_inv(int which, const Triple& t, const Rack& r);

struct HurwitzOrbit {
  RackPtr rack;
  std::vector<Triple> points;  // discovery order from the seed
  Perm s1, s2;                 // generator actions as point-index permutations
  Perm s1inv, s2inv;
  int base = 0;                // index of the seed triple

  int size() const { return static_cast<int>(points.size()); }
  int index_of(const Triple& t) const;  // -1 if absent
};

inline constexpr std::size_t kDefaultOrbitCap = 1000000;

// BFS closure of the seed under sigma1, sigma2 and inverses; queue order is
// sigma1, sigma2, sigma1^-1, sigma2^-1, which fixes the point numbering.
// Throws std::runtime_error when the orbit exceeds cap.
HurwitzOrbit enumerate_orbit(RackPtr rack, const Triple& seed,
                             std::size_t cap = kDefaultOrbitCap);

// Partition of R^3 into orbits, ordered by their lexicographically smallest
// triple.
std::vector<HurwitzOrbit> decompose_cube(RackPtr rack, std::size_t cap = kDefaultOrbitCap);

// Cycles of sigma_which on the orbit (deterministic order, see cycles_of).
std::vector<std::vector<int>> sigma_cycles(const HurwitzOrbit& o, int which);

struct DeltaPermutation {
  Perm perm;        // (s1 s2)^3
  long long order;  // smallest k >= 1 with perm^k = id
};
DeltaPermutation delta_permutation(const HurwitzOrbit& o);
Perm delta_of(const Perm& s1, const Perm& s2);

struct SimpleIntersection {
  bool simply_intersecting = true;
  // witness pair of cycles meeting in >= 2 points, when not simply intersecting
  std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
};
// Every sigma1-cycle and sigma2-cycle share at most one point.
SimpleIntersection check_simply_intersecting(const Perm& s1, const Perm& s2);
SimpleIntersection check_simply_intersecting(const HurwitzOrbit& o);

struct BraidedSizeReport {
  std::map<int, int> histogram;  // orbit size -> count
  std::vector<int> offending_sizes;
  bool pass = false;
};
// For braided racks, orbit sizes must lie in {1,3,6,8,9,12,16,24}.
// Precondition: rack.is_braided(); throws std::invalid_argument otherwise.
BraidedSizeReport check_braided_sizes(RackPtr rack);

}  // namespace hurwitz
