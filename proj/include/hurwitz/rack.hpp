// Finite racks and quandles given by operation tables, plus construction from
// conjugation in finite groups.
#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hurwitz {

struct RackCheck {
  bool is_rack = false;
  bool is_quandle = false;
  bool is_braided = false;
  // witness of the first axiom violation: (r,s,-1) for a non-bijective row,
  // (r,s,t) for a self-distributivity failure
  std::optional<std::array<int, 3>> witness;
  std::string reason;
};

// Validates flags by direct enumeration over the table. Throws
// std::invalid_argument on a malformed matrix (ragged rows, out-of-range entry).
RackCheck validate_rack(const std::vector<std::vector<int>>& table);

class Rack {
 public:
  // table is row-major, table[r*n + s] = r |> s. Throws std::invalid_argument
  // if the table is not a rack.
  Rack(int n, std::vector<int> table);

  int size() const { return n_; }
  int op(int r, int s) const { return table_[r * n_ + s]; }
  // s with r |> s = t; exists by axiom R1
  int inv_op(int r, int t) const { return inv_table_[r * n_ + t]; }
  bool is_quandle() const { return is_quandle_; }
  bool is_braided() const { return is_braided_; }
  const std::vector<int>& table() const { return table_; }

 private:
  int n_;
  std::vector<int> table_;
  std::vector<int> inv_table_;
  bool is_quandle_;
  bool is_braided_;
};

using RackPtr = std::shared_ptr<const Rack>;

RackPtr make_rack(int n, std::vector<int> table);
RackPtr make_rack(const std::vector<std::vector<int>>& table);

// ---- groups (multiplication tables) ----

struct Group {
  int n = 0;
  std::vector<int> mult;  // row-major, mult[a*n+b] = a*b
  int e = 0;              // identity
  std::vector<int> inv;   // inverses
  std::vector<std::string> names;  // optional element names for I/O

  int mul(int a, int b) const { return mult[a * n + b]; }
};

// Checks identity/inverses and associativity (full check for n <= 64, random
// sampling above). Throws std::invalid_argument on failure.
Group group_from_table(const std::vector<std::vector<int>>& mult);

// Closes a set of permutations of {0..domain-1} into a group and returns its
// multiplication table (elements indexed in closure discovery order, identity
// first).
Group group_from_perm_generators(int domain, const std::vector<std::vector<int>>& gens);

std::vector<std::vector<int>> conjugacy_classes(const Group& g);

// Quandle on a conjugation-closed subset, r |> s = r s r^-1 re-indexed within
// the class. Throws std::invalid_argument naming the escaping element if the
// subset is not closed.
RackPtr conjugation_quandle(const Group& g, const std::vector<int>& cls);

// ---- stock racks and groups ----

RackPtr trivial_rack(int n);           // r |> s = s
RackPtr dihedral_quandle(int n);       // on Z_n, r |> s = 2r - s
RackPtr s3_transposition_quandle();    // conjugacy class of 2-cycles in S3

Group cyclic_group(int n);
Group symmetric_group(int n);          // n <= 5 expected
Group dihedral_group(int n);           // order 2n
Group quaternion_group();              // Q8
Group elementary_abelian_2(int k);     // (Z2)^k
Group direct_product(const Group& a, const Group& b);

// All groups of order <= max_order, up to isomorphism, with display names.
std::vector<std::pair<std::string, Group>> small_groups_up_to(int max_order);

}  // namespace hurwitz
