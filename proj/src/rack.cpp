#include "hurwitz/rack.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace hurwitz {

namespace {

void check_matrix_shape(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("rack table: ragged rows");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("rack table: entry out of range");
  }
}

std::vector<int> flatten(const std::vector<std::vector<int>>& table) {
  std::vector<int> flat;
  flat.reserve(table.size() * table.size());
  for (const auto& row : table) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

}  // namespace

RackCheck validate_rack(const std::vector<std::vector<int>>& table) {
  check_matrix_shape(table);
  const int n = static_cast<int>(table.size());
  RackCheck res;
  if (n == 0) {
    res.reason = "empty table";
    return res;
  }

  // R1: each row is a bijection
  for (int r = 0; r < n; ++r) {
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
      int t = table[r][s];
      if (seen[t]) {
        res.witness = {{r, s, -1}};
        res.reason = "row " + std::to_string(r) + " is not a bijection";
        return res;
      }
      seen[t] = 1;
    }
  }
  // R2: self-distributivity
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        if (table[r][table[s][t]] != table[table[r][s]][table[r][t]]) {
          res.witness = {{r, s, t}};
          res.reason = "self-distributivity fails";
          return res;
        }

  res.is_rack = true;
  res.is_quandle = true;
  for (int r = 0; r < n; ++r)
    if (table[r][r] != r) {
      res.is_quandle = false;
      break;
    }
  if (res.is_quandle) {
    // braided: for every ordered pair, r |> (s |> r) = s  or  r |> s = s
    res.is_braided = true;
    for (int r = 0; r < n && res.is_braided; ++r)
      for (int s = 0; s < n; ++s)
        if (table[r][table[s][r]] != s && table[r][s] != s) {
          res.is_braided = false;
          break;
        }
  }
  return res;
}

Rack::Rack(int n, std::vector<int> table) : n_(n), table_(std::move(table)) {
  if (n <= 0 || static_cast<int>(table_.size()) != n * n)
    throw std::invalid_argument("rack table: wrong size");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) rows[r][s] = table_[r * n + s];
  RackCheck c = validate_rack(rows);
  if (!c.is_rack) throw std::invalid_argument("not a rack: " + c.reason);
  is_quandle_ = c.is_quandle;
  is_braided_ = c.is_braided;
  inv_table_.assign(n * n, -1);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) inv_table_[r * n_ + table_[r * n_ + s]] = s;
}

RackPtr make_rack(int n, std::vector<int> table) {
  return std::make_shared<const Rack>(n, std::move(table));
}

RackPtr make_rack(const std::vector<std::vector<int>>& table) {
  check_matrix_shape(table);
  return make_rack(static_cast<int>(table.size()), flatten(table));
}

// ---- groups ----

Group group_from_table(const std::vector<std::vector<int>>& mult) {
  check_matrix_shape(mult);
  const int n = static_cast<int>(mult.size());
  if (n == 0) throw std::invalid_argument("group table: empty");
  Group g;
  g.n = n;
  g.mult = flatten(mult);

  g.e = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n; ++a)
      if (g.mul(e, a) != a || g.mul(a, e) != a) {
        ok = false;
        break;
      }
    if (ok) {
      g.e = e;
      break;
    }
  }
  if (g.e < 0) throw std::invalid_argument("group table: no identity");

  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == g.e && g.mul(b, a) == g.e) {
        g.inv[a] = b;
        break;
      }
    if (g.inv[a] < 0) throw std::invalid_argument("group table: missing inverse");
  }

  auto assoc = [&](int a, int b, int c) {
    return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw std::invalid_argument("group table: not associative");
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> d(0, n - 1);
    for (int i = 0; i < 20000; ++i)
      if (!assoc(d(rng), d(rng), d(rng)))
        throw std::invalid_argument("group table: not associative");
  }
  return g;
}

Group group_from_perm_generators(int domain, const std::vector<std::vector<int>>& gens) {
  std::vector<std::vector<int>> elems;
  std::vector<int> id(domain);
  for (int i = 0; i < domain; ++i) id[i] = i;
  elems.push_back(id);

  auto find = [&](const std::vector<int>& p) -> int {
    for (size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == p) return static_cast<int>(i);
    return -1;
  };

  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto& gen : gens) {
      std::vector<int> prod(domain);
      for (int k = 0; k < domain; ++k) prod[k] = gen[elems[i][k]];
      if (find(prod) < 0) elems.push_back(std::move(prod));
      if (elems.size() > 20000) throw std::invalid_argument("generator closure too large");
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(domain);
      for (int k = 0; k < domain; ++k) prod[k] = elems[a][elems[b][k]];
      int idx = find(prod);
      if (idx < 0) throw std::logic_error("closure not closed");
      mult[a][b] = idx;
    }
  return group_from_table(mult);
}

std::vector<std::vector<int>> conjugacy_classes(const Group& g) {
  std::vector<std::vector<int>> classes;
  std::vector<char> seen(g.n, 0);
  for (int a = 0; a < g.n; ++a) {
    if (seen[a]) continue;
    std::vector<int> cls;
    std::vector<int> stack{a};
    seen[a] = 1;
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      cls.push_back(b);
      for (int h = 0; h < g.n; ++h) {
        int c = g.mul(g.mul(h, b), g.inv[h]);
        if (!seen[c]) {
          seen[c] = 1;
          stack.push_back(c);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

RackPtr conjugation_quandle(const Group& g, const std::vector<int>& cls) {
  const int m = static_cast<int>(cls.size());
  if (m == 0) throw std::invalid_argument("conjugation quandle: empty class");
  std::vector<int> pos(g.n, -1);
  for (int i = 0; i < m; ++i) {
    if (cls[i] < 0 || cls[i] >= g.n)
      throw std::invalid_argument("conjugation quandle: element out of range");
    pos[cls[i]] = i;
  }
  std::vector<int> table(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int c = g.mul(g.mul(cls[i], cls[j]), g.inv[cls[i]]);
      if (pos[c] < 0)
        throw std::invalid_argument("subset not conjugation-closed: element " +
                                    std::to_string(cls[i]) + " |> " + std::to_string(cls[j]) +
                                    " escapes to " + std::to_string(c));
      table[i * m + j] = pos[c];
    }
  return make_rack(m, std::move(table));
}

// ---- stock racks and groups ----

RackPtr trivial_rack(int n) {
  std::vector<int> t(n * n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) t[r * n + s] = s;
  return make_rack(n, std::move(t));
}

RackPtr dihedral_quandle(int n) {
  std::vector<int> t(n * n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) t[r * n + s] = ((2 * r - s) % n + n) % n;
  return make_rack(n, std::move(t));
}

RackPtr s3_transposition_quandle() {
  Group s3 = symmetric_group(3);
  for (const auto& cls : conjugacy_classes(s3))
    if (cls.size() == 3) return conjugation_quandle(s3, cls);
  throw std::logic_error("S3 has a class of size 3");
}

Group cyclic_group(int n) {
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return group_from_perm_generators(n, {cyc});
}

Group symmetric_group(int n) {
  if (n <= 1) return cyclic_group(1);
  std::vector<int> swap01(n), cyc(n);
  for (int i = 0; i < n; ++i) {
    swap01[i] = i;
    cyc[i] = (i + 1) % n;
  }
  swap01[0] = 1;
  swap01[1] = 0;
  return group_from_perm_generators(n, {swap01, cyc});
}

Group dihedral_group(int n) {
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return group_from_perm_generators(n, {rot, refl});
}

Group quaternion_group() {
  // elements (s, u): s in {+,-}, u in {e,i,j,k}; index = s*4 + u
  auto axis_mul = [](int a, int b, int& sign) -> int {
    // 0=e,1=i,2=j,3=k ; i*j=k etc., sign flips on reversed order and squares
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == b) {
      sign = -sign;
      return 0;
    }
    static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int psign[4][4] = {{1, 1, 1, 1}, {1, 1, 1, -1}, {1, -1, 1, 1}, {1, 1, -1, 1}};
    sign *= psign[a][b];
    return prod[a][b];
  };
  std::vector<std::vector<int>> mult(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int sign = (x < 4 ? 1 : -1) * (y < 4 ? 1 : -1);
      int u = axis_mul(x % 4, y % 4, sign);
      mult[x][y] = (sign > 0 ? 0 : 4) + u;
    }
  return group_from_table(mult);
}

Group elementary_abelian_2(int k) {
  const int n = 1 << k;
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[a][b] = a ^ b;
  return group_from_table(mult);
}

Group direct_product(const Group& a, const Group& b) {
  const int n = a.n * b.n;
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int ax = x / b.n, bx = x % b.n, ay = y / b.n, by = y % b.n;
      mult[x][y] = a.mul(ax, ay) * b.n + b.mul(bx, by);
    }
  return group_from_table(mult);
}

std::vector<std::pair<std::string, Group>> small_groups_up_to(int max_order) {
  std::vector<std::pair<std::string, Group>> out;
  auto add = [&](const std::string& name, Group g) {
    if (g.n <= max_order) out.emplace_back(name, std::move(g));
  };
  add("Z1", cyclic_group(1));
  add("Z2", cyclic_group(2));
  add("Z3", cyclic_group(3));
  add("Z4", cyclic_group(4));
  add("Z2xZ2", elementary_abelian_2(2));
  add("Z5", cyclic_group(5));
  add("Z6", cyclic_group(6));
  add("S3", symmetric_group(3));
  add("Z7", cyclic_group(7));
  add("Z8", cyclic_group(8));
  add("Z4xZ2", direct_product(cyclic_group(4), cyclic_group(2)));
  add("Z2xZ2xZ2", elementary_abelian_2(3));
  add("D4", dihedral_group(4));
  add("Q8", quaternion_group());
  return out;
}

}  // namespace hurwitz
