#pragma once

// Independent oracles used by the tests. Nothing here calls into the
// library's bracket / kei / move machinery beyond plain data types.

#include <map>
#include <string>
#include <vector>

#include "nw/codec.hpp"
#include "nw/kei.hpp"
#include "nw/phrase.hpp"

namespace oracles {

// ---------------------------------------------------------------------------
// Fox coloring count of a signed Gauss code, mod a prime p: arcs are the
// maximal runs between under-passages, each crossing imposes
// in + out - 2 over = 0, and the count is p^(#arcs - rank).

struct FoxSystem {
  int arcs = 0;
  std::vector<std::vector<int>> rows;  // coefficients per equation, mod p
};

inline FoxSystem fox_system(const nw::SignedGaussCode& code) {
  FoxSystem sys;
  // arc id for every passage position, per component
  std::vector<std::vector<int>> arc_at(code.size());
  // arc entering / leaving each under-passage, over-arc per crossing label
  std::map<std::string, int> over_arc;
  std::map<std::string, std::pair<int, int>> under_arcs;  // (in, out)

  for (size_t c = 0; c < code.size(); ++c) {
    const auto& comp = code[c];
    const int n = static_cast<int>(comp.size());
    arc_at[c].assign(n, -1);
    std::vector<int> unders;
    for (int i = 0; i < n; ++i)
      if (!comp[i].over) unders.push_back(i);
    if (unders.empty()) {
      // one closed arc, even for a crossingless component
      int arc = sys.arcs++;
      for (int i = 0; i < n; ++i) arc_at[c][i] = arc;
      continue;
    }
    // the arc opened by each under-passage runs to the next one (cyclically)
    std::vector<int> arc_after(unders.size());
    for (size_t u = 0; u < unders.size(); ++u) arc_after[u] = sys.arcs++;
    for (size_t u = 0; u < unders.size(); ++u) {
      int from = unders[u];
      int to = unders[(u + 1) % unders.size()];
      for (int i = (from + 1) % n; i != to; i = (i + 1) % n) arc_at[c][i] = arc_after[u];
      arc_at[c][to] = arc_after[u];  // position of the closing under-passage
    }
    for (size_t u = 0; u < unders.size(); ++u) {
      int in_arc = arc_at[c][unders[u]];
      int out_arc = arc_after[u];
      under_arcs[comp[unders[u]].label] = {in_arc, out_arc};
    }
  }
  for (size_t c = 0; c < code.size(); ++c)
    for (size_t i = 0; i < code[c].size(); ++i)
      if (code[c][i].over) over_arc[code[c][i].label] = arc_at[c][i];

  for (const auto& [label, inout] : under_arcs) {
    std::vector<int> row(sys.arcs, 0);
    row[inout.first] += 1;
    row[inout.second] += 1;
    row[over_arc.at(label)] -= 2;
    sys.rows.push_back(row);
  }
  return sys;
}

inline long long fox_coloring_count(const nw::SignedGaussCode& code, int p) {
  FoxSystem sys = fox_system(code);
  // Gaussian elimination over Z/p (p prime)
  auto mod = [&](long long v) { return static_cast<int>(((v % p) + p) % p); };
  std::vector<std::vector<int>> rows;
  for (auto& r : sys.rows) {
    std::vector<int> m(r.size());
    for (size_t i = 0; i < r.size(); ++i) m[i] = mod(r[i]);
    rows.push_back(m);
  }
  int rank = 0;
  for (int col = 0; col < sys.arcs && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    // normalize pivot to 1
    int inv = 1;
    for (int k = 1; k < p; ++k)
      if (rows[rank][col] * k % p == 1) inv = k;
    for (auto& v : rows[rank]) v = mod(static_cast<long long>(v) * inv);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      int f = rows[r][col];
      for (int k = 0; k < sys.arcs; ++k)
        rows[r][k] = mod(rows[r][k] - static_cast<long long>(f) * rows[rank][k]);
    }
    ++rank;
  }
  long long count = 1;
  for (int i = 0; i < sys.arcs - rank; ++i) count *= p;
  return count;
}

// ---------------------------------------------------------------------------
// Exhaustive coloring count: every assignment of carrier values to the
// generators, checked against every relation and closure.

inline long long exhaustive_coloring_count(const nw::KeiPresentation& pres,
                                           const nw::FiniteKei& kei) {
  const int n = pres.generator_count();
  std::vector<int> vals(n, 0);
  long long count = 0;
  while (true) {
    bool ok = true;
    for (const auto& rel : pres.relations) {
      int rhs = rel.is_action ? kei.act[rel.cls][vals[rel.arg1]]
                              : kei.op[rel.cls][vals[rel.arg1]][vals[rel.arg2]];
      if (vals[rel.lhs] != rhs) {
        ok = false;
        break;
      }
    }
    if (ok)
      for (const auto& [a, b] : pres.closures)
        if (vals[a] != vals[b]) {
          ok = false;
          break;
        }
    if (ok) ++count;
    int i = 0;
    while (i < n && ++vals[i] == kei.m) vals[i++] = 0;
    if (i == n) break;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Cayley tables of every group of order <= 8.

inline std::vector<std::vector<int>> direct_product(
    const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  for (int g = 0; g < na * nb; ++g)
    for (int h = 0; h < na * nb; ++h)
      t[g][h] = a[g / nb][h / nb] * nb + b[g % nb][h % nb];
  return t;
}

// dihedral group of order 2n: element (i, j) = r^i f^j
inline std::vector<std::vector<int>> dihedral_group(int n) {
  auto id_of = [n](int i, int j) { return j * n + i; };
  std::vector<std::vector<int>> t(2 * n, std::vector<int>(2 * n));
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = ((j1 ? i1 - i2 : i1 + i2) % n + n) % n;
          int j = (j1 + j2) % 2;
          t[id_of(i1, j1)][id_of(i2, j2)] = id_of(i, j);
        }
  return t;
}

// quaternion group: 1, -1, i, -i, j, -j, k, -k
inline std::vector<std::vector<int>> quaternion_group() {
  // basis products with signs: e*x = x, x*x = -1, i*j = k, j*k = i, k*i = j
  auto mul = [](int a, int b) -> std::pair<int, int> {  // (sign, basis) 0=e,1=i,2=j,3=k
    if (a == 0) return {+1, b};
    if (b == 0) return {+1, a};
    if (a == b) return {-1, 0};
    // cyclic i->j->k
    if ((a == 1 && b == 2)) return {+1, 3};
    if ((a == 2 && b == 3)) return {+1, 1};
    if ((a == 3 && b == 1)) return {+1, 2};
    if ((a == 2 && b == 1)) return {-1, 3};
    if ((a == 3 && b == 2)) return {-1, 1};
    return {-1, 2};  // a == 1 && b == 3
  };
  auto id_of = [](int sign, int basis) { return basis * 2 + (sign > 0 ? 0 : 1); };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int b1 = 0; b1 < 4; ++b1)
    for (int s1 : {+1, -1})
      for (int b2 = 0; b2 < 4; ++b2)
        for (int s2 : {+1, -1}) {
          auto [s, b] = mul(b1, b2);
          t[id_of(s1, b1)][id_of(s2, b2)] = id_of(s * s1 * s2, b);
        }
  return t;
}

inline std::vector<std::pair<std::string, std::vector<std::vector<int>>>>
groups_up_to_order_8() {
  using nw::cyclic_group;
  return {
      {"Z1", cyclic_group(1)},
      {"Z2", cyclic_group(2)},
      {"Z3", cyclic_group(3)},
      {"Z4", cyclic_group(4)},
      {"V4", direct_product(cyclic_group(2), cyclic_group(2))},
      {"Z5", cyclic_group(5)},
      {"Z6", cyclic_group(6)},
      {"S3", dihedral_group(3)},
      {"Z7", cyclic_group(7)},
      {"Z8", cyclic_group(8)},
      {"Z4xZ2", direct_product(cyclic_group(4), cyclic_group(2))},
      {"Z2xZ2xZ2",
       direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2)))},
      {"D4", dihedral_group(4)},
      {"Q8", quaternion_group()},
  };
}

}  // namespace oracles
