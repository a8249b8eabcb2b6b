#pragma once

// Keis over a quotient symbol set: finite keis with their five axioms, cores
// of groups, kei presentations read off a nanophrase, coloring counts, and
// the associated group presentation.
//
// A finite kei over (qalpha, qtau) is a carrier {0..m-1} with a bijection
// x -> a.x and a binary operation (x,y) -> x *_a y per symbol a, satisfying
//
//   (i)    a.x *_a x = x
//   (ii)   a.(x *_a y) = a.x *_a a.y
//   (iii)  (x *_a y) *_a z = (x *_a a.z) *_a (y *_a z)
//   (iv)   a.(qtau(a).x) = x
//   (v)    (x *_a y) *_{qtau(a)} a.y = x
//
// The presentation of a nanophrase P over a kei datum (beta, ~) has one
// generator per arc position x^r_s (word r, 0 <= s <= n_r) and two relations
// per letter; the hat variant adds x^r_0 = x^r_{n_r}. Coloring counts with a
// finite kei are homotopy invariants of P.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nw/homotopy.hpp"
#include "nw/phrase.hpp"
#include "nw/presets.hpp"

namespace nw {

struct FiniteKei {
  std::string name;
  QuotientAlphabet alpha;
  int m = 0;
  std::vector<std::vector<int>> act;              // [symbol][x]
  std::vector<std::vector<std::vector<int>>> op;  // [symbol][x][y]
};

inline std::vector<std::string> validate_kei(const FiniteKei& k) {
  std::vector<std::string> problems;
  const int m = k.m, ns = k.alpha.size();
  auto witness = [&](int a, const std::string& msg) {
    problems.push_back("axiom " + msg + " (symbol " + k.alpha.names[a] + ")");
  };
  if (static_cast<int>(k.act.size()) != ns || static_cast<int>(k.op.size()) != ns) {
    problems.push_back("action/operation tables do not cover the symbol set");
    return problems;
  }
  for (int a = 0; a < ns; ++a) {
    if (static_cast<int>(k.act[a].size()) != m ||
        static_cast<int>(k.op[a].size()) != m) {
      problems.push_back("table for symbol " + k.alpha.names[a] + " has wrong size");
      return problems;
    }
    std::vector<bool> hit(m, false);
    for (int x = 0; x < m; ++x) {
      int y = k.act[a][x];
      if (y < 0 || y >= m || hit[y]) {
        problems.push_back("action of " + k.alpha.names[a] + " is not a bijection");
        return problems;
      }
      hit[y] = true;
      if (static_cast<int>(k.op[a][x].size()) != m) {
        problems.push_back("operation table row out of shape");
        return problems;
      }
      for (int v : k.op[a][x])
        if (v < 0 || v >= m) {
          problems.push_back("operation table entry out of range");
          return problems;
        }
    }
  }
  for (int a = 0; a < ns; ++a) {
    const int ta = k.alpha.tau[a];
    for (int x = 0; x < m; ++x) {
      if (k.op[a][k.act[a][x]][x] != x)
        witness(a, "(i) fails at x=" + std::to_string(x));
      if (k.act[a][k.act[ta][x]] != x)
        witness(a, "(iv) fails at x=" + std::to_string(x));
      for (int y = 0; y < m; ++y) {
        if (k.act[a][k.op[a][x][y]] != k.op[a][k.act[a][x]][k.act[a][y]])
          witness(a, "(ii) fails at x=" + std::to_string(x) + ",y=" + std::to_string(y));
        if (k.op[ta][k.op[a][x][y]][k.act[a][y]] != x)
          witness(a, "(v) fails at x=" + std::to_string(x) + ",y=" + std::to_string(y));
        for (int z = 0; z < m; ++z) {
          int lhs = k.op[a][k.op[a][x][y]][z];
          int rhs = k.op[a][k.op[a][x][k.act[a][z]]][k.op[a][y][z]];
          if (lhs != rhs)
            witness(a, "(iii) fails at x=" + std::to_string(x) + ",y=" +
                           std::to_string(y) + ",z=" + std::to_string(z));
        }
      }
    }
  }
  return problems;
}

// Core of a finite group: g *_a h = h (qtau(a).g)^-1 h under a tau-compatible
// action by automorphisms.
inline FiniteKei core_of_group(const std::vector<std::vector<int>>& table,
                               const QuotientAlphabet& alpha,
                               const std::vector<std::vector<int>>& actions,
                               const std::string& name = "core") {
  const int m = static_cast<int>(table.size());
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != m) throw error("group table is not square");
  int e = -1;
  for (int g = 0; g < m; ++g) {
    bool ident = true;
    for (int h = 0; h < m; ++h) ident = ident && table[g][h] == h && table[h][g] == h;
    if (ident) e = g;
  }
  if (e < 0) throw error("group table has no identity");
  std::vector<int> inv(m, -1);
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      if (table[g][h] == e) inv[g] = h;
  for (int g = 0; g < m; ++g)
    if (inv[g] < 0) throw error("group table has a non-invertible element");
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      for (int l = 0; l < m; ++l)
        if (table[table[g][h]][l] != table[g][table[h][l]])
          throw error("group table is not associative");

  const int ns = alpha.size();
  if (static_cast<int>(actions.size()) != ns)
    throw error("one action per symbol required");
  for (int a = 0; a < ns; ++a) {
    std::vector<bool> hit(m, false);
    for (int g = 0; g < m; ++g) {
      int v = actions[a][g];
      if (v < 0 || v >= m || hit[v]) throw error("action is not a bijection");
      hit[v] = true;
    }
    for (int g = 0; g < m; ++g)
      for (int h = 0; h < m; ++h)
        if (actions[a][table[g][h]] != table[actions[a][g]][actions[a][h]])
          throw error("action is not a group automorphism");
  }
  for (int a = 0; a < ns; ++a)
    for (int g = 0; g < m; ++g)
      if (actions[a][actions[alpha.tau[a]][g]] != g)
        throw error("action is not tau-compatible");

  FiniteKei k;
  k.name = name;
  k.alpha = alpha;
  k.m = m;
  k.act = actions;
  k.op.assign(ns, std::vector<std::vector<int>>(m, std::vector<int>(m)));
  for (int a = 0; a < ns; ++a) {
    int ta = alpha.tau[a];
    for (int g = 0; g < m; ++g)
      for (int h = 0; h < m; ++h)
        k.op[a][g][h] = table[table[h][inv[actions[ta][g]]]][h];
  }
  return k;
}

inline FiniteKei opposite(const FiniteKei& k) {
  FiniteKei o = k;
  o.name = k.name.empty() ? "opposite" : "opposite(" + k.name + ")";
  for (int a = 0; a < k.alpha.size(); ++a) {
    o.act[a] = k.act[k.alpha.tau[a]];
    o.op[a] = k.op[k.alpha.tau[a]];
  }
  return o;
}

inline std::vector<std::vector<int>> cyclic_group(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) t[g][h] = (g + h) % n;
  return t;
}

inline QuotientAlphabet pm_alphabet() { return QuotientAlphabet{{"+", "-"}, {1, 0}}; }

// Core of Z/n with trivial actions over {+,-}: x *_a y = 2y - x mod n.
inline FiniteKei dihedral_kei(int n) {
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  return core_of_group(cyclic_group(n), pm_alphabet(), {id, id},
                       "dihedral" + std::to_string(n));
}

inline FiniteKei trivial_kei() {
  FiniteKei k;
  k.name = "trivial1";
  k.alpha = pm_alphabet();
  k.m = 1;
  k.act = {{0}, {0}};
  k.op = {{{0}}, {{0}}};
  return k;
}

// ---------------------------------------------------------------------------
// Presentations

struct KeiRelation {
  bool is_action;  // true: lhs = cls.arg1;  false: lhs = arg1 *_cls arg2
  int lhs = 0;
  int arg1 = 0;
  int arg2 = 0;
  int cls = 0;

  friend bool operator==(const KeiRelation& a, const KeiRelation& b) {
    return a.is_action == b.is_action && a.lhs == b.lhs && a.arg1 == b.arg1 &&
           (a.is_action || a.arg2 == b.arg2) && a.cls == b.cls;
  }
};

struct KeiPresentation {
  QuotientAlphabet alpha;
  std::vector<std::string> gen_names;
  std::vector<KeiRelation> relations;
  std::vector<std::pair<int, int>> closures;  // (x^r_0, x^r_{n_r}) when hat

  int generator_count() const { return static_cast<int>(gen_names.size()); }

  std::string relation_str(const KeiRelation& rel) const {
    if (rel.is_action)
      return gen_names[rel.lhs] + " = " + alpha.names[rel.cls] + " " +
             gen_names[rel.arg1];
    return gen_names[rel.lhs] + " = " + gen_names[rel.arg1] + " *_" +
           alpha.names[rel.cls] + " " + gen_names[rel.arg2];
  }

  std::string str() const {
    std::string s = "generators:";
    for (const auto& g : gen_names) s += " " + g;
    s += "\n";
    for (const auto& r : relations) s += relation_str(r) + "\n";
    for (const auto& [a, b] : closures)
      s += gen_names[a] + " = " + gen_names[b] + "\n";
    return s;
  }
};

inline KeiPresentation presentation(const Nanophrase& p, const KeiDatum& datum,
                                    bool hat) {
  require_valid(p, datum.data());
  KeiPresentation pres;
  pres.alpha = datum.quotient();
  const int k = p.word_count();
  std::vector<int> offset(k + 1, 0);
  for (int r = 0; r < k; ++r)
    offset[r + 1] = offset[r] + static_cast<int>(p.words[r].size()) + 1;
  auto gen = [&](int r, int s) { return offset[r] + s; };
  for (int r = 0; r < k; ++r)
    for (int s = 0; s <= static_cast<int>(p.words[r].size()); ++s)
      pres.gen_names.push_back("x" + std::to_string(r + 1) + "_" + std::to_string(s));

  OccurrenceIndex idx = occurrence_index(p);
  for (int id = 0; id < p.letter_count(); ++id) {
    const auto [o1, o2] = std::pair{idx[id][0], idx[id][1]};
    const int a = p.proj[id];
    const int cls = datum.cls(a);
    if (datum.in_beta(a)) {
      pres.relations.push_back(
          {true, gen(o1.word, o1.pos), gen(o1.word, o1.pos - 1), 0, cls});
      pres.relations.push_back({false, gen(o2.word, o2.pos), gen(o2.word, o2.pos - 1),
                                gen(o1.word, o1.pos - 1), cls});
    } else {
      pres.relations.push_back({false, gen(o1.word, o1.pos), gen(o1.word, o1.pos - 1),
                                gen(o2.word, o2.pos - 1), cls});
      pres.relations.push_back(
          {true, gen(o2.word, o2.pos), gen(o2.word, o2.pos - 1), 0, cls});
    }
  }
  if (hat)
    for (int r = 0; r < k; ++r)
      pres.closures.emplace_back(gen(r, 0), gen(r, static_cast<int>(p.words[r].size())));
  return pres;
}

// Presentation of the opposite kei: every symbol in the relations replaced
// by its involute.
inline KeiPresentation opposite_transfer(KeiPresentation pres) {
  for (auto& r : pres.relations) r.cls = pres.alpha.tau[r.cls];
  return pres;
}

namespace detail {

struct ColoringSearch {
  const KeiPresentation& pres;
  const FiniteKei& kei;
  std::vector<const KeiRelation*> defining;          // per generator, or null
  std::vector<std::vector<const KeiRelation*>> pending;  // checked when arg2 binds
  std::vector<std::vector<int>> closure_on;          // first gens checked at second
  std::vector<int> vals;
  long long count = 0;
  std::vector<std::vector<int>>* sink = nullptr;

  ColoringSearch(const KeiPresentation& pr, const FiniteKei& k) : pres(pr), kei(k) {
    const int n = pr.generator_count();
    defining.assign(n, nullptr);
    pending.assign(n, {});
    closure_on.assign(n, {});
    vals.assign(n, -1);
    for (const auto& rel : pr.relations) {
      if (defining[rel.lhs])
        throw error("presentation defines a generator twice");
      defining[rel.lhs] = &rel;
      if (!rel.is_action && rel.arg2 >= rel.lhs) pending[rel.arg2].push_back(&rel);
    }
    for (const auto& [first, second] : pr.closures)
      closure_on[second].push_back(first);
  }

  // all constraints that become checkable once vals[g] is assigned
  bool binds_ok(int g) const {
    for (const KeiRelation* rel : pending[g])
      if (vals[rel->lhs] != kei.op[rel->cls][vals[rel->arg1]][vals[g]]) return false;
    for (int first : closure_on[g])
      if (vals[first] != vals[g]) return false;
    return true;
  }

  void try_value(int g, int v) {
    vals[g] = v;
    if (binds_ok(g)) run(g + 1);
    vals[g] = -1;
  }

  void run(int g) {
    if (g == pres.generator_count()) {
      ++count;
      if (sink) sink->push_back(vals);
      return;
    }
    const KeiRelation* rel = defining[g];
    if (rel && rel->is_action) {
      try_value(g, kei.act[rel->cls][vals[rel->arg1]]);
      return;
    }
    if (rel && !rel->is_action && rel->arg2 < g) {
      try_value(g, kei.op[rel->cls][vals[rel->arg1]][vals[rel->arg2]]);
      return;
    }
    // free root, or a star relation whose partner comes later: branch
    for (int v = 0; v < kei.m; ++v) try_value(g, v);
  }
};

}  // namespace detail

inline long long count_colorings(const KeiPresentation& pres, const FiniteKei& kei) {
  if (!(pres.alpha == kei.alpha))
    throw error("presentation and kei are over different quotient symbol sets");
  detail::ColoringSearch search(pres, kei);
  search.run(0);
  return search.count;
}

inline std::vector<std::vector<int>> enumerate_colorings(const KeiPresentation& pres,
                                                         const FiniteKei& kei) {
  if (!(pres.alpha == kei.alpha))
    throw error("presentation and kei are over different quotient symbol sets");
  detail::ColoringSearch search(pres, kei);
  std::vector<std::vector<int>> out;
  search.sink = &out;
  search.run(0);
  return out;
}

// ---------------------------------------------------------------------------
// Associated group

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::string> relations;

  std::string str() const {
    std::string s = "< ";
    for (size_t i = 0; i < generators.size(); ++i) {
      if (i) s += ", ";
      s += generators[i];
    }
    s += " | ";
    for (size_t i = 0; i < relations.size(); ++i) {
      if (i) s += ", ";
      s += relations[i];
    }
    s += " >";
    return s;
  }
};

// Group presentation read off a kei presentation: one group generator a.s
// per symbol a and kei generator s (closure pairs are first identified), and
// per kei relation one group relation for every symbol prefix c:
//
//   s = a u            ->   c.s = (c a).u
//   s = u *_a v        ->   c.s = (c.v) ((c tau(a)).u)^-1 (c.v)
//
// Prefix strings reduce by a tau(a) = 1; irreducible strings longer than one
// symbol are written out in full and denote the extended action on the group.
inline GroupPresentation gamma_group(const KeiPresentation& pres) {
  const auto& alpha = pres.alpha;
  // identify closure pairs (hat gluing)
  std::vector<int> root(pres.generator_count());
  for (int i = 0; i < pres.generator_count(); ++i) root[i] = i;
  std::function<int(int)> find = [&](int x) {
    return root[x] == x ? x : root[x] = find(root[x]);
  };
  for (auto [a, b] : pres.closures) root[find(b)] = find(a);

  std::vector<int> kept;  // representative generators in order
  std::vector<int> index_of(pres.generator_count(), -1);
  for (int i = 0; i < pres.generator_count(); ++i)
    if (find(i) == i) {
      index_of[i] = static_cast<int>(kept.size());
      kept.push_back(i);
    }

  auto reduce_prefix = [&](std::vector<int> prefix) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i + 1 < prefix.size(); ++i)
        if (alpha.tau[prefix[i]] == prefix[i + 1]) {
          prefix.erase(prefix.begin() + i, prefix.begin() + i + 2);
          changed = true;
          break;
        }
    }
    return prefix;
  };
  auto term = [&](std::vector<int> prefix, int g) {
    prefix = reduce_prefix(std::move(prefix));
    std::string s;
    for (int a : prefix) s += alpha.names[a] + ".";
    return s + pres.gen_names[kept[index_of[find(g)]]];
  };

  GroupPresentation gp;
  for (int g : kept)
    for (int a = 0; a < alpha.size(); ++a) gp.generators.push_back(term({a}, g));
  for (const auto& rel : pres.relations) {
    for (int c = 0; c < alpha.size(); ++c) {
      std::string lhs = term({c}, rel.lhs);
      std::string rhs;
      if (rel.is_action) {
        rhs = term({c, rel.cls}, rel.arg1);
      } else {
        std::string cv = term({c}, rel.arg2);
        std::string mid = term({c, alpha.tau[rel.cls]}, rel.arg1);
        rhs = cv + " " + mid + "^-1 " + cv;
      }
      gp.relations.push_back(lhs + " = " + rhs);
    }
  }
  return gp;
}

}  // namespace nw
