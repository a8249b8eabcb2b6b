#pragma once

// The stock homotopy data and the projections between them:
//
//   alpha_0    {a, b}            tau swaps a,b          S0 = diagonal
//   alpha_star {a+, a-, b+, b-}  tau(a+-) = b-+         S* = 12 triples
//   alpha_1    {1, -1}           tau swaps              S1 = 6 triples
//   alpha_2    {c, d}            tau = id               S2 = 6 triples
//
// plus kei datums (beta, ~) over these alphabets and the S(beta,~) triple
// construction, which reproduces S*, S0 and S2 from the datum data alone.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nw/homotopy.hpp"
#include "nw/phrase.hpp"

namespace nw {

inline HomotopyData preset(const std::string& name) {
  if (name == "alpha_0") {
    return HomotopyData({"a", "b"}, {{"a", "b"}},
                        {{{"a", "a", "a"}}, {{"b", "b", "b"}}},
                        std::vector<std::pair<std::string, std::string>>{{"a", "b"}},
                        "alpha_0");
  }
  if (name == "alpha_star") {
    std::vector<std::array<std::string, 3>> triples;
    for (std::string s : {"+", "-"}) {
      const std::string o = (s == "+") ? "-" : "+";
      triples.push_back({"a" + s, "a" + s, "a" + s});
      triples.push_back({"a" + s, "a" + s, "a" + o});
      triples.push_back({"a" + o, "a" + s, "a" + s});
      triples.push_back({"b" + s, "b" + s, "b" + s});
      triples.push_back({"b" + s, "b" + s, "b" + o});
      triples.push_back({"b" + o, "b" + s, "b" + s});
    }
    return HomotopyData(
        {"a+", "a-", "b+", "b-"}, {{"a+", "b-"}, {"a-", "b+"}}, triples,
        std::vector<std::pair<std::string, std::string>>{{"a+", "b+"}, {"a-", "b-"}},
        "alpha_star");
  }
  if (name == "alpha_1") {
    return HomotopyData({"1", "-1"}, {{"1", "-1"}},
                        {{{"1", "1", "1"}},
                         {{"1", "1", "-1"}},
                         {{"-1", "1", "1"}},
                         {{"-1", "-1", "-1"}},
                         {{"-1", "-1", "1"}},
                         {{"1", "-1", "-1"}}},
                        std::vector<std::pair<std::string, std::string>>{},  // id shift
                        "alpha_1");
  }
  if (name == "alpha_2") {
    return HomotopyData({"c", "d"}, {},
                        {{{"c", "c", "c"}},
                         {{"c", "c", "d"}},
                         {{"d", "c", "c"}},
                         {{"d", "d", "d"}},
                         {{"d", "d", "c"}},
                         {{"c", "d", "d"}}},
                        std::vector<std::pair<std::string, std::string>>{{"c", "d"}},
                        "alpha_2");
  }
  throw error("unknown preset '" + name + "'");
}

// An equivariant map of homotopy data carrying S into S'.
struct DataMorphism {
  HomotopyData source;
  HomotopyData target;
  std::vector<int> map;  // source symbol id -> target symbol id
  bool nu_equivariant = false;

  int operator()(int symbol) const { return map.at(symbol); }
};

inline DataMorphism make_morphism(
    const HomotopyData& source, const HomotopyData& target,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<int> map(source.size(), -1);
  for (const auto& [s, t] : pairs)
    map[source.require_symbol(s)] = target.require_symbol(t);
  for (int i = 0; i < source.size(); ++i)
    if (map[i] < 0)
      throw error("morphism does not cover symbol '" + source.symbol_name(i) + "'");
  for (int i = 0; i < source.size(); ++i)
    if (map[source.tau(i)] != target.tau(map[i]))
      throw error("morphism is not tau-equivariant at '" + source.symbol_name(i) + "'");
  for (const Triple& t : source.triples())
    if (!target.has_triple(map[t[0]], map[t[1]], map[t[2]]))
      throw error("morphism does not carry S into S'");
  DataMorphism m{source, target, map, false};
  if (source.has_shift() && target.has_shift()) {
    m.nu_equivariant = true;
    for (int i = 0; i < source.size(); ++i)
      if (map[source.shift(i)] != target.shift(map[i])) m.nu_equivariant = false;
  }
  return m;
}

inline DataMorphism identity_morphism(const HomotopyData& data) {
  std::vector<int> map(data.size());
  for (int i = 0; i < data.size(); ++i) map[i] = i;
  return DataMorphism{data, data, map, data.has_shift()};
}

inline DataMorphism projection(const std::string& name) {
  if (name == "star_to_0")
    return make_morphism(preset("alpha_star"), preset("alpha_0"),
                         {{"a+", "a"}, {"a-", "a"}, {"b+", "b"}, {"b-", "b"}});
  if (name == "star_to_1")
    return make_morphism(preset("alpha_star"), preset("alpha_1"),
                         {{"a+", "1"}, {"b+", "1"}, {"a-", "-1"}, {"b-", "-1"}});
  if (name == "star_to_2")
    return make_morphism(preset("alpha_star"), preset("alpha_2"),
                         {{"a+", "c"}, {"b-", "c"}, {"a-", "d"}, {"b+", "d"}});
  if (name == "zero_to_1")
    return make_morphism(preset("alpha_0"), preset("alpha_1"),
                         {{"a", "1"}, {"b", "-1"}});
  throw error("unknown projection '" + name + "'");
}

// a -> a+, b -> b-: realizes alpha_0 phrases inside the 4-symbol theory (the
// curve datum is the restriction of the link datum along this embedding).
inline DataMorphism embedding_zero_to_star() {
  return make_morphism(preset("alpha_0"), preset("alpha_star"),
                       {{"a", "a+"}, {"b", "b-"}});
}

// Same letters and words; projections composed with the symbol map.
inline Nanophrase apply_morphism(const DataMorphism& m, const Nanophrase& p) {
  Nanophrase q = p;
  for (int& s : q.proj) {
    if (s < 0 || s >= m.source.size())
      throw error("phrase is not over the morphism's source data");
    s = m.map[s];
  }
  return q;
}

// Quotient symbol set: alpha/~ with the induced involution.
struct QuotientAlphabet {
  std::vector<std::string> names;  // class id -> name
  std::vector<int> tau;            // involution on classes

  int size() const { return static_cast<int>(names.size()); }

  int symbol(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (names[i] == name) return i;
    return -1;
  }

  friend bool operator==(const QuotientAlphabet& a, const QuotientAlphabet& b) {
    return a.names == b.names && a.tau == b.tau;
  }
};

// A kei datum: homotopy data (only alpha, tau and optionally nu are used), an
// equivalence relation ~ on alpha compatible with tau, and a tau-stable
// subset beta.
class KeiDatum {
 public:
  KeiDatum() = default;

  KeiDatum(HomotopyData data, std::vector<int> cls, std::vector<std::string> class_names,
           std::vector<char> in_beta, std::string name = "")
      : data_(std::move(data)),
        cls_(std::move(cls)),
        class_names_(std::move(class_names)),
        in_beta_(std::move(in_beta)),
        name_(std::move(name)) {
    const int n = data_.size();
    if (static_cast<int>(cls_.size()) != n || static_cast<int>(in_beta_.size()) != n)
      throw error("kei datum tables have wrong size");
    for (int i = 0; i < n; ++i)
      if (cls_[i] < 0 || cls_[i] >= static_cast<int>(class_names_.size()))
        throw error("kei datum class index out of range");
    // a ~ b  =>  tau(a) ~ tau(b), so tau descends to the quotient
    qtau_.assign(class_names_.size(), -1);
    for (int i = 0; i < n; ++i) {
      int c = cls_[i], tc = cls_[data_.tau(i)];
      if (qtau_[c] != -1 && qtau_[c] != tc)
        throw error("equivalence relation is not tau-compatible");
      qtau_[c] = tc;
    }
    for (size_t c = 0; c < qtau_.size(); ++c)
      if (qtau_[c] < 0 || qtau_[qtau_[c]] != static_cast<int>(c))
        throw error("induced involution on the quotient is not an involution");
    for (int i = 0; i < n; ++i)
      if (in_beta_[i] != in_beta_[data_.tau(i)]) throw error("beta is not tau-stable");
  }

  const HomotopyData& data() const { return data_; }
  int cls(int symbol) const { return cls_.at(symbol); }
  bool in_beta(int symbol) const { return in_beta_.at(symbol) != 0; }
  const std::string& name() const { return name_; }

  QuotientAlphabet quotient() const { return QuotientAlphabet{class_names_, qtau_}; }

 private:
  HomotopyData data_;
  std::vector<int> cls_;
  std::vector<std::string> class_names_;
  std::vector<char> in_beta_;
  std::vector<int> qtau_;
  std::string name_;
};

// The three named datums used throughout:
//   link  : alpha_star, a+ ~ b+ and a- ~ b-, beta = {a+, b-}
//   curve : alpha_0, ~ is equality, beta = alpha_0
//   quasi : alpha_2, everything equivalent, beta = {c}
inline KeiDatum kei_datum(const std::string& name) {
  if (name == "link") {
    HomotopyData d = preset("alpha_star");
    std::vector<int> cls(4), beta_tbl;
    cls[d.require_symbol("a+")] = 0;
    cls[d.require_symbol("b+")] = 0;
    cls[d.require_symbol("a-")] = 1;
    cls[d.require_symbol("b-")] = 1;
    std::vector<char> beta(4, 0);
    beta[d.require_symbol("a+")] = 1;
    beta[d.require_symbol("b-")] = 1;
    return KeiDatum(d, cls, {"+", "-"}, beta, "link");
  }
  if (name == "curve") {
    HomotopyData d = preset("alpha_0");
    return KeiDatum(d, {0, 1}, {"a", "b"}, {1, 1}, "curve");
  }
  if (name == "quasi") {
    HomotopyData d = preset("alpha_2");
    std::vector<char> beta(2, 0);
    beta[d.require_symbol("c")] = 1;
    return KeiDatum(d, {0, 0}, {"e"}, beta, "quasi");
  }
  throw error("unknown kei datum '" + name + "'");
}

// S(beta,~): all triples (a,b,c) with, for some i in {0,1} (beta_0 = beta,
// beta_1 = alpha - beta):
//   a ~ b ~ c        and a,b,c in beta_i
//   a ~ b ~ tau(c)   and a,b in beta_i, c in beta_{1-i}
//   tau(a) ~ b ~ c   and b,c in beta_i, a in beta_{1-i}
// The result contains the diagonal, hence is admissible.
inline HomotopyData build_triples(const KeiDatum& datum) {
  const HomotopyData& d = datum.data();
  const int n = d.size();
  auto side = [&](int s) { return datum.in_beta(s) ? 0 : 1; };
  std::set<Triple> triples;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        bool in = false;
        if (datum.cls(a) == datum.cls(b) && datum.cls(b) == datum.cls(c) &&
            side(a) == side(b) && side(b) == side(c))
          in = true;
        if (datum.cls(a) == datum.cls(b) && datum.cls(b) == datum.cls(d.tau(c)) &&
            side(a) == side(b) && side(c) == 1 - side(a))
          in = true;
        if (datum.cls(d.tau(a)) == datum.cls(b) && datum.cls(b) == datum.cls(c) &&
            side(b) == side(c) && side(a) == 1 - side(b))
          in = true;
        if (in) triples.insert({a, b, c});
      }
  std::vector<int> tau(n), shift;
  for (int i = 0; i < n; ++i) tau[i] = d.tau(i);
  std::optional<std::vector<int>> shift_opt;
  if (d.has_shift()) {
    shift.resize(n);
    for (int i = 0; i < n; ++i) shift[i] = d.shift(i);
    shift_opt = shift;
  }
  return HomotopyData(d.symbol_names(), tau, triples, shift_opt);
}

// alpha_gamma = alpha_star x gamma with componentwise structure; the triple
// set is S* times the diagonal of gamma^3. Symbol (x, g) is named "x.g".
inline std::pair<HomotopyData, KeiDatum> product_data(
    const std::vector<std::string>& gamma) {
  if (gamma.empty()) throw error("product_data: gamma must be nonempty");
  HomotopyData star = preset("alpha_star");
  const int ns = star.size(), ng = static_cast<int>(gamma.size());
  auto id_of = [&](int s, int g) { return s * ng + g; };
  std::vector<std::string> names(ns * ng);
  std::vector<int> tau(ns * ng), shift(ns * ng);
  for (int s = 0; s < ns; ++s)
    for (int g = 0; g < ng; ++g) {
      names[id_of(s, g)] = star.symbol_name(s) + "." + gamma[g];
      tau[id_of(s, g)] = id_of(star.tau(s), g);
      shift[id_of(s, g)] = id_of(star.shift(s), g);
    }
  std::set<Triple> triples;
  for (const Triple& t : star.triples())
    for (int g = 0; g < ng; ++g)
      triples.insert({id_of(t[0], g), id_of(t[1], g), id_of(t[2], g)});
  HomotopyData data(names, tau, triples, shift);

  KeiDatum link = kei_datum("link");
  std::vector<int> cls(ns * ng);
  std::vector<char> beta(ns * ng, 0);
  std::vector<std::string> class_names(2 * ng);
  for (int c = 0; c < 2; ++c)
    for (int g = 0; g < ng; ++g)
      class_names[c * ng + g] = std::string(c == 0 ? "+" : "-") + "." + gamma[g];
  for (int s = 0; s < ns; ++s)
    for (int g = 0; g < ng; ++g) {
      cls[id_of(s, g)] = link.cls(s) * ng + g;
      beta[id_of(s, g)] = link.in_beta(s) ? 1 : 0;
    }
  KeiDatum datum(data, cls, class_names, beta, "product");
  return {data, datum};
}

}  // namespace nw
