#pragma once

// Kauffman bracket of nanophrases over alpha_1 = {1, -1}, exact in
// Z[t, t^-1], plus the writhe and the Jones polynomial J = (-t)^(-3w) < >.
//
// The recursion smooths the letter whose first occurrence is leftmost. Words
// over alpha_1 may be freely rotated and permuted (the shift involution is
// the identity), which exposes one of the two smoothing patterns:
//
//   < (AuAv | P) >  =  t^e < (u | v | P) >  +  t^-e < (rev(u) v | P)_u >
//   < (Au | Av | P) >  =  t^e < (uv | P) >  +  t^-e < (rev(u) v | P)_u >
//
// where e = |A| and the subscript u negates |X| for every letter X occurring
// exactly once in u. Doubled letters collapse as < xAAy > = -t^(3|A|) < xy >,
// which the recursion reproduces, so no special case is needed. Deleting an
// empty word from a phrase of length >= 2 contributes a factor -(t^2+t^-2),
// and < (empty word) > = 1.
//
// Every step removes one letter, so the expansion has at most 2^n leaves.
// Optional memoization keys on the canonical form of the intermediate state;
// results are identical with it on or off.

#include <string>
#include <unordered_map>
#include <vector>

#include "nw/homotopy.hpp"
#include "nw/laurent.hpp"
#include "nw/phrase.hpp"
#include "nw/presets.hpp"

namespace nw {

namespace detail {

struct BracketState {
  std::vector<std::vector<int>> words;  // letter ids
  std::vector<int> sign;                // letter id -> +1 / -1
};

inline std::string bracket_key(const BracketState& s) {
  std::vector<int> rank(s.sign.size(), -1);
  int next = 0;
  std::string key;
  for (const auto& w : s.words) {
    for (int id : w) {
      if (rank[id] < 0) rank[id] = next++;
      key += std::to_string(rank[id]);
      key += ',';
    }
    key += '|';
  }
  key += ';';
  std::vector<int> sign_by_rank(next, 0);
  for (size_t id = 0; id < s.sign.size(); ++id)
    if (rank[id] >= 0) sign_by_rank[rank[id]] = s.sign[id];
  for (int v : sign_by_rank) key += (v > 0 ? '+' : '-');
  return key;
}

inline Laurent bracket_rec(BracketState s,
                           std::unordered_map<std::string, Laurent>* memo) {
  Laurent factor = Laurent::one();
  while (s.words.size() >= 2) {
    bool stripped = false;
    for (size_t r = 0; r < s.words.size(); ++r)
      if (s.words[r].empty()) {
        s.words.erase(s.words.begin() + r);
        factor *= Laurent::loop_factor();
        stripped = true;
        break;
      }
    if (!stripped) break;
  }
  bool no_letters = true;
  for (const auto& w : s.words) no_letters = no_letters && w.empty();
  if (no_letters) return factor;

  std::string key;
  if (memo) {
    key = bracket_key(s);
    auto it = memo->find(key);
    if (it != memo->end()) return factor * it->second;
  }

  // first nonempty word starts with the letter to smooth
  size_t first = 0;
  while (s.words[first].empty()) ++first;
  std::swap(s.words[0], s.words[first]);
  const int a = s.words[0][0];
  const int e = s.sign[a];

  int word_of_second = 0, idx_of_second = -1;
  for (size_t r = 0; r < s.words.size() && idx_of_second < 0; ++r) {
    const auto& w = s.words[r];
    for (size_t i = (r == 0 ? 1 : 0); i < w.size(); ++i)
      if (w[i] == a) {
        word_of_second = static_cast<int>(r);
        idx_of_second = static_cast<int>(i);
        break;
      }
  }
  if (idx_of_second < 0) throw error("bracket: phrase is not a Gauss phrase");

  std::vector<int> u, v;
  BracketState smoothed_a, smoothed_b;
  if (word_of_second == 0) {
    const auto& w0 = s.words[0];
    u.assign(w0.begin() + 1, w0.begin() + idx_of_second);
    v.assign(w0.begin() + idx_of_second + 1, w0.end());
    smoothed_a.sign = s.sign;
    smoothed_a.words.push_back(u);
    smoothed_a.words.push_back(v);
    for (size_t r = 1; r < s.words.size(); ++r) smoothed_a.words.push_back(s.words[r]);
  } else {
    u.assign(s.words[0].begin() + 1, s.words[0].end());
    // rotate the partner word so that 'a' leads, then drop it
    const auto& ws = s.words[word_of_second];
    for (size_t i = idx_of_second + 1; i < ws.size(); ++i) v.push_back(ws[i]);
    for (int i = 0; i < idx_of_second; ++i) v.push_back(ws[i]);
    smoothed_a.sign = s.sign;
    std::vector<int> merged = u;
    merged.insert(merged.end(), v.begin(), v.end());
    smoothed_a.words.push_back(merged);
    for (size_t r = 1; r < s.words.size(); ++r)
      if (static_cast<int>(r) != word_of_second) smoothed_a.words.push_back(s.words[r]);
  }

  smoothed_b.sign = s.sign;
  std::vector<int> occurrences(s.sign.size(), 0);
  for (int id : u) ++occurrences[id];
  for (size_t id = 0; id < occurrences.size(); ++id)
    if (occurrences[id] == 1) smoothed_b.sign[id] = -smoothed_b.sign[id];
  std::vector<int> merged_b(u.rbegin(), u.rend());
  merged_b.insert(merged_b.end(), v.begin(), v.end());
  smoothed_b.words.push_back(merged_b);
  for (size_t r = 1; r < s.words.size(); ++r)
    if (word_of_second == 0 || static_cast<int>(r) != word_of_second)
      smoothed_b.words.push_back(s.words[r]);

  Laurent result = Laurent::monomial(1, e) * bracket_rec(std::move(smoothed_a), memo) +
                   Laurent::monomial(1, -e) * bracket_rec(std::move(smoothed_b), memo);
  if (memo) (*memo)[key] = result;
  return factor * result;
}

inline std::vector<int> alpha1_signs(const Nanophrase& p, const HomotopyData& data) {
  std::vector<int> sign_of_symbol(data.size());
  for (int s = 0; s < data.size(); ++s) {
    const std::string& n = data.symbol_name(s);
    if (n == "1")
      sign_of_symbol[s] = 1;
    else if (n == "-1")
      sign_of_symbol[s] = -1;
    else
      throw error("phrase is not over alpha_1 (symbol '" + n + "')");
  }
  std::vector<int> sign(p.letter_count());
  for (int id = 0; id < p.letter_count(); ++id) sign[id] = sign_of_symbol[p.proj[id]];
  return sign;
}

}  // namespace detail

inline Laurent bracket(const Nanophrase& p, const HomotopyData& data,
                       bool memoize = false) {
  require_valid(p, data);
  detail::BracketState s{p.words, detail::alpha1_signs(p, data)};
  std::unordered_map<std::string, Laurent> memo;
  return detail::bracket_rec(std::move(s), memoize ? &memo : nullptr);
}

// Bracket of an alpha_star phrase: it depends only on the underlying
// alpha_1 phrase, so project and evaluate.
inline Laurent bracket_star(const Nanophrase& p, const HomotopyData& star_data,
                            bool memoize = false) {
  DataMorphism to1 = make_morphism(star_data, preset("alpha_1"),
                                   {{"a+", "1"}, {"b+", "1"}, {"a-", "-1"}, {"b-", "-1"}});
  return bracket(apply_morphism(to1, p), to1.target, memoize);
}

inline int writhe(const Nanophrase& p, const HomotopyData& data) {
  require_valid(p, data);
  auto sign = detail::alpha1_signs(p, data);
  int w = 0;
  for (int v : sign) w += v;
  return w;
}

inline Laurent jones(const Nanophrase& p, const HomotopyData& data,
                     bool memoize = false) {
  int w = writhe(p, data);
  return Laurent::neg_t_pow(-3 * w) * bracket(p, data, memoize);
}

}  // namespace nw
