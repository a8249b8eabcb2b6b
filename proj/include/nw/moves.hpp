#pragma once

// The rewrite engine. Homotopy moves on nanophrases act on the concatenated
// word: the distinct two-letter blocks of one move may sit in different words
// of the phrase, each block is contiguous inside a single word, and every
// move preserves the number of words.
//
//   h1   xAAy        <-> xy
//   h2   xAByBAz     <-> xyz          with |B| = tau(|A|)
//   l2   xAByABz      -> xyz          with |B| = tau(|A|), data admissible
//   fr   xAAyBBz      -> xyz          with |A| = nu(tau(|B|))
//   h3   xAByACzBCt  <-> xBAyCAzCBt   with (|A|,|B|,|C|) in S
//   d1   xAByCAzBCt  <-> xBAyACzCBt   with (|A|,tau|B|,|C|) in S
//   d2   xAByCAzCBt  <-> xBAyACzBCt   with (tau|A|,tau|B|,|C|) in S
//   d3   xAByACzCBt  <-> xBAyCAzBCt   with (tau|A|,|B|,|C|) in S
//
// plus the word operations: nu-shift, nu-inversion and nu-permutation.
// A triple move swaps the letters inside each of its three adjacent blocks;
// the eight block orientations select which of h3/d1/d2/d3 applies.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nw/homotopy.hpp"
#include "nw/phrase.hpp"

namespace nw {

enum class MoveKind {
  h1_delete,
  h2_delete,
  l2_delete,
  framed_delete,
  h3_forward,
  h3_backward,
  d1_forward,
  d1_backward,
  d2_forward,
  d2_backward,
  d3_forward,
  d3_backward,
  h1_insert,
  h2_insert,
  l2_insert,
  framed_insert,
  shift,
  invert,
  permute,
};

inline const char* move_name(MoveKind k) {
  switch (k) {
    case MoveKind::h1_delete: return "h1-";
    case MoveKind::h2_delete: return "h2-";
    case MoveKind::l2_delete: return "l2-";
    case MoveKind::framed_delete: return "fr-";
    case MoveKind::h3_forward: return "h3>";
    case MoveKind::h3_backward: return "h3<";
    case MoveKind::d1_forward: return "d1>";
    case MoveKind::d1_backward: return "d1<";
    case MoveKind::d2_forward: return "d2>";
    case MoveKind::d2_backward: return "d2<";
    case MoveKind::d3_forward: return "d3>";
    case MoveKind::d3_backward: return "d3<";
    case MoveKind::h1_insert: return "h1+";
    case MoveKind::h2_insert: return "h2+";
    case MoveKind::l2_insert: return "l2+";
    case MoveKind::framed_insert: return "fr+";
    case MoveKind::shift: return "shift";
    case MoveKind::invert: return "invert";
    case MoveKind::permute: return "permute";
  }
  return "?";
}

inline bool is_insert(MoveKind k) {
  return k == MoveKind::h1_insert || k == MoveKind::h2_insert ||
         k == MoveKind::l2_insert || k == MoveKind::framed_insert;
}

inline bool is_delete(MoveKind k) {
  return k == MoveKind::h1_delete || k == MoveKind::h2_delete ||
         k == MoveKind::l2_delete || k == MoveKind::framed_delete;
}

inline bool is_exchange(MoveKind k) {
  switch (k) {
    case MoveKind::h3_forward:
    case MoveKind::h3_backward:
    case MoveKind::d1_forward:
    case MoveKind::d1_backward:
    case MoveKind::d2_forward:
    case MoveKind::d2_backward:
    case MoveKind::d3_forward:
    case MoveKind::d3_backward: return true;
    default: return false;
  }
}

struct MoveDescriptor {
  MoveKind kind;
  // Deletions/exchanges: concatenated block-start positions (1, 2 or 3).
  // shift/invert: the word index; permute: the first of the two word indices.
  std::vector<int> sites;
  // Insertions: one (word, offset) slot per inserted occurrence, listed in
  // final reading order; offsets refer to the phrase before insertion.
  std::vector<std::pair<int, int>> slots;
  // Insertions: symbols of the new letters, in letter order.
  std::vector<int> symbols;

  friend bool operator==(const MoveDescriptor& a, const MoveDescriptor& b) {
    return a.kind == b.kind && a.sites == b.sites && a.slots == b.slots &&
           a.symbols == b.symbols;
  }
};

using MoveFilter = std::set<MoveKind>;

inline MoveFilter deletion_moves() {
  return {MoveKind::h1_delete, MoveKind::h2_delete, MoveKind::l2_delete};
}

inline MoveFilter exchange_moves() {
  return {MoveKind::h3_forward, MoveKind::h3_backward, MoveKind::d1_forward,
          MoveKind::d1_backward, MoveKind::d2_forward, MoveKind::d2_backward,
          MoveKind::d3_forward, MoveKind::d3_backward};
}

inline MoveFilter homotopy_moves() {
  MoveFilter f = deletion_moves();
  for (MoveKind k : exchange_moves()) f.insert(k);
  return f;
}

// Framed homotopy: the first move is replaced by the framed one. The l2 and
// d1..d3 rewrites keep their side conditions in this setting; their framed
// use is experimental.
inline MoveFilter framed_homotopy_moves() {
  MoveFilter f = homotopy_moves();
  f.erase(MoveKind::h1_delete);
  f.insert(MoveKind::framed_delete);
  return f;
}

namespace detail {

struct ConcatView {
  std::vector<int> letter;               // concat position -> letter id
  std::vector<std::pair<int, int>> loc;  // concat position -> (word, offset)

  explicit ConcatView(const Nanophrase& p) {
    for (int r = 0; r < p.word_count(); ++r)
      for (int i = 0; i < static_cast<int>(p.words[r].size()); ++i) {
        letter.push_back(p.words[r][i]);
        loc.emplace_back(r, i);
      }
  }

  int size() const { return static_cast<int>(letter.size()); }
};

// A move's two-letter blocks may sit in different words of the phrase, but
// each block itself is contiguous inside one word.
inline bool block_ok(const ConcatView& v, int p) {
  return p >= 0 && p + 1 < v.size() && v.loc[p].first == v.loc[p + 1].first;
}

inline bool h1_ok(const ConcatView& v, int p) {
  return block_ok(v, p) && v.letter[p] == v.letter[p + 1];
}

inline bool h2_ok(const ConcatView& v, const HomotopyData& data,
                  const std::vector<int>& proj, int p, int q) {
  if (!block_ok(v, p) || !block_ok(v, q) || q < p + 2) return false;
  int a = v.letter[p], b = v.letter[p + 1];
  if (a == b) return false;
  if (v.letter[q] != b || v.letter[q + 1] != a) return false;
  return proj[b] == data.tau(proj[a]);
}

inline bool l2_ok(const ConcatView& v, const HomotopyData& data,
                  const std::vector<int>& proj, int p, int q) {
  if (!block_ok(v, p) || !block_ok(v, q) || q < p + 2) return false;
  int a = v.letter[p], b = v.letter[p + 1];
  if (a == b) return false;
  if (v.letter[q] != a || v.letter[q + 1] != b) return false;
  return proj[b] == data.tau(proj[a]) && data.admissible();
}

inline bool framed_ok(const ConcatView& v, const HomotopyData& data,
                      const std::vector<int>& proj, int p, int q) {
  if (!data.has_shift()) return false;
  if (!block_ok(v, p) || !block_ok(v, q) || q < p + 2) return false;
  int a = v.letter[p], b = v.letter[q];
  if (a == b) return false;
  if (v.letter[p + 1] != a || v.letter[q + 1] != b) return false;
  return proj[a] == data.shift(data.tau(proj[b]));
}

// Role letters of a candidate triple pattern: A in blocks 1 and 2, B in
// blocks 1 and 3, C in blocks 2 and 3. Returns false when the blocks do not
// form such a pattern.
inline bool triple_roles(const ConcatView& v, int p, int q, int r, int& A, int& B,
                         int& C) {
  if (q < p + 2 || r < q + 2) return false;
  if (!block_ok(v, p) || !block_ok(v, q) || !block_ok(v, r)) return false;
  int p0 = v.letter[p], p1 = v.letter[p + 1];
  int q0 = v.letter[q], q1 = v.letter[q + 1];
  int r0 = v.letter[r], r1 = v.letter[r + 1];
  if (p0 == p1 || q0 == q1 || r0 == r1) return false;
  // A = the letter blocks 1 and 2 share
  if (q0 == p0 || q0 == p1)
    A = q0;
  else if (q1 == p0 || q1 == p1)
    A = q1;
  else
    return false;
  B = (p0 == A) ? p1 : p0;
  C = (q0 == A) ? q1 : q0;
  if (B == C || A == B || A == C) return false;
  if (!((r0 == B && r1 == C) || (r0 == C && r1 == B))) return false;
  return true;
}

// The eight block orientations, keyed by (A first in block 1, A first in
// block 2, B first in block 3).
inline MoveKind triple_kind(bool o1, bool o2, bool o3) {
  if (o1 && o2 && o3) return MoveKind::h3_forward;
  if (!o1 && !o2 && !o3) return MoveKind::h3_backward;
  if (o1 && !o2 && o3) return MoveKind::d1_forward;
  if (!o1 && o2 && !o3) return MoveKind::d1_backward;
  if (o1 && !o2 && !o3) return MoveKind::d2_forward;
  if (!o1 && o2 && o3) return MoveKind::d2_backward;
  if (o1 && o2 && !o3) return MoveKind::d3_forward;
  return MoveKind::d3_backward;  // (!o1 && !o2 && o3)
}

inline bool triple_condition(MoveKind k, const HomotopyData& data, int sa, int sb,
                             int sc) {
  switch (k) {
    case MoveKind::h3_forward:
    case MoveKind::h3_backward: return data.has_triple(sa, sb, sc);
    case MoveKind::d1_forward:
    case MoveKind::d1_backward: return data.has_triple(sa, data.tau(sb), sc);
    case MoveKind::d2_forward:
    case MoveKind::d2_backward:
      return data.has_triple(data.tau(sa), data.tau(sb), sc);
    case MoveKind::d3_forward:
    case MoveKind::d3_backward: return data.has_triple(data.tau(sa), sb, sc);
    default: return false;
  }
}

inline bool triple_ok(const ConcatView& v, const HomotopyData& data,
                      const std::vector<int>& proj, MoveKind kind, int p, int q,
                      int r) {
  int A, B, C;
  if (!triple_roles(v, p, q, r, A, B, C)) return false;
  bool o1 = v.letter[p] == A, o2 = v.letter[q] == A, o3 = v.letter[r] == B;
  if (triple_kind(o1, o2, o3) != kind) return false;
  return triple_condition(kind, data, proj[A], proj[B], proj[C]);
}

inline Nanophrase erase_positions(const Nanophrase& p, const ConcatView& v,
                                  const std::vector<int>& positions) {
  std::set<std::pair<int, int>> gone;
  std::set<int> dead_letters;
  for (int pos : positions) {
    gone.insert(v.loc[pos]);
    dead_letters.insert(v.letter[pos]);
  }
  std::vector<int> remap(p.letter_count(), -1);
  Nanophrase q;
  for (int id = 0; id < p.letter_count(); ++id) {
    if (dead_letters.count(id)) continue;
    remap[id] = static_cast<int>(q.letters.size());
    q.letters.push_back(p.letters[id]);
    q.proj.push_back(p.proj[id]);
  }
  q.words.resize(p.word_count());
  for (int r = 0; r < p.word_count(); ++r)
    for (int i = 0; i < static_cast<int>(p.words[r].size()); ++i)
      if (!gone.count({r, i})) q.words[r].push_back(remap[p.words[r][i]]);
  return q;
}

inline std::string fresh_letter_name(const Nanophrase& p, int nth) {
  std::set<std::string> used(p.letters.begin(), p.letters.end());
  int i = 0, found = 0;
  for (;; ++i) {
    std::string name = alpha_name(i);
    if (!used.count(name)) {
      if (found == nth) return name;
      ++found;
    }
  }
}

// Letter slot pattern of each insertion kind, in reading order.
inline std::vector<int> insert_letter_pattern(MoveKind k) {
  switch (k) {
    case MoveKind::h1_insert: return {0, 0};
    case MoveKind::h2_insert: return {0, 1, 1, 0};
    case MoveKind::l2_insert: return {0, 1, 0, 1};
    case MoveKind::framed_insert: return {0, 0, 1, 1};
    default: throw error("not an insertion kind");
  }
}

}  // namespace detail

inline std::vector<MoveDescriptor> enumerate_moves(const Nanophrase& p,
                                                   const HomotopyData& data,
                                                   const MoveFilter& filter) {
  detail::ConcatView v(p);
  const int n = v.size();
  std::vector<MoveDescriptor> out;
  auto want = [&](MoveKind k) { return filter.count(k) != 0; };

  if (want(MoveKind::h1_delete))
    for (int pos = 0; pos + 1 < n; ++pos)
      if (detail::h1_ok(v, pos)) out.push_back({MoveKind::h1_delete, {pos}, {}, {}});

  for (int pos = 0; pos + 1 < n; ++pos)
    for (int q = pos + 2; q + 1 < n; ++q) {
      if (want(MoveKind::h2_delete) && detail::h2_ok(v, data, p.proj, pos, q))
        out.push_back({MoveKind::h2_delete, {pos, q}, {}, {}});
      if (want(MoveKind::l2_delete) && detail::l2_ok(v, data, p.proj, pos, q))
        out.push_back({MoveKind::l2_delete, {pos, q}, {}, {}});
      if (want(MoveKind::framed_delete) && detail::framed_ok(v, data, p.proj, pos, q))
        out.push_back({MoveKind::framed_delete, {pos, q}, {}, {}});
    }

  bool any_triple = false;
  for (MoveKind k : exchange_moves()) any_triple = any_triple || want(k);
  if (any_triple) {
    for (int pos = 0; pos + 1 < n; ++pos)
      for (int q = pos + 2; q + 1 < n; ++q)
        for (int r = q + 2; r + 1 < n; ++r) {
          int A, B, C;
          if (!detail::triple_roles(v, pos, q, r, A, B, C)) continue;
          MoveKind k = detail::triple_kind(v.letter[pos] == A, v.letter[q] == A,
                                           v.letter[r] == B);
          if (!want(k)) continue;
          if (detail::triple_condition(k, data, p.proj[A], p.proj[B], p.proj[C]))
            out.push_back({k, {pos, q, r}, {}, {}});
        }
  }

  if (data.has_shift()) {
    for (int r = 0; r < p.word_count(); ++r) {
      if (want(MoveKind::shift) && !p.words[r].empty())
        out.push_back({MoveKind::shift, {r}, {}, {}});
      if (want(MoveKind::invert)) out.push_back({MoveKind::invert, {r}, {}, {}});
    }
    if (want(MoveKind::permute))
      for (int i = 0; i + 1 < p.word_count(); ++i)
        out.push_back({MoveKind::permute, {i}, {}, {}});
  }

  std::sort(out.begin(), out.end(), [](const MoveDescriptor& a, const MoveDescriptor& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.sites < b.sites;
  });
  return out;
}

// Bounded families of insertion descriptors; used by the search module.
inline std::vector<MoveDescriptor> enumerate_insertions(const Nanophrase& p,
                                                        const HomotopyData& data,
                                                        const MoveFilter& filter) {
  std::vector<MoveDescriptor> out;
  std::vector<std::pair<int, int>> points;
  for (int r = 0; r < p.word_count(); ++r)
    for (int i = 0; i <= static_cast<int>(p.words[r].size()); ++i)
      points.emplace_back(r, i);
  auto want = [&](MoveKind k) { return filter.count(k) != 0; };

  if (want(MoveKind::h1_insert))
    for (auto c : points)
      for (int s = 0; s < data.size(); ++s)
        out.push_back({MoveKind::h1_insert, {}, {c, c}, {s}});

  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i; j < points.size(); ++j) {
      auto c1 = points[i], c2 = points[j];
      for (int s = 0; s < data.size(); ++s) {
        if (want(MoveKind::h2_insert))
          out.push_back({MoveKind::h2_insert, {}, {c1, c1, c2, c2}, {s, data.tau(s)}});
        if (want(MoveKind::l2_insert) && data.admissible())
          out.push_back({MoveKind::l2_insert, {}, {c1, c1, c2, c2}, {s, data.tau(s)}});
        if (want(MoveKind::framed_insert) && data.has_shift())
          out.push_back({MoveKind::framed_insert,
                         {},
                         {c1, c1, c2, c2},
                         {s, data.tau(data.shift(s))}});
      }
    }
  return out;
}

namespace detail {

inline Nanophrase apply_insert(const Nanophrase& p, const HomotopyData& data,
                               const MoveDescriptor& d) {
  const auto pattern = insert_letter_pattern(d.kind);
  if (d.slots.size() != pattern.size())
    throw error("insertion descriptor has wrong slot count");
  const int new_count = 1 + *std::max_element(pattern.begin(), pattern.end());
  if (static_cast<int>(d.symbols.size()) != new_count)
    throw error("insertion descriptor has wrong symbol count");
  for (int s : d.symbols)
    if (s < 0 || s >= data.size()) throw error("insertion symbol out of range");

  switch (d.kind) {
    case MoveKind::h2_insert:
    case MoveKind::l2_insert:
      if (d.symbols[1] != data.tau(d.symbols[0]))
        throw error("insertion requires |B| = tau(|A|)");
      if (d.kind == MoveKind::l2_insert && !data.admissible())
        throw error("l2 insertion requires admissible data");
      break;
    case MoveKind::framed_insert:
      if (!data.has_shift()) throw error("framed insertion requires a shift involution");
      if (d.symbols[0] != data.shift(data.tau(d.symbols[1])))
        throw error("framed insertion requires |A| = nu(tau(|B|))");
      break;
    default: break;
  }

  Nanophrase q = p;
  std::vector<int> new_ids(new_count);
  for (int i = 0; i < new_count; ++i) {
    new_ids[i] = q.letter_count();
    q.letters.push_back(fresh_letter_name(p, i));
    q.proj.push_back(d.symbols[i]);
  }

  // Stable order by slot coordinate, then insert back to front so earlier
  // slots land earlier at equal coordinates.
  std::vector<int> order(d.slots.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return d.slots[a] < d.slots[b]; });
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto [r, off] = d.slots[*it];
    if (r < 0 || r >= q.word_count() || off < 0 ||
        off > static_cast<int>(p.words[r].size()))
      throw error("insertion slot out of range");
    q.words[r].insert(q.words[r].begin() + off, new_ids[pattern[*it]]);
  }

  // The inserted occurrences must realize the move's pattern.
  ConcatView v(q);
  std::vector<int> pos0, pos1;
  for (int i = 0; i < v.size(); ++i) {
    if (v.letter[i] == new_ids[0]) pos0.push_back(i);
    if (new_count > 1 && v.letter[i] == new_ids[1]) pos1.push_back(i);
  }
  bool ok = false;
  switch (d.kind) {
    case MoveKind::h1_insert: ok = h1_ok(v, pos0[0]) && pos0[1] == pos0[0] + 1; break;
    case MoveKind::h2_insert: ok = h2_ok(v, data, q.proj, pos0[0], pos1[1]); break;
    case MoveKind::l2_insert: ok = l2_ok(v, data, q.proj, pos0[0], pos0[1]); break;
    case MoveKind::framed_insert:
      ok = framed_ok(v, data, q.proj, pos0[0], pos1[0]);
      break;
    default: break;
  }
  if (!ok) throw error("insertion slots do not produce the move pattern");
  return q;
}

}  // namespace detail

inline Nanophrase shift_word(const Nanophrase& p, const HomotopyData& data, int r) {
  if (!data.has_shift()) throw error("shift requires a shift involution");
  if (r < 0 || r >= p.word_count()) throw error("shift: word index out of range");
  if (p.words[r].empty()) throw error("shift: word is empty");
  Nanophrase q = p;
  int a = q.words[r].front();
  q.words[r].erase(q.words[r].begin());
  q.words[r].push_back(a);
  int occurrences = static_cast<int>(std::count(p.words[r].begin(), p.words[r].end(), a));
  if (occurrences == 2) q.proj[a] = data.shift(q.proj[a]);
  return q;
}

inline Nanophrase invert_word(const Nanophrase& p, const HomotopyData& data, int r) {
  if (!data.has_shift()) throw error("invert requires a shift involution");
  if (r < 0 || r >= p.word_count()) throw error("invert: word index out of range");
  Nanophrase q = p;
  std::reverse(q.words[r].begin(), q.words[r].end());
  std::vector<int> occurrences(p.letter_count(), 0);
  for (int id : p.words[r]) ++occurrences[id];
  for (int id = 0; id < p.letter_count(); ++id) {
    if (occurrences[id] == 1)
      q.proj[id] = data.tau(q.proj[id]);
    else if (occurrences[id] == 2)
      q.proj[id] = data.shift(q.proj[id]);
  }
  return q;
}

inline Nanophrase permute_words(const Nanophrase& p, const HomotopyData& data, int i) {
  if (!data.has_shift()) throw error("permute requires a shift involution");
  if (i < 0 || i + 1 >= p.word_count()) throw error("permute: word index out of range");
  Nanophrase q = p;
  std::swap(q.words[i], q.words[i + 1]);
  std::set<int> in_first(p.words[i].begin(), p.words[i].end());
  std::set<int> shared;
  for (int id : p.words[i + 1])
    if (in_first.count(id)) shared.insert(id);
  for (int id : shared) q.proj[id] = data.shift(q.proj[id]);
  return q;
}

inline Nanophrase apply(const Nanophrase& p, const HomotopyData& data,
                        const MoveDescriptor& d) {
  detail::ConcatView v(p);
  auto stale = [&]() { return error("stale move descriptor: site no longer matches"); };
  switch (d.kind) {
    case MoveKind::h1_delete: {
      int pos = d.sites.at(0);
      if (!detail::h1_ok(v, pos)) throw stale();
      return detail::erase_positions(p, v, {pos, pos + 1});
    }
    case MoveKind::h2_delete: {
      int pos = d.sites.at(0), q = d.sites.at(1);
      if (!detail::h2_ok(v, data, p.proj, pos, q)) throw stale();
      return detail::erase_positions(p, v, {pos, pos + 1, q, q + 1});
    }
    case MoveKind::l2_delete: {
      int pos = d.sites.at(0), q = d.sites.at(1);
      if (!detail::l2_ok(v, data, p.proj, pos, q)) throw stale();
      return detail::erase_positions(p, v, {pos, pos + 1, q, q + 1});
    }
    case MoveKind::framed_delete: {
      int pos = d.sites.at(0), q = d.sites.at(1);
      if (!detail::framed_ok(v, data, p.proj, pos, q)) throw stale();
      return detail::erase_positions(p, v, {pos, pos + 1, q, q + 1});
    }
    case MoveKind::h3_forward:
    case MoveKind::h3_backward:
    case MoveKind::d1_forward:
    case MoveKind::d1_backward:
    case MoveKind::d2_forward:
    case MoveKind::d2_backward:
    case MoveKind::d3_forward:
    case MoveKind::d3_backward: {
      int a = d.sites.at(0), b = d.sites.at(1), c = d.sites.at(2);
      if (!detail::triple_ok(v, data, p.proj, d.kind, a, b, c)) throw stale();
      Nanophrase q = p;
      for (int pos : {a, b, c}) {
        auto [r1, i1] = v.loc[pos];
        auto [r2, i2] = v.loc[pos + 1];
        std::swap(q.words[r1][i1], q.words[r2][i2]);
      }
      return q;
    }
    case MoveKind::h1_insert:
    case MoveKind::h2_insert:
    case MoveKind::l2_insert:
    case MoveKind::framed_insert: return detail::apply_insert(p, data, d);
    case MoveKind::shift: return shift_word(p, data, d.sites.at(0));
    case MoveKind::invert: return invert_word(p, data, d.sites.at(0));
    case MoveKind::permute: return permute_words(p, data, d.sites.at(0));
  }
  throw error("unhandled move kind");
}

namespace detail {

inline MoveKind flip_direction(MoveKind k) {
  switch (k) {
    case MoveKind::h3_forward: return MoveKind::h3_backward;
    case MoveKind::h3_backward: return MoveKind::h3_forward;
    case MoveKind::d1_forward: return MoveKind::d1_backward;
    case MoveKind::d1_backward: return MoveKind::d1_forward;
    case MoveKind::d2_forward: return MoveKind::d2_backward;
    case MoveKind::d2_backward: return MoveKind::d2_forward;
    case MoveKind::d3_forward: return MoveKind::d3_backward;
    case MoveKind::d3_backward: return MoveKind::d3_forward;
    default: throw error("not a triple move");
  }
}

inline MoveKind delete_to_insert(MoveKind k) {
  switch (k) {
    case MoveKind::h1_delete: return MoveKind::h1_insert;
    case MoveKind::h2_delete: return MoveKind::h2_insert;
    case MoveKind::l2_delete: return MoveKind::l2_insert;
    case MoveKind::framed_delete: return MoveKind::framed_insert;
    default: throw error("not a deletion");
  }
}

inline MoveKind insert_to_delete(MoveKind k) {
  switch (k) {
    case MoveKind::h1_insert: return MoveKind::h1_delete;
    case MoveKind::h2_insert: return MoveKind::h2_delete;
    case MoveKind::l2_insert: return MoveKind::l2_delete;
    case MoveKind::framed_insert: return MoveKind::framed_delete;
    default: throw error("not an insertion");
  }
}

}  // namespace detail

// The descriptor undoing d, expressed in the coordinates of apply(p, d).
// Shifts are not reversible by a single descriptor.
inline MoveDescriptor inverse(const Nanophrase& p, const HomotopyData& data,
                              const MoveDescriptor& d) {
  detail::ConcatView v(p);
  if (is_exchange(d.kind)) return {detail::flip_direction(d.kind), d.sites, {}, {}};
  if (d.kind == MoveKind::invert || d.kind == MoveKind::permute) return d;
  if (is_delete(d.kind)) {
    std::vector<int> positions;
    if (d.kind == MoveKind::h1_delete)
      positions = {d.sites.at(0), d.sites.at(0) + 1};
    else
      positions = {d.sites.at(0), d.sites.at(0) + 1, d.sites.at(1), d.sites.at(1) + 1};
    // occurrence order of the letters being re-inserted
    std::vector<int> letter_pattern;
    if (d.kind == MoveKind::h1_delete)
      letter_pattern = {0, 0};
    else {
      int first = v.letter[positions[0]];
      for (int pos : positions) letter_pattern.push_back(v.letter[pos] == first ? 0 : 1);
    }
    std::vector<std::pair<int, int>> slots;
    for (size_t i = 0; i < positions.size(); ++i) {
      auto [r, off] = v.loc[positions[i]];
      int removed_before = 0;
      for (size_t j = 0; j < i; ++j)
        if (v.loc[positions[j]].first == r) ++removed_before;
      slots.emplace_back(r, off - removed_before);
    }
    std::vector<int> symbols{p.proj[v.letter[positions[0]]]};
    if (d.kind != MoveKind::h1_delete) {
      int other = -1;
      for (int pos : positions)
        if (v.letter[pos] != v.letter[positions[0]]) other = v.letter[pos];
      symbols.push_back(p.proj[other]);
    }
    MoveKind k = detail::delete_to_insert(d.kind);
    // slot list must follow the insertion kind's reading-order pattern
    auto pattern = detail::insert_letter_pattern(k);
    if (pattern != letter_pattern) throw error("deletion does not match its pattern");
    return {k, {}, slots, symbols};
  }
  if (is_insert(d.kind)) {
    Nanophrase q = apply(p, data, d);
    detail::ConcatView vq(q);
    int first_new = p.letter_count();
    std::vector<int> where;
    for (int i = 0; i < vq.size(); ++i)
      if (vq.letter[i] >= first_new) where.push_back(i);
    MoveKind k = detail::insert_to_delete(d.kind);
    if (k == MoveKind::h1_delete) return {k, {where[0]}, {}, {}};
    return {k, {where[0], where[2]}, {}, {}};
  }
  throw error("move is not reversible by a single descriptor");
}

}  // namespace nw
