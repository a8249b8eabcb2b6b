#pragma once

// Nanophrases: an alphabet of letters, each projecting to a symbol of some
// homotopy data, and a sequence of words whose concatenation is a Gauss word
// (every letter occurs exactly twice). A nanoword is a phrase of length <= 1.
//
// Values are immutable by convention: every operation is a pure function
// returning a fresh phrase.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "nw/homotopy.hpp"

namespace nw {

struct Nanophrase {
  std::vector<std::string> letters;     // letter id -> display name
  std::vector<int> proj;                // letter id -> symbol id
  std::vector<std::vector<int>> words;  // words of letter ids

  int letter_count() const { return static_cast<int>(letters.size()); }
  int word_count() const { return static_cast<int>(words.size()); }

  int total_positions() const {
    int n = 0;
    for (const auto& w : words) n += static_cast<int>(w.size());
    return n;
  }

  bool is_nanoword() const { return word_count() <= 1; }

  friend bool operator==(const Nanophrase& a, const Nanophrase& b) {
    return a.letters == b.letters && a.proj == b.proj && a.words == b.words;
  }
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
  std::string str() const {
    std::string s;
    for (const auto& p : problems) {
      s += p;
      s += '\n';
    }
    return s;
  }
};

// One occurrence: word index r and 1-based position i within that word.
struct Occurrence {
  int word = 0;
  int pos = 0;
  friend bool operator==(const Occurrence& a, const Occurrence& b) {
    return a.word == b.word && a.pos == b.pos;
  }
  friend bool operator<(const Occurrence& a, const Occurrence& b) {
    return a.word != b.word ? a.word < b.word : a.pos < b.pos;
  }
};

// Per letter, its two occurrences in reading order.
using OccurrenceIndex = std::vector<std::array<Occurrence, 2>>;

inline ValidationReport validate(const Nanophrase& p, const HomotopyData& data) {
  ValidationReport rep;
  const int n = p.letter_count();
  if (static_cast<int>(p.proj.size()) != n) {
    rep.problems.push_back("projection table size does not match letter count");
    return rep;
  }
  for (int i = 0; i < n; ++i) {
    if (p.proj[i] < 0 || p.proj[i] >= data.size())
      rep.problems.push_back("letter " + p.letters[i] + " projects to an unknown symbol");
  }
  std::vector<int> count(n, 0);
  for (int r = 0; r < p.word_count(); ++r) {
    for (int id : p.words[r]) {
      if (id < 0 || id >= n) {
        rep.problems.push_back("word " + std::to_string(r + 1) +
                               " references an undeclared letter");
        continue;
      }
      ++count[id];
    }
  }
  for (int i = 0; i < n; ++i) {
    if (count[i] == 0)
      rep.problems.push_back("letter " + p.letters[i] + " never occurs (dangling)");
    else if (count[i] != 2)
      rep.problems.push_back("letter " + p.letters[i] + " occurs " +
                             std::to_string(count[i]) + " times, expected 2");
  }
  return rep;
}

inline void require_valid(const Nanophrase& p, const HomotopyData& data) {
  auto rep = validate(p, data);
  if (!rep.ok()) throw error("invalid nanophrase: " + rep.problems.front());
}

inline OccurrenceIndex occurrence_index(const Nanophrase& p) {
  OccurrenceIndex idx(p.letter_count());
  std::vector<int> seen(p.letter_count(), 0);
  for (int r = 0; r < p.word_count(); ++r) {
    for (int i = 0; i < static_cast<int>(p.words[r].size()); ++i) {
      int id = p.words[r][i];
      if (seen[id] < 2) idx[id][seen[id]] = Occurrence{r, i + 1};
      ++seen[id];
    }
  }
  return idx;
}

// Reassemble a phrase from its occurrence index and word lengths.
inline Nanophrase from_occurrences(std::vector<std::string> letters,
                                   std::vector<int> proj, const OccurrenceIndex& idx,
                                   const std::vector<int>& word_lengths) {
  Nanophrase p;
  p.letters = std::move(letters);
  p.proj = std::move(proj);
  p.words.resize(word_lengths.size());
  for (size_t r = 0; r < word_lengths.size(); ++r)
    p.words[r].assign(word_lengths[r], -1);
  for (int id = 0; id < static_cast<int>(idx.size()); ++id) {
    for (const Occurrence& o : idx[id]) {
      auto& slot = p.words.at(o.word).at(o.pos - 1);
      if (slot != -1) throw error("occurrence index places two letters in one slot");
      slot = id;
    }
  }
  for (const auto& w : p.words)
    for (int id : w)
      if (id == -1) throw error("occurrence index leaves a slot unfilled");
  return p;
}

// Rename letters to X1..Xn in order of first occurrence in the concatenated
// word. Two phrases are isomorphic iff their canonical forms are identical.
inline Nanophrase canonical_form(const Nanophrase& p) {
  std::vector<int> rank(p.letter_count(), -1);
  int next = 0;
  for (const auto& w : p.words)
    for (int id : w)
      if (rank[id] < 0) rank[id] = next++;
  if (next != p.letter_count())
    throw error("canonical_form: phrase has dangling letters");
  Nanophrase q;
  q.letters.resize(p.letter_count());
  q.proj.resize(p.letter_count());
  for (int id = 0; id < p.letter_count(); ++id) {
    q.letters[rank[id]] = "X" + std::to_string(rank[id] + 1);
    q.proj[rank[id]] = p.proj[id];
  }
  q.words.reserve(p.word_count());
  for (const auto& w : p.words) {
    std::vector<int> nw_word;
    nw_word.reserve(w.size());
    for (int id : w) nw_word.push_back(rank[id]);
    q.words.push_back(std::move(nw_word));
  }
  return q;
}

// Compact canonical serialization, suitable as a set/map key.
inline std::string canonical_key(const Nanophrase& p) {
  Nanophrase c = canonical_form(p);
  std::ostringstream os;
  for (int s : c.proj) os << s << ',';
  os << ';';
  for (const auto& w : c.words) {
    for (int id : w) os << id << ',';
    os << '|';
  }
  return os.str();
}

inline bool same_canonical(const Nanophrase& a, const Nanophrase& b) {
  return canonical_form(a) == canonical_form(b);
}

// Connected sum of nanowords: the letters of v are renamed away from u when
// needed and the underlying words are concatenated. The length-0 phrase is
// the unit.
inline Nanophrase concatenate(const Nanophrase& u, const Nanophrase& v) {
  if (!u.is_nanoword() || !v.is_nanoword())
    throw error("concatenate expects nanowords (phrases of length <= 1)");
  if (u.word_count() == 0) return v;
  if (v.word_count() == 0) return u;
  Nanophrase r;
  r.letters = u.letters;
  r.proj = u.proj;
  std::vector<std::string> used(u.letters.begin(), u.letters.end());
  const int offset = u.letter_count();
  for (int i = 0; i < v.letter_count(); ++i) {
    std::string name = v.letters[i];
    while (std::find(used.begin(), used.end(), name) != used.end()) name += "'";
    used.push_back(name);
    r.letters.push_back(name);
    r.proj.push_back(v.proj[i]);
  }
  std::vector<int> word = u.words[0];
  for (int id : v.words[0]) word.push_back(id + offset);
  r.words.push_back(std::move(word));
  return r;
}

// P read from right to left: word order and every word reversed. Projections
// are untouched (this is not the nu-inversion operation).
inline Nanophrase reversed(const Nanophrase& p) {
  Nanophrase r = p;
  std::reverse(r.words.begin(), r.words.end());
  for (auto& w : r.words) std::reverse(w.begin(), w.end());
  return r;
}

// Spreadsheet-style letter names: A, B, ..., Z, AA, AB, ...
inline std::string alpha_name(int i) {
  std::string s;
  ++i;
  while (i > 0) {
    --i;
    s.insert(s.begin(), static_cast<char>('A' + i % 26));
    i /= 26;
  }
  return s;
}

}  // namespace nw
