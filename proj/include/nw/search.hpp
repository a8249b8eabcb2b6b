#pragma once

// Bounded breadth-first search over the homotopy move graph, on canonical
// forms. reduce() looks for the reachable phrase with the fewest letters;
// equivalent() runs a bidirectional search and only ever answers
// "equivalent, with this move path" or "unknown" -- the move system gives no
// way to certify inequivalence, that is what the invariants are for.
//
// Insertion moves expand the graph unboundedly, so they are rate-limited:
// at most max_consecutive_insertions in a row along any path, and never past
// max_letters.

#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "nw/moves.hpp"
#include "nw/phrase.hpp"

namespace nw {

struct SearchBudget {
  int max_letters = 12;
  int max_depth = 10;
  long long max_states = 20000;
  int max_consecutive_insertions = 1;
};

struct ReduceResult {
  Nanophrase phrase;
  std::vector<MoveDescriptor> path;
  bool budget_exhausted = false;
};

enum class EquivStatus { equivalent, unknown };

struct EquivResult {
  EquivStatus status = EquivStatus::unknown;
  std::vector<MoveDescriptor> path;  // p -> q when equivalent
  bool budget_exhausted = false;
};

namespace detail {

struct SearchNode {
  Nanophrase phrase;
  int parent = -1;
  MoveDescriptor via;
  int depth = 0;
  int consecutive_insertions = 0;
};

struct Expansion {
  std::vector<std::pair<MoveDescriptor, Nanophrase>> out;
};

inline Expansion expand(const Nanophrase& p, const HomotopyData& data,
                        const SearchBudget& budget, int consec_inserts) {
  Expansion e;
  MoveFilter f = homotopy_moves();
  if (data.admissible()) f.insert(MoveKind::l2_delete);
  for (const MoveDescriptor& d : enumerate_moves(p, data, f))
    e.out.emplace_back(d, apply(p, data, d));
  if (consec_inserts < budget.max_consecutive_insertions) {
    MoveFilter ins{MoveKind::h1_insert, MoveKind::h2_insert};
    if (data.admissible()) ins.insert(MoveKind::l2_insert);
    for (const MoveDescriptor& d : enumerate_insertions(p, data, ins)) {
      int added = d.kind == MoveKind::h1_insert ? 1 : 2;
      if (p.letter_count() + added > budget.max_letters) continue;
      e.out.emplace_back(d, apply(p, data, d));
    }
  }
  return e;
}

inline std::vector<MoveDescriptor> trace_path(const std::vector<SearchNode>& nodes,
                                              int idx) {
  std::vector<MoveDescriptor> path;
  while (idx >= 0 && nodes[idx].parent >= 0) {
    path.push_back(nodes[idx].via);
    idx = nodes[idx].parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

inline ReduceResult reduce(const Nanophrase& start, const HomotopyData& data,
                           const SearchBudget& budget = {}) {
  require_valid(start, data);
  std::vector<detail::SearchNode> nodes;
  std::map<std::string, int> visited;
  nodes.push_back({canonical_form(start), -1, {}, 0, 0});
  visited[canonical_key(start)] = 0;
  std::deque<int> frontier{0};
  int best = 0;
  bool exhausted = false;
  auto better = [&](int cand) {
    if (nodes[cand].phrase.letter_count() != nodes[best].phrase.letter_count())
      return nodes[cand].phrase.letter_count() < nodes[best].phrase.letter_count();
    return canonical_key(nodes[cand].phrase) < canonical_key(nodes[best].phrase);
  };
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop_front();
    if (nodes[cur].depth >= budget.max_depth) {
      exhausted = true;
      continue;
    }
    auto expansion =
        detail::expand(nodes[cur].phrase, data, budget, nodes[cur].consecutive_insertions);
    for (auto& [d, next] : expansion.out) {
      std::string key = canonical_key(next);
      if (visited.count(key)) continue;
      if (static_cast<long long>(nodes.size()) >= budget.max_states) {
        exhausted = true;
        break;
      }
      int consec = is_insert(d.kind) ? nodes[cur].consecutive_insertions + 1 : 0;
      visited[key] = static_cast<int>(nodes.size());
      nodes.push_back({canonical_form(next), cur, d, nodes[cur].depth + 1, consec});
      int idx = static_cast<int>(nodes.size()) - 1;
      if (better(idx)) best = idx;
      // nothing beats a letterless phrase
      if (nodes[best].phrase.letter_count() == 0)
        return {nodes[best].phrase, detail::trace_path(nodes, best), false};
      frontier.push_back(idx);
    }
    if (static_cast<long long>(nodes.size()) >= budget.max_states) exhausted = true;
  }
  return {nodes[best].phrase, detail::trace_path(nodes, best), exhausted};
}

inline EquivResult equivalent(const Nanophrase& p, const Nanophrase& q,
                              const HomotopyData& data,
                              const SearchBudget& budget = {}) {
  require_valid(p, data);
  require_valid(q, data);
  std::vector<detail::SearchNode> fwd, bwd;
  std::map<std::string, int> fwd_seen, bwd_seen;
  fwd.push_back({canonical_form(p), -1, {}, 0, 0});
  bwd.push_back({canonical_form(q), -1, {}, 0, 0});
  fwd_seen[canonical_key(p)] = 0;
  bwd_seen[canonical_key(q)] = 0;

  auto join = [&](int fidx, int bidx) {
    std::vector<MoveDescriptor> path = detail::trace_path(fwd, fidx);
    // invert the backward path, replaying it from q to the meeting point
    std::vector<int> chain;
    for (int i = bidx; i >= 0; i = bwd[i].parent) chain.push_back(i);
    std::reverse(chain.begin(), chain.end());  // q ... meet
    std::vector<MoveDescriptor> back;
    for (size_t i = chain.size(); i-- > 1;)
      back.push_back(inverse(bwd[chain[i - 1]].phrase, data, bwd[chain[i]].via));
    path.insert(path.end(), back.begin(), back.end());
    return path;
  };

  if (canonical_key(p) == canonical_key(q)) return {EquivStatus::equivalent, {}, false};

  std::deque<std::pair<int, int>> frontier;  // (side, node): side 0 fwd, 1 bwd
  frontier.emplace_back(0, 0);
  frontier.emplace_back(1, 0);
  bool exhausted = false;
  while (!frontier.empty()) {
    auto [side, cur] = frontier.front();
    frontier.pop_front();
    auto& nodes = side == 0 ? fwd : bwd;
    auto& seen = side == 0 ? fwd_seen : bwd_seen;
    auto& other_seen = side == 0 ? bwd_seen : fwd_seen;
    if (nodes[cur].depth >= budget.max_depth) {
      exhausted = true;
      continue;
    }
    auto expansion =
        detail::expand(nodes[cur].phrase, data, budget, nodes[cur].consecutive_insertions);
    for (auto& [d, next] : expansion.out) {
      std::string key = canonical_key(next);
      if (seen.count(key)) continue;
      if (static_cast<long long>(fwd.size() + bwd.size()) >= budget.max_states) {
        exhausted = true;
        break;
      }
      int consec = is_insert(d.kind) ? nodes[cur].consecutive_insertions + 1 : 0;
      seen[key] = static_cast<int>(nodes.size());
      nodes.push_back({canonical_form(next), cur, d, nodes[cur].depth + 1, consec});
      int idx = static_cast<int>(nodes.size()) - 1;
      auto hit = other_seen.find(key);
      if (hit != other_seen.end()) {
        int fidx = side == 0 ? idx : hit->second;
        int bidx = side == 0 ? hit->second : idx;
        return {EquivStatus::equivalent, join(fidx, bidx), false};
      }
      frontier.emplace_back(side, idx);
    }
    if (static_cast<long long>(fwd.size() + bwd.size()) >= budget.max_states)
      exhausted = true;
  }
  return {EquivStatus::unknown, {}, exhausted};
}

// ---------------------------------------------------------------------------
// Seeded random phrases (splitmix64; byte-identical across platforms)

namespace detail {

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

}  // namespace detail

inline Nanophrase random_nanophrase(const HomotopyData& data, int n_letters, int k_words,
                                    std::uint64_t seed) {
  if (n_letters < 0 || k_words < 1) throw error("random_nanophrase: bad shape");
  detail::SplitMix64 rng(seed);
  Nanophrase p;
  p.words.resize(k_words);
  for (int i = 0; i < n_letters; ++i) {
    p.letters.push_back(alpha_name(i));
    p.proj.push_back(rng.below(data.size()));
  }
  std::vector<int> bag;
  for (int i = 0; i < n_letters; ++i) {
    bag.push_back(i);
    bag.push_back(i);
  }
  for (int i = static_cast<int>(bag.size()) - 1; i > 0; --i)
    std::swap(bag[i], bag[rng.below(i + 1)]);
  for (int slot = 0; slot < 2 * n_letters; ++slot)
    p.words[rng.below(k_words)].push_back(bag[slot]);
  return p;
}

}  // namespace nw
