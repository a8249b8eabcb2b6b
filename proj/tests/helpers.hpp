#pragma once

#include <doctest.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "nw/moves.hpp"
#include "nw/phrase.hpp"

namespace helpers {

// phrase from single-char word strings; "" is an empty word
inline nw::Nanophrase phrase(
    const nw::HomotopyData& data,
    const std::vector<std::pair<std::string, std::string>>& letters,
    const std::vector<std::string>& words) {
  nw::Nanophrase p;
  for (const auto& [name, sym] : letters) {
    p.letters.push_back(name);
    p.proj.push_back(data.symbol(sym));
  }
  for (const auto& w : words) {
    std::vector<int> ids;
    for (char c : w) {
      auto it = std::find(p.letters.begin(), p.letters.end(), std::string(1, c));
      REQUIRE(it != p.letters.end());
      ids.push_back(static_cast<int>(it - p.letters.begin()));
    }
    p.words.push_back(ids);
  }
  return p;
}

// concatenated word as a string of letter names (single-char assumed)
inline std::string flat(const nw::Nanophrase& p) {
  std::string s;
  for (const auto& w : p.words)
    for (int id : w) s += p.letters[id];
  return s;
}

inline std::optional<nw::MoveDescriptor> find_move(const nw::Nanophrase& p,
                                                   const nw::HomotopyData& data,
                                                   nw::MoveKind kind) {
  for (const auto& d : nw::enumerate_moves(p, data, {kind}))
    return d;
  return std::nullopt;
}

}  // namespace helpers
