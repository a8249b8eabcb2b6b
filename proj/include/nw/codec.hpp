#pragma once

// Signed Gauss codes of ordered pointed link diagrams and their translation
// to nanophrases over alpha_star. Components are read in listing order from
// their origins; each crossing contributes one letter whose symbol is fixed
// by (over/under at the first passage, crossing sign):
//
//   first passage under, sign +  ->  a+
//   first passage over,  sign +  ->  b+
//   first passage under, sign -  ->  b-
//   first passage over,  sign -  ->  a-
//
// This table is pinned by two anchors: it reproduces the standard trefoil
// letter assignment (a+, b+, a+) and the trefoil pseudo-link bracket
// -t^5 - t^-3 + t^-7. The mirrored table (a and b rows swapped) is the other
// self-consistent convention and is rejected by those anchors.

#include <map>
#include <string>
#include <vector>

#include "nw/phrase.hpp"
#include "nw/presets.hpp"

namespace nw {

struct Passage {
  std::string label;
  bool over = false;
  int sign = +1;  // +1 or -1

  friend bool operator==(const Passage& a, const Passage& b) {
    return a.label == b.label && a.over == b.over && a.sign == b.sign;
  }
};

// One passage list per component.
using SignedGaussCode = std::vector<std::vector<Passage>>;

inline ValidationReport validate_code(const SignedGaussCode& code) {
  ValidationReport rep;
  std::map<std::string, std::vector<Passage>> by_label;
  for (const auto& comp : code)
    for (const auto& p : comp) by_label[p.label].push_back(p);
  for (const auto& [label, ps] : by_label) {
    if (ps.size() != 2) {
      rep.problems.push_back("crossing " + label + " has " +
                             std::to_string(ps.size()) + " passages, expected 2");
      continue;
    }
    if (ps[0].over == ps[1].over)
      rep.problems.push_back("crossing " + label +
                             " must be passed once over and once under");
    if (ps[0].sign != ps[1].sign)
      rep.problems.push_back("crossing " + label + " has mismatched signs");
  }
  return rep;
}

inline Nanophrase encode(const SignedGaussCode& code, const HomotopyData& star) {
  auto rep = validate_code(code);
  if (!rep.ok()) throw error("invalid Gauss code: " + rep.problems.front());
  Nanophrase p;
  p.words.resize(code.size());
  std::map<std::string, int> letter_of;
  for (size_t comp = 0; comp < code.size(); ++comp) {
    for (const auto& pass : code[comp]) {
      auto it = letter_of.find(pass.label);
      if (it == letter_of.end()) {
        int id = p.letter_count();
        letter_of[pass.label] = id;
        p.letters.push_back(alpha_name(id));
        std::string symbol;
        if (!pass.over && pass.sign > 0) symbol = "a+";
        if (pass.over && pass.sign > 0) symbol = "b+";
        if (!pass.over && pass.sign < 0) symbol = "b-";
        if (pass.over && pass.sign < 0) symbol = "a-";
        p.proj.push_back(star.require_symbol(symbol));
        p.words[comp].push_back(id);
      } else {
        p.words[comp].push_back(it->second);
      }
    }
  }
  return p;
}

// Convenience: drop the over/under and sign data, landing in alpha_0.
inline Nanophrase forget_orientation_data(const Nanophrase& p,
                                          const HomotopyData& star) {
  DataMorphism to0 = make_morphism(star, preset("alpha_0"),
                                   {{"a+", "a"}, {"a-", "a"}, {"b+", "b"}, {"b-", "b"}});
  return apply_morphism(to0, p);
}

}  // namespace nw
