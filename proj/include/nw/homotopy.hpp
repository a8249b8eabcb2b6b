#pragma once

// Homotopy data: a finite symbol set alpha with an involution tau, a set S
// of ordered symbol triples licensing the third move, and an optional shift
// involution nu. Symbols are interned; most of the library works with symbol
// ids (indices into the name table).

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nw {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Triple = std::array<int, 3>;

class HomotopyData {
 public:
  HomotopyData() = default;

  HomotopyData(std::vector<std::string> symbols, std::vector<int> tau,
               std::set<Triple> triples, std::optional<std::vector<int>> shift,
               std::string name = "")
      : names_(std::move(symbols)),
        tau_(std::move(tau)),
        triples_(std::move(triples)),
        shift_(std::move(shift)),
        name_(std::move(name)) {
    check();
  }

  // Convenience constructor from name-level pairs. Symbols absent from the
  // pair lists are fixed points of the respective involution.
  HomotopyData(const std::vector<std::string>& symbols,
               const std::vector<std::pair<std::string, std::string>>& tau_pairs,
               const std::vector<std::array<std::string, 3>>& triples,
               const std::optional<std::vector<std::pair<std::string, std::string>>>&
                   shift_pairs,
               std::string name = "")
      : names_(symbols), name_(std::move(name)) {
    tau_ = involution_from_pairs(tau_pairs, "tau");
    for (const auto& t : triples)
      triples_.insert({require_symbol(t[0]), require_symbol(t[1]), require_symbol(t[2])});
    if (shift_pairs) shift_ = involution_from_pairs(*shift_pairs, "shift");
    check();
  }

  int size() const { return static_cast<int>(names_.size()); }

  const std::string& symbol_name(int id) const { return names_.at(id); }

  const std::vector<std::string>& symbol_names() const { return names_; }

  // -1 when the name is unknown
  int symbol(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (names_[i] == name) return i;
    return -1;
  }

  int require_symbol(const std::string& name) const {
    int id = symbol(name);
    if (id < 0) throw error("unknown symbol '" + name + "'");
    return id;
  }

  int tau(int id) const { return tau_.at(id); }

  bool has_shift() const { return shift_.has_value(); }

  int shift(int id) const {
    if (!shift_) throw error("homotopy data has no shift involution");
    return shift_->at(id);
  }

  const std::set<Triple>& triples() const { return triples_; }

  bool has_triple(int a, int b, int c) const {
    return triples_.count({a, b, c}) != 0;
  }

  // S meets alpha x {a} x {a} for every symbol a
  bool admissible() const {
    for (int a = 0; a < size(); ++a) {
      bool hit = false;
      for (int x = 0; x < size() && !hit; ++x) hit = has_triple(x, a, a);
      if (!hit) return false;
    }
    return true;
  }

  const std::string& name() const { return name_; }

  friend bool operator==(const HomotopyData& a, const HomotopyData& b) {
    return a.names_ == b.names_ && a.tau_ == b.tau_ && a.triples_ == b.triples_ &&
           a.shift_ == b.shift_;
  }

 private:
  std::vector<int> involution_from_pairs(
      const std::vector<std::pair<std::string, std::string>>& pairs,
      const std::string& what) const {
    std::vector<int> inv(names_.size());
    for (int i = 0; i < size(); ++i) inv[i] = i;
    for (const auto& [x, y] : pairs) {
      int a = require_symbol(x), b = require_symbol(y);
      inv[a] = b;
      inv[b] = a;
    }
    for (int i = 0; i < size(); ++i)
      if (inv[inv[i]] != i) throw error(what + " is not an involution");
    return inv;
  }

  void check() const {
    const int n = size();
    if (static_cast<int>(tau_.size()) != n) throw error("tau has wrong size");
    for (int i = 0; i < n; ++i) {
      if (tau_[i] < 0 || tau_[i] >= n) throw error("tau maps outside the symbol set");
      if (tau_[tau_[i]] != i) throw error("tau is not an involution");
    }
    for (const Triple& t : triples_)
      for (int x : t)
        if (x < 0 || x >= n) throw error("triple component outside the symbol set");
    if (shift_) {
      if (static_cast<int>(shift_->size()) != n) throw error("shift has wrong size");
      for (int i = 0; i < n; ++i) {
        int s = (*shift_)[i];
        if (s < 0 || s >= n) throw error("shift maps outside the symbol set");
        if ((*shift_)[s] != i) throw error("shift is not an involution");
      }
    }
    std::set<std::string> seen;
    for (const auto& nm : names_)
      if (!seen.insert(nm).second) throw error("duplicate symbol name '" + nm + "'");
  }

  std::vector<std::string> names_;
  std::vector<int> tau_;
  std::set<Triple> triples_;
  std::optional<std::vector<int>> shift_;
  std::string name_;
};

}  // namespace nw
