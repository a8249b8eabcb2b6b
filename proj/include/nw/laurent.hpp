#pragma once

// Exact integer Laurent polynomials in one variable t. Coefficients are
// 64-bit; exponents may be negative. The zero polynomial stores no terms.

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace nw {

class Laurent {
 public:
  Laurent() = default;

  static Laurent zero() { return Laurent(); }

  static Laurent one() { return monomial(1, 0); }

  static Laurent monomial(std::int64_t coef, int exp) {
    Laurent p;
    if (coef != 0) p.terms_[exp] = coef;
    return p;
  }

  // (-t)^k = (-1)^k t^k
  static Laurent neg_t_pow(int k) { return monomial((k % 2 == 0) ? 1 : -1, k); }

  // -(t^2 + t^-2), the factor contributed by a free loop
  static Laurent loop_factor() {
    Laurent p;
    p.terms_[2] = -1;
    p.terms_[-2] = -1;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  std::int64_t coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
  }

  const std::map<int, std::int64_t>& terms() const { return terms_; }

  Laurent& operator+=(const Laurent& o) {
    for (auto [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Laurent& operator-=(const Laurent& o) {
    for (auto [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (auto [ea, ca] : a.terms_)
      for (auto [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent operator-() const {
    Laurent r;
    for (auto [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  // multiply by t^k
  Laurent shifted(int k) const {
    Laurent r;
    for (auto [e, c] : terms_) r.terms_[e + k] = c;
    return r;
  }

  // t -> t^-1
  Laurent inverted_variable() const {
    Laurent r;
    for (auto [e, c] : terms_) r.terms_[-e] = c;
    return r;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) {
    return !(a == b);
  }

  // Terms in descending exponent order, e.g. "-t^5 - t^-3 + t^-7".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      auto [e, c] = *it;
      if (first) {
        if (c < 0) os << '-';
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      std::int64_t m = c < 0 ? -c : c;
      if (m != 1 || e == 0) os << m;
      if (e != 0) {
        os << 't';
        if (e != 1) os << '^' << e;
      }
    }
    return os.str();
  }

  // [exp, coeff] pairs in descending exponent order
  std::vector<std::pair<int, std::int64_t>> pairs() const {
    std::vector<std::pair<int, std::int64_t>> r;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
      r.emplace_back(it->first, it->second);
    return r;
  }

 private:
  void add_term(int exp, std::int64_t coef) {
    if (coef == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_[exp] = coef;
    } else {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<int, std::int64_t> terms_;
};

}  // namespace nw
