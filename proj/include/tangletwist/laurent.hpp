#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>

#include "tangletwist/errors.hpp"

namespace tangletwist {

// Integer Laurent polynomial in A. No zero coefficients are stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(long long c) {
    LaurentPoly p;
    p.add_term(0, c);
    return p;
  }
  static LaurentPoly monomial(int exp, long long c) {
    LaurentPoly p;
    p.add_term(exp, c);
    return p;
  }

  bool zero() const { return c_.empty(); }
  const std::map<int, long long>& coeffs() const { return c_; }

  void add_term(int exp, long long c) {
    if (c == 0) return;
    auto it = c_.find(exp);
    if (it == c_.end()) {
      c_[exp] = c;
    } else {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.c_) add_term(e, c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [ea, ca] : a.c_)
      for (auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  LaurentPoly shifted(int dexp, long long scale = 1) const {
    LaurentPoly r;
    for (auto& [e, c] : c_) r.add_term(e + dexp, c * scale);
    return r;
  }

  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

  // max and min exponents with nonzero coefficient
  std::pair<int, int> extreme_powers() const {
    if (c_.empty()) throw domain_error("extreme_powers: zero polynomial");
    return {c_.rbegin()->first, c_.begin()->first};
  }

  // text form: `c*A^e` terms joined by ` + `, exponents descending
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      if (!first) os << " + ";
      os << it->second << "*A^" << it->first;
      first = false;
    }
    return os.str();
  }

 private:
  std::map<int, long long> c_;
};

inline std::pair<int, int> extreme_powers(const LaurentPoly& p) { return p.extreme_powers(); }

}  // namespace tangletwist
