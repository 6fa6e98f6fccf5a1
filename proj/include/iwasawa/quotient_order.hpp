#pragma once

#include <string>

#include "iwasawa/padic.hpp"

namespace iwasawa {

/// Order of a finite O-module, stored as its exponent in base q, or infinite.
struct QuotientOrder {
  bool infinite = false;
  long q_exponent = 0;

  static QuotientOrder finite(long exponent) { return {false, exponent}; }
  static QuotientOrder infinity() { return {true, 0}; }

  Integer value(const Integer& q) const {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(q_exponent));
    return r;
  }

  std::string to_string(const Integer& q) const {
    return infinite ? std::string("INFINITE") : value(q).get_str();
  }

  friend QuotientOrder operator*(QuotientOrder a, QuotientOrder b) {
    if (a.infinite || b.infinite) return infinity();
    return finite(a.q_exponent + b.q_exponent);
  }
  bool operator==(const QuotientOrder&) const = default;
};

}  // namespace iwasawa
