#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "webflat/errors.hpp"

namespace webflat {

using Rational = mpq_class; // always canonical: gcd(|num|,den)=1, den>0

Rational rational_from_string(const std::string& text);
std::string rational_to_string(const Rational& r);
// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& r);

// An element of Q(i, sqrt3) in coordinates over the basis {1, i, sqrt3, i*sqrt3}.
class FieldElem {
public:
  FieldElem() : c_{} {}
  FieldElem(int n) : c_{} { c_[0] = n; }                   // NOLINT(google-explicit-constructor)
  FieldElem(const Rational& r) : c_{} { c_[0] = r; }       // NOLINT(google-explicit-constructor)
  FieldElem(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static FieldElem i() { return FieldElem(0, 1, 0, 0); }
  static FieldElem sqrt3() { return FieldElem(0, 0, 1, 0); }
  static FieldElem i_sqrt3() { return FieldElem(0, 0, 0, 1); }

  const Rational& coord(int k) const { return c_[k]; }

  bool is_zero() const;
  bool is_one() const;
  // true when the element lies in Q (coordinates 1..3 vanish)
  bool is_rational() const;
  const Rational& rational_part() const { return c_[0]; }

  FieldElem operator-() const;
  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  bool operator==(const FieldElem& o) const { return c_ == o.c_; }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  FieldElem inverse() const; // throws DivisionByZero on 0
  FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }

  // Galois conjugations: i -> -i and sqrt3 -> -sqrt3.
  FieldElem conj_i() const { return FieldElem(c_[0], -c_[1], c_[2], -c_[3]); }
  FieldElem conj_sqrt3() const { return FieldElem(c_[0], c_[1], -c_[2], -c_[3]); }

  // Exact square root within the field, if one exists.
  std::optional<FieldElem> sqrt() const;

  // "a + b*i + c*sqrt3 + d*i*sqrt3" with reduced fractions, zero terms omitted.
  std::string str() const;
  // true when str() needs no parentheses inside a product (single basis term)
  bool is_single_term() const;

private:
  std::array<Rational, 4> c_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

inline FieldElem operator*(const Rational& r, const FieldElem& x) { return FieldElem(r) * x; }

} // namespace webflat
