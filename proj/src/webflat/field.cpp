#include "webflat/field.hpp"

#include <ostream>
#include <sstream>

namespace webflat {

Rational rational_from_string(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) fail(ErrorCode::SyntaxError, "bad rational literal: " + text);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  if (sgn(r) == 0) return Rational(0);
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Rational(sn, sd);
}

bool FieldElem::is_zero() const {
  return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool FieldElem::is_one() const { return is_rational() && c_[0] == 1; }

bool FieldElem::is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }

FieldElem FieldElem::operator-() const { return FieldElem(-c_[0], -c_[1], -c_[2], -c_[3]); }

FieldElem FieldElem::operator+(const FieldElem& o) const {
  return FieldElem(c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  return FieldElem(c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  // basis {1, i, s, is} with i^2 = -1, s^2 = 3
  const Rational &a0 = c_[0], &a1 = c_[1], &a2 = c_[2], &a3 = c_[3];
  const Rational &b0 = o.c_[0], &b1 = o.c_[1], &b2 = o.c_[2], &b3 = o.c_[3];
  return FieldElem(a0 * b0 - a1 * b1 + 3 * (a2 * b2 - a3 * b3),
                   a0 * b1 + a1 * b0 + 3 * (a2 * b3 + a3 * b2),
                   a0 * b2 + a2 * b0 - a1 * b3 - a3 * b1,
                   a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1);
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero field element");
  // multiply by the three nontrivial Galois conjugates; the product with *this is the
  // rational norm, so the inverse needs only one rational division
  FieldElem cofactor = conj_i() * conj_sqrt3() * conj_i().conj_sqrt3();
  FieldElem norm = *this * cofactor;
  // norm is rational by Galois invariance
  const Rational& n = norm.c_[0];
  return FieldElem(cofactor.c_[0] / n, cofactor.c_[1] / n, cofactor.c_[2] / n, cofactor.c_[3] / n);
}

namespace {

// sqrt inside the real subfield Q(sqrt3), returned as (r, s) meaning r + s*sqrt3
std::optional<std::pair<Rational, Rational>> sqrt_in_q_sqrt3(const Rational& p, const Rational& q) {
  if (sgn(q) == 0) {
    if (auto r = rational_sqrt(p)) return std::make_pair(*r, Rational(0));
    if (auto s = rational_sqrt(p / 3)) return std::make_pair(Rational(0), *s);
    return std::nullopt;
  }
  // (r + s*sqrt3)^2 = p + q*sqrt3  =>  r^2 + 3 s^2 = p, 2 r s = q
  auto t = rational_sqrt(p * p - 3 * q * q);
  if (!t) return std::nullopt;
  for (int sign : {1, -1}) {
    Rational r2 = (p + sign * *t) / 2;
    auto r = rational_sqrt(r2);
    if (!r || sgn(*r) == 0) continue;
    Rational s = q / (2 * *r);
    if (*r * *r + 3 * s * s == p) return std::make_pair(*r, s);
  }
  return std::nullopt;
}

} // namespace

std::optional<FieldElem> FieldElem::sqrt() const {
  if (is_zero()) return FieldElem(0);
  // write *this = A + B*i with A, B in Q(sqrt3)
  const Rational &a0 = c_[0], &a2 = c_[2]; // A = a0 + a2*sqrt3
  const Rational &b0 = c_[1], &b2 = c_[3]; // B = b0 + b2*sqrt3
  if (sgn(b0) == 0 && sgn(b2) == 0) {
    if (auto v = sqrt_in_q_sqrt3(a0, a2)) return FieldElem(v->first, 0, v->second, 0);
    if (auto w = sqrt_in_q_sqrt3(-a0, -a2)) return FieldElem(0, w->first, 0, w->second);
    return std::nullopt;
  }
  // v = C + D*i needs C^2 - D^2 = A and 2CD = B; then (C^2 + D^2)^2 = A^2 + B^2
  Rational n0 = a0 * a0 + 3 * a2 * a2 + b0 * b0 + 3 * b2 * b2;  // rational part of A^2+B^2
  Rational n2 = 2 * a0 * a2 + 2 * b0 * b2;                      // sqrt3 part
  auto n = sqrt_in_q_sqrt3(n0, n2);
  if (!n) return std::nullopt;
  for (int sign : {1, -1}) {
    Rational e0 = sign * n->first, e2 = sign * n->second;
    auto csq = std::make_pair((a0 + e0) / 2, (a2 + e2) / 2);
    auto cc = sqrt_in_q_sqrt3(csq.first, csq.second);
    if (!cc) continue;
    FieldElem C(cc->first, 0, cc->second, 0);
    if (C.is_zero()) continue;
    FieldElem B(b0, 0, b2, 0);
    FieldElem D = B * (C + C).inverse();
    FieldElem v = C + D * FieldElem::i();
    if (v * v == *this) return v;
  }
  return std::nullopt;
}

bool FieldElem::is_single_term() const {
  int nonzero = 0;
  for (const auto& c : c_) nonzero += sgn(c) != 0;
  return nonzero <= 1;
}

std::string FieldElem::str() const {
  if (is_zero()) return "0";
  static const char* basis[4] = {"", "i", "sqrt3", "i*sqrt3"};
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    if (sgn(c_[k]) == 0) continue;
    Rational a = c_[k];
    if (first) {
      if (sgn(a) < 0) { os << "-"; a = -a; }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      a = abs(a);
    }
    if (k == 0) {
      os << rational_to_string(a);
    } else if (a == 1) {
      os << basis[k];
    } else {
      os << rational_to_string(a) << "*" << basis[k];
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.str(); }

} // namespace webflat
