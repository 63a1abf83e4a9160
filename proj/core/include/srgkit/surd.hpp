#ifndef SRGKIT_SURD_HPP
#define SRGKIT_SURD_HPP

#include <cstdint>
#include <string>

#include "srgkit/error.hpp"

namespace srg {

// Exact rational with int64 numerator/denominator, always reduced, den > 0.
// Intermediates go through 128-bit arithmetic; results that do not fit back
// into int64 raise SrgError instead of silently wrapping.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t value) : num(value) {}
  Rational(std::int64_t n, std::int64_t d);

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  bool operator==(const Rational& o) const {
    return num == o.num && den == o.den;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
  bool is_integer() const { return den == 1; }
  std::int64_t as_integer() const;

  std::string str() const;
};

// Exact value a + b*sqrt(d) with rational a, b and a nonnegative integer
// radicand d. Construction normalizes: a perfect-square radicand is folded
// into the rational part, and b = 0 forces d = 0, so is_rational() is a
// representation-independent test. Mixing two genuinely irrational values
// with different radicands is rejected (never needed here: all quantities
// derived from one parameter set live in the same quadratic field).
struct Surd {
  Rational a;
  Rational b;
  std::int64_t d = 0;

  Surd() = default;
  Surd(Rational rational) : a(rational) {}
  Surd(std::int64_t value) : a(value) {}
  Surd(Rational a_in, Rational b_in, std::int64_t d_in);

  Surd operator-() const;
  Surd operator+(const Surd& o) const;
  Surd operator-(const Surd& o) const;
  Surd operator*(const Surd& o) const;
  Surd operator/(const Surd& o) const;

  bool operator==(const Surd& o) const {
    return a == o.a && b == o.b && d == o.d;
  }
  bool operator!=(const Surd& o) const { return !(*this == o); }
  bool operator<(const Surd& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const Surd& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const Surd& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const Surd& o) const { return (*this - o).sign() >= 0; }

  // Sign of the exact value (squares both parts to avoid any rounding).
  int sign() const;

  bool is_rational() const { return b.num == 0; }
  bool is_integer() const { return is_rational() && a.is_integer(); }
  std::int64_t as_integer() const;

  // "1", "-1/2", "(-1+sqrt(13))/2", "2*sqrt(5)", ...
  std::string str() const;
};

// Largest t with t*t <= x (exact integer Newton/bisection, no floating
// point), plus the derived perfect-square test.
std::int64_t isqrt(std::int64_t x);
bool is_perfect_square(std::int64_t x);

}  // namespace srg

#endif  // SRGKIT_SURD_HPP
