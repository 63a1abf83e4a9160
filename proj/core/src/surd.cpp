#include "srgkit/surd.hpp"

#include <numeric>

namespace srg {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v, const char* what) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) {
    throw SrgError(std::string("exact arithmetic overflow in ") + what);
  }
  return static_cast<std::int64_t>(v);
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make_rational(i128 num, i128 den, const char* what) {
  if (den == 0) throw SrgError("division by zero in exact arithmetic");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num = narrow(num, what);
  r.den = narrow(den, what);
  return r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  *this = make_rational(n, d, "rational construction");
}

Rational Rational::operator-() const {
  Rational r;
  r.num = -num;
  r.den = den;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return make_rational(i128(num) * o.den + i128(o.num) * den,
                       i128(den) * o.den, "addition");
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  return make_rational(i128(num) * o.num, i128(den) * o.den, "multiplication");
}

Rational Rational::operator/(const Rational& o) const {
  return make_rational(i128(num) * o.den, i128(den) * o.num, "division");
}

bool Rational::operator<(const Rational& o) const {
  return i128(num) * o.den < i128(o.num) * den;
}

std::int64_t Rational::as_integer() const {
  if (den != 1) throw SrgError("rational " + str() + " is not an integer");
  return num;
}

std::string Rational::str() const {
  std::string s = std::to_string(num);
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

Surd::Surd(Rational a_in, Rational b_in, std::int64_t d_in) : a(a_in) {
  if (d_in < 0) throw SrgError("negative radicand in surd");
  if (b_in.num == 0 || d_in == 0) return;  // pure rational
  if (is_perfect_square(d_in)) {
    a = a + b_in * Rational(isqrt(d_in));
    return;
  }
  b = b_in;
  d = d_in;
}

Surd Surd::operator-() const {
  Surd s;
  s.a = -a;
  s.b = -b;
  s.d = d;
  return s;
}

namespace {

// The shared radicand of two surds; requires compatibility.
std::int64_t joint_radicand(const Surd& x, const Surd& y) {
  if (x.d == 0) return y.d;
  if (y.d == 0 || x.d == y.d) return x.d;
  throw SrgError("mixing surds with radicands " + std::to_string(x.d) +
                 " and " + std::to_string(y.d));
}

}  // namespace

Surd Surd::operator+(const Surd& o) const {
  const std::int64_t rad = joint_radicand(*this, o);
  return Surd(a + o.a, b + o.b, rad);
}

Surd Surd::operator-(const Surd& o) const { return *this + (-o); }

Surd Surd::operator*(const Surd& o) const {
  const std::int64_t rad = joint_radicand(*this, o);
  // (a1 + b1*sqrt(d))(a2 + b2*sqrt(d)) = a1*a2 + b1*b2*d + (a1*b2 + b1*a2)*sqrt(d)
  return Surd(a * o.a + b * o.b * Rational(rad), a * o.b + b * o.a, rad);
}

Surd Surd::operator/(const Surd& o) const {
  if (o.sign() == 0) throw SrgError("division by zero in exact arithmetic");
  if (o.is_rational()) {
    return Surd(a / o.a, b / o.a, d);
  }
  // Rationalize: 1/(a2 + b2*sqrt(d)) = (a2 - b2*sqrt(d)) / (a2^2 - b2^2*d).
  Surd conj;
  conj.a = o.a;
  conj.b = -o.b;
  conj.d = o.d;
  const Rational norm = o.a * o.a - o.b * o.b * Rational(o.d);
  return (*this * conj) / Surd(norm);
}

int Surd::sign() const {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the value's sign matches whichever of a^2 and b^2*d is
  // larger (compared exactly via cross-multiplication in 128-bit).
  const i128 lhs = i128(a.num) * a.num * b.den * b.den;
  const i128 rhs = i128(b.num) * b.num * d * a.den * a.den;
  if (lhs == rhs) return 0;
  return (lhs > rhs) ? sa : sb;
}

std::int64_t Surd::as_integer() const {
  if (!is_integer()) throw SrgError("surd " + str() + " is not an integer");
  return a.num;
}

std::string Surd::str() const {
  if (is_rational()) return a.str();
  // Common denominator c: value = (p + q*sqrt(d)) / c.
  const std::int64_t c = std::lcm(a.den, b.den);
  const std::int64_t p = a.num * (c / a.den);
  const std::int64_t q = b.num * (c / b.den);
  std::string root = "sqrt(" + std::to_string(d) + ")";
  std::string body;
  if (p == 0) {
    body = (q == 1 ? "" : q == -1 ? "-" : std::to_string(q) + "*") + root;
    return c == 1 ? body : "(" + body + ")/" + std::to_string(c);
  }
  body = std::to_string(p);
  body += (q >= 0 ? "+" : "-");
  const std::int64_t qa = q >= 0 ? q : -q;
  if (qa != 1) body += std::to_string(qa) + "*";
  body += root;
  if (c == 1) return body;
  return "(" + body + ")/" + std::to_string(c);
}

std::int64_t isqrt(std::int64_t x) {
  if (x < 0) throw SrgError("isqrt of negative value");
  if (x < 2) return x;
  std::int64_t lo = 1, hi = 3037000499LL;  // floor(sqrt(2^63 - 1))
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (mid <= x / mid && i128(mid) * mid <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

bool is_perfect_square(std::int64_t x) {
  if (x < 0) return false;
  const std::int64_t r = isqrt(x);
  return r * r == x;
}

}  // namespace srg
