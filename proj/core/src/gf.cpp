#include "srgkit/gf.hpp"

#include <algorithm>
#include <set>

namespace srg {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int f = 2; f * f <= p; ++f) {
    if (p % f == 0) return false;
  }
  return true;
}

// Dense little-endian polynomials over GF(p) with trailing zeros allowed.

int poly_degree(const std::vector<int>& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] != 0) return i;
  }
  return -1;  // zero polynomial
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b,
                          int p) {
  std::vector<int> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  return out;
}

// Remainder of a modulo the monic polynomial m.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m,
                          int p) {
  const int dm = poly_degree(m);
  for (int i = poly_degree(a); i >= dm; --i) {
    const int c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p) % p;
    }
  }
  a.resize(dm);
  return a;
}

bool poly_is_zero(const std::vector<int>& a) { return poly_degree(a) < 0; }

// Irreducibility by trial division: a monic polynomial of degree d is
// reducible iff some monic factor of degree 1..d/2 divides it.
bool poly_irreducible(const std::vector<int>& cand, int p) {
  const int d = poly_degree(cand);
  for (int e = 1; 2 * e <= d; ++e) {
    // All monic divisor candidates of degree e, lower coefficients counted
    // in base p.
    int count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    std::vector<int> div(e + 1, 0);
    div[e] = 1;
    for (int v = 0; v < count; ++v) {
      int rest = v;
      for (int i = 0; i < e; ++i) {
        div[i] = rest % p;
        rest /= p;
      }
      if (poly_is_zero(poly_mod(cand, div, p))) return false;
    }
  }
  return true;
}

}  // namespace

std::string FieldElem::str() const {
  std::string out;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const int c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

GaloisField::GaloisField(int p, int d) : p_(p), d_(d) {
  if (!is_prime(p)) {
    throw SrgError("field characteristic " + std::to_string(p) +
                   " is not prime");
  }
  if (d < 1) throw SrgError("field extension degree must be >= 1");
  std::int64_t q = 1;
  for (int i = 0; i < d; ++i) {
    q *= p;
    if (q > (1 << 20)) {
      throw SrgError("field order exceeds the 2^20 cap");
    }
  }
  q_ = static_cast<int>(q);

  if (d == 1) {
    modulus_ = {0, 1};  // x
    return;
  }
  // Smallest monic irreducible of degree d in base-p value order.
  std::vector<int> cand(d + 1, 0);
  cand[d] = 1;
  for (int v = 0;; ++v) {
    if (v >= q_) {
      throw SrgError("no irreducible modulus found (internal error)");
    }
    int rest = v;
    for (int i = 0; i < d; ++i) {
      cand[i] = rest % p;
      rest /= p;
    }
    if (poly_irreducible(cand, p)) {
      modulus_ = cand;
      return;
    }
  }
}

void GaloisField::check(const FieldElem& a) const {
  if (static_cast<int>(a.coeffs.size()) != d_) {
    throw SrgError("field element has wrong coefficient count");
  }
  for (int c : a.coeffs) {
    if (c < 0 || c >= p_) {
      throw SrgError("field element coefficient out of range");
    }
  }
}

FieldElem GaloisField::zero() const {
  return FieldElem{std::vector<int>(d_, 0)};
}

FieldElem GaloisField::one() const {
  FieldElem e = zero();
  e.coeffs[0] = 1;
  return e;
}

FieldElem GaloisField::from_index(int index) const {
  if (index < 0 || index >= q_) {
    throw SrgError("field element index out of range");
  }
  FieldElem e = zero();
  for (int i = 0; i < d_; ++i) {
    e.coeffs[i] = index % p_;
    index /= p_;
  }
  return e;
}

int GaloisField::index(const FieldElem& a) const {
  check(a);
  int idx = 0;
  for (int i = d_ - 1; i >= 0; --i) idx = idx * p_ + a.coeffs[i];
  return idx;
}

std::vector<FieldElem> GaloisField::elements() const {
  std::vector<FieldElem> out;
  out.reserve(q_);
  for (int i = 0; i < q_; ++i) out.push_back(from_index(i));
  return out;
}

FieldElem GaloisField::add(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  FieldElem out = zero();
  for (int i = 0; i < d_; ++i) out.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
  return out;
}

FieldElem GaloisField::neg(const FieldElem& a) const {
  check(a);
  FieldElem out = zero();
  for (int i = 0; i < d_; ++i) out.coeffs[i] = (p_ - a.coeffs[i]) % p_;
  return out;
}

FieldElem GaloisField::sub(const FieldElem& a, const FieldElem& b) const {
  return add(a, neg(b));
}

FieldElem GaloisField::mul(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  std::vector<int> prod = poly_mod(poly_mul(a.coeffs, b.coeffs, p_),
                                   modulus_, p_);
  prod.resize(d_, 0);
  return FieldElem{std::move(prod)};
}

FieldElem GaloisField::pow(const FieldElem& a, std::int64_t e) const {
  if (e < 0) throw SrgError("negative exponent; use inv");
  FieldElem base = a;
  FieldElem acc = one();
  check(base);
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

FieldElem GaloisField::inv(const FieldElem& a) const {
  if (a == zero()) throw SrgError("zero has no multiplicative inverse");
  return pow(a, q_ - 2);
}

GaloisField gf_make(int p, int d) { return GaloisField(p, d); }

std::vector<FieldElem> quadratic_residues(const GaloisField& f) {
  if (f.q() % 2 == 0) {
    throw SrgError("quadratic residues need odd field order");
  }
  std::set<int> indices;
  for (int i = 1; i < f.q(); ++i) {
    const FieldElem b = f.from_index(i);
    indices.insert(f.index(f.mul(b, b)));
  }
  std::vector<FieldElem> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(f.from_index(i));
  return out;
}

}  // namespace srg
