#ifndef SRGKIT_GF_HPP
#define SRGKIT_GF_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "srgkit/error.hpp"

namespace srg {

// Element of GF(p^d) as a residue polynomial: d coefficients in [0, p),
// little-endian (coeffs[i] multiplies x^i). The enclosing GaloisField gives
// meaning to the representation; elements of different fields never mix.
struct FieldElem {
  std::vector<int> coeffs;

  bool operator==(const FieldElem&) const = default;

  // "0", "2", "x", "2x+1", "x^2+2x", ... (highest power first).
  std::string str() const;
};

// GF(p^d) with arithmetic modulo a monic irreducible polynomial. The
// modulus is the lexicographically smallest one in base-p value order, so a
// given (p, d) always denotes the same concrete field: GF(9) uses x^2 + 1,
// GF(25) uses x^2 + 2, prime fields use x.
class GaloisField {
 public:
  // Builds the field; p must be prime, d >= 1, p^d <= 2^20.
  GaloisField(int p, int d);

  int p() const { return p_; }
  int d() const { return d_; }
  int q() const { return q_; }  // p^d

  // d+1 little-endian coefficients, monic (last entry 1).
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElem zero() const;
  FieldElem one() const;

  // The index of an element is the base-p value of its coefficient vector,
  // sum coeffs[i] * p^i; elements() lists all q of them in index order.
  FieldElem from_index(int index) const;
  int index(const FieldElem& a) const;
  std::vector<FieldElem> elements() const;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem pow(const FieldElem& a, std::int64_t e) const;
  FieldElem inv(const FieldElem& a) const;  // a != 0

 private:
  void check(const FieldElem& a) const;

  int p_ = 0, d_ = 0, q_ = 0;
  std::vector<int> modulus_;
};

// Convenience spelling of the constructor.
GaloisField gf_make(int p, int d);

// {b*b : b != 0}, sorted by element index; has (q-1)/2 members. Requires
// odd q (in characteristic 2 every element is a square and the notion
// degenerates).
std::vector<FieldElem> quadratic_residues(const GaloisField& f);

}  // namespace srg

#endif  // SRGKIT_GF_HPP
