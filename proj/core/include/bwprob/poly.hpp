#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bwprob/field.hpp"

namespace bwprob {

// Dense univariate polynomial over a finite field, always kept canonical:
// ascending coefficient words with no trailing zero; the zero polynomial has
// an empty vector and degree -1.  Immutable in practice (all operations
// return new values), so safe to share.
class Poly {
 public:
  Poly() = default;
  Poly(Field f, std::vector<std::uint64_t> coeffs);

  static Poly zero(Field f) { return Poly(std::move(f), {}); }
  static Poly one(Field f);
  static Poly x(Field f);
  static Poly constant(Field f, std::uint64_t c);
  // Coefficients as (signed) integers, reduced into the field.
  static Poly from_ints(Field f, const std::vector<std::int64_t>& coeffs);

  const Field& field() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_monic() const;
  std::uint64_t coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
  }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }

  Poly monic() const;
  Poly shift(int k) const;  // multiply by x^k
  // Coefficient reversal at degree d (requires d >= degree): x^d * f(1/x).
  Poly reversed(int d) const;
  Poly derivative() const;
  std::uint64_t eval(std::uint64_t a) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly scaled(std::uint64_t c) const;
  bool operator==(const Poly& o) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  Field f_;
  std::vector<std::uint64_t> c_;
};

// Quotient and remainder; throws on division by the zero polynomial.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

// Monic gcd (gcd(0,0) = 0).
Poly poly_gcd(const Poly& a, const Poly& b);

Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& base, const BigInt& e, const Poly& m);

// Total order used for canonical factor ordering and enumeration: first by
// degree, then by coefficient tuples compared low-degree-first.
bool poly_lex_less(const Poly& a, const Poly& b);

// Deterministic irreducibility test (Rabin): degree >= 1 required.
bool is_irreducible(const Poly& f);

struct Factorization {
  FieldElem unit;
  // (monic irreducible, exponent >= 1), sorted by (degree, lex coeffs).
  std::vector<std::pair<Poly, int>> factors;

  Poly product() const;
};

// Complete factorization into monic irreducibles.  Equal-degree splitting
// draws randomness from an internal stream seeded by `seed`, so the output
// is deterministic per seed; the canonical sort makes the factor multiset
// independent of it.
Factorization factor(const Poly& f, std::uint64_t seed = 0x5EEDF00DULL);

// Number of monic irreducibles of degree m over a field of cardinality q
// (Mobius necklace count).  q is a plain cardinality parameter, not checked
// for prime-power-ness.
BigInt count_irreducibles(const BigInt& q, int m);

// First `limit` monic irreducibles of degree m in lex order (see
// poly_lex_less); returns fewer when the field has fewer of them.
std::vector<Poly> enumerate_irreducibles(const Field& f, int m, long limit);

}  // namespace bwprob
