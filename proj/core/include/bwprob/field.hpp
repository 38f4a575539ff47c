#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bwprob/bigint.hpp"
#include "bwprob/rng.hpp"

namespace bwprob {

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

// A finite field GF(p^k) with exact arithmetic on packed element words.
//
// Elements are stored as a single word holding the base-p digits of the
// coefficient vector (c_0 + c_1*p + ... + c_{k-1}*p^{k-1}), so every element
// of a supported field (q <= 2^31) fits in a uint64_t and matrices can store
// raw words.  For k = 1 the word is just the residue.  FieldSpec is immutable
// after construction and safe to share across threads.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
 public:
  // Prime field GF(p), or extension GF(p^k) with the default modulus: the
  // lexicographically first monic irreducible of degree k over GF(p),
  // coefficient tuples compared low-degree-first.
  static Field create(std::int64_t p, int k = 1);
  // Extension field with an explicit monic irreducible modulus, given as
  // ascending coefficients of length k+1 (values reduced mod p).
  static Field create(std::int64_t p, int k,
                      const std::vector<std::int64_t>& modulus);

  std::int64_t p() const { return p_; }
  int k() const { return k_; }
  const BigInt& q() const { return q_; }
  // Ascending modulus coefficients (length k+1); empty for prime fields.
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  // --- packed-word arithmetic ---
  std::uint64_t zero() const { return 0; }
  std::uint64_t one() const { return 1; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (k_ == 1) {
      std::uint64_t s = a + b;
      return s >= up_ ? s - up_ : s;
    }
    return add_ext(a, b);
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    if (k_ == 1) return a >= b ? a - b : a + up_ - b;
    return sub_ext(a, b);
  }
  std::uint64_t neg(std::uint64_t a) const {
    if (k_ == 1) return a == 0 ? 0 : up_ - a;
    return neg_ext(a);
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (k_ == 1) return (a * b) % up_;
    return mul_ext(a, b);
  }
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, const BigInt& e) const;

  // Reduces an arbitrary signed integer into the prime subfield.
  std::uint64_t from_int(std::int64_t v) const;
  // Packs/unpacks the coefficient vector (length k, entries in [0,p)).
  std::uint64_t pack(const std::vector<std::int64_t>& coeffs) const;
  std::vector<std::int64_t> unpack(std::uint64_t a) const;

  // Uniform draw over all q elements; deterministic given the stream state.
  std::uint64_t sample(RandomStream& rng) const;

  std::string to_string(std::uint64_t a) const;
  bool same(const FieldSpec& other) const;

 private:
  FieldSpec() = default;

  std::uint64_t add_ext(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub_ext(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg_ext(std::uint64_t a) const;
  std::uint64_t mul_ext(std::uint64_t a, std::uint64_t b) const;

  std::int64_t p_ = 0;
  int k_ = 1;
  std::uint64_t up_ = 0;  // p as unsigned, for the hot k==1 paths
  BigInt q_;
  std::vector<std::int64_t> modulus_;
};

// Value type pairing an element word with its owning field; convenient for
// call sites that want operator syntax rather than raw words.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(Field f, std::uint64_t v) : f_(std::move(f)), v_(v) {}

  const Field& field() const { return f_; }
  std::uint64_t value() const { return v_; }
  std::vector<std::int64_t> coeffs() const { return f_->unpack(v_); }
  bool is_zero() const { return v_ == 0; }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  FieldElem operator-() const { return {f_, f_->neg(v_)}; }
  FieldElem inverse() const { return {f_, f_->inv(v_)}; }
  FieldElem pow(const BigInt& e) const { return {f_, f_->pow(v_, e)}; }
  bool operator==(const FieldElem& o) const;

 private:
  Field f_;
  std::uint64_t v_ = 0;
};

FieldElem sample_uniform(const Field& f, RandomStream& rng);

bool is_prime(std::int64_t n);

// Throws std::invalid_argument unless both elements belong to `f`.
void require_same_field(const Field& f, const FieldElem& a,
                        const FieldElem& b);

}  // namespace bwprob
