#pragma once

#include <string>

#include "bwprob/bigint.hpp"

namespace bwprob {

enum class Backend { exact, logfloat };

// A probability in [0,1] carried in one of two backends.
//
// exact:    a big rational, all arithmetic exact.
// logfloat: natural-log space.  Both log(p) and log(1-p) are maintained
//           through every operation with exact algebraic identities
//           (log1p/expm1/log-sum-exp), so values near 0 and near 1 keep full
//           relative precision; failure probabilities around 1e-6 retain
//           well over 6 significant digits.
//
// Conversion goes exact -> logfloat only, never the reverse.
class Prob {
 public:
  Prob() : Prob(zero(Backend::exact)) {}

  static Prob exact(BigRat v);
  static Prob exact(const BigInt& num, const BigInt& den);
  static Prob logfloat(double log_p, double log_1mp);
  static Prob from_double(double p);  // logfloat backend
  static Prob one(Backend b);
  static Prob zero(Backend b);

  Backend backend() const { return backend_; }
  bool is_exact() const { return backend_ == Backend::exact; }

  const BigRat& rational() const;  // exact backend only
  double log() const;              // log(p), -inf for p = 0
  double log1m() const;            // log(1-p), -inf for p = 1
  double to_double() const;

  Prob to_logfloat() const;

  Prob operator*(const Prob& o) const;
  // Sum of disjoint-event masses; requires p + o <= 1.
  Prob operator+(const Prob& o) const;
  // Difference; requires o <= p.
  Prob operator-(const Prob& o) const;
  Prob complement() const;  // 1 - p
  Prob pow(const BigInt& e) const;

  bool operator<(const Prob& o) const;
  bool operator==(const Prob& o) const;
  bool is_zero() const;
  bool is_one() const;

  // 6 significant digits (or the full rational with digits = 0 on the exact
  // backend).
  std::string str(int digits = 6) const;

 private:
  Prob(Backend b) : backend_(b) {}

  Backend backend_ = Backend::exact;
  BigRat exact_;
  double logp_ = 0, log1m_ = 0;
};

}  // namespace bwprob
