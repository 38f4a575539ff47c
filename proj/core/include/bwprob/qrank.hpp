#pragma once

#include <vector>

#include "bwprob/prob.hpp"

namespace bwprob {

// Rank-walk transition coefficients for sums of outer products in F^{b x b},
// |F| = q: from rank r one more product u v^T raises the rank with
// probability up[r] = (1 - 1/q^{b-r})^2, lowers it with probability
// down[r] = q^{r-1}(q^r - 1)/q^{2b}, and leaves it with stay[r].  The
// cardinality enters only through these values, so q may be any integer
// >= 2 (e.g. q^d for an extension of degree d), never materialized as a
// field.
struct RankWalkCoeffs {
  BigInt q;
  int b = 0;
  Backend backend = Backend::exact;
  std::vector<Prob> up, down, stay;  // indexed by rank 0..b

  RankWalkCoeffs(BigInt q, int b, Backend backend);
};

// Q_{q,b,r}(t): probability that a sum of t outer products of uniformly
// random vectors has rank exactly r.  Rows (fixed t) are memoized up to the
// largest t requested; the table is not thread-safe, use one per thread.
class QTable {
 public:
  QTable(BigInt q, int b, Backend backend);

  const BigInt& q() const { return co_.q; }
  int b() const { return co_.b; }
  Backend backend() const { return co_.backend; }

  // Q_{q,b,r}(t); 0 outside 0 <= r <= min(t,b).
  const Prob& at(int r, int t);

  // The full rank distribution after t products (size b+1; sums to 1).
  const std::vector<Prob>& row(int t);

 private:
  RankWalkCoeffs co_;
  std::vector<std::vector<Prob>> rows_;
  Prob zero_;
};

// Steps the rank distribution one product at a time without storing past
// rows; used for long scans where t can be huge.
class QWalk {
 public:
  QWalk(BigInt q, int b, Backend backend);

  int t() const { return t_; }
  int b() const { return co_.b; }
  const Prob& at(int r) const;
  void step();
  // Max relative change of log-values in the last step (logfloat backend
  // only); detects numerical stationarity of the walk.
  double last_delta() const { return last_delta_; }

 private:
  RankWalkCoeffs co_;
  std::vector<Prob> cur_, next_;
  int t_ = 0;
  double last_delta_ = 1;
  Prob zero_;
};

// One-off evaluation of Q_{q,b,r}(t).
Prob q_rank(const BigInt& q, int b, int r, int t, Backend backend);

}  // namespace bwprob
