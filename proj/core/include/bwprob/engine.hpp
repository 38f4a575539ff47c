#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bwprob/prob.hpp"
#include "bwprob/qrank.hpp"
#include "bwprob/structure.hpp"

namespace bwprob {

// Probability that a uniformly random b-block projection of a matrix with
// the given eigenstructure preserves the r largest invariant factors.
// Distinct irreducibles multiply independently; within one irreducible the
// partition is consumed greedily from the top exponent down, and only the
// partition shape matters (lower-order blocks never influence higher ones).
// Requires 1 <= r <= b.
Prob prob_structure(const EigStructure& es, int b, int r, Backend backend);

// The minimizing eigenstructure over all n x n matrices for given (q, r):
// r copies of every irreducible, smallest degrees first, until the
// dimension budget runs out; the final irreducible gets floor(s/m) copies
// and any remaining dimension is absorbed as exponent padding (recorded as
// metadata, probability unchanged).  Materializes one component per
// irreducible used, so desk-scale n only.
EigStructure worst_structure(const BigInt& q, std::int64_t n, int r);

// min over all n x n matrices of prob_structure: the closed-form product
// over degrees d of Q_{q^d,b,r}(r)^{count(d)} times the trailing partial
// batch Q_{q^m,b,t}(t).  Handles n up to 1e9+ in the logfloat backend; the
// exact backend refuses exponents above 10^4 (rationals explode).
Prob prob_worst(const BigInt& q, std::int64_t n, int b, int r,
                Backend backend);

// Closed-form lower bounds on prob_worst, independent of n.
// bound_simple: 1 - 2r/(q^{b-r} - 1), clamped to [0,1].  Requires b > r > 0.
Prob bound_simple(const BigInt& q, int b, int r,
                  Backend backend = Backend::exact);
// bound_brent: 1/64 for q=2,b=r+1; (1-3/2^{b-r})^2 for q=2,b>=r+2;
// (1-2/q^{b-r})^2 for q>2.
Prob bound_brent(const BigInt& q, int b, int r,
                 Backend backend = Backend::exact);

enum class BlocksizeMethod { simple, brent, exact };

// Smallest block size b for which the chosen criterion guarantees worst-case
// success probability >= p (> p for `simple`).  The closed-form methods
// evaluate their defining inequality in exact rational arithmetic; `exact`
// searches prob_worst upward from r+1 and requires n.
int blocksize_for(const BigInt& q, int r, double p, BlocksizeMethod method,
                  std::optional<std::int64_t> n = std::nullopt);

struct CurvePoint {
  int b;
  Prob success;  // failure is success.complement()
};

// Worst-case failure curve 1 - P_{q,b,r}(n) for b in [b_min, b_max]
// (logfloat backend).  Requires b_min > r.
std::vector<CurvePoint> failure_curve(const BigInt& q, std::int64_t n, int r,
                                      int b_min, int b_max);

}  // namespace bwprob
