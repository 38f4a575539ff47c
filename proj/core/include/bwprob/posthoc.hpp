#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bwprob/poly.hpp"
#include "bwprob/prob.hpp"

namespace bwprob {

// Certification input: the invariant factors of a computed generator G,
// reduced to per-irreducible exponent columns.  Only degrees and exponent
// patterns enter the bounds, so irreducibles are identified by (degree,
// label) and never need to exist as polynomials (labels must be distinct).
struct PosthocComponent {
  int degree = 1;
  std::string label;
  // exponents[i] = exponent of this irreducible in the (i+1)-st largest
  // invariant of G; length b, nonincreasing, zeros allowed.
  std::vector<int> exponents;
};

struct PosthocInput {
  BigInt q;
  int b = 0;
  int r = 0;
  std::int64_t n = 0;
  std::int64_t deg_det = 0;  // sum of invariant degrees of G
  std::vector<PosthocComponent> components;
};

// Builds the input from explicit invariant factors (factored internally).
PosthocInput make_posthoc_input(const Field& f, int b, int r, std::int64_t n,
                                const std::vector<Poly>& invariants);

// Upper bound on the probability that the first error in G sits at the
// (i+1)-st largest invariant, for one primary component with exponent
// column `exps` (degree d).  Index i runs over [0, r); i = 0 means "the
// leading invariant may already be wrong", with e_0 treated as +inf so the
// equal-exponents short-circuit never fires there.  The candidate error
// budget allows t = 1..m missing blocks, m = floor((n - deg_det)/d); the
// scan over t runs in full on the exact backend and, on logfloat, stops
// early once the rank walk is numerically stationary (all later terms equal
// the limit to double precision).
Prob component_error_bound(const std::vector<int>& exps, int d,
                           const BigInt& q, int b, std::int64_t n,
                           std::int64_t deg_det, int i, Backend backend);

struct PosthocTerm {
  std::string label;
  int degree = 1;
  int index = 0;  // the i above
  Prob value;
};

struct PosthocReport {
  bool certain = false;  // deg det G = n: invariants known exactly
  Prob overall;          // 1 - max over terms, clamped to [0,1]
  std::vector<PosthocTerm> terms;
  int argmax = -1;  // index into terms, -1 when certain or empty
};

// Lower bound on the probability that G is r-faithful to the (unknown)
// input: components separate, so the most likely single first error
// dominates.  Requires the exponent columns to form a divisibility chain.
PosthocReport posthoc_bound(const PosthocInput& input, Backend backend);

// The post hoc bound next to the a priori worst-case bound for the same
// parameters, for reporting.
struct PosthocVsApriori {
  PosthocReport report;
  Prob apriori;
};
PosthocVsApriori posthoc_vs_apriori(const PosthocInput& input,
                                    Backend backend);

}  // namespace bwprob
