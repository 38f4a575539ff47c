#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bwprob/matpoly.hpp"
#include "bwprob/matrix.hpp"

namespace bwprob {

// Raised when a mathematically guaranteed property fails at runtime (e.g.
// the computed invariants not dividing the true ones); always a bug, never
// bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The b x b projected sequence terms[i] = U^T A^i V.
struct ProjectionSequence {
  Field field;
  int b = 0;
  std::int64_t n = 0;  // dimension of A
  std::vector<MatrixFF> terms;
};

// Number of terms the generator computation wants for an n x n matrix at
// block size b.  2*ceil(n/b) suffices in theory; +2 guards off-by-one
// conventions.  Frozen constant.
std::int64_t required_terms(std::int64_t n, int b);

// terms[i] = U^T A^i V for i = 0..count-1, computed by repeated block
// products W <- A*W (never by matrix powers).
ProjectionSequence project(const MatrixFF& a, const MatrixFF& u,
                           const MatrixFF& v, std::int64_t count);

// Minimal right matrix generator G of the sequence: det(G) != 0,
// (S*G)_k = sum_i S_{k+i} G_i = 0 for all verifiable k, and deg(det G)
// minimal.  Any unimodular representative may be returned; consumers use
// only smith_form(G).  Requires len(terms) >= required_terms(n, b).
MatPoly min_generator(const ProjectionSequence& s);

// Checks (S*G)_k = 0 for k = 0..len-deg-1 directly from the terms.
bool annihilates(const ProjectionSequence& s, const MatPoly& g);

struct GeneratorResult {
  MatPoly g;
  InvariantList invariants;  // smith_form(g), largest first, length b
  std::uint64_t seed = 0;
  int b = 0;
  std::int64_t n = 0;
  BigInt q;
};

// Samples U, V from the seed (U row-major first, then V), projects
// required_terms(n, b) terms (or `terms` when positive), computes the
// minimal generator and its invariants.  Pure in (a, b, seed, terms).
GeneratorResult run_pipeline(const MatrixFF& a, int b, std::uint64_t seed,
                             std::int64_t terms = 0);

// Largest r with computed[i] == truth[i] for all i < r, trailing trivial
// truth entries matching 1s.  Also asserts computed[i] | truth[i] for all i
// (a theorem for minimal generators); violation throws internal_error.
int faithful_count(const InvariantList& computed, const InvariantList& truth);

}  // namespace bwprob
