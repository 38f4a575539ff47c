#pragma once

#include <cstdint>
#include <vector>

#include "bwprob/poly.hpp"

namespace bwprob {

// Dense matrix over a finite field, row-major packed words.  Immutable by
// convention after construction; all operations are pure.
class MatrixFF {
 public:
  MatrixFF(Field f, int rows, int cols);

  static MatrixFF identity(Field f, int n);
  static MatrixFF random(Field f, int rows, int cols, RandomStream& rng);

  const Field& field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint64_t at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }
  void set(int i, int j, std::uint64_t v) { a_[std::size_t(i) * cols_ + j] = v; }

  MatrixFF transpose() const;
  bool is_zero() const;
  bool operator==(const MatrixFF& o) const;

 private:
  Field f_;
  int rows_, cols_;
  std::vector<std::uint64_t> a_;
};

MatrixFF m_mul(const MatrixFF& a, const MatrixFF& b);
MatrixFF m_add(const MatrixFF& a, const MatrixFF& b);
MatrixFF m_sub(const MatrixFF& a, const MatrixFF& b);
int m_rank(const MatrixFF& a);
// Gaussian-elimination inverse; throws std::invalid_argument when singular.
MatrixFF m_inverse(const MatrixFF& a);

// Divisibility chain of monic invariant factors, largest first (entry i+1
// divides entry i); trailing trivial factors may be included or omitted.
struct InvariantList {
  Field field;
  std::vector<Poly> inv;

  // Entries beyond the stored list read as 1.
  Poly at_or_one(int i) const;
  int nontrivial_count() const;
  std::int64_t degree_sum() const;
  bool operator==(const InvariantList& o) const;
};

// Throws std::invalid_argument unless all entries are monic (or 1) and each
// divides its predecessor.
void validate_chain(const InvariantList& inv);

// Companion matrix of a monic polynomial of degree >= 1: subdiagonal ones,
// last column -f_0..-f_{d-1}.
MatrixFF companion(const Poly& f);

// Generalized Jordan block for f^e (f monic irreducible): companion blocks
// on the diagonal, identity blocks on the subdiagonal.
MatrixFF jordan_block(const Poly& f, int e);

// Direct sum of companion matrices of the nontrivial invariants; xI - A of
// the result has exactly the given invariant chain (padded with 1s).
MatrixFF from_invariants(const InvariantList& inv);

// X * A * X^{-1} for a uniformly random nonsingular X (rejection-sampled).
MatrixFF random_similarity(const MatrixFF& a, RandomStream& rng);

}  // namespace bwprob
