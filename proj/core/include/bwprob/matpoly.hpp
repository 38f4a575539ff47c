#pragma once

#include <vector>

#include "bwprob/matrix.hpp"
#include "bwprob/poly.hpp"

namespace bwprob {

// Dense matrix with polynomial entries over a finite field.
class MatPoly {
 public:
  MatPoly(Field f, int rows, int cols);

  static MatPoly identity(Field f, int n);

  const Field& field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Poly& at(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }
  Poly& at(int i, int j) { return e_[std::size_t(i) * cols_ + j]; }

  int max_degree() const;
  // Coefficient of x^k as a scalar matrix.
  MatrixFF coeff_matrix(int k) const;

  bool operator==(const MatPoly& o) const;

 private:
  Field f_;
  int rows_, cols_;
  std::vector<Poly> e_;
};

// xI - A.
MatPoly char_matrix(const MatrixFF& a);

MatPoly mp_mul(const MatPoly& a, const MatPoly& b);
Poly mp_det(const MatPoly& m);

// Smith normal form of a square polynomial matrix: the full list of n
// invariant factors, monic, reported largest first (most conventions are
// smallest-first; the divisibility chain here runs inv[i+1] | inv[i]).
// Zero invariants of a singular input are reported as 0 at the front.
InvariantList smith_form(const MatPoly& m);

// First r entries of smith_form(m).
InvariantList leading_invariants(const MatPoly& m, int r);

}  // namespace bwprob
