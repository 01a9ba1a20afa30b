#pragma once

#include <vector>

#include "folres/polynomial.hpp"

namespace folres {

/// Row-major matrix of polynomials over a common ambient ring.
class PolyMatrix {
 public:
  PolyMatrix(int rows, int cols, int nvars)
      : rows_(rows), cols_(cols), nvars_(nvars), e_(rows * cols, Polynomial(nvars)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nvars() const { return nvars_; }
  Polynomial& at(int i, int j) { return e_[i * cols_ + j]; }
  const Polynomial& at(int i, int j) const { return e_[i * cols_ + j]; }

  static PolyMatrix identity(int n, int nvars);
  PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

 private:
  int rows_, cols_, nvars_;
  std::vector<Polynomial> e_;
};

/// Jacobian of n polynomials in n variables: entry (i,j) = d v_i / d z_j.
PolyMatrix jacobian(const std::vector<Polynomial>& v);

/// Fraction-free Bareiss determinant (serial reference).
Polynomial det_bareiss_serial(const PolyMatrix& m);
/// Same elimination with OpenMP across row updates.
Polynomial det_bareiss_parallel(const PolyMatrix& m);
Polynomial det(const PolyMatrix& m);

/// Rank over the fraction field, via fraction-free elimination with pivoting.
int rank(const PolyMatrix& m);

/// Sum of all i-by-i principal minors; i = 0 gives 1, i = n the determinant.
/// These are the coefficients of det(I + t*M).
Polynomial principal_minor_sum_serial(const PolyMatrix& m, int i);
Polynomial principal_minor_sum(const PolyMatrix& m, int i);

// Small exact helpers over the rationals.
Rational rat_det(const std::vector<std::vector<Rational>>& m);
int rat_rank(std::vector<std::vector<Rational>> m);
Rational rat_principal_minor_sum(const std::vector<std::vector<Rational>>& m, int i);

}  // namespace folres
