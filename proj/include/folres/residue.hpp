#pragma once

#include <string>
#include <vector>

#include "folres/groebner.hpp"
#include "folres/matrix.hpp"

namespace folres {

/// Symmetric polynomial in the Chern symbols c_1..c_m, weight(c_i) = i.
/// Every monomial must have the same weighted degree.
struct PhiSpec {
  int symbols = 0;        // m
  Polynomial expr{0};     // polynomial in m "variables" c_1..c_m
  int weighted_degree = 0;
  std::string text;

  /// Parse e.g. "c1^2*c2 - 2*c4"; validates the uniform weighted degree and
  /// rejects symbols beyond c_m.
  static PhiSpec parse(const std::string& text, int m);

  /// phi with c_i evaluated at the i-th principal minor sum of a matrix.
  Polynomial substitute(const PolyMatrix& jac) const;
  Rational substitute(const std::vector<std::vector<Rational>>& mat) const;
};

/// Exact Grothendieck residue of h dz / (f_1...f_m) at the origin via the
/// transformation law: with z_i^{a_i} = sum_j A_ij f_j, the residue equals
/// the coefficient of z^(a-1) in h det(A).
/// Pre: V(f) = {0}; fails with NotZeroDimensional / NotIsolated otherwise.
Rational grothendieck_residue(const Polynomial& h, const std::vector<Polynomial>& f);

/// Numerator phi(c_i := principal minor sums of the Jacobian of v).
Polynomial chern_numerator(const PhiSpec& phi, const std::vector<Polynomial>& v);

struct ResidueResult {
  Rational value;
  std::vector<Rational> point;
  std::string phi;
  long multiplicity = 0;
  bool vanishes_by_degree = false;
};

/// Res_phi of the one-dimensional foliation generated by v at the point p.
/// Weighted degree d = m is the Grothendieck residue; d > m returns exact 0
/// (the target group vanishes); d < m is rejected.
ResidueResult baum_bott_residue(const std::vector<Polynomial>& v, const std::vector<Rational>& p,
                                const PhiSpec& phi);

/// Independent oracle for a simple zero: phi(A)/det(A) with A the Jacobian
/// at the origin. Pre: det A != 0 and V(v) = {0}.
Rational nondegenerate_oracle(const std::vector<Polynomial>& v, const PhiSpec& phi);

}  // namespace folres
