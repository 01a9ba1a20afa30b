#pragma once

#include <map>
#include <vector>

#include "folres/matrix.hpp"
#include "folres/polynomial.hpp"

namespace folres {

/// Strictly increasing 1-based variable indices.
using IndexSet = std::vector<int>;

/// Alternating tensor with polynomial coefficients on the canonical basis of
/// strictly increasing index sets. Used both for differential forms (dz_I)
/// and multivectors (d/dz_I); the algebra is identical.
class Alternating {
 public:
  Alternating(int nvars, int degree);

  static Alternating volume_form(int n);
  static Alternating basis_element(int n, const IndexSet& idx);
  /// A vector field as a degree-1 multivector.
  static Alternating from_vector_field(const std::vector<Polynomial>& v);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<IndexSet, Polynomial>& coefficients() const { return coeffs_; }
  Polynomial coefficient(const IndexSet& idx) const;
  void add_term(const IndexSet& idx, const Polynomial& c);

  Alternating operator-() const;
  Alternating& operator+=(const Alternating& o);
  Alternating& operator-=(const Alternating& o);
  friend Alternating operator+(Alternating a, const Alternating& b) { return a += b; }
  friend Alternating operator-(Alternating a, const Alternating& b) { return a -= b; }
  Alternating scaled(const Polynomial& p) const;
  Alternating scaled(const Rational& c) const;

  friend bool operator==(const Alternating& a, const Alternating& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int nvars_;
  int degree_;
  std::map<IndexSet, Polynomial> coeffs_;
};

using PolyForm = Alternating;
using PolyMultivector = Alternating;

/// Graded-antisymmetric exterior product with shuffle signs.
Alternating wedge(const Alternating& a, const Alternating& b);

/// Interior product i_v(omega); degree drops by one.
Alternating contract(const std::vector<Polynomial>& v, const Alternating& omega);

/// [u, v]_j = sum_i (u_i dv_j/dz_i - v_i du_j/dz_i).
std::vector<Polynomial> lie_bracket(const std::vector<Polynomial>& u,
                                    const std::vector<Polynomial>& v);

/// Pullback of a form on C^n under the affine map w -> p + L w, w in C^m.
/// Pre: L (n x m, rationals) has full column rank.
Alternating affine_pullback(const Alternating& omega, const std::vector<Rational>& p,
                            const std::vector<std::vector<Rational>>& L);

/// Merge sign of two disjoint increasing index sets; 0 if they intersect.
int shuffle_sign(const IndexSet& a, const IndexSet& b, IndexSet& merged);

}  // namespace folres
