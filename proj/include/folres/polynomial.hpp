#pragma once

#include <map>
#include <string>
#include <vector>

#include "folres/rational.hpp"

namespace folres {

/// Dense exponent vector, one entry per ambient variable.
struct Monomial {
  std::vector<int> exp;

  static Monomial one(int nvars) { return Monomial{std::vector<int>(nvars, 0)}; }
  int nvars() const { return static_cast<int>(exp.size()); }
  int degree() const;
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  /// Quotient this/m. Pre: m divides this.
  Monomial operator/(const Monomial& m) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exp < b.exp; }
};

// Monomial order predicates ("less" semantics).
bool grevlex_less(const Monomial& a, const Monomial& b);
bool lex_less(const Monomial& a, const Monomial& b);
/// Block elimination order: variables [0, split) dominate, grevlex inside blocks.
bool block_less(const Monomial& a, const Monomial& b, int split);

/// Exact multivariate polynomial over the rationals. Canonical form: no zero
/// coefficients stored. The degree of the zero polynomial is -1.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial one(int nvars) { return constant(nvars, 1); }
  /// The variable z_i, 1-based.
  static Polynomial variable(int nvars, int i);
  static Polynomial term(int nvars, const Monomial& m, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;
  int degree_in(int var) const;  // 1-based
  long term_count() const { return static_cast<long>(terms_.size()); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial::one(nvars_)); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(int e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Formal partial derivative with respect to z_var (1-based).
  Polynomial derivative(int var) const;
  Rational eval(const std::vector<Rational>& point) const;
  /// Substitute z_i := images[i-1]; images live in their own ambient ring.
  Polynomial compose(const std::vector<Polynomial>& images) const;
  /// Substitute z := z + p.
  Polynomial translate(const std::vector<Rational>& p) const;

  /// gcd of all coefficients (nonnegative); 0 for the zero polynomial.
  Rational content() const;

  void add_term(const Monomial& m, const Rational& c);

  std::string str(char prefix = 'z') const;
  static Polynomial parse(const std::string& text, int nvars, char prefix = 'z');

 private:
  int nvars_ = 0;
  TermMap terms_;
  void check_ambient(const Polynomial& o) const;
};

/// Serial reference product kernel.
Polynomial poly_mul_serial(const Polynomial& a, const Polynomial& b);
/// OpenMP term-block product kernel; exact arithmetic makes the result
/// independent of the thread partition.
Polynomial poly_mul_parallel(const Polynomial& a, const Polynomial& b);

/// Quotient a/b in the polynomial ring. Pre: b divides a exactly.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
bool try_exact_div(const Polynomial& a, const Polynomial& b, Polynomial& quotient);

/// Multivariate gcd (primitive PRS). Result is integer-primitive with
/// positive leading (grevlex) coefficient; gcd(0,0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Divide out rational content and fix the sign of the grevlex-leading
/// coefficient to be positive. Zero stays zero.
Polynomial primitive_normalize(const Polynomial& p);

/// Leading monomial under grevlex; pre: p != 0.
Monomial grevlex_leading_monomial(const Polynomial& p);

}  // namespace folres
