#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folres/polynomial.hpp"

namespace folres {

/// Monomial order. Block orders compare variables [0, split) first and are
/// used for elimination; grevlex inside each block.
struct MonomialOrder {
  enum class Kind { Grevlex, Lex, Block };
  Kind kind = Kind::Grevlex;
  int split = 0;

  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder block(int split) { return {Kind::Block, split}; }

  bool less(const Monomial& a, const Monomial& b) const;
  std::string name() const;
  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && (a.kind != Kind::Block || a.split == b.split);
  }
};

struct Ideal {
  int nvars = 0;
  std::vector<Polynomial> gens;

  Ideal() = default;
  Ideal(int n, std::vector<Polynomial> g);
};

/// Reduced Groebner basis. When cofactor tracking is enabled each basis
/// element carries its representation in the original generators:
/// basis[i] = sum_j reps[i][j] * gens[j].
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> basis;  // monic, sorted by leading monomial ascending
  bool reduced = true;
  bool has_cofactors = false;
  std::vector<Polynomial> gens;
  std::vector<std::vector<Polynomial>> reps;

  int nvars() const { return basis.empty() ? ambient : basis[0].nvars(); }
  int ambient = 0;
  bool is_unit() const;
  Monomial leading_monomial(const Polynomial& p) const;
};

/// Buchberger with the product and chain criteria, followed by
/// inter-reduction; the reduced basis is unique per order.
GroebnerBasis groebner(const Ideal& ideal, MonomialOrder order = MonomialOrder::grevlex(),
                       bool track_cofactors = false);

/// Full normal form: remainder of multivariate division by the basis.
/// Zero iff p lies in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g);

struct DivisionResult {
  std::vector<Polynomial> cofactors;  // over the original generators
  Polynomial remainder;
};

/// Express p = sum_i cofactors[i] * gens[i] + remainder with
/// remainder = normal_form(p, g). The identity is re-expanded and verified
/// before returning. Pre: g was computed with cofactor tracking.
DivisionResult divide_with_cofactors(const Polynomial& p, const GroebnerBasis& g);

/// Dimension of V(I): max size of a variable subset meeting no leading
/// monomial support. Unit ideal gives -1; zero ideal gives n.
int krull_dimension(const GroebnerBasis& g);
int krull_dimension(const Ideal& ideal);

/// Monomials outside the leading-term ideal. Pre: zero-dimensional.
long standard_monomial_count(const GroebnerBasis& g);

struct VariablePower {
  int exponent = 0;
  std::vector<Polynomial> cofactors;
};

/// Minimal a with z_var^a in the ideal, plus its expression in the original
/// generators. Pre: zero-dimensional with cofactor tracking; fails with
/// NotIsolated when no pure power lies in the ideal.
VariablePower variable_power_in_ideal(const GroebnerBasis& g, int var);

/// Generator of I  ∩ Q[z_var] via block elimination; zero when the
/// intersection is trivial.
Polynomial eliminant(const Ideal& ideal, int var);

/// True iff V(I) = {0} over C: zero-dimensional and every variable eliminant
/// is a pure power.
bool zero_locus_is_origin_only(const Ideal& ideal);

}  // namespace folres
