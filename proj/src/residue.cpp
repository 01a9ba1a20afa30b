#include "folres/residue.hpp"

#include "folres/error.hpp"

namespace folres {

PhiSpec PhiSpec::parse(const std::string& text, int m) {
  PhiSpec phi;
  phi.symbols = m;
  phi.expr = Polynomial::parse(text, m, 'c');
  phi.text = text;
  if (phi.expr.is_zero()) fail(Errc::MalformedInput, "phi must be nonzero");
  int d = -1;
  for (const auto& [mono, c] : phi.expr.terms()) {
    int w = 0;
    for (int i = 0; i < m; ++i) w += (i + 1) * mono.exp[i];
    if (d < 0) d = w;
    if (w != d) fail(Errc::MalformedInput, "phi is not weighted-homogeneous: " + text);
  }
  if (d < 1) fail(Errc::MalformedInput, "phi must have weighted degree at least 1");
  phi.weighted_degree = d;
  return phi;
}

Polynomial PhiSpec::substitute(const PolyMatrix& jac) const {
  std::vector<Polynomial> images;
  images.reserve(symbols);
  for (int i = 1; i <= symbols; ++i) images.push_back(principal_minor_sum(jac, i));
  return expr.compose(images);
}

Rational PhiSpec::substitute(const std::vector<std::vector<Rational>>& mat) const {
  std::vector<Rational> c(symbols);
  for (int i = 1; i <= symbols; ++i) c[i - 1] = rat_principal_minor_sum(mat, i);
  return expr.eval(c);
}

namespace {

// Shared body once the basis (with cofactors) is known to cut out {0}.
Rational residue_from_basis(const Polynomial& h, const std::vector<Polynomial>& f,
                            const GroebnerBasis& g) {
  const int m = static_cast<int>(f.size());
  PolyMatrix a(m, m, m);
  Monomial target = Monomial::one(m);
  for (int i = 1; i <= m; ++i) {
    VariablePower vp = variable_power_in_ideal(g, i);
    target.exp[i - 1] = vp.exponent - 1;
    for (int j = 0; j < m; ++j) a.at(i - 1, j) = vp.cofactors[j];
  }
  Polynomial numerator = h * det(a);
  return numerator.coefficient(target);
}

void check_isolated_at_origin(const std::vector<Polynomial>& f) {
  const int m = static_cast<int>(f.size());
  Ideal ideal(m, f);
  GroebnerBasis g = groebner(ideal);
  int dim = krull_dimension(g);
  if (dim > 0) fail(Errc::NotZeroDimensional, "zero locus has dimension " + std::to_string(dim));
  if (dim < 0) fail(Errc::NotIsolated, "the system has no common zero");
  if (!zero_locus_is_origin_only(ideal))
    fail(Errc::NotIsolated, "zero locus contains points other than the origin");
}

}  // namespace

Rational grothendieck_residue(const Polynomial& h, const std::vector<Polynomial>& f) {
  const int m = static_cast<int>(f.size());
  if (m == 0) fail(Errc::MalformedInput, "empty denominator system");
  for (const auto& p : f)
    if (p.nvars() != m) fail(Errc::AmbientMismatch, "need m polynomials in m variables");
  if (h.nvars() != m) fail(Errc::AmbientMismatch, "numerator ring mismatch");
  check_isolated_at_origin(f);
  GroebnerBasis g = groebner(Ideal(m, f), MonomialOrder::grevlex(), /*track_cofactors=*/true);
  return residue_from_basis(h, f, g);
}

Polynomial chern_numerator(const PhiSpec& phi, const std::vector<Polynomial>& v) {
  if (phi.symbols > static_cast<int>(v.size()))
    fail(Errc::IndexOutOfRange, "phi references c_i beyond the ambient dimension");
  PhiSpec local = phi;
  if (phi.symbols < static_cast<int>(v.size())) {
    // Re-parse against the full symbol range so substitution sees m minors.
    local = PhiSpec::parse(phi.text, static_cast<int>(v.size()));
  }
  return local.substitute(jacobian(v));
}

ResidueResult baum_bott_residue(const std::vector<Polynomial>& v, const std::vector<Rational>& p,
                                const PhiSpec& phi) {
  const int m = static_cast<int>(v.size());
  if (m == 0) fail(Errc::MalformedInput, "empty vector field");
  if (phi.symbols > m) fail(Errc::IndexOutOfRange, "phi references c_i beyond the dimension");
  if (phi.weighted_degree < m) fail(Errc::DegreeTooLow, "phi weighted degree below the dimension");
  std::vector<Polynomial> vt = v;
  bool shift = false;
  for (const auto& c : p)
    if (!c.is_zero()) shift = true;
  if (shift) {
    if (static_cast<int>(p.size()) != m) fail(Errc::AmbientMismatch, "point dimension");
    for (auto& c : vt) c = c.translate(p);
  }
  check_isolated_at_origin(vt);
  GroebnerBasis g = groebner(Ideal(m, vt), MonomialOrder::grevlex(), /*track_cofactors=*/true);
  ResidueResult out;
  out.point = p.empty() ? std::vector<Rational>(m, Rational(0)) : p;
  out.phi = phi.text;
  out.multiplicity = standard_monomial_count(g);
  if (phi.weighted_degree > m) {
    out.value = Rational(0);
    out.vanishes_by_degree = true;
    return out;
  }
  out.value = residue_from_basis(chern_numerator(phi, vt), vt, g);
  return out;
}

Rational nondegenerate_oracle(const std::vector<Polynomial>& v, const PhiSpec& phi) {
  const int m = static_cast<int>(v.size());
  std::vector<Rational> origin(m, Rational(0));
  PolyMatrix j = jacobian(v);
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
  for (int i = 0; i < m; ++i)
    for (int jj = 0; jj < m; ++jj) a[i][jj] = j.at(i, jj).eval(origin);
  Rational d = rat_det(a);
  if (d.is_zero()) fail(Errc::DegenerateGenerators, "linear part is degenerate at the origin");
  check_isolated_at_origin(v);
  PhiSpec local = phi;
  if (phi.symbols < m) local = PhiSpec::parse(phi.text, m);
  if (phi.symbols > m) fail(Errc::IndexOutOfRange, "phi references c_i beyond the dimension");
  return local.substitute(a) / d;
}

}  // namespace folres
