#include "folres/foliation.hpp"

#include <algorithm>
#include <random>

#include "folres/error.hpp"

namespace folres {

FoliationPresentation FoliationPresentation::from_fields(int n,
                                                         std::vector<std::vector<Polynomial>> fields) {
  FoliationPresentation f;
  f.n = n;
  f.kind = FoliationKind::VectorFields;
  f.k = static_cast<int>(fields.size());
  if (f.k < 1 || f.k > n) fail(Errc::MalformedInput, "need between 1 and n vector fields");
  for (const auto& v : fields) {
    if (static_cast<int>(v.size()) != n)
      fail(Errc::AmbientMismatch, "vector field must have n components");
    for (const auto& c : v)
      if (c.nvars() != n) fail(Errc::AmbientMismatch, "field component ring mismatch");
  }
  f.fields = std::move(fields);
  return f;
}

FoliationPresentation FoliationPresentation::from_form(int n, int k, Alternating form) {
  FoliationPresentation f;
  f.n = n;
  f.kind = FoliationKind::Form;
  f.k = k;
  if (form.nvars() != n || form.degree() != n - k)
    fail(Errc::AmbientMismatch, "form must have degree n-k in n variables");
  f.form = std::move(form);
  return f;
}

FoliationPresentation FoliationPresentation::from_poisson(int n, Alternating bivector) {
  FoliationPresentation f;
  f.n = n;
  f.kind = FoliationKind::Poisson;
  if (bivector.nvars() != n || bivector.degree() != 2)
    fail(Errc::AmbientMismatch, "Poisson bivector must have degree 2 in n variables");
  f.bivector = std::move(bivector);
  f.k = rank(poisson_matrix(f.bivector));  // generic rank of sigma#
  return f;
}

Alternating omega_from_vector_fields(const FoliationPresentation& f) {
  if (f.kind != FoliationKind::VectorFields)
    fail(Errc::MalformedInput, "presentation is not by vector fields");
  Alternating w = Alternating::volume_form(f.n);
  for (int i = 0; i < f.k; ++i) w = contract(f.fields[i], w);
  return w;
}

Alternating omega_of(const FoliationPresentation& f) {
  switch (f.kind) {
    case FoliationKind::VectorFields: return omega_from_vector_fields(f);
    case FoliationKind::Form: return f.form;
    case FoliationKind::Poisson:
      fail(Errc::MalformedInput, "Poisson presentations have no stored omega");
  }
  fail(Errc::Internal, "unreachable");
}

PolyMatrix poisson_matrix(const Alternating& bivector) {
  int n = bivector.nvars();
  PolyMatrix m(n, n, n);
  for (const auto& [idx, c] : bivector.coefficients()) {
    int i = idx[0] - 1, j = idx[1] - 1;
    m.at(i, j) = c;
    m.at(j, i) = -c;
  }
  return m;
}

namespace {

Ideal coefficient_ideal(int n, const Alternating& omega) {
  std::vector<Polynomial> gens;
  for (const auto& [idx, c] : omega.coefficients()) {
    Polynomial g = primitive_normalize(c);
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  return Ideal(n, std::move(gens));
}

std::vector<std::vector<int>> index_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k > n || k < 0) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Ideal minor_ideal(const PolyMatrix& m, int size) {
  int n = m.rows();
  std::vector<Polynomial> gens;
  for (const auto& rows : index_subsets(n, size))
    for (const auto& cols : index_subsets(n, size)) {
      Polynomial d = primitive_normalize(det_bareiss_serial(m.submatrix(rows, cols)));
      if (d.is_zero()) continue;
      if (std::find(gens.begin(), gens.end(), d) == gens.end()) gens.push_back(d);
    }
  return Ideal(m.nvars(), std::move(gens));
}

}  // namespace

Ideal singular_ideal(const FoliationPresentation& f) {
  if (f.kind == FoliationKind::Poisson) {
    int r = rank(poisson_matrix(f.bivector));
    return minor_ideal(poisson_matrix(f.bivector), r);
  }
  Alternating w = omega_of(f);
  if (w.is_zero()) fail(Errc::DegenerateGenerators, "omega vanishes identically");
  return coefficient_ideal(f.n, w);
}

bool involutivity_check(const FoliationPresentation& f) {
  if (f.kind != FoliationKind::VectorFields)
    fail(Errc::MalformedInput, "involutivity check needs a vector-field presentation");
  Alternating big = Alternating::from_vector_field(f.fields[0]);
  for (int i = 1; i < f.k; ++i) big = wedge(big, Alternating::from_vector_field(f.fields[i]));
  for (int i = 0; i < f.k; ++i)
    for (int j = i + 1; j < f.k; ++j) {
      auto br = lie_bracket(f.fields[i], f.fields[j]);
      Alternating test = wedge(Alternating::from_vector_field(br), big);
      if (!test.is_zero()) return false;
    }
  return true;
}

PoissonAnalysis poisson_analysis(const FoliationPresentation& f) {
  if (f.kind != FoliationKind::Poisson) fail(Errc::MalformedInput, "not a Poisson presentation");
  for (const auto& [idx, c] : f.bivector.coefficients())
    if (idx.size() != 2) fail(Errc::NonSkew, "bivector coefficients must be 2-index");
  const int n = f.n;
  PolyMatrix sigma = poisson_matrix(f.bivector);
  PoissonAnalysis out;
  // Jacobi identity in coordinates.
  out.jacobi_ok = true;
  for (int i = 0; i < n && out.jacobi_ok; ++i)
    for (int j = i + 1; j < n && out.jacobi_ok; ++j)
      for (int k = j + 1; k < n && out.jacobi_ok; ++k) {
        Polynomial acc(n);
        for (int l = 0; l < n; ++l) {
          acc += sigma.at(i, l) * sigma.at(j, k).derivative(l + 1);
          acc += sigma.at(j, l) * sigma.at(k, i).derivative(l + 1);
          acc += sigma.at(k, l) * sigma.at(i, j).derivative(l + 1);
        }
        if (!acc.is_zero()) out.jacobi_ok = false;
      }
  out.generic_rank = rank(sigma);
  for (int s = 0; s < out.generic_rank; s += 2) {
    out.strata.push_back(s);
    Ideal ideal = minor_ideal(sigma, s + 2);
    out.degeneracy_dims.push_back(ideal.gens.empty() ? n : krull_dimension(ideal));
    out.degeneracy_ideals.push_back(std::move(ideal));
  }
  return out;
}

SliceSpec identity_slice(const FoliationPresentation& f, const std::vector<Rational>& p) {
  SliceSpec s;
  s.base = p;
  s.matrix.assign(f.n, std::vector<Rational>(f.n, Rational(0)));
  for (int i = 0; i < f.n; ++i) s.matrix[i][i] = Rational(1);
  s.seed = 0;
  return s;
}

SliceSpec make_slice(const FoliationPresentation& f, const std::vector<Rational>& p,
                     std::int64_t seed, int bound) {
  if (static_cast<int>(p.size()) != f.n) fail(Errc::AmbientMismatch, "base point dimension");
  int m = f.n - f.k + 1;
  if (m > f.n) fail(Errc::MalformedInput, "slice dimension exceeds ambient");
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed) * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  auto draw = [&]() {
    // Uniform-ish integer in [-bound, bound]; the engine, not the
    // distribution, is what the standard pins down, so map by hand.
    return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  };
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<std::vector<Rational>> L(f.n, std::vector<Rational>(m, Rational(0)));
    for (int i = 0; i < f.n; ++i)
      for (int j = 0; j < m; ++j) L[i][j] = Rational(draw());
    if (rat_rank(L) == m) return SliceSpec{p, std::move(L), seed};
  }
  fail(Errc::RankDeficient, "could not draw a full-rank slice matrix in 100 attempts");
}

SliceFoliation slice_foliation(const FoliationPresentation& f, const SliceSpec& s) {
  Alternating omega = omega_of(f);
  if (omega.is_zero()) fail(Errc::DegenerateGenerators, "omega vanishes identically");
  int m = s.matrix.empty() ? 0 : static_cast<int>(s.matrix[0].size());
  Alternating eta = affine_pullback(omega, s.base, s.matrix);
  if (eta.is_zero()) fail(Errc::NotTransverse, "pullback of omega vanishes identically");
  if (eta.degree() != m - 1) fail(Errc::Internal, "slice pullback has unexpected degree");
  std::vector<Polynomial> v(m, Polynomial(m));
  for (int j = 1; j <= m; ++j) {
    IndexSet rest;
    for (int t = 1; t <= m; ++t)
      if (t != j) rest.push_back(t);
    Polynomial c = eta.coefficient(rest);
    v[j - 1] = (j % 2 == 0) ? -c : c;
  }
  // Saturate: divide by the polynomial gcd (includes rational content).
  Polynomial g(m);
  for (const auto& c : v) g = poly_gcd(g, c);
  if (g.is_zero()) fail(Errc::DegenerateSlice, "slice generator vanishes");
  for (auto& c : v) c = exact_div(c, g);
  // Canonical sign: first nonzero component gets a positive leading coefficient.
  for (const auto& c : v) {
    if (c.is_zero()) continue;
    if (c.coefficient(grevlex_leading_monomial(c)).sign() < 0)
      for (auto& cc : v) cc = -cc;
    break;
  }
  return SliceFoliation{m, std::move(v), s};
}

FoliationPresentation pullback_under_projection(const FoliationPresentation& g, int n) {
  if (g.kind != FoliationKind::VectorFields || g.k != 1)
    fail(Errc::MalformedInput, "pullback source must be one-dimensional vector-field kind");
  int m = g.n;
  if (n < m) fail(Errc::MalformedInput, "target dimension must be at least the source dimension");
  int k = n - m + 1;
  // Lift the generator by extending coordinates, then add the vertical fields.
  std::vector<Polynomial> images;
  images.reserve(m);
  for (int i = 1; i <= m; ++i) images.push_back(Polynomial::variable(n, i));
  std::vector<std::vector<Polynomial>> fields;
  std::vector<Polynomial> lifted(n, Polynomial(n));
  for (int i = 0; i < m; ++i) lifted[i] = g.fields[0][i].compose(images);
  fields.push_back(std::move(lifted));
  for (int j = m + 1; j <= n; ++j) {
    std::vector<Polynomial> vertical(n, Polynomial(n));
    vertical[j - 1] = Polynomial::one(n);
    fields.push_back(std::move(vertical));
  }
  FoliationPresentation out = FoliationPresentation::from_fields(n, std::move(fields));
  if (out.k != k) fail(Errc::Internal, "pullback dimension bookkeeping");
  return out;
}

}  // namespace folres
