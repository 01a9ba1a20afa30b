#include "folres/exterior.hpp"

#include <algorithm>

#include "folres/error.hpp"

namespace folres {

Alternating::Alternating(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (degree < 0 || degree > nvars) fail(Errc::DegreeOverflow, "alternating degree out of range");
}

Alternating Alternating::volume_form(int n) {
  IndexSet all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  return basis_element(n, all);
}

Alternating Alternating::basis_element(int n, const IndexSet& idx) {
  Alternating a(n, static_cast<int>(idx.size()));
  a.add_term(idx, Polynomial::one(n));
  return a;
}

Alternating Alternating::from_vector_field(const std::vector<Polynomial>& v) {
  int n = static_cast<int>(v.size());
  Alternating a(n, 1);
  for (int i = 0; i < n; ++i) {
    if (v[i].nvars() != n) fail(Errc::AmbientMismatch, "field component ring mismatch");
    a.add_term({i + 1}, v[i]);
  }
  return a;
}

Polynomial Alternating::coefficient(const IndexSet& idx) const {
  auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? Polynomial::zero(nvars_) : it->second;
}

void Alternating::add_term(const IndexSet& idx, const Polynomial& c) {
  if (static_cast<int>(idx.size()) != degree_) fail(Errc::DegreeOverflow, "index set of wrong size");
  for (size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 1 || idx[i] > nvars_) fail(Errc::IndexOutOfRange, "basis index out of range");
    if (i + 1 < idx.size() && idx[i] >= idx[i + 1])
      fail(Errc::MalformedInput, "index set not strictly increasing");
  }
  if (c.is_zero()) return;
  auto it = coeffs_.find(idx);
  if (it == coeffs_.end()) {
    coeffs_.emplace(idx, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

Alternating Alternating::operator-() const {
  Alternating r(nvars_, degree_);
  for (const auto& [i, c] : coeffs_) r.coeffs_.emplace(i, -c);
  return r;
}

Alternating& Alternating::operator+=(const Alternating& o) {
  if (nvars_ != o.nvars_ || degree_ != o.degree_)
    fail(Errc::AmbientMismatch, "alternating sum shape mismatch");
  for (const auto& [i, c] : o.coeffs_) add_term(i, c);
  return *this;
}

Alternating& Alternating::operator-=(const Alternating& o) {
  if (nvars_ != o.nvars_ || degree_ != o.degree_)
    fail(Errc::AmbientMismatch, "alternating sum shape mismatch");
  for (const auto& [i, c] : o.coeffs_) add_term(i, -c);
  return *this;
}

Alternating Alternating::scaled(const Polynomial& p) const {
  Alternating r(nvars_, degree_);
  for (const auto& [i, c] : coeffs_) r.add_term(i, c * p);
  return r;
}

Alternating Alternating::scaled(const Rational& c) const {
  return scaled(Polynomial::constant(nvars_, c));
}

int shuffle_sign(const IndexSet& a, const IndexSet& b, IndexSet& merged) {
  merged.clear();
  merged.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  long inversions = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      merged.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining elements of a.
      inversions += static_cast<long>(a.size() - i);
      merged.push_back(b[j++]);
    }
  }
  while (i < a.size()) merged.push_back(a[i++]);
  while (j < b.size()) merged.push_back(b[j++]);
  return (inversions % 2 == 0) ? 1 : -1;
}

Alternating wedge(const Alternating& a, const Alternating& b) {
  if (a.nvars() != b.nvars()) fail(Errc::AmbientMismatch, "wedge across different rings");
  if (a.degree() + b.degree() > a.nvars()) fail(Errc::DegreeOverflow, "wedge degree exceeds ambient");
  Alternating r(a.nvars(), a.degree() + b.degree());
  IndexSet merged;
  for (const auto& [ia, ca] : a.coefficients())
    for (const auto& [ib, cb] : b.coefficients()) {
      int s = shuffle_sign(ia, ib, merged);
      if (s == 0) continue;
      Polynomial c = ca * cb;
      if (s < 0) c = -c;
      r.add_term(merged, c);
    }
  return r;
}

Alternating contract(const std::vector<Polynomial>& v, const Alternating& omega) {
  if (omega.degree() < 1) fail(Errc::DegreeOverflow, "contraction of a degree-0 element");
  if (static_cast<int>(v.size()) != omega.nvars())
    fail(Errc::AmbientMismatch, "field/form ambient mismatch");
  Alternating r(omega.nvars(), omega.degree() - 1);
  for (const auto& [idx, c] : omega.coefficients()) {
    for (size_t t = 0; t < idx.size(); ++t) {
      const Polynomial& comp = v[idx[t] - 1];
      if (comp.is_zero()) continue;
      IndexSet rest;
      rest.reserve(idx.size() - 1);
      for (size_t u = 0; u < idx.size(); ++u)
        if (u != t) rest.push_back(idx[u]);
      Polynomial term = comp * c;
      if (t % 2 == 1) term = -term;
      r.add_term(rest, term);
    }
  }
  return r;
}

std::vector<Polynomial> lie_bracket(const std::vector<Polynomial>& u,
                                    const std::vector<Polynomial>& v) {
  if (u.size() != v.size()) fail(Errc::AmbientMismatch, "bracket of fields of different size");
  int n = static_cast<int>(u.size());
  std::vector<Polynomial> w(n, Polynomial(n));
  for (int j = 0; j < n; ++j) {
    Polynomial acc(n);
    for (int i = 0; i < n; ++i) {
      if (u[i].nvars() != n || v[i].nvars() != n)
        fail(Errc::AmbientMismatch, "bracket component ring mismatch");
      acc += u[i] * v[j].derivative(i + 1) - v[i] * u[j].derivative(i + 1);
    }
    w[j] = acc;
  }
  return w;
}

Alternating affine_pullback(const Alternating& omega, const std::vector<Rational>& p,
                            const std::vector<std::vector<Rational>>& L) {
  int n = omega.nvars();
  if (static_cast<int>(p.size()) != n || static_cast<int>(L.size()) != n)
    fail(Errc::AmbientMismatch, "slice data must match the ambient dimension");
  int m = L.empty() ? 0 : static_cast<int>(L[0].size());
  for (const auto& row : L)
    if (static_cast<int>(row.size()) != m) fail(Errc::MalformedInput, "ragged slice matrix");
  {
    std::vector<std::vector<Rational>> tmp = L;
    if (rat_rank(std::move(tmp)) != m) fail(Errc::RankDeficient, "slice matrix not of full column rank");
  }
  // Coordinate images z_a = p_a + sum_b L[a][b] w_b.
  std::vector<Polynomial> images;
  images.reserve(n);
  for (int a = 0; a < n; ++a) {
    Polynomial f = Polynomial::constant(m, p[a]);
    for (int b = 0; b < m; ++b)
      f += Polynomial::variable(m, b + 1).scaled(L[a][b]);
    images.push_back(f);
  }
  int deg = omega.degree();
  if (deg > m) fail(Errc::DegreeOverflow, "form degree exceeds slice dimension");
  Alternating r(m, deg);
  // Enumerate target index sets J once.
  std::vector<IndexSet> targets;
  {
    IndexSet cur(deg);
    for (int i = 0; i < deg; ++i) cur[i] = i + 1;
    if (deg == 0) {
      targets.push_back({});
    } else if (deg <= m) {
      while (true) {
        targets.push_back(cur);
        int i = deg - 1;
        while (i >= 0 && cur[i] == m - deg + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < deg; ++j) cur[j] = cur[j - 1] + 1;
      }
    }
  }
  for (const auto& [idx, c] : omega.coefficients()) {
    Polynomial cw = c.compose(images);
    if (cw.is_zero()) continue;
    for (const auto& J : targets) {
      // det of L[idx, J]
      std::vector<std::vector<Rational>> sub(deg, std::vector<Rational>(deg));
      for (int a = 0; a < deg; ++a)
        for (int b = 0; b < deg; ++b) sub[a][b] = L[idx[a] - 1][J[b] - 1];
      Rational d = rat_det(sub);
      if (d.is_zero()) continue;
      r.add_term(J, cw.scaled(d));
    }
  }
  return r;
}

}  // namespace folres
