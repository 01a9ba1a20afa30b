#include "folres/matrix.hpp"

#include <algorithm>

#include "folres/error.hpp"

namespace folres {

PolyMatrix PolyMatrix::identity(int n, int nvars) {
  PolyMatrix m(n, n, nvars);
  for (int i = 0; i < n; ++i) m.at(i, i) = Polynomial::one(nvars);
  return m;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  PolyMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()), nvars_);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) m.at(i, j) = at(rows[i], cols[j]);
  return m;
}

PolyMatrix jacobian(const std::vector<Polynomial>& v) {
  int n = static_cast<int>(v.size());
  if (n == 0) fail(Errc::MalformedInput, "jacobian of empty field");
  int nvars = v[0].nvars();
  if (nvars != n) fail(Errc::AmbientMismatch, "jacobian needs n polynomials in n variables");
  PolyMatrix m(n, n, nvars);
  for (int i = 0; i < n; ++i) {
    if (v[i].nvars() != nvars) fail(Errc::AmbientMismatch, "jacobian components in different rings");
    for (int j = 0; j < n; ++j) m.at(i, j) = v[i].derivative(j + 1);
  }
  return m;
}

namespace {

// Shared Bareiss elimination; `parallel` toggles the OpenMP row-update loop.
Polynomial det_bareiss_impl(PolyMatrix a, bool parallel) {
  int n = a.rows();
  if (n != a.cols()) fail(Errc::MalformedInput, "determinant of non-square matrix");
  if (n == 0) return Polynomial::one(a.nvars());
  int sign = 1;
  Polynomial prev = Polynomial::one(a.nvars());
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k).is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a.at(i, k).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return Polynomial::zero(a.nvars());
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = exact_div(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
      a.at(i, k) = Polynomial::zero(a.nvars());
    }
    prev = a.at(k, k);
  }
  Polynomial d = a.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

}  // namespace

Polynomial det_bareiss_serial(const PolyMatrix& m) { return det_bareiss_impl(m, false); }
Polynomial det_bareiss_parallel(const PolyMatrix& m) { return det_bareiss_impl(m, true); }

Polynomial det(const PolyMatrix& m) {
  return m.rows() >= 8 ? det_bareiss_parallel(m) : det_bareiss_serial(m);
}

int rank(const PolyMatrix& m) {
  // Bareiss with full pivoting; divisions stay exact because swaps touch only
  // rows/columns past the already-fixed leading block.
  PolyMatrix a = m;
  int rows = a.rows(), cols = a.cols();
  Polynomial prev = Polynomial::one(a.nvars());
  int r = 0;
  while (r < rows && r < cols) {
    int pi = -1, pj = -1;
    for (int i = r; i < rows && pi < 0; ++i)
      for (int j = r; j < cols; ++j)
        if (!a.at(i, j).is_zero()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    if (pi != r)
      for (int j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(pi, j));
    if (pj != r)
      for (int i = 0; i < rows; ++i) std::swap(a.at(i, r), a.at(i, pj));
    for (int i = r + 1; i < rows; ++i) {
      for (int j = r + 1; j < cols; ++j)
        a.at(i, j) = exact_div(a.at(i, j) * a.at(r, r) - a.at(i, r) * a.at(r, j), prev);
      a.at(i, r) = Polynomial::zero(a.nvars());
    }
    prev = a.at(r, r);
    ++r;
  }
  return r;
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Iterative enumeration in lexicographic order.
  cur.resize(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  if (k == 0) out.assign(1, {});
  return out;
}

}  // namespace

Polynomial principal_minor_sum_serial(const PolyMatrix& m, int i) {
  if (m.rows() != m.cols()) fail(Errc::MalformedInput, "principal minors of non-square matrix");
  if (i < 0 || i > m.rows()) fail(Errc::IndexOutOfRange, "minor size out of range");
  Polynomial acc(m.nvars());
  for (const auto& s : subsets_of_size(m.rows(), i))
    acc += det_bareiss_serial(m.submatrix(s, s));
  if (i == 0) acc = Polynomial::one(m.nvars());
  return acc;
}

Polynomial principal_minor_sum(const PolyMatrix& m, int i) {
  if (m.rows() != m.cols()) fail(Errc::MalformedInput, "principal minors of non-square matrix");
  if (i < 0 || i > m.rows()) fail(Errc::IndexOutOfRange, "minor size out of range");
  if (i == 0) return Polynomial::one(m.nvars());
  auto subs = subsets_of_size(m.rows(), i);
  std::vector<Polynomial> minors(subs.size(), Polynomial(m.nvars()));
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < static_cast<long>(subs.size()); ++t)
    minors[t] = det_bareiss_serial(m.submatrix(subs[t], subs[t]));
  Polynomial acc(m.nvars());
  for (const auto& d : minors) acc += d;
  return acc;
}

Rational rat_det(const std::vector<std::vector<Rational>>& in) {
  auto m = in;
  int n = static_cast<int>(m.size());
  Rational d(1);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (!m[i][k].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Rational(0);
    if (p != k) {
      std::swap(m[p], m[k]);
      d = -d;
    }
    d *= m[k][k];
    Rational inv = m[k][k].inverse();
    for (int i = k + 1; i < n; ++i) {
      Rational f = m[i][k] * inv;
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return d;
}

int rat_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][col].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    Rational inv = m[r][col].inverse();
    for (int i = r + 1; i < rows; ++i) {
      Rational f = m[i][col] * inv;
      for (int j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

Rational rat_principal_minor_sum(const std::vector<std::vector<Rational>>& m, int i) {
  int n = static_cast<int>(m.size());
  if (i == 0) return Rational(1);
  Rational acc(0);
  for (const auto& s : subsets_of_size(n, i)) {
    std::vector<std::vector<Rational>> sub(i, std::vector<Rational>(i));
    for (int a = 0; a < i; ++a)
      for (int b = 0; b < i; ++b) sub[a][b] = m[s[a]][s[b]];
    acc += rat_det(sub);
  }
  return acc;
}

}  // namespace folres
