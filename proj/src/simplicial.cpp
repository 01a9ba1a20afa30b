#include "folres/simplicial.hpp"

#include <algorithm>

#include "folres/error.hpp"

namespace folres {

int permutation_parity(const std::vector<int>& order) {
  int inv = 0;
  for (size_t i = 0; i < order.size(); ++i)
    for (size_t j = i + 1; j < order.size(); ++j) {
      if (order[i] == order[j]) return 0;
      if (order[i] > order[j]) ++inv;
    }
  return inv % 2 == 0 ? 1 : -1;
}

SimplicialComplex SimplicialComplex::from_top(std::vector<std::vector<int>> tops, bool orientable) {
  if (tops.empty()) fail(Errc::MalformedInput, "complex needs at least one top simplex");
  SimplicialComplex K;
  K.orientable_declared = orientable;
  K.dim = static_cast<int>(tops[0].size()) - 1;
  for (const auto& t : tops)
    if (static_cast<int>(t.size()) != K.dim + 1)
      fail(Errc::MalformedInput, "top simplices must share one dimension");
  K.given_top = tops;
  K.simplices.assign(K.dim + 1, {});
  K.index.assign(K.dim + 1, {});
  for (const auto& t : tops) {
    int sign = permutation_parity(t);
    if (sign == 0) fail(Errc::MalformedInput, "top simplex with a repeated vertex");
    K.top_sign.push_back(sign);
  }
  // Face closure: enumerate all vertex subsets of every top simplex.
  for (const auto& t : tops) {
    std::vector<int> sorted = t;
    std::sort(sorted.begin(), sorted.end());
    int n = static_cast<int>(sorted.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> face;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) face.push_back(sorted[i]);
      int d = static_cast<int>(face.size()) - 1;
      if (!K.index[d].count(face)) {
        K.index[d][face] = static_cast<int>(K.simplices[d].size());
        K.simplices[d].push_back(face);
      }
    }
  }
  // Reindex canonically (sorted tuples) so ids are order-independent.
  for (int d = 0; d <= K.dim; ++d) {
    std::sort(K.simplices[d].begin(), K.simplices[d].end());
    K.index[d].clear();
    for (size_t i = 0; i < K.simplices[d].size(); ++i)
      K.index[d][K.simplices[d][i]] = static_cast<int>(i);
  }
  return K;
}

int SimplicialComplex::count(int d) const {
  if (d < 0 || d > dim) return 0;
  return static_cast<int>(simplices[d].size());
}

int SimplicialComplex::id_of(int d, std::vector<int> vertices) const {
  if (d < 0 || d > dim) return -1;
  std::sort(vertices.begin(), vertices.end());
  auto it = index[d].find(vertices);
  return it == index[d].end() ? -1 : it->second;
}

std::vector<std::pair<int, int>> SimplicialComplex::boundary_of(int d, int idx) const {
  std::vector<std::pair<int, int>> out;
  if (d == 0) return out;
  const auto& v = simplices[d][idx];
  for (int i = 0; i <= d; ++i) {
    std::vector<int> face;
    for (int j = 0; j <= d; ++j)
      if (j != i) face.push_back(v[j]);
    out.emplace_back(index[d - 1].at(face), i % 2 == 0 ? 1 : -1);
  }
  return out;
}

std::vector<int> SimplicialComplex::cofaces_of(int d, int idx) const {
  std::vector<int> out;
  if (d >= dim) return out;
  const auto& v = simplices[d][idx];
  for (int c = 0; c < count(d + 1); ++c) {
    const auto& w = simplices[d + 1][c];
    if (std::includes(w.begin(), w.end(), v.begin(), v.end())) out.push_back(c);
  }
  return out;
}

bool SimplicialComplex::is_closed_pseudomanifold() const {
  if (dim < 1) return false;
  std::map<int, int> facet_count;
  for (int t = 0; t < count(dim); ++t)
    for (const auto& [f, s] : boundary_of(dim, t)) ++facet_count[f];
  for (int f = 0; f < count(dim - 1); ++f)
    if (facet_count[f] != 2) return false;
  return true;
}

bool SimplicialComplex::orientation_compatible() const {
  // Incidence of each facet in the two given-oriented tops must cancel.
  std::map<int, Integer> acc;
  for (size_t t = 0; t < given_top.size(); ++t) {
    std::vector<int> sorted = given_top[t];
    std::sort(sorted.begin(), sorted.end());
    int top_idx = index[dim].at(sorted);
    for (const auto& [f, s] : boundary_of(dim, top_idx)) acc[f] += Integer(s * top_sign[t]);
  }
  for (const auto& [f, v] : acc)
    if (v != 0) return false;
  return true;
}

IMatrix IMatrix::identity(int n) {
  IMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMatrix imatrix_mul(const IMatrix& x, const IMatrix& y) {
  if (x.cols != y.rows) fail(Errc::Internal, "imatrix shape mismatch");
  IMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        if (y.at(k, j) != 0) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

SmithResult smith_normal_form(IMatrix A) {
  const int rows = A.rows, cols = A.cols;
  SmithResult res;
  res.U = IMatrix::identity(rows);
  res.Uinv = IMatrix::identity(rows);
  res.V = IMatrix::identity(cols);
  res.Vinv = IMatrix::identity(cols);

  auto row_swap = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols; ++c) std::swap(A.at(i, c), A.at(j, c));
    for (int c = 0; c < rows; ++c) std::swap(res.U.at(i, c), res.U.at(j, c));
    for (int r = 0; r < rows; ++r) std::swap(res.Uinv.at(r, i), res.Uinv.at(r, j));
  };
  auto col_swap = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(A.at(r, i), A.at(r, j));
    for (int r = 0; r < cols; ++r) std::swap(res.V.at(r, i), res.V.at(r, j));
    for (int c = 0; c < cols; ++c) std::swap(res.Vinv.at(i, c), res.Vinv.at(j, c));
  };
  auto row_addmul = [&](int dst, int src, const Integer& q) {
    // row dst += q * row src
    for (int c = 0; c < cols; ++c) A.at(dst, c) += q * A.at(src, c);
    for (int c = 0; c < rows; ++c) res.U.at(dst, c) += q * res.U.at(src, c);
    for (int r = 0; r < rows; ++r) res.Uinv.at(r, src) -= q * res.Uinv.at(r, dst);
  };
  auto col_addmul = [&](int dst, int src, const Integer& q) {
    for (int r = 0; r < rows; ++r) A.at(r, dst) += q * A.at(r, src);
    for (int r = 0; r < cols; ++r) res.V.at(r, dst) += q * res.V.at(r, src);
    for (int c = 0; c < cols; ++c) res.Vinv.at(src, c) -= q * res.Vinv.at(dst, c);
  };
  auto row_negate = [&](int i) {
    for (int c = 0; c < cols; ++c) A.at(i, c) = -A.at(i, c);
    for (int c = 0; c < rows; ++c) res.U.at(i, c) = -res.U.at(i, c);
    for (int r = 0; r < rows; ++r) res.Uinv.at(r, i) = -res.Uinv.at(r, i);
  };

  int t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    int pi = -1, pj = -1;
    Integer best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (A.at(i, j) == 0) continue;
        Integer m = abs(A.at(i, j));
        if (pi < 0 || m < best) {
          best = m;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    if (A.at(t, t) < 0) row_negate(t);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (A.at(i, t) == 0) continue;
        Integer q = A.at(i, t) / A.at(t, t);  // truncated toward zero is fine
        row_addmul(i, t, -q);
        if (A.at(i, t) != 0) {
          // Remainder became the smaller pivot.
          row_swap(t, i);
          if (A.at(t, t) < 0) row_negate(t);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (A.at(t, j) == 0) continue;
        Integer q = A.at(t, j) / A.at(t, t);
        col_addmul(j, t, -q);
        if (A.at(t, j) != 0) {
          col_swap(t, j);
          if (A.at(t, t) < 0) row_negate(t);
          clean = false;
        }
      }
    }
    ++t;
  }
  // Enforce the divisibility chain d_t | d_{t+1}.
  bool again = true;
  while (again) {
    again = false;
    for (int i = 0; i + 1 < t; ++i) {
      if (A.at(i + 1, i + 1) % A.at(i, i) == 0) continue;
      // Standard 2x2 fix-up: fold the next diagonal entry into this pivot.
      col_addmul(i, i + 1, 1);
      int tt = i;
      bool clean = false;
      while (!clean) {
        clean = true;
        for (int r = tt + 1; r < rows; ++r) {
          if (A.at(r, tt) == 0) continue;
          Integer q = A.at(r, tt) / A.at(tt, tt);
          row_addmul(r, tt, -q);
          if (A.at(r, tt) != 0) {
            row_swap(tt, r);
            if (A.at(tt, tt) < 0) row_negate(tt);
            clean = false;
          }
        }
        for (int c = tt + 1; c < cols; ++c) {
          if (A.at(tt, c) == 0) continue;
          Integer q = A.at(tt, c) / A.at(tt, tt);
          col_addmul(c, tt, -q);
          if (A.at(tt, c) != 0) {
            col_swap(tt, c);
            if (A.at(tt, tt) < 0) row_negate(tt);
            clean = false;
          }
        }
      }
      again = true;
    }
  }
  res.S = A;
  res.rank = t;
  for (int i = 0; i < t; ++i) res.diag.push_back(A.at(i, i));
  return res;
}

std::vector<std::vector<Integer>> integer_kernel_basis(const IMatrix& A) {
  SmithResult s = smith_normal_form(A);
  std::vector<std::vector<Integer>> out;
  for (int j = s.rank; j < A.cols; ++j) {
    std::vector<Integer> v(A.cols);
    for (int r = 0; r < A.cols; ++r) v[r] = s.V.at(r, j);
    out.push_back(std::move(v));
  }
  return out;
}

IMatrix boundary_matrix(const SimplicialComplex& K, int d) {
  IMatrix m(d >= 1 ? K.count(d - 1) : 0, K.count(d));
  if (d < 1) return m;
  for (int j = 0; j < K.count(d); ++j)
    for (const auto& [f, s] : K.boundary_of(d, j)) m.at(f, j) += Integer(s);
  return m;
}

HomologyResult homology(const SimplicialComplex& K, int p) {
  if (p < 0 || p > K.dim) return {0, {}};
  IMatrix dp = boundary_matrix(K, p);
  IMatrix dp1 = boundary_matrix(K, p + 1);
  SmithResult sp = smith_normal_form(dp);
  SmithResult sp1 = smith_normal_form(dp1);
  HomologyResult h;
  h.betti = K.count(p) - sp.rank - sp1.rank;
  for (const auto& d : sp1.diag)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

std::vector<std::vector<Integer>> quotient_free_generators(const IMatrix& B, const IMatrix& A) {
  // Kernel lattice of B.
  auto ker = integer_kernel_basis(B);
  int k = static_cast<int>(ker.size());
  int n = B.cols;
  if (k == 0) return {};
  IMatrix K(n, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) K.at(i, j) = ker[j][i];
  // Solve K X = A (every column of A lies in the kernel lattice).
  // With U K V = S: K x = a  <=>  S (Vinv x) = U a.
  SmithResult sk = smith_normal_form(K);
  IMatrix rhs = imatrix_mul(sk.U, A);
  IMatrix Z(k, A.cols);
  for (int j = 0; j < A.cols; ++j) {
    for (int i = 0; i < n; ++i) {
      if (i < sk.rank) {
        if (rhs.at(i, j) % sk.S.at(i, i) != 0) fail(Errc::Internal, "im(A) not inside ker(B)");
        Z.at(i, j) = rhs.at(i, j) / sk.S.at(i, i);
      } else if (rhs.at(i, j) != 0) {
        fail(Errc::Internal, "im(A) not inside ker(B)");
      }
    }
  }
  IMatrix Xl = imatrix_mul(sk.V, Z);  // coordinates of A's columns in the kernel basis
  SmithResult sx = smith_normal_form(Xl);
  // New lattice basis W = K * Uinv_X; quotient generated by W_i with order
  // diag_i (0 beyond rank => free).
  IMatrix W = imatrix_mul(K, sx.Uinv);
  std::vector<std::vector<Integer>> out;
  for (int j = 0; j < k; ++j) {
    bool free_gen = j >= sx.rank;
    if (!free_gen) continue;
    std::vector<Integer> v(n);
    for (int i = 0; i < n; ++i) v[i] = W.at(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace folres
