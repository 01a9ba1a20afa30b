#pragma once

#include <map>
#include <set>
#include <vector>

#include "folres/rational.hpp"

namespace folres {

/// Finite abstract simplicial complex with orientation data on its top
/// simplices (vertex order = orientation). The face closure is computed at
/// construction; lower simplices are kept in canonical sorted order.
struct SimplicialComplex {
  int dim = 0;
  bool orientable_declared = true;
  std::vector<std::vector<int>> given_top;                // as provided
  std::vector<std::vector<std::vector<int>>> simplices;   // [d][idx] -> sorted vertices
  std::vector<std::map<std::vector<int>, int>> index;     // [d]: sorted vertices -> idx
  std::vector<int> top_sign;                              // given order vs sorted, per top

  static SimplicialComplex from_top(std::vector<std::vector<int>> tops, bool orientable = true);

  int count(int d) const;
  int id_of(int d, std::vector<int> vertices) const;  // sorts; -1 if absent
  /// Faces of the canonical d-simplex idx with incidence signs (-1)^i.
  std::vector<std::pair<int, int>> boundary_of(int d, int idx) const;
  /// Cofaces ((d+1)-simplices containing it).
  std::vector<int> cofaces_of(int d, int idx) const;

  /// Every (m-1)-simplex lies in exactly two top simplices.
  bool is_closed_pseudomanifold() const;
  /// The given top orientations induce opposite orientations on shared facets.
  bool orientation_compatible() const;
};

/// Parity of a vertex list against its sorted order; +1/-1, 0 on repeats.
int permutation_parity(const std::vector<int>& order);

/// Dense integer matrix with arbitrary-precision entries.
struct IMatrix {
  int rows = 0, cols = 0;
  std::vector<Integer> a;

  IMatrix() = default;
  IMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Integer(0)) {}
  Integer& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Integer& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  static IMatrix identity(int n);
};

IMatrix imatrix_mul(const IMatrix& x, const IMatrix& y);

/// Smith normal form U * A * V = S with unimodular transforms and their
/// inverses tracked.
struct SmithResult {
  IMatrix S, U, Uinv, V, Vinv;
  int rank = 0;
  std::vector<Integer> diag;  // nonzero invariant factors, divisibility chain
};

SmithResult smith_normal_form(IMatrix A);

/// Z-basis of the integer kernel lattice of A (columns).
std::vector<std::vector<Integer>> integer_kernel_basis(const IMatrix& A);

/// Boundary matrix of the complex: rows (d-1)-simplices, cols d-simplices,
/// canonical orientations. d = 0 gives the empty-row matrix.
IMatrix boundary_matrix(const SimplicialComplex& K, int d);

struct HomologyResult {
  long betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
};

HomologyResult homology(const SimplicialComplex& K, int p);

/// Free generators of ker(B)/im(A) over Z, for B*A = 0 (columns of A inside
/// ker B). Each generator is a vector in the common ambient dimension.
std::vector<std::vector<Integer>> quotient_free_generators(const IMatrix& B, const IMatrix& A);

}  // namespace folres
