#pragma once

#include <map>
#include <set>
#include <vector>

#include "folres/simplicial.hpp"

namespace folres {

/// A simplex of the second subdivision, recorded as a strict flag of
/// K-simplices: ascending (dim, index) pairs.
using Flag = std::vector<std::pair<int, int>>;

/// Integer chain of second-subdivision simplices (canonical flag order).
using FlagChain = std::map<Flag, Integer>;

/// Integer chain of K-simplices of one fixed dimension, canonical orientation.
using KChain = std::map<int, Integer>;

/// K0 with its barycentric subdivision K; the second subdivision K' is kept
/// as the list of complete flags of K-simplices with ambient orientation
/// signs. Requires an oriented closed combinatorial manifold.
struct SubdivisionTower {
  SimplicialComplex K0;
  SimplicialComplex K;
  std::map<int, std::pair<int, int>> K_vertex_src;         // K vertex -> K0 simplex (d, idx)
  std::vector<std::vector<std::pair<int, int>>> K_carrier; // [d][idx] -> K0 carrier
  std::vector<int> K_top_ambient;                          // ambient sign per canonical K-top
  std::vector<Flag> top_flags;                             // complete flags, dims 0..m
  std::vector<int> top_flag_sign;                          // ambient sign per flag
  int m = 0;

  int flag_count(int source_dim) const;  // number of K'-tops refining one source simplex
};

SubdivisionTower build_tower(const SimplicialComplex& K0);
/// Tower with K taken to be the given complex itself (no first subdivision);
/// the chain-level dual-cell identities need only K and its flags.
SubdivisionTower build_tower_direct(const SimplicialComplex& K);

/// Barycentric subdivision as a standalone complex (with vertex ancestry).
SimplicialComplex barycentric_subdivide(const SimplicialComplex& K,
                                        std::vector<std::pair<int, int>>* vertex_src = nullptr);

FlagChain flag_boundary(const FlagChain& c);
bool flagchain_is_zero(const FlagChain& c);
FlagChain flagchain_add(FlagChain a, const FlagChain& b, const Integer& scale = 1);

/// Dual cell of the canonically oriented d-simplex: the signed chain of
/// complete flags starting at it; orientation normalized so that s* . s is
/// the barycenter with coefficient +1.
FlagChain dual_cell(const SubdivisionTower& tw, int d, int idx);

/// Signs e(s,c) with boundary(s*) = sum_c e(s,c) c* over the cofaces c;
/// verified against the explicit chain boundary.
std::vector<std::pair<int, int>> dual_cell_boundary(const SubdivisionTower& tw, int d, int idx);

/// Chain-level intersection product s1* . s2 for canonically oriented
/// simplices; an (r+s-m)-chain supported on |s1*| intersect |s2|.
FlagChain intersection_product(const SubdivisionTower& tw, int d1, int i1, int d2, int i2);

/// Same product with explicit front/back flag choices (for the
/// choice-independence property). t1: complete flag inside s1 given by a
/// vertex order of s1; t2: a key of dual_cell(s2).
FlagChain intersection_product_with_choices(const SubdivisionTower& tw, int d1, int i1,
                                            const std::vector<int>& t1_vertex_order, int d2, int i2,
                                            const Flag& t2);

/// Bilinear extension: a read through dual cells (coefficients on
/// d1-simplices), b simplicial (coefficients on d2-simplices).
FlagChain product_chain(const SubdivisionTower& tw, int d1, const KChain& a, int d2,
                        const KChain& b);

/// Face-closed set of K-simplices.
struct Subcomplex {
  std::set<std::pair<int, int>> cells;
  bool contains(int d, int idx) const { return cells.count({d, idx}) > 0; }
};

Subcomplex subcomplex_closure(const SimplicialComplex& K,
                              const std::vector<std::pair<int, int>>& generators);
/// K-simplices lying in a K0-subcomplex (carrier test).
Subcomplex subdivided_subcomplex(const SubdivisionTower& tw,
                                 const std::vector<std::pair<int, int>>& k0_generators);

/// Localized intersection product: a is a degree-(m-d1)* dual-cycle rep
/// supported on S1, b a simplicial cycle supported on S2; the product chain
/// is supported on flags from S1-simplices into S2-simplices.
FlagChain localized_intersection(const SubdivisionTower& tw, const Subcomplex& s1,
                                 const Subcomplex& s2, int d1, const KChain& a, int d2,
                                 const KChain& b);

/// Sum of coefficients of a 0-dimensional flag chain (degree in H_0).
Integer point_degree(const FlagChain& c);

/// Poincare duality on the chain level: the p-cochain u on dual cells
/// (indexed by the (m-p)-simplices they are dual to) maps to the chain
/// sum_s <s*, u> s. With verify set, u is checked to be a K*-cocycle.
KChain poincare_dual(const SubdivisionTower& tw, int p, const KChain& u, bool verify = false);

/// Alexander duality: u must vanish on dual cells of simplices outside the
/// subdivided S; returns the chain supported on S.
KChain alexander_dual(const SubdivisionTower& tw,
                      const std::vector<std::pair<int, int>>& k0_subcomplex, int p,
                      const KChain& u);

/// Coboundary matrix of the dual-cell cochain complex in degree p:
/// rows (m-p-1)-simplices, cols (m-p)-simplices, entries e(t,s).
IMatrix dual_coboundary_matrix(const SubdivisionTower& tw, int p);

/// Subdivide a K0-chain into K (each d-simplex becomes its d! top flags
/// with permutation signs).
KChain subdivide_chain(const SubdivisionTower& tw, int d, const KChain& k0_chain);

/// Boundary of a K-chain of dimension d (canonical orientations).
KChain kchain_boundary(const SimplicialComplex& K, int d, const KChain& c);

}  // namespace folres
