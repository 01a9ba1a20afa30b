#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folres/foliation.hpp"
#include "folres/residue.hpp"

namespace folres {

struct CertifiedFlags {
  bool transverse = false;
  bool origin_only_zero = false;
};

/// Outcome of one certified slice-residue computation. The residue is only
/// present when both certificates hold; otherwise `failure` names the
/// certified diagnosis and `slice_singular_dim` records the dimension of the
/// last slice's singular ideal.
struct SliceResidueReport {
  SliceSpec slice;
  CertifiedFlags certified;
  std::optional<ResidueResult> residue;
  int retries_used = 0;
  int slice_singular_dim = -2;  // -2: never computed
  std::string failure;          // empty on success
};

/// Draw slices with seeds seed, seed+1, ... until one is certified
/// (transverse pullback, slice generator vanishing only at the origin), then
/// compute the residue of the induced one-dimensional foliation there.
/// One-dimensional foliations use the identity slice directly.
SliceResidueReport certified_slice_residue(const FoliationPresentation& f,
                                           const std::vector<Rational>& p, const PhiSpec& phi,
                                           std::int64_t seed, int max_retries, int bound = 5);

/// Exact equality of the residues from two independently seeded slices.
/// Throws RetriesExhausted (via the report) when either side fails.
bool slice_invariance_test(const FoliationPresentation& f, const std::vector<Rational>& p,
                           const PhiSpec& phi, std::int64_t seed1, std::int64_t seed2,
                           int max_retries = 16, int bound = 5);

struct TheoremCheckItem {
  std::string fixture;
  int n = 0;
  int k = 0;        // foliation dimension, or generic rank for Poisson
  int dim = -2;     // computed singular / degeneracy dimension
  std::string status;  // pass | violation | empty | out_of_hypothesis | rejected:<why>
};

struct TheoremCheckReport {
  std::string theorem;  // dim_lower_bound | poisson_degeneracy
  int examined = 0;
  std::vector<TheoremCheckItem> items;
  std::vector<int> violations;  // indices into items; expected empty
};

/// Singular-locus dimension check for involutive foliations with
/// 2k <= n and k <= n-2: dim Sing(F) >= k-1 or the locus is empty.
TheoremCheckReport dimension_theorem_check(const std::vector<FoliationPresentation>& corpus,
                                           const std::vector<std::string>& names = {});

/// Degeneracy-locus dimension check for Poisson structures of generic rank
/// r <= n/2: a non-empty degeneracy locus has a component of dimension > r-2.
TheoremCheckReport poisson_theorem_check(const std::vector<FoliationPresentation>& corpus,
                                         const std::vector<std::string>& names = {});

}  // namespace folres
