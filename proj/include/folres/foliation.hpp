#pragma once

#include <cstdint>
#include <vector>

#include "folres/exterior.hpp"
#include "folres/groebner.hpp"

namespace folres {

enum class FoliationKind { VectorFields, Form, Poisson };

/// A distribution/foliation presented by k vector fields, a twisted
/// (n-k)-form, or a Poisson bivector (k derived from the generic rank).
struct FoliationPresentation {
  int n = 0;
  FoliationKind kind = FoliationKind::VectorFields;
  int k = 0;
  std::vector<std::vector<Polynomial>> fields;  // VectorFields: k fields, n components each
  Alternating form{0, 0};                       // Form: degree n-k
  Alternating bivector{0, 0};                   // Poisson: degree 2

  static FoliationPresentation from_fields(int n, std::vector<std::vector<Polynomial>> fields);
  static FoliationPresentation from_form(int n, int k, Alternating form);
  static FoliationPresentation from_poisson(int n, Alternating bivector);
};

/// omega = i_{v_k} ... i_{v_1} (dz_1 ^ ... ^ dz_n).
Alternating omega_from_vector_fields(const FoliationPresentation& f);
/// The presentation's twisted (n-k)-form (computed or stored).
Alternating omega_of(const FoliationPresentation& f);

/// Coefficient ideal of omega; for Poisson presentations the r-by-r minors of
/// the structure matrix, r the generic rank. Generators are normalized.
Ideal singular_ideal(const FoliationPresentation& f);

/// True iff [v_i, v_j] ^ v_1 ^ ... ^ v_k = 0 for all i < j.
bool involutivity_check(const FoliationPresentation& f);

struct PoissonAnalysis {
  bool jacobi_ok = false;
  int generic_rank = 0;
  std::vector<int> strata;             // even s < r
  std::vector<Ideal> degeneracy_ideals;  // rank <= s cut by (s+2)-minors
  std::vector<int> degeneracy_dims;
};

PoissonAnalysis poisson_analysis(const FoliationPresentation& f);

/// Skew structure matrix of a Poisson bivector.
PolyMatrix poisson_matrix(const Alternating& bivector);

struct SliceSpec {
  std::vector<Rational> base;
  std::vector<std::vector<Rational>> matrix;  // n x m, m = n-k+1
  std::int64_t seed = 0;
};

/// Draw an integer slice matrix with entries in [-bound, bound] from a
/// deterministic seeded generator; redraws until full column rank.
SliceSpec make_slice(const FoliationPresentation& f, const std::vector<Rational>& p,
                     std::int64_t seed, int bound);
SliceSpec identity_slice(const FoliationPresentation& f, const std::vector<Rational>& p);

struct SliceFoliation {
  int m = 0;
  std::vector<Polynomial> generator;  // gcd-saturated, sign-normalized
  SliceSpec provenance;
};

/// Pull omega back along the slice and extract the generator of the induced
/// one-dimensional foliation: v_j = (-1)^(j-1) eta_{complement of j}, divided
/// by the gcd of its components.
SliceFoliation slice_foliation(const FoliationPresentation& f, const SliceSpec& s);

/// Lift a one-dimensional foliation on C^(n-k+1) through the coordinate
/// projection to a k-dimensional foliation on C^n.
FoliationPresentation pullback_under_projection(const FoliationPresentation& g, int n);

}  // namespace folres
