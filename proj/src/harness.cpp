#include "folres/harness.hpp"

#include "folres/error.hpp"

namespace folres {

namespace {

bool point_on_singular_locus(const FoliationPresentation& f, const std::vector<Rational>& p) {
  Ideal s = singular_ideal(f);
  for (const auto& g : s.gens)
    if (!g.eval(p).is_zero()) return false;
  return true;
}

}  // namespace

SliceResidueReport certified_slice_residue(const FoliationPresentation& f,
                                           const std::vector<Rational>& p, const PhiSpec& phi,
                                           std::int64_t seed, int max_retries, int bound) {
  if (static_cast<int>(p.size()) != f.n) fail(Errc::AmbientMismatch, "point dimension");
  if (!point_on_singular_locus(f, p))
    fail(Errc::MalformedInput, "base point is not on the singular locus");
  const int m = f.n - f.k + 1;
  if (phi.weighted_degree != m)
    fail(Errc::MalformedInput, "phi weighted degree must equal n-k+1");

  SliceResidueReport report;
  const bool identity = (f.k == 1);
  const int attempts = identity ? 1 : max_retries;
  std::vector<Rational> origin(m, Rational(0));
  for (int t = 0; t < attempts; ++t) {
    report.retries_used = t + 1;
    SliceSpec spec = identity ? identity_slice(f, p) : make_slice(f, p, seed + t, bound);
    report.slice = spec;
    report.certified = CertifiedFlags{};
    SliceFoliation sf;
    try {
      sf = slice_foliation(f, spec);
    } catch (const Error& e) {
      if (e.code() == Errc::NotTransverse || e.code() == Errc::DegenerateSlice) {
        report.failure = errc_name(e.code());
        continue;
      }
      throw;
    }
    report.certified.transverse = true;
    Ideal slice_ideal(m, sf.generator);
    report.slice_singular_dim = krull_dimension(slice_ideal);
    if (!zero_locus_is_origin_only(slice_ideal)) {
      report.failure = report.slice_singular_dim > 0 ? "NotZeroDimensional" : "NotIsolated";
      continue;
    }
    report.certified.origin_only_zero = true;
    report.residue = baum_bott_residue(sf.generator, origin, phi);
    report.failure.clear();
    return report;
  }
  if (report.failure.empty()) report.failure = "RetriesExhausted";
  else report.failure = "RetriesExhausted:" + report.failure;
  return report;
}

bool slice_invariance_test(const FoliationPresentation& f, const std::vector<Rational>& p,
                           const PhiSpec& phi, std::int64_t seed1, std::int64_t seed2,
                           int max_retries, int bound) {
  SliceResidueReport a = certified_slice_residue(f, p, phi, seed1, max_retries, bound);
  SliceResidueReport b = certified_slice_residue(f, p, phi, seed2, max_retries, bound);
  if (!a.residue || !b.residue)
    fail(Errc::RetriesExhausted, "no certified slice for one of the seeds (slice singular dim " +
                                     std::to_string(a.residue ? b.slice_singular_dim
                                                              : a.slice_singular_dim) +
                                     ")");
  return a.residue->value == b.residue->value;
}

TheoremCheckReport dimension_theorem_check(const std::vector<FoliationPresentation>& corpus,
                                           const std::vector<std::string>& names) {
  TheoremCheckReport report;
  report.theorem = "dim_lower_bound";
  for (size_t i = 0; i < corpus.size(); ++i) {
    const auto& f = corpus[i];
    TheoremCheckItem item;
    item.fixture = i < names.size() ? names[i] : "fixture_" + std::to_string(i);
    item.n = f.n;
    item.k = f.k;
    if (f.kind == FoliationKind::VectorFields && !involutivity_check(f)) {
      item.status = "rejected:not_involutive";
      report.items.push_back(std::move(item));
      continue;
    }
    Ideal s = singular_ideal(f);
    item.dim = s.gens.empty() ? f.n : krull_dimension(s);
    if (2 * f.k > f.n || f.k > f.n - 2) {
      item.status = "out_of_hypothesis";
      report.items.push_back(std::move(item));
      continue;
    }
    ++report.examined;
    if (item.dim < 0) {
      item.status = "empty";
    } else if (item.dim >= f.k - 1) {
      item.status = "pass";
    } else {
      item.status = "violation";
      report.violations.push_back(static_cast<int>(report.items.size()));
    }
    report.items.push_back(std::move(item));
  }
  return report;
}

TheoremCheckReport poisson_theorem_check(const std::vector<FoliationPresentation>& corpus,
                                         const std::vector<std::string>& names) {
  TheoremCheckReport report;
  report.theorem = "poisson_degeneracy";
  for (size_t i = 0; i < corpus.size(); ++i) {
    const auto& f = corpus[i];
    TheoremCheckItem item;
    item.fixture = i < names.size() ? names[i] : "fixture_" + std::to_string(i);
    item.n = f.n;
    if (f.kind != FoliationKind::Poisson) {
      item.status = "rejected:not_poisson";
      report.items.push_back(std::move(item));
      continue;
    }
    PoissonAnalysis a = poisson_analysis(f);
    item.k = a.generic_rank;
    if (!a.jacobi_ok) {
      item.status = "rejected:jacobi";
      report.items.push_back(std::move(item));
      continue;
    }
    if (2 * a.generic_rank > f.n) {
      item.status = "out_of_hypothesis";
      report.items.push_back(std::move(item));
      continue;
    }
    ++report.examined;
    // Full degeneracy locus: rank <= r-2, cut by the r-by-r minors.
    int dim = a.strata.empty() ? -1 : a.degeneracy_dims.back();
    item.dim = dim;
    if (dim < 0) {
      item.status = "empty";
    } else if (dim > a.generic_rank - 2) {
      item.status = "pass";
    } else {
      item.status = "violation";
      report.violations.push_back(static_cast<int>(report.items.size()));
    }
    report.items.push_back(std::move(item));
  }
  return report;
}

}  // namespace folres
