// Command-line front end: reads a JSON job file, dispatches the computation,
// and prints a deterministic JSON report on standard output.
//
// Exit codes: 0 success, 1 malformed input, 2 certified computational
// diagnosis (non-transverse slice, retries exhausted, non-isolated zero, ...).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "folres/dualcell.hpp"
#include "folres/error.hpp"
#include "folres/harness.hpp"
#include "folres/json_io.hpp"

namespace folres {

namespace {

struct Flags {
  std::optional<std::int64_t> seed;
  std::optional<int> retries;
  std::optional<int> bound;
  std::optional<std::string> phi;
  std::optional<std::string> point;
  std::optional<std::string> order;
};

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::MalformedInput:
    case Errc::IndexOutOfRange:
    case Errc::AmbientMismatch:
      return 1;
    default:
      return 2;
  }
}

Json error_object(Errc code, const std::string& message) {
  return Json{{"error", Json{{"code", errc_name(code)}, {"message", message}}}};
}

std::vector<Rational> resolve_point(const Json& job, const Flags& flags, int n) {
  std::string text;
  if (flags.point) text = *flags.point;
  else if (job.contains("point")) text = job.at("point").get<std::string>();
  if (text.empty()) return std::vector<Rational>(n, Rational(0));
  auto p = parse_rational_vector(text);
  if (static_cast<int>(p.size()) != n)
    fail(Errc::MalformedInput, "point has " + std::to_string(p.size()) + " coordinates, expected " +
                                   std::to_string(n));
  return p;
}

std::string resolve_phi(const Json& job, const Flags& flags) {
  if (flags.phi) return *flags.phi;
  if (job.contains("phi")) return job.at("phi").get<std::string>();
  fail(Errc::MalformedInput, "task needs a phi (job field or --phi)");
}

MonomialOrder resolve_order(const Flags& flags) {
  if (!flags.order || *flags.order == "grevlex") return MonomialOrder::grevlex();
  if (*flags.order == "lex") return MonomialOrder::lex();
  fail(Errc::MalformedInput, "unknown order: " + *flags.order);
}

std::int64_t resolve_seed(const Json& job, const Flags& flags) {
  if (flags.seed) return *flags.seed;
  if (job.contains("seed")) return job.at("seed").get<std::int64_t>();
  return 0;
}

int resolve_retries(const Json& job, const Flags& flags) {
  if (flags.retries) return *flags.retries;
  if (job.contains("retries")) return job.at("retries").get<int>();
  return 16;
}

int resolve_bound(const Json& job, const Flags& flags) {
  if (flags.bound) return *flags.bound;
  if (job.contains("bound")) return job.at("bound").get<int>();
  return 5;
}

Json rational_vector_to_json(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& c : v) arr.push_back(c.str());
  return arr;
}

Json run_sing(const Json& job, const Flags& flags) {
  FoliationPresentation f = foliation_from_json(job.at("foliation"));
  Ideal s = singular_ideal(f);
  Json out;
  out["task"] = "sing";
  out["n"] = f.n;
  out["k"] = f.k;
  out["dim"] = s.gens.empty() ? f.n : krull_dimension(s);
  out["generators"] = ideal_to_json(s);
  GroebnerBasis g = groebner(s, resolve_order(flags));
  Json basis = Json::array();
  for (const auto& b : g.basis) basis.push_back(b.str());
  out["groebner"] = basis;
  out["order"] = resolve_order(flags).name();
  return out;
}

Json run_involutive(const Json& job, const Flags&) {
  FoliationPresentation f = foliation_from_json(job.at("foliation"));
  Json out;
  out["task"] = "involutive";
  out["involutive"] = involutivity_check(f);
  return out;
}

Json run_residue(const Json& job, const Flags& flags) {
  const Json& comps = job.at("field");
  int m = static_cast<int>(comps.size());
  std::vector<Polynomial> v = poly_list_from_json(comps, m);
  PhiSpec phi = PhiSpec::parse(resolve_phi(job, flags), m);
  std::vector<Rational> p = resolve_point(job, flags, m);
  ResidueResult r = baum_bott_residue(v, p, phi);
  Json out;
  out["task"] = "residue";
  out["value"] = r.value.str();
  out["multiplicity"] = r.multiplicity;
  out["phi"] = r.phi;
  out["point"] = rational_vector_to_json(r.point);
  out["vanishes_by_degree"] = r.vanishes_by_degree;
  return out;
}

Json run_slice_residue(const Json& job, const Flags& flags) {
  FoliationPresentation f = foliation_from_json(job.at("foliation"));
  std::vector<Rational> p = resolve_point(job, flags, f.n);
  int m = f.n - f.k + 1;
  PhiSpec phi = PhiSpec::parse(resolve_phi(job, flags), m);
  SliceResidueReport rep = certified_slice_residue(f, p, phi, resolve_seed(job, flags),
                                                   resolve_retries(job, flags),
                                                   resolve_bound(job, flags));
  Json out;
  out["task"] = "slice-residue";
  out["seed"] = rep.slice.seed;
  out["retries"] = rep.retries_used;
  out["certified"] = Json{{"transverse", rep.certified.transverse},
                          {"origin_only_zero", rep.certified.origin_only_zero}};
  if (!rep.residue) {
    out["slice_singular_dim"] = rep.slice_singular_dim;
    out.update(error_object(Errc::RetriesExhausted, rep.failure));
    return out;
  }
  Json slice = Json::array();
  for (const auto& row : rep.slice.matrix) slice.push_back(rational_vector_to_json(row));
  out["slice_matrix"] = slice;
  out["residue"] = Json{{"value", rep.residue->value.str()},
                        {"phi", rep.residue->phi},
                        {"multiplicity", rep.residue->multiplicity},
                        {"point", rational_vector_to_json(p)}};
  return out;
}

Json run_poisson(const Json& job, const Flags&) {
  FoliationPresentation f = foliation_from_json(job.at("foliation"));
  PoissonAnalysis a = poisson_analysis(f);
  Json out;
  out["task"] = "poisson";
  out["jacobi_ok"] = a.jacobi_ok;
  out["generic_rank"] = a.generic_rank;
  Json strata = Json::array();
  for (size_t i = 0; i < a.strata.size(); ++i)
    strata.push_back(Json{{"s", a.strata[i]},
                          {"dim", a.degeneracy_dims[i]},
                          {"generators", ideal_to_json(a.degeneracy_ideals[i])}});
  out["degeneracy"] = strata;
  return out;
}

Json run_topo_homology(const Json& job, const Flags&) {
  SimplicialComplex K = complex_from_json(job.at("complex"));
  Json out;
  out["task"] = "topo-homology";
  auto one = [&](int p) {
    HomologyResult h = homology(K, p);
    Json t = Json::array();
    for (const auto& d : h.torsion) t.push_back(d.get_str());
    return Json{{"degree", p}, {"betti", h.betti}, {"torsion", t}};
  };
  if (job.contains("degree")) {
    out["homology"] = Json::array({one(job.at("degree").get<int>())});
  } else {
    Json arr = Json::array();
    for (int p = 0; p <= K.dim; ++p) arr.push_back(one(p));
    out["homology"] = arr;
  }
  return out;
}

Json run_topo_intersect(const Json& job, const Flags&) {
  SimplicialComplex K = complex_from_json(job.at("complex"));
  // The chain-level product works on the complex itself; flags are built from
  // one barycentric refinement internally.
  SubdivisionTower tw = build_tower_direct(K);
  auto locate = [&](const Json& arr) {
    std::vector<int> verts = arr.get<std::vector<int>>();
    int parity = permutation_parity(verts);
    if (parity == 0) fail(Errc::MalformedInput, "simplex with repeated vertices");
    int d = static_cast<int>(verts.size()) - 1;
    int id = tw.K.id_of(d, verts);
    if (id < 0) fail(Errc::MalformedInput, "simplex not in the complex");
    return std::tuple<int, int, int>(d, id, parity);
  };
  auto [d1, i1, p1] = locate(job.at("s1"));
  auto [d2, i2, p2] = locate(job.at("s2"));
  FlagChain prod = intersection_product(tw, d1, i1, d2, i2);
  Integer orient(p1 * p2);
  Json out;
  out["task"] = "topo-intersect";
  out["dim"] = d2 - d1;
  Json chain = Json::array();
  for (const auto& [flag, coef] : prod) {
    Json fj = Json::array();
    for (const auto& [fd, fi] : flag) fj.push_back(tw.K.simplices[fd][fi]);
    chain.push_back(Json{{"flag", fj}, {"coef", Integer(coef * orient).get_str()}});
  }
  out["chain"] = chain;
  if (d2 - d1 == 0) {
    Integer deg = point_degree(prod) * orient;
    out["degree"] = deg.get_str();
  }
  return out;
}

Json run_job(const Json& job, const Flags& flags);

Json run_verify(const Json& job, const Flags& flags) {
  const Json& corpus = job.at("corpus");
  if (!corpus.is_array()) fail(Errc::MalformedInput, "corpus must be an array");
  struct Item {
    Json result;
    std::string status;
    bool matched = false;
  };
  std::vector<Item> items(corpus.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(corpus.size()); ++i) {
    const Json& entry = corpus[i];
    Item item;
    std::string expect = entry.value("expect", std::string("ok"));
    try {
      Json sub = entry;
      sub.erase("id");
      sub.erase("expect");
      item.result = run_job(sub, flags);
      // Reports may carry a certified diagnosis instead of throwing.
      item.status = item.result.contains("error")
                        ? item.result.at("error").at("code").get<std::string>()
                        : "ok";
    } catch (const Error& e) {
      item.status = errc_name(e.code());
      item.result = error_object(e.code(), e.what());
    }
    item.matched = (item.status == expect);
    items[i] = std::move(item);
  }
  Json out;
  out["task"] = "verify";
  Json results = Json::array();
  bool all = true;
  for (size_t i = 0; i < items.size(); ++i) {
    Json r;
    r["id"] = corpus[i].value("id", "item_" + std::to_string(i));
    r["status"] = items[i].status;
    r["matched"] = items[i].matched;
    r["report"] = items[i].result;
    results.push_back(r);
    all = all && items[i].matched;
  }
  out["results"] = results;
  out["all_expected"] = all;
  return out;
}

Json run_job(const Json& job, const Flags& flags) {
  require_keys(job, {"schema", "task"},
               {"foliation", "field", "phi", "point", "seed", "retries", "bound", "complex",
                "degree", "s1", "s2", "corpus"});
  if (job.at("schema").get<int>() != 1) fail(Errc::MalformedInput, "unsupported schema version");
  std::string task = job.at("task").get<std::string>();
  if (task == "sing") return run_sing(job, flags);
  if (task == "involutive") return run_involutive(job, flags);
  if (task == "residue") return run_residue(job, flags);
  if (task == "slice-residue") return run_slice_residue(job, flags);
  if (task == "poisson") return run_poisson(job, flags);
  if (task == "verify") return run_verify(job, flags);
  if (task == "topo-homology") return run_topo_homology(job, flags);
  if (task == "topo-intersect") return run_topo_intersect(job, flags);
  fail(Errc::MalformedInput, "unknown task: " + task);
}

int main_impl(int argc, char** argv) {
  CLI::App app{"Exact residues and singular loci of polynomial foliations"};
  std::string jobfile;
  Flags flags;
  std::int64_t seed_opt = 0;
  int retries_opt = 0, bound_opt = 0;
  std::string phi_opt, point_opt, order_opt;
  app.add_option("jobfile", jobfile, "JSON job file")->required();
  auto* s = app.add_option("--seed", seed_opt, "slice seed (default 0)");
  auto* r = app.add_option("--retries", retries_opt, "max certified-slice retries (default 16)");
  auto* b = app.add_option("--bound", bound_opt, "slice matrix entry bound (default 5)");
  auto* ph = app.add_option("--phi", phi_opt, "symmetric polynomial in c1..cm");
  auto* pt = app.add_option("--point", point_opt, "comma-separated rational coordinates");
  auto* od = app.add_option("--order", order_opt, "monomial order: grevlex|lex");
  CLI11_PARSE(app, argc, argv);
  if (*s) flags.seed = seed_opt;
  if (*r) flags.retries = retries_opt;
  if (*b) flags.bound = bound_opt;
  if (*ph) flags.phi = phi_opt;
  if (*pt) flags.point = point_opt;
  if (*od) flags.order = order_opt;

  Json job;
  try {
    std::ifstream in(jobfile);
    if (!in) {
      std::cout << error_object(Errc::MalformedInput, "cannot open " + jobfile).dump() << "\n";
      return 1;
    }
    in >> job;
  } catch (const std::exception& e) {
    std::cout << error_object(Errc::MalformedInput, e.what()).dump() << "\n";
    return 1;
  }
  try {
    Json out = run_job(job, flags);
    std::cout << out.dump() << "\n";
    if (out.contains("error")) return 2;
    if (out.contains("all_expected") && !out.at("all_expected").get<bool>()) return 2;
    return 0;
  } catch (const Error& e) {
    std::cout << error_object(e.code(), e.what()).dump() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cout << error_object(Errc::Internal, e.what()).dump() << "\n";
    return 1;
  }
}

}  // namespace
}  // namespace folres

int main(int argc, char** argv) { return folres::main_impl(argc, argv); }
