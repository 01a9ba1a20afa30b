#include "folres/json_io.hpp"

#include <algorithm>

#include "folres/error.hpp"

namespace folres {

void require_keys(const Json& obj, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional) {
  if (!obj.is_object()) fail(Errc::MalformedInput, "expected a JSON object");
  for (const auto& k : required)
    if (!obj.contains(k)) fail(Errc::MalformedInput, "missing key: " + k);
  for (const auto& [k, v] : obj.items()) {
    if (std::find(required.begin(), required.end(), k) != required.end()) continue;
    if (std::find(optional.begin(), optional.end(), k) != optional.end()) continue;
    fail(Errc::MalformedInput, "unknown key: " + k);
  }
}

std::vector<Polynomial> poly_list_from_json(const Json& arr, int nvars) {
  if (!arr.is_array()) fail(Errc::MalformedInput, "expected an array of polynomial strings");
  std::vector<Polynomial> out;
  for (const auto& e : arr) {
    if (!e.is_string()) fail(Errc::MalformedInput, "polynomial entries must be strings");
    out.push_back(Polynomial::parse(e.get<std::string>(), nvars));
  }
  return out;
}

namespace {

Alternating alternating_from_json(const Json& arr, int n, int degree) {
  Alternating a(n, degree);
  for (const auto& e : arr) {
    require_keys(e, {"indices", "coef"});
    IndexSet idx = e.at("indices").get<IndexSet>();
    a.add_term(idx, Polynomial::parse(e.at("coef").get<std::string>(), n));
  }
  return a;
}

Json alternating_to_json(const Alternating& a) {
  Json arr = Json::array();
  for (const auto& [idx, c] : a.coefficients()) arr.push_back({{"indices", idx}, {"coef", c.str()}});
  return arr;
}

}  // namespace

FoliationPresentation foliation_from_json(const Json& j) {
  require_keys(j, {"n", "kind", "data"}, {"k"});
  int n = j.at("n").get<int>();
  if (n < 1 || n > 16) fail(Errc::MalformedInput, "ambient dimension out of range");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "vector_fields") {
    if (!j.contains("k")) fail(Errc::MalformedInput, "vector_fields needs k");
    int k = j.at("k").get<int>();
    const Json& data = j.at("data");
    if (!data.is_array() || static_cast<int>(data.size()) != k)
      fail(Errc::MalformedInput, "expected exactly k vector fields");
    std::vector<std::vector<Polynomial>> fields;
    for (const auto& fj : data) {
      auto comps = poly_list_from_json(fj, n);
      if (static_cast<int>(comps.size()) != n)
        fail(Errc::MalformedInput, "each field needs n components");
      fields.push_back(std::move(comps));
    }
    return FoliationPresentation::from_fields(n, std::move(fields));
  }
  if (kind == "form") {
    if (!j.contains("k")) fail(Errc::MalformedInput, "form needs k");
    int k = j.at("k").get<int>();
    return FoliationPresentation::from_form(n, k, alternating_from_json(j.at("data"), n, n - k));
  }
  if (kind == "poisson") {
    if (j.contains("k")) fail(Errc::MalformedInput, "poisson derives k; do not declare it");
    return FoliationPresentation::from_poisson(n, alternating_from_json(j.at("data"), n, 2));
  }
  fail(Errc::MalformedInput, "unknown kind: " + kind);
}

Json foliation_to_json(const FoliationPresentation& f) {
  Json j;
  j["n"] = f.n;
  switch (f.kind) {
    case FoliationKind::VectorFields: {
      j["kind"] = "vector_fields";
      j["k"] = f.k;
      Json data = Json::array();
      for (const auto& field : f.fields) {
        Json fj = Json::array();
        for (const auto& c : field) fj.push_back(c.str());
        data.push_back(fj);
      }
      j["data"] = data;
      break;
    }
    case FoliationKind::Form:
      j["kind"] = "form";
      j["k"] = f.k;
      j["data"] = alternating_to_json(f.form);
      break;
    case FoliationKind::Poisson:
      j["kind"] = "poisson";
      j["data"] = alternating_to_json(f.bivector);
      break;
  }
  return j;
}

Json ideal_to_json(const Ideal& ideal) {
  std::vector<std::string> gens;
  for (const auto& g : ideal.gens) gens.push_back(primitive_normalize(g).str());
  std::sort(gens.begin(), gens.end());
  return Json(gens);
}

SimplicialComplex complex_from_json(const Json& j) {
  require_keys(j, {"dim", "top_simplices"}, {"orientable"});
  int dim = j.at("dim").get<int>();
  std::vector<std::vector<int>> tops = j.at("top_simplices").get<std::vector<std::vector<int>>>();
  bool orientable = j.value("orientable", true);
  SimplicialComplex K = SimplicialComplex::from_top(std::move(tops), orientable);
  if (K.dim != dim) fail(Errc::MalformedInput, "declared dim does not match the top simplices");
  return K;
}

}  // namespace folres
