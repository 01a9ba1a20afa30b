#pragma once

#include <json.hpp>

#include "folres/foliation.hpp"
#include "folres/simplicial.hpp"

namespace folres {

using Json = nlohmann::json;

/// Reject objects carrying keys outside the allowed set.
void require_keys(const Json& obj, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional = {});

/// { "n": int, "kind": "...", "k": int (not for poisson), "data": [...] }
FoliationPresentation foliation_from_json(const Json& j);
Json foliation_to_json(const FoliationPresentation& f);

/// Ideals serialize as lists of polynomial strings (canonical, sorted).
Json ideal_to_json(const Ideal& ideal);

/// { "dim": m, "top_simplices": [[v...]...], "orientable": bool }
SimplicialComplex complex_from_json(const Json& j);

std::vector<Polynomial> poly_list_from_json(const Json& arr, int nvars);

}  // namespace folres
