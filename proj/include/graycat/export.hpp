// SPDX-License-Identifier: Apache-2.0
//
// JSON and Graphviz export.
#pragma once

#include <string>

#include "graycat/double.hpp"
#include "graycat/presheaf.hpp"
#include "graycat/twocat.hpp"
#include "json.hpp"

namespace graycat {

/// Cells with names and boundaries; composition triples in the order of
/// TwoCatTables.
nlohmann::ordered_json to_json(const TwoCat& c);
/// Objects, vertical and horizontal arrows, squares, identities and the
/// four composition tables (second, first, result).
nlohmann::ordered_json to_json(const DoubleCat& p);
/// Level sizes per site object.
nlohmann::ordered_json to_json(const SetPresheaf& x);
nlohmann::ordered_json to_json(const TwoFunctor& f);

/// Objects as nodes, non-identity 1-cells as edges, 2-cells as dashed edges
/// between 1-cell midpoints.
std::string to_dot(const TwoCat& c, const std::string& name = "C");
/// Verticals solid, horizontals blue; each non-identity square is a small
/// node linked to its four sides' endpoints.
std::string to_dot(const DoubleCat& p, const std::string& name = "P");

}  // namespace graycat
