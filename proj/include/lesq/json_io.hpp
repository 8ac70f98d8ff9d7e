#pragma once

#include "lesq/cone.hpp"
#include "lesq/oracle.hpp"
#include "lesq/quiver.hpp"

#include "json.hpp"

#include <vector>

// JSON documents emitted by the library. Objects use nlohmann's default
// (sorted) key order, so dumps are byte-stable for fixed inputs.
namespace lesq {

using Json = nlohmann::json;

/// Integer-valued rationals become JSON numbers, others "p/q" strings.
Json rational_json(const Rational& q);

/// {"n", "m", "vertices": [...canonical order...], "arrows": [{"tail",
/// "head", "multiplicity"}...]}
Json quiver_json(const Quiver& q);

/// {"n", "m", "vertices": [...], "values": [...]}, same vertex order.
Json dim_vector_json(const DimVector& v);

/// [[...], ...]: one array of elements per subset.
Json subset_tuple_json(const SubsetTuple& t);

/// {"n", "m", "count", "elements": [...]}
Json snm_json(int n, int m, const std::vector<SubsetTuple>& elements);

/// {"n", "m", "suppressed_trivial", "inequalities": [{"origin", "level",
/// "subsets", "coeffs"}...]}; coeffs row-major m x n.
Json inequality_json(const Inequality& ineq);
Json inequality_system_json(const InequalitySystem& system);

/// {"exists": true, "chain": [[...]...]} or {"exists": false, "search_space": N}
Json witness_json(const OracleSearch& search);

Json cross_check_json(const CrossCheckReport& report);

}  // namespace lesq
