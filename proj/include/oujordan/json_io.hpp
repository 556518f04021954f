#pragma once

#include <json.hpp>

#include "oujordan/basis_dag.hpp"
#include "oujordan/jordan2d.hpp"
#include "oujordan/jordan3d.hpp"
#include "oujordan/oracle.hpp"

namespace oujordan {

using Json = nlohmann::ordered_json;

// {"d": int, "rho": "p/q", "terms": [{"idx": [...], "coeff": "p/q"}, ...]}
// Terms come out in canonical order with lowest-terms coefficients, so the
// encoding is byte-stable and serves as the golden-file format.
Json poly_to_json(const HermitePoly& p);
HermitePoly poly_from_json(const Json& j);

Json chain2d_to_json(const Chain2D& chain, const OUContext& ctx);

// The report schema:
// {"n", "segre", "geometric_multiplicity", "algebraic_multiplicity",
//  "chains": [{"k", "q", "lead", "elements"}], "conjecture": [{"k", "holds", "lambda"}]}
Json jordan3d_to_json(const Jordan3DReport& report);

Json oracle_to_json(const OUContext& ctx, const OracleReport& report,
                    const TheoryComparison* comparison);

// Standalone experiment output; richer than the report's conjecture block.
Json conjecture_to_json(int n, const std::vector<ConjectureRow>& rows);

Json dag_to_json(const BasisDag& dag);

} // namespace oujordan
