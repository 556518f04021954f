#pragma once

#include <vector>

#include "oujordan/matrix.hpp"
#include "oujordan/ou_operator.hpp"

namespace oujordan {

// Brute-force cross-check: the operator never leaves the space of
// polynomials of degree <= n (the grading law drops the degree), so
// (gamma - A_d) restricts to an exact matrix there, and kernel ranks of its
// powers read off the Jordan structure of gamma with no further theory.
struct OperatorMatrix {
    OUContext ctx;
    std::vector<MultiIndex> basis; // canonical order over degrees <= n
    ExactMatrix matrix;            // columns are images under (gamma - A_d)
};

OperatorMatrix operator_matrix(const OUContext& ctx);

struct OracleReport {
    std::vector<int> segre; // descending block sizes
    int geometric = 0;
    int algebraic = 0;
    int index = 0;
    std::vector<int> kernel_dims; // dim ker (gamma-A)^j for j = 1, 2, ...
};

OracleReport jordan_structure(const OperatorMatrix& op);
OracleReport jordan_structure(const OUContext& ctx);

// Oracle numbers against the published formulas; any mismatch throws.
// Only d = 2 and d = 3 are covered by the theory.
struct TheoryComparison {
    int d = 0;
    int n = 0;
    OracleReport oracle;
    std::vector<int> expected_segre;
    int expected_geometric = 0;
    int expected_algebraic = 0;
    int expected_index = 0;
};

TheoryComparison compare_with_theory(const OUContext& ctx);

} // namespace oujordan
