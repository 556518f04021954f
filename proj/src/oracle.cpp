#include "oujordan/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "oujordan/error.hpp"

namespace oujordan {

OperatorMatrix operator_matrix(const OUContext& ctx) {
    OperatorMatrix op{ctx, indices_up_to_degree(ctx.dim, ctx.level),
                      ExactMatrix(0, 0)};
    const std::size_t dim = op.basis.size();

    std::map<MultiIndex, std::size_t, CanonicalLess> position;
    for (std::size_t p = 0; p < dim; ++p) position.emplace(op.basis[p], p);

    ExactMatrix m(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        const HermitePoly image =
            apply_shifted(HermitePoly::basis(op.basis[col], ctx.rho), ctx);
        for (const auto& [index, value] : image.terms()) m(position.at(index), col) = value;
    }
    op.matrix = std::move(m);
    return op;
}

OracleReport jordan_structure(const OperatorMatrix& op) {
    const std::size_t dim = op.basis.size();

    OracleReport report;
    ExactMatrix power = op.matrix;
    int previous = 0;
    while (true) {
        const int current = static_cast<int>(kernel_dimension(power));
        if (current == previous) break; // stabilized: previous power was the index
        report.kernel_dims.push_back(current);
        previous = current;
        if (report.kernel_dims.size() >= dim) break; // absolute cutoff
        power = power * op.matrix;
    }

    report.index = static_cast<int>(report.kernel_dims.size());
    report.algebraic = previous;
    report.geometric = report.kernel_dims.empty() ? 0 : report.kernel_dims.front();

    // blocks of size >= j: k_j - k_{j-1}; sizes fall out by differencing
    for (int j = report.index; j >= 1; --j) {
        const int at_least_j = report.kernel_dims[static_cast<std::size_t>(j) - 1] -
                               (j >= 2 ? report.kernel_dims[static_cast<std::size_t>(j) - 2] : 0);
        const int at_least_next =
            j < report.index ? report.kernel_dims[static_cast<std::size_t>(j)] -
                                   report.kernel_dims[static_cast<std::size_t>(j) - 1]
                             : 0;
        for (int copy = 0; copy < at_least_j - at_least_next; ++copy) report.segre.push_back(j);
    }
    std::sort(report.segre.rbegin(), report.segre.rend());
    return report;
}

OracleReport jordan_structure(const OUContext& ctx) {
    return jordan_structure(operator_matrix(ctx));
}

namespace {

template <typename T>
std::string list_text(const std::vector<T>& values) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    out << "]";
    return out.str();
}

void require_match(const std::string& quantity, int expected, int actual) {
    if (expected != actual)
        throw Error(ErrorCode::TheoryMismatch, quantity + ": expected " + std::to_string(expected) +
                                                   ", oracle found " + std::to_string(actual));
}

} // namespace

TheoryComparison compare_with_theory(const OUContext& ctx) {
    if (ctx.dim != 2 && ctx.dim != 3)
        throw Error(ErrorCode::OutOfTheoryScope,
                    "published formulas cover d = 2 and d = 3 only");

    TheoryComparison cmp;
    cmp.d = ctx.dim;
    cmp.n = ctx.level;
    cmp.oracle = jordan_structure(ctx);

    const int n = ctx.level;
    cmp.expected_algebraic = static_cast<int>(binomial(n + ctx.dim - 1, ctx.dim - 1));
    cmp.expected_index = 1 + (ctx.dim - 1) * n;
    if (ctx.dim == 2) {
        cmp.expected_segre = {n + 1};
        cmp.expected_geometric = 1;
    } else {
        for (int k = 0; k <= n / 2; ++k) cmp.expected_segre.push_back(2 * n + 1 - 4 * k);
        std::sort(cmp.expected_segre.rbegin(), cmp.expected_segre.rend());
        cmp.expected_geometric = n / 2 + 1;
    }

    require_match("algebraic multiplicity", cmp.expected_algebraic, cmp.oracle.algebraic);
    require_match("index", cmp.expected_index, cmp.oracle.index);
    require_match("geometric multiplicity", cmp.expected_geometric, cmp.oracle.geometric);
    if (cmp.expected_segre != cmp.oracle.segre)
        throw Error(ErrorCode::TheoryMismatch, "segre: expected " + list_text(cmp.expected_segre) +
                                                   ", oracle found " + list_text(cmp.oracle.segre));
    return cmp;
}

} // namespace oujordan
