#include "oujordan/verify.hpp"

#include <algorithm>
#include <future>
#include <semaphore>
#include <sstream>
#include <thread>
#include <vector>

#include "oujordan/basis_dag.hpp"
#include "oujordan/jordan2d.hpp"
#include "oujordan/jordan3d.hpp"
#include "oujordan/oracle.hpp"

namespace oujordan {

namespace {

struct CaseResult {
    bool ok = true;
    std::string lines;
};

std::string int_list(const std::vector<int>& values) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    out << "]";
    return out.str();
}

CaseResult run_d2_case(int n, const VerifyOptions& options) {
    CaseResult result;
    std::ostringstream out;
    out << "[d2 n=" << n << "] ";
    try {
        const OUContext ctx(2, n, options.c, options.sigma2);
        const Chain2D chain = build_chain_2d(n, ctx); // asserts closed form internally
        for (int i = 2; i <= std::max(2, n); ++i)
            if (!verify_recursion(i, ctx)) throw Error(ErrorCode::VerificationFailed,
                                                       "generator recursion fails at i=" + std::to_string(i));
        const TheoryComparison cmp = compare_with_theory(ctx);
        out << "chain length " << chain.elements.size() << " matches closed form; oracle segre="
            << int_list(cmp.oracle.segre) << " geometric=" << cmp.oracle.geometric << " algebraic="
            << cmp.oracle.algebraic << " index=" << cmp.oracle.index << " matches theory: ok";
    } catch (const std::exception& e) {
        result.ok = false;
        out << "FAIL: " << e.what();
    }
    result.lines = out.str() + "\n";
    return result;
}

CaseResult run_d3_case(int n, const VerifyOptions& options) {
    CaseResult result;
    std::ostringstream out;
    out << "[d3 n=" << n << "] ";
    try {
        const OUContext ctx(3, n, options.c, options.sigma2);

        const Jordan3DReport report = jordan_basis(n, ctx); // chains, rank, step patterns
        out << "segre=" << int_list(report.segre) << " rank ok";

        const BasisDag dag = build_dag(n);
        if (static_cast<int>(dag.vertices.size()) != report.algebraic)
            throw Error(ErrorCode::VerificationFailed, "graph order is not the algebraic multiplicity");
        if (!symmetry_check(dag))
            throw Error(ErrorCode::VerificationFailed, "index-reversal symmetry fails");
        for (const DagEdge& e : dag.edges)
            if (height(dag.vertices[e.to]) != height(dag.vertices[e.from]) + 1)
                throw Error(ErrorCode::VerificationFailed, "edge does not raise height by one");
        // edge weights against the projected operator
        for (std::size_t p = 0; p < dag.vertices.size(); ++p) {
            HermitePoly expected(3, ctx.rho);
            for (const DagEdge& e : dag.edges)
                if (e.from == p)
                    expected.add_term(dag.vertices[e.to], Rational(e.weight));
            const HermitePoly image =
                apply_projected(HermitePoly::basis(dag.vertices[p], ctx.rho), n, ctx);
            if (image != expected)
                throw Error(ErrorCode::VerificationFailed, "edge weights disagree with the operator");
        }
        out << "; dag order=" << dag.vertices.size() << " symmetric, weights ok";

        if (n >= 1) {
            const MinorsReport minors = minors_report(n, 6);
            if (!minors.negative.empty())
                throw Error(ErrorCode::VerificationFailed,
                            std::to_string(minors.negative.size()) + " negative minors found");
            if (!minors.all_s_positive)
                throw Error(ErrorCode::VerificationFailed, "a transition determinant is not positive");
            out << "; minors checked=" << minors.minors_checked << " none negative";

            out << "; conjecture holds=[";
            for (std::size_t i = 0; i < report.conjecture.size(); ++i)
                out << (i ? "," : "") << (report.conjecture[i].holds ? "true" : "false");
            out << "]";
        }

        const TheoryComparison cmp = compare_with_theory(ctx);
        out << "; oracle segre=" << int_list(cmp.oracle.segre) << " index=" << cmp.oracle.index
            << " matches theory: ok";
    } catch (const std::exception& e) {
        result.ok = false;
        out << "FAIL: " << e.what();
    }
    result.lines = out.str() + "\n";
    return result;
}

} // namespace

VerifyResult run_verification_sweep(const VerifyOptions& options) {
    struct Case {
        int d;
        int n;
    };
    std::vector<Case> cases;
    for (int n = 0; n <= options.max_n; ++n) cases.push_back({2, n});
    for (int n = 0; n <= options.max_n; ++n) cases.push_back({3, n});

    unsigned limit = options.threads;
    if (limit == 0) limit = std::max(1u, std::thread::hardware_concurrency());
    limit = std::min<unsigned>(limit, static_cast<unsigned>(cases.size()));

    std::counting_semaphore<> slots(limit);
    std::vector<std::future<CaseResult>> futures;
    futures.reserve(cases.size());
    for (const Case& c : cases)
        futures.push_back(std::async(std::launch::async, [c, &options, &slots] {
            slots.acquire();
            const CaseResult result =
                c.d == 2 ? run_d2_case(c.n, options) : run_d3_case(c.n, options);
            slots.release();
            return result;
        }));

    VerifyResult result;
    result.ok = true;
    std::ostringstream log;
    log << "verification sweep: d=2 and d=3, n <= " << options.max_n << ", c=" << to_string(options.c)
        << ", sigma2=" << to_string(options.sigma2) << "\n";
    for (auto& future : futures) {
        const CaseResult c = future.get();
        result.ok = result.ok && c.ok;
        log << c.lines;
    }
    log << (result.ok ? "VERIFY OK" : "VERIFY FAILED") << " (" << cases.size() << " cases)\n";
    result.log = log.str();
    return result;
}

} // namespace oujordan
