// Command-line front end: exact Jordan decompositions of the non-symmetric
// Ornstein-Uhlenbeck operator in the tensor Hermite basis, with the
// brute-force matrix oracle and the DAG/conjecture experiments.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oujordan/json_io.hpp"
#include "oujordan/verify.hpp"

namespace {

using namespace oujordan;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
    int n = 0;
    std::string c = "1";
    std::string sigma2 = "1";
    std::string output;
    std::string format;
};

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + output_path);
    file << text;
}

std::string json_text(const Json& j) {
    return j.dump(2) + "\n";
}

unsigned threads_from_env() {
    const char* raw = std::getenv("OUJORDAN_THREADS");
    if (!raw) return 0;
    const long value = std::strtol(raw, nullptr, 10);
    return value > 0 ? static_cast<unsigned>(value) : 1;
}

std::string conjecture_text(int n, const std::vector<ConjectureRow>& rows) {
    std::ostringstream out;
    out << "conjecture experiment, n=" << n << "\n";
    for (const ConjectureRow& row : rows) {
        out << "  k=" << row.k << " lambda=" << to_string(row.lambda) << " holds="
            << (row.holds ? "true" : "false");
        if (row.ratio) out << " ratio=" << to_string(*row.ratio);
        out << "\n";
    }
    return out.str();
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Exact Jordan decomposition of non-symmetric Ornstein-Uhlenbeck operators"};
    app.require_subcommand(1);

    CommonFlags flags;
    int oracle_dim = 3;
    int max_n = 6;

    const auto add_common = [&flags](CLI::App* cmd, bool with_params = true) {
        cmd->add_option("--output", flags.output, "Write output to a file instead of stdout");
        if (with_params) {
            cmd->add_option("--c", flags.c, "Drift constant c as p/q or integer (default 1)");
            cmd->add_option("--sigma2", flags.sigma2, "Diffusion constant sigma^2 (default 1)");
        }
    };

    CLI::App* d2 = app.add_subcommand("d2", "d=2 Jordan chain at level n");
    d2->add_option("--n", flags.n, "eigenvalue level")->required()->check(CLI::NonNegativeNumber);
    d2->add_option("--format", flags.format, "json (default) or text")
        ->check(CLI::IsMember({"json", "text"}));
    add_common(d2);

    CLI::App* d3 = app.add_subcommand("d3", "d=3 Jordan decomposition report at level n");
    d3->add_option("--n", flags.n, "eigenvalue level")->required()->check(CLI::NonNegativeNumber);
    d3->add_option("--format", flags.format, "json (default) or text")
        ->check(CLI::IsMember({"json", "text"}));
    add_common(d3);

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force matrix oracle");
    oracle->add_option("--d", oracle_dim, "dimension (default 3; theory comparison for 2 and 3)")
        ->check(CLI::Range(2, 8));
    oracle->add_option("--n", flags.n, "eigenvalue level")->required()->check(CLI::NonNegativeNumber);
    oracle->add_option("--format", flags.format, "json (default) or text")
        ->check(CLI::IsMember({"json", "text"}));
    add_common(oracle);

    CLI::App* dag = app.add_subcommand("dag", "basis DAG of grade n");
    dag->add_option("--n", flags.n, "eigenvalue level")->required()->check(CLI::NonNegativeNumber);
    dag->add_option("--format", flags.format, "dot (default) or json")
        ->check(CLI::IsMember({"dot", "json"}));
    add_common(dag, false);

    CLI::App* conjecture = app.add_subcommand("conjecture", "transition-matrix eigenvector experiment");
    conjecture->add_option("--n", flags.n, "eigenvalue level")->required()->check(CLI::PositiveNumber);
    conjecture->add_option("--format", flags.format, "json (default) or text")
        ->check(CLI::IsMember({"json", "text"}));
    add_common(conjecture, false);

    CLI::App* verify = app.add_subcommand("verify", "full invariant sweep; nonzero exit on failure");
    verify->add_option("--max-n", max_n, "largest level to check (default 6)")
        ->check(CLI::NonNegativeNumber);
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const Rational c = parse_rational(flags.c);
        const Rational sigma2 = parse_rational(flags.sigma2);

        if (d2->parsed()) {
            const OUContext ctx(2, flags.n, c, sigma2);
            const Chain2D chain = build_chain_2d(flags.n, ctx);
            if (flags.format == "text") {
                std::ostringstream out;
                out << "d=2 level " << flags.n << ": chain of length " << chain.elements.size()
                    << ", closed form verified\n";
                emit(out.str(), flags.output);
            } else {
                emit(json_text(chain2d_to_json(chain, ctx)), flags.output);
            }
        } else if (d3->parsed()) {
            const OUContext ctx(3, flags.n, c, sigma2);
            const Jordan3DReport report = jordan_basis(flags.n, ctx);
            if (flags.format == "text") {
                std::ostringstream out;
                out << "d=3 level " << flags.n << ": segre=[";
                for (std::size_t i = 0; i < report.segre.size(); ++i)
                    out << (i ? "," : "") << report.segre[i];
                out << "] geometric=" << report.geometric << " algebraic=" << report.algebraic
                    << "\n";
                emit(out.str(), flags.output);
            } else {
                emit(json_text(jordan3d_to_json(report)), flags.output);
            }
        } else if (oracle->parsed()) {
            const OUContext ctx(oracle_dim, flags.n, c, sigma2);
            if (oracle_dim == 2 || oracle_dim == 3) {
                const TheoryComparison cmp = compare_with_theory(ctx);
                emit(json_text(oracle_to_json(ctx, cmp.oracle, &cmp)), flags.output);
            } else {
                // exploration only; no published values to compare against
                const OracleReport report = jordan_structure(ctx);
                emit(json_text(oracle_to_json(ctx, report, nullptr)), flags.output);
            }
        } else if (dag->parsed()) {
            const BasisDag graph = build_dag(flags.n);
            if (flags.format == "json")
                emit(json_text(dag_to_json(graph)), flags.output);
            else
                emit(export_dot(graph), flags.output);
        } else if (conjecture->parsed()) {
            const auto rows = conjecture_check(flags.n);
            if (flags.format == "text")
                emit(conjecture_text(flags.n, rows), flags.output);
            else
                emit(json_text(conjecture_to_json(flags.n, rows)), flags.output);
        } else if (verify->parsed()) {
            VerifyOptions options;
            options.max_n = max_n;
            options.c = c;
            options.sigma2 = sigma2;
            options.threads = threads_from_env();
            const VerifyResult result = run_verification_sweep(options);
            emit(result.log, flags.output);
            if (!result.ok) {
                std::cerr << "verification failed\n";
                return kExitVerificationFailure;
            }
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::BadRational || e.code() == ErrorCode::BadIndex ||
            e.code() == ErrorCode::OutOfTheoryScope) {
            std::cerr << "usage error: " << e.what() << "\n";
            return kExitUsage;
        }
        std::cerr << "verification error: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    return run_cli(argc, argv);
}
