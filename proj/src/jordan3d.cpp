#include "oujordan/jordan3d.hpp"

#include <algorithm>
#include <random>

#include "oujordan/error.hpp"

namespace oujordan {

namespace {

void require_d3(const OUContext& ctx) {
    if (ctx.dim != 3) throw Error(ErrorCode::DimensionMismatch, "requires a d=3 context");
}

Rational signed_power_of_two(int exponent) {
    // (-2)^exponent
    Rational result = 1;
    for (int i = 0; i < exponent; ++i) result *= -2;
    return result;
}

std::vector<Rational> coefficients_on(const HermitePoly& p, const std::vector<MultiIndex>& basis) {
    std::vector<Rational> out;
    out.reserve(basis.size());
    for (const MultiIndex& index : basis) out.push_back(p.coeff(index));
    return out;
}

} // namespace

std::vector<MultiIndex> height_slice(int n, int h) {
    std::vector<MultiIndex> slice;
    for (const MultiIndex& v : indices_of_degree(3, n))
        if (v[1] + 2 * v[2] == h) slice.push_back(v);
    return slice;
}

ExactMatrix derived_step_matrix(int n, int h) {
    if (h < 0 || h >= 2 * n) throw Error(ErrorCode::BadIndex, "height outside 0..2n-1");
    const OUContext ctx(3, n); // c and sigma^2 drop out at grade n
    const auto source = height_slice(n, h);
    const auto target = height_slice(n, h + 1);

    ExactMatrix step(target.size(), source.size());
    for (std::size_t col = 0; col < source.size(); ++col) {
        const HermitePoly image = apply_projected(HermitePoly::basis(source[col], ctx.rho), n, ctx);
        for (const auto& [index, value] : image.terms()) {
            const auto it = std::find(target.begin(), target.end(), index);
            if (it == target.end())
                throw Error(ErrorCode::StepMatrixMismatch, "image term left the next height slice");
            step(static_cast<std::size_t>(it - target.begin()), col) = value;
        }
    }
    return step;
}

HermitePoly kernel_basis_psi(int n, int k, const OUContext& ctx) {
    require_d3(ctx);
    const int r = n / 2;
    if (k < 0 || k > r) throw Error(ErrorCode::BadIndex, "kernel index outside 0..r");

    const std::vector<MultiIndex> span = height_slice(n, 2 * (n - k));
    if (span.size() != static_cast<std::size_t>(k) + 1)
        throw Error(ErrorCode::KernelCheckFailed, "unexpected slice dimension");

    // span[i] = (k-i, 2i, n-k-i); closed-form coefficient (-2)^{k-i} C(k,i).
    std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1);
    HermitePoly psi(3, ctx.rho);
    for (int i = 0; i <= k; ++i) {
        coeffs[static_cast<std::size_t>(i)] = signed_power_of_two(k - i) * Rational(binomial(k, i));
        psi.add_term(span[static_cast<std::size_t>(i)], coeffs[static_cast<std::size_t>(i)]);
    }

    // Double-entry bookkeeping: rebuild the homogeneous system from the
    // operator, check it is the expected bidiagonal band, and confirm a
    // 1-dimensional kernel containing the closed form.
    const std::vector<MultiIndex> image_basis = height_slice(n, 2 * (n - k) + 1);
    ExactMatrix system(image_basis.size(), span.size());
    for (std::size_t col = 0; col < span.size(); ++col) {
        const HermitePoly image =
            apply_projected(HermitePoly::basis(span[col], ctx.rho), n, ctx);
        for (const auto& [index, value] : image.terms()) {
            const auto it = std::find(image_basis.begin(), image_basis.end(), index);
            if (it == image_basis.end())
                throw Error(ErrorCode::KernelCheckFailed, "image term left the next height slice");
            system(static_cast<std::size_t>(it - image_basis.begin()), col) = value;
        }
    }
    ExactMatrix band(system.rows(), system.cols());
    for (int t = 0; t < k; ++t) {
        band(static_cast<std::size_t>(t), static_cast<std::size_t>(t)) = -(k - t);
        band(static_cast<std::size_t>(t), static_cast<std::size_t>(t) + 1) = -2 * (t + 1);
    }
    if (system != band)
        throw Error(ErrorCode::KernelCheckFailed, "system is not the bidiagonal band");
    if (kernel_dimension(system) != 1)
        throw Error(ErrorCode::KernelCheckFailed, "system kernel is not 1-dimensional");
    for (const Rational& entry : system.apply(coeffs))
        if (entry != 0)
            throw Error(ErrorCode::KernelCheckFailed, "closed form does not solve the system");

    if (!apply_projected(psi, n, ctx).is_zero())
        throw Error(ErrorCode::KernelCheckFailed, "psi is not annihilated at grade n");
    return psi;
}

HermitePoly solve_projected(const HermitePoly& g, int m, const OUContext& ctx) {
    require_d3(ctx);
    if (m == ctx.level)
        throw Error(ErrorCode::GradeEqualsLevel, "diagonal vanishes at grade n");
    if (!g.is_homogeneous(m))
        throw Error(ErrorCode::NotHomogeneous, "right-hand side is not homogeneous of the grade");

    // In canonical order the system is lower triangular with diagonal
    // (m-n)c: a vertex only feeds vertices later in the order.
    const std::vector<MultiIndex> basis = indices_of_degree(3, m);
    ExactMatrix lower(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const HermitePoly image = apply_projected(HermitePoly::basis(basis[col], ctx.rho), m, ctx);
        for (const auto& [index, value] : image.terms()) {
            const auto it = std::find(basis.begin(), basis.end(), index);
            lower(static_cast<std::size_t>(it - basis.begin()), col) = value;
        }
    }

    const std::vector<Rational> x = solve_lower_triangular(lower, coefficients_on(g, basis));
    HermitePoly f(3, ctx.rho);
    for (std::size_t p = 0; p < basis.size(); ++p) f.add_term(basis[p], x[p]);
    return f;
}

HermitePoly solve_inhomogeneous(const HermitePoly& g, const OUContext& ctx) {
    require_d3(ctx);
    for (const int grade : g.degree_support())
        if (grade >= ctx.level && (grade - ctx.level) % 2 == 0)
            throw Error(ErrorCode::ObstructedRHS,
                        "right-hand side has a component in grade " + std::to_string(grade));

    // Cascade grade by grade from the top; each step clears one grade and
    // pushes a correction two grades down. Grade n is never reached: the
    // precondition excludes every grade n + 2s.
    HermitePoly f(3, ctx.rho);
    HermitePoly remainder = g;
    while (!remainder.is_zero()) {
        const int m = remainder.top_degree();
        const HermitePoly fm = solve_projected(remainder.project(m), m, ctx);
        f += fm;
        remainder -= apply_shifted(fm, ctx);
    }

    if (apply_shifted(f, ctx) != g)
        throw Error(ErrorCode::VerificationFailed, "solution does not reproduce the right-hand side");
    return f;
}

KernelElement eigenfunction(int n, int k, const OUContext& ctx) {
    require_d3(ctx);
    if (ctx.level != n) throw Error(ErrorCode::BadIndex, "context level does not match n");

    KernelElement element{n, k, kernel_basis_psi(n, k, ctx), HermitePoly(3, ctx.rho)};
    const HermitePoly rhs = -apply_projected_lower(element.psi, n, ctx);
    element.h = element.psi + solve_inhomogeneous(rhs, ctx);
    if (!apply_shifted(element.h, ctx).is_zero())
        throw Error(ErrorCode::EigenCheckFailed, "constructed h_k is not an eigenfunction");
    return element;
}

namespace {

// Displayed step patterns. p runs over rows/columns of the bidiagonal band.
ExactMatrix pattern_A(int n, int r, int k) {
    const bool odd = n % 2 != 0;
    const std::size_t size = static_cast<std::size_t>(r + 1 - k);
    ExactMatrix m(size, size);
    for (std::size_t p = 0; p < size; ++p) {
        m(p, p) = (odd ? r + k + 1 : r + k) - static_cast<long>(p);
        if (p + 1 < size) m(p, p + 1) = 2 * (static_cast<long>(p) + 1);
    }
    return m;
}

ExactMatrix pattern_D(int r, int k) {
    // same band for both parities
    const std::size_t size = static_cast<std::size_t>(r + 1 - k);
    ExactMatrix m(size, size);
    for (std::size_t p = 0; p < size; ++p) {
        m(p, p) = 2 * static_cast<long>(p) + 1;
        if (p + 1 < size) m(p + 1, p) = r - k - static_cast<long>(p);
    }
    return m;
}

ExactMatrix pattern_B(int n, int r, int k) {
    const bool odd = n % 2 != 0;
    const std::size_t rows = static_cast<std::size_t>(r + 2 - k);
    const std::size_t cols = static_cast<std::size_t>(r + 1 - k);
    ExactMatrix m(rows, cols);
    for (std::size_t p = 0; p < cols; ++p) m(p, p) = 2 * static_cast<long>(p) + 1;
    for (std::size_t p = 1; p < rows; ++p)
        m(p, p - 1) = (odd ? r + k + 1 : r + k) - static_cast<long>(p);
    return m;
}

ExactMatrix pattern_C(int r, int k) {
    const std::size_t rows = static_cast<std::size_t>(r + 1 - k);
    const std::size_t cols = static_cast<std::size_t>(r + 2 - k);
    ExactMatrix m(rows, cols);
    for (std::size_t p = 0; p < rows; ++p) {
        m(p, p) = r - k + 1 - static_cast<long>(p);
        m(p, p + 1) = 2 * (static_cast<long>(p) + 1);
    }
    return m;
}

// Which displayed pattern covers the height-h step. Every one of the 2n
// steps is covered exactly once:
//   odd n:  A_k at h = 2(r-k), B_k at 2(r-k)+1, C_k at 2(r+k), D_k at 2(r+k)+1
//   even n: A_k at h = 2(r-k), B_k at 2(r-k)+1, C_k at 2(r+k-1), D_k at 2(r+k)-1
struct StepAssignment {
    char name;
    int k;
};

StepAssignment assign_step(int n, int h) {
    const int r = n / 2;
    const bool odd = n % 2 != 0;
    if (odd) {
        if (h % 2 == 0)
            return h <= 2 * r ? StepAssignment{'A', r - h / 2} : StepAssignment{'C', h / 2 - r};
        return h < n ? StepAssignment{'B', r - (h - 1) / 2} : StepAssignment{'D', (h - 1) / 2 - r};
    }
    if (h % 2 == 0)
        return h < n ? StepAssignment{'A', r - h / 2} : StepAssignment{'C', h / 2 - r + 1};
    return h < n ? StepAssignment{'B', r - (h - 1) / 2} : StepAssignment{'D', (h + 1) / 2 - r};
}

} // namespace

TransitionMatrices transition_matrices(int n) {
    if (n < 1) throw Error(ErrorCode::BadIndex, "transition matrices need n >= 1");
    const int r = n / 2;
    const bool odd = n % 2 != 0;

    TransitionMatrices t;
    t.n = n;
    t.odd = odd;
    t.A.resize(static_cast<std::size_t>(r) + 1);
    t.B.resize(static_cast<std::size_t>(r) + 1);
    t.C.resize(static_cast<std::size_t>(r) + 1);
    t.D.resize(static_cast<std::size_t>(r) + 1);

    const int first = odd ? 0 : 1;
    for (int k = first; k <= r; ++k) {
        t.A[static_cast<std::size_t>(k)] = pattern_A(n, r, k);
        t.D[static_cast<std::size_t>(k)] = pattern_D(r, k);
    }
    for (int k = 1; k <= r; ++k) {
        t.B[static_cast<std::size_t>(k)] = pattern_B(n, r, k);
        t.C[static_cast<std::size_t>(k)] = pattern_C(r, k);
    }

    // Every pattern must reproduce the operator-derived step, up to the sign
    // carried by each single application.
    for (int h = 0; h < 2 * n; ++h) {
        const StepAssignment which = assign_step(n, h);
        const std::optional<ExactMatrix>* bank = nullptr;
        switch (which.name) {
        case 'A': bank = &t.A[static_cast<std::size_t>(which.k)]; break;
        case 'B': bank = &t.B[static_cast<std::size_t>(which.k)]; break;
        case 'C': bank = &t.C[static_cast<std::size_t>(which.k)]; break;
        case 'D': bank = &t.D[static_cast<std::size_t>(which.k)]; break;
        }
        if (!bank || !bank->has_value())
            throw Error(ErrorCode::StepMatrixMismatch, "no pattern assigned to height step");
        const ExactMatrix derived = derived_step_matrix(n, h);
        if (derived != -(bank->value()))
            throw Error(ErrorCode::StepMatrixMismatch,
                        std::string("pattern ") + which.name + "_" + std::to_string(which.k) +
                            " does not match the derived step at height " + std::to_string(h) +
                            ": derived\n" + derived.to_text() + "\nvs pattern\n" +
                            bank->value().to_text());
    }

    t.S.reserve(static_cast<std::size_t>(r) + 1);
    t.S.push_back(odd ? t.D[0].value() * t.A[0].value()
                      : ExactMatrix::identity(static_cast<std::size_t>(r) + 1));
    for (int k = 1; k <= r; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        t.S.push_back(t.D[uk].value() * t.C[uk].value() * t.S[uk - 1] * t.B[uk].value() *
                      t.A[uk].value());
    }
    return t;
}

JordanChain3D lead_vector(int n, int k, const OUContext& ctx) {
    require_d3(ctx);
    if (ctx.level != n) throw Error(ErrorCode::BadIndex, "context level does not match n");
    const int r = n / 2;
    if (k < 0 || k > r) throw Error(ErrorCode::BadIndex, "chain index outside 0..r");

    const int q = 2 * n + 1 - 4 * k;
    const int steps = q - 1;
    const KernelElement kernel = eigenfunction(n, k, ctx);

    // Equation for the top-grade part: iterate the projected operator from
    // the height-2k slice to the height-2(n-k) slice and solve the resulting
    // square system against psi_k. Nonsingularity is the transition-matrix
    // statement.
    const std::vector<MultiIndex> domain = height_slice(n, 2 * k);
    const std::vector<MultiIndex> target = height_slice(n, 2 * (n - k));
    ExactMatrix evolution(target.size(), domain.size());
    for (std::size_t col = 0; col < domain.size(); ++col) {
        HermitePoly image = HermitePoly::basis(domain[col], ctx.rho);
        for (int t = 0; t < steps; ++t) image = apply_projected(image, n, ctx);
        const auto column = coefficients_on(image, target);
        for (std::size_t row = 0; row < target.size(); ++row) evolution(row, col) = column[row];
    }
    const std::vector<Rational> top_coeffs =
        solve(evolution, coefficients_on(kernel.psi, target));

    HermitePoly phi(3, ctx.rho);
    for (std::size_t p = 0; p < domain.size(); ++p) phi.add_term(domain[p], top_coeffs[p]);

    // The remaining equation lives entirely below grade n; peel it one
    // operator application at a time with the degree-matched solver.
    HermitePoly residual = kernel.h - apply_power(phi, ctx, steps);
    if (!residual.project(n).is_zero())
        throw Error(ErrorCode::ChainCheckFailed, "residual has a grade-n component");
    HermitePoly tail = residual;
    for (int t = 0; t < steps; ++t) tail = solve_inhomogeneous(tail, ctx);

    JordanChain3D chain{n, k, q, phi + tail, {}};
    chain.elements.push_back(chain.lead);
    for (int j = 1; j < q; ++j) chain.elements.push_back(apply_shifted(chain.elements.back(), ctx));

    if (chain.elements.back() != kernel.h || kernel.h.is_zero())
        throw Error(ErrorCode::ChainCheckFailed, "chain does not end at the eigenfunction");
    if (!apply_shifted(chain.elements.back(), ctx).is_zero())
        throw Error(ErrorCode::ChainCheckFailed, "chain does not terminate");
    return chain;
}

Jordan3DReport jordan_basis(int n, const OUContext& ctx) {
    require_d3(ctx);
    if (ctx.level != n) throw Error(ErrorCode::BadIndex, "context level does not match n");
    const int r = n / 2;

    Jordan3DReport report;
    report.n = n;
    report.geometric = r + 1;
    report.algebraic = static_cast<int>(binomial(n + 2, 2));

    int total = 0;
    for (int k = 0; k <= r; ++k) {
        report.chains.push_back(lead_vector(n, k, ctx));
        report.segre.push_back(report.chains.back().q);
        total += report.chains.back().q;
    }
    if (total != report.algebraic)
        throw Error(ErrorCode::SumMismatch, "chain lengths do not sum to the algebraic multiplicity");

    // Exact independence of all chain elements together.
    const std::vector<MultiIndex> basis = indices_up_to_degree(3, n);
    ExactMatrix coefficient_matrix(static_cast<std::size_t>(total), basis.size());
    std::size_t row = 0;
    for (const JordanChain3D& chain : report.chains)
        for (const HermitePoly& element : chain.elements) {
            for (const auto& [index, value] : element.terms()) {
                const auto it = std::find(basis.begin(), basis.end(), index);
                coefficient_matrix(row, static_cast<std::size_t>(it - basis.begin())) = value;
            }
            ++row;
        }
    if (rank(coefficient_matrix) != static_cast<std::size_t>(total))
        throw Error(ErrorCode::RankDeficient, "chain elements are linearly dependent");

    if (n >= 1) report.conjecture = conjecture_check(n);
    return report;
}

namespace {

void scan_minors(const ExactMatrix& m, const std::string& name, int k, int max_size,
                 MinorsReport& report) {
    const std::size_t limit = std::min(m.rows(), m.cols());
    const std::size_t top = std::min<std::size_t>(limit, static_cast<std::size_t>(max_size));
    if (top == 0) return;

    const auto record = [&](const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) {
        const Rational value = minor(m, rows, cols);
        ++report.minors_checked;
        if (value < 0) report.negative.push_back({name, k, rows, cols, value});
    };

    if (std::max(m.rows(), m.cols()) <= 6) {
        // Exhaustive: walk all strictly increasing selections per size.
        const auto enumerate = [](std::size_t from, std::size_t size) {
            std::vector<std::vector<std::size_t>> out;
            std::vector<std::size_t> current;
            const auto recurse = [&](auto&& self, std::size_t start) -> void {
                if (current.size() == size) {
                    out.push_back(current);
                    return;
                }
                for (std::size_t i = start; i < from; ++i) {
                    current.push_back(i);
                    self(self, i + 1);
                    current.pop_back();
                }
            };
            recurse(recurse, 0);
            return out;
        };
        for (std::size_t size = 1; size <= top; ++size)
            for (const auto& rows : enumerate(m.rows(), size))
                for (const auto& cols : enumerate(m.cols(), size)) record(rows, cols);
        return;
    }

    // Deterministic uniform sampling for larger matrices.
    std::seed_seq seed{report.n, k, static_cast<int>(name[0]), max_size};
    std::mt19937_64 rng(seed);
    const auto pick = [&](std::size_t from, std::size_t size) {
        std::vector<std::size_t> all(from);
        for (std::size_t i = 0; i < from; ++i) all[i] = i;
        std::vector<std::size_t> chosen;
        std::sample(all.begin(), all.end(), std::back_inserter(chosen), size, rng);
        return chosen;
    };
    std::uniform_int_distribution<std::size_t> size_dist(1, top);
    for (int draw = 0; draw < 500; ++draw) {
        const std::size_t size = size_dist(rng);
        record(pick(m.rows(), size), pick(m.cols(), size));
    }
}

} // namespace

MinorsReport minors_report(int n, int max_size) {
    const TransitionMatrices t = transition_matrices(n);
    const int r = n / 2;

    MinorsReport report;
    report.n = n;
    for (int k = 0; k <= r; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        if (t.A[uk]) scan_minors(*t.A[uk], "A", k, max_size, report);
        if (t.B[uk]) scan_minors(*t.B[uk], "B", k, max_size, report);
        if (t.C[uk]) scan_minors(*t.C[uk], "C", k, max_size, report);
        if (t.D[uk]) scan_minors(*t.D[uk], "D", k, max_size, report);
        scan_minors(t.S[uk], "S", k, max_size, report);
        report.s_determinants.push_back(determinant(t.S[uk]));
    }
    report.all_s_positive =
        std::all_of(report.s_determinants.begin(), report.s_determinants.end(),
                    [](const Rational& det) { return det > 0; });
    return report;
}

std::vector<ConjectureRow> conjecture_check(int n) {
    const TransitionMatrices t = transition_matrices(n);
    const int r = n / 2;
    const bool odd = n % 2 != 0;

    std::vector<ConjectureRow> rows;
    Rational lambda = 1;
    for (int k = 0; k <= r; ++k) {
        if (k > 0) {
            // odd n: lambda_k = 2k(2k+1)(4k-1)(4k+1) lambda_{k-1}
            // even n: lambda_k = 2k(2k-1)(4k-3)(4k-1) lambda_{k-1}
            lambda *= odd ? Rational(2 * k) * (2 * k + 1) * (4 * k - 1) * (4 * k + 1)
                          : Rational(2 * k) * (2 * k - 1) * (4 * k - 3) * (4 * k - 1);
        }

        const int m = r - k;
        std::vector<Rational> u(static_cast<std::size_t>(m) + 1);
        for (int i = 0; i <= m; ++i)
            u[static_cast<std::size_t>(i)] = signed_power_of_two(m - i) * Rational(binomial(m, i));

        const ExactMatrix& s = t.S[static_cast<std::size_t>(k)];
        const std::vector<Rational> image = s.apply(u);

        ConjectureRow row;
        row.k = k;
        row.lambda = lambda;
        row.holds = true;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (image[i] != lambda * u[i]) row.holds = false;

        // Actual ratio, reported so a mispaired lambda would still be visible.
        std::optional<Rational> ratio;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i] != 0) {
                ratio = image[i] / u[i];
                break;
            }
        if (ratio)
            for (std::size_t i = 0; i < u.size(); ++i)
                if (image[i] != *ratio * u[i]) {
                    ratio.reset();
                    break;
                }
        row.ratio = ratio;
        row.char_poly = characteristic_polynomial(s);
        rows.push_back(row);
    }
    return rows;
}

} // namespace oujordan
