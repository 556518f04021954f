#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oujordan/basis_dag.hpp"
#include "oujordan/jordan3d.hpp"

using namespace oujordan;

namespace {

HermitePoly random_homogeneous(std::mt19937_64& rng, int grade, const Rational& rho) {
    std::uniform_int_distribution<long> num(-3, 3);
    HermitePoly p(3, rho);
    for (const MultiIndex& index : indices_of_degree(3, grade)) p.add_term(index, Rational(num(rng)));
    return p;
}

} // namespace

TEST_CASE("kernel basis closed form") {
    const OUContext ctx2(3, 2);
    const HermitePoly psi_0 = kernel_basis_psi(2, 0, ctx2);
    CHECK(psi_0 == HermitePoly::basis(MultiIndex{0, 0, 2}, ctx2.rho)); // H_n(z)

    const HermitePoly psi_1 = kernel_basis_psi(2, 1, ctx2);
    CHECK(psi_1.coeff(MultiIndex{1, 0, 1}) == -2);
    CHECK(psi_1.coeff(MultiIndex{0, 2, 0}) == 1);
    CHECK(psi_1.terms().size() == 2);

    const OUContext ctx3(3, 3);
    const HermitePoly psi_31 = kernel_basis_psi(3, 1, ctx3);
    CHECK(psi_31.coeff(MultiIndex{1, 0, 2}) == -2);
    CHECK(psi_31.coeff(MultiIndex{0, 2, 1}) == 1);
    CHECK(psi_31.terms().size() == 2);

    CHECK_THROWS_AS(kernel_basis_psi(2, 2, ctx2), Error);
}

TEST_CASE("kernel identity at grade n") {
    for (int n = 0; n <= 10; ++n) {
        const OUContext ctx(3, n, Rational(2), Rational(3));
        for (int k = 0; k <= n / 2; ++k)
            CHECK(apply_projected(kernel_basis_psi(n, k, ctx), n, ctx).is_zero());
    }
}

TEST_CASE("projected solver") {
    const OUContext ctx(3, 2);
    // m=0, n=2: the single equation (0-2)c a = 1
    const HermitePoly one = HermitePoly::constant(3, ctx.rho, Rational(1));
    const HermitePoly f = solve_projected(one, 0, ctx);
    CHECK(f.coeff(MultiIndex{0, 0, 0}) == Rational(-1, 2));

    CHECK(solve_projected(HermitePoly(3, ctx.rho), 1, ctx).is_zero());
    CHECK_THROWS_AS(solve_projected(one, 2, ctx), Error); // grade equals level
    HermitePoly mixed = one;
    mixed.add_term(MultiIndex{1, 0, 0}, Rational(1));
    CHECK_THROWS_AS(solve_projected(mixed, 0, ctx), Error); // not homogeneous

    // m=1, n=3, g = H_1(y)
    const OUContext ctx3(3, 3);
    const HermitePoly g = HermitePoly::basis(MultiIndex{0, 1, 0}, ctx3.rho);
    const HermitePoly f3 = solve_projected(g, 1, ctx3);
    CHECK(f3.coeff(MultiIndex{0, 1, 0}) == Rational(-1, 2));
    CHECK(apply_projected(f3, 1, ctx3) == g);
}

TEST_CASE("projected solver on random right-hand sides") {
    std::mt19937_64 rng(71);
    for (int n = 0; n <= 8; n += 2) {
        const OUContext ctx(3, n, Rational(3, 2), Rational(1));
        for (int m = 0; m <= 8; ++m) {
            if (m == n) continue;
            const HermitePoly g = random_homogeneous(rng, m, ctx.rho);
            const HermitePoly f = solve_projected(g, m, ctx);
            CHECK(apply_projected(f, m, ctx) == g);
        }
    }
}

TEST_CASE("degree-matched inhomogeneous solver") {
    const OUContext ctx(3, 1);
    CHECK(solve_inhomogeneous(HermitePoly(3, ctx.rho), ctx).is_zero());

    // any grade-n component is refused, z (the eigenspace) included: the
    // grade-n equation is not uniquely solvable there
    HermitePoly minus_y(3, ctx.rho);
    minus_y.add_term(MultiIndex{0, 1, 0}, Rational(-1));
    CHECK_THROWS_AS(solve_inhomogeneous(minus_y, ctx), Error);
    CHECK_THROWS_AS(solve_inhomogeneous(HermitePoly::basis(MultiIndex{0, 0, 1}, ctx.rho), ctx),
                    Error);
    try {
        solve_inhomogeneous(minus_y, ctx);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ObstructedRHS);
    }

    // the grade-2 image of x^2-like data at level 4 comes back exactly
    const OUContext ctx4(3, 4);
    const HermitePoly f = HermitePoly::basis(MultiIndex{1, 1, 0}, ctx4.rho);
    const HermitePoly g4 = apply_shifted(f, ctx4);
    CHECK(solve_inhomogeneous(g4, ctx4) == f);
    // grade n+2 components are obstructed too
    CHECK_THROWS_AS(solve_inhomogeneous(HermitePoly::basis(MultiIndex{3, 0, 0}, ctx.rho), ctx),
                    Error);
}

TEST_CASE("inhomogeneous solver on random admissible right-hand sides") {
    std::mt19937_64 rng(73);
    for (int n = 2; n <= 8; ++n) {
        const OUContext ctx(3, n, Rational(1), Rational(2));
        // admissible support: anything strictly below n
        HermitePoly g(3, ctx.rho);
        g += random_homogeneous(rng, n - 1, ctx.rho);
        g += random_homogeneous(rng, n - 2, ctx.rho);
        if (n >= 4) g += random_homogeneous(rng, n - 4, ctx.rho);
        const HermitePoly f = solve_inhomogeneous(g, ctx);
        CHECK(apply_shifted(f, ctx) == g);
        CHECK(f.top_degree() == g.top_degree());
    }
}

TEST_CASE("eigenfunctions") {
    // n=1, k=0: h = z
    const OUContext ctx1(3, 1);
    CHECK(eigenfunction(1, 0, ctx1).h == HermitePoly::basis(MultiIndex{0, 0, 1}, ctx1.rho));

    // n=2, k=1: h = -2xz + y^2 - rho; the grade-0 correction vanishes
    const OUContext ctx2(3, 2);
    const KernelElement e21 = eigenfunction(2, 1, ctx2);
    CHECK(e21.h == e21.psi);
    CHECK(apply_shifted(e21.h, ctx2).is_zero());

    // n=2, k=0: construction runs and the equation closes (the correction
    // happens to vanish: H_2(z) is already an eigenfunction)
    const KernelElement e20 = eigenfunction(2, 0, ctx2);
    CHECK(e20.h == HermitePoly::basis(MultiIndex{0, 0, 2}, ctx2.rho));
    CHECK(apply_shifted(e20.h, ctx2).is_zero());

    // n=3, k=1: the first nontrivial lower-grade correction
    const OUContext ctx3(3, 3);
    const KernelElement e31 = eigenfunction(3, 1, ctx3);
    CHECK(e31.h.project(3) == e31.psi);
    CHECK(!(e31.h - e31.psi).is_zero());
    CHECK(apply_shifted(e31.h, ctx3).is_zero());
}

TEST_CASE("eigenfunction formula and eigen-equation for n <= 8") {
    for (int n = 0; n <= 8; ++n) {
        const OUContext ctx(3, n, Rational(2), Rational(1));
        for (int k = 0; k <= n / 2; ++k) {
            const KernelElement element = eigenfunction(n, k, ctx);
            CHECK(element.h.project(n) == element.psi);
            CHECK(apply_shifted(element.h, ctx).is_zero());
            // spectral subspace grading: supports only at n, n-2, n-4, ...
            for (int grade : element.h.degree_support()) CHECK((n - grade) % 2 == 0);
        }
    }
}

TEST_CASE("eigenspace has full rank") {
    const int n = 6;
    const OUContext ctx(3, n);
    const auto basis = indices_up_to_degree(3, n);
    ExactMatrix coefficients(static_cast<std::size_t>(n / 2) + 1, basis.size());
    for (int k = 0; k <= n / 2; ++k) {
        const KernelElement element = eigenfunction(n, k, ctx);
        for (std::size_t col = 0; col < basis.size(); ++col)
            coefficients(static_cast<std::size_t>(k), col) = element.h.coeff(basis[col]);
    }
    CHECK(rank(coefficients) == static_cast<std::size_t>(n / 2) + 1);
}

TEST_CASE("transition matrices at n=3") {
    const TransitionMatrices t = transition_matrices(3);
    REQUIRE(t.odd);
    REQUIRE(t.A[0].has_value());
    const ExactMatrix expected_a0(2, 2, {Rational(2), Rational(2), Rational(0), Rational(1)});
    const ExactMatrix expected_d0(2, 2, {Rational(1), Rational(0), Rational(1), Rational(3)});
    const ExactMatrix expected_s0(2, 2, {Rational(2), Rational(2), Rational(2), Rational(5)});
    CHECK(*t.A[0] == expected_a0);
    CHECK(*t.D[0] == expected_d0);
    CHECK(t.S[0] == expected_s0);
    CHECK(determinant(t.S[0]) == 6);
    CHECK(t.S[1] == ExactMatrix(1, 1, {Rational(90)}));
}

TEST_CASE("transition matrices at n=1 and n=2") {
    const TransitionMatrices one = transition_matrices(1);
    CHECK(one.S[0] == ExactMatrix(1, 1, {Rational(1)}));
    CHECK(*one.A[0] == ExactMatrix(1, 1, {Rational(1)}));
    CHECK(*one.D[0] == ExactMatrix(1, 1, {Rational(1)}));

    const TransitionMatrices two = transition_matrices(2);
    CHECK_FALSE(two.odd);
    CHECK(two.S[0] == ExactMatrix::identity(2));
    CHECK(two.S[1] == ExactMatrix(1, 1, {Rational(6)}));
}

TEST_CASE("derived step matrices compose to the transition matrices") {
    for (int n = 1; n <= 8; ++n) {
        const int r = n / 2;
        const TransitionMatrices t = transition_matrices(n); // validates patterns internally
        for (int k = 0; k <= r; ++k) {
            // evolution from height 2k' to 2(n-k') for the chain k' = r-k is
            // +S[k]: the sign cancels over the even number of steps
            const int chain_k = r - k;
            ExactMatrix product = ExactMatrix::identity(
                static_cast<std::size_t>(chain_k) + 1);
            for (int h = 2 * chain_k; h < 2 * (n - chain_k); ++h)
                product = derived_step_matrix(n, h) * product;
            CHECK(product == t.S[static_cast<std::size_t>(k)]);
        }
    }
}

TEST_CASE("transition matrices are nonsingular with positive determinant") {
    for (int n = 1; n <= 10; ++n) {
        const TransitionMatrices t = transition_matrices(n);
        for (const ExactMatrix& s : t.S) CHECK(determinant(s) > 0);
    }
}

TEST_CASE("lead vectors and chains at small levels") {
    // n=1: chain x, -y, z
    const OUContext ctx1(3, 1);
    const JordanChain3D chain1 = lead_vector(1, 0, ctx1);
    CHECK(chain1.q == 3);
    CHECK(chain1.lead == HermitePoly::basis(MultiIndex{1, 0, 0}, ctx1.rho));
    HermitePoly minus_y(3, ctx1.rho);
    minus_y.add_term(MultiIndex{0, 1, 0}, Rational(-1));
    CHECK(chain1.elements[1] == minus_y);
    CHECK(chain1.elements[2] == HermitePoly::basis(MultiIndex{0, 0, 1}, ctx1.rho));

    // n=2, k=1: q=1, the lead vector is the eigenfunction itself
    const OUContext ctx2(3, 2);
    const JordanChain3D chain21 = lead_vector(2, 1, ctx2);
    CHECK(chain21.q == 1);
    CHECK(chain21.lead == eigenfunction(2, 1, ctx2).h);

    // n=2, k=0: q=5; dies at 5 applications and not at 4
    const JordanChain3D chain20 = lead_vector(2, 0, ctx2);
    CHECK(chain20.q == 5);
    CHECK(apply_power(chain20.lead, ctx2, 5).is_zero());
    CHECK(!apply_power(chain20.lead, ctx2, 4).is_zero());

    // n=0: single constant chain
    const OUContext ctx0(3, 0);
    const JordanChain3D chain0 = lead_vector(0, 0, ctx0);
    CHECK(chain0.q == 1);
    CHECK(chain0.lead == HermitePoly::constant(3, ctx0.rho, Rational(1)));
}

TEST_CASE("chain identities for n <= 6") {
    for (const auto& [c, sigma2] :
         std::vector<std::pair<Rational, Rational>>{{Rational(1), Rational(1)},
                                                    {Rational(1), Rational(3)}})
        for (int n = 0; n <= 6; ++n) {
            const OUContext ctx(3, n, c, sigma2);
            for (int k = 0; k <= n / 2; ++k) {
                const JordanChain3D chain = lead_vector(n, k, ctx);
                const KernelElement element = eigenfunction(n, k, ctx);
                CHECK(chain.q == 2 * n + 1 - 4 * k);
                CHECK(apply_power(chain.lead, ctx, chain.q).is_zero());
                CHECK(apply_power(chain.lead, ctx, chain.q - 1) == element.h);
                CHECK(!element.h.is_zero());
                for (const HermitePoly& e : chain.elements)
                    for (int grade : e.degree_support()) CHECK((n - grade) % 2 == 0);
            }
        }
}

TEST_CASE("full report") {
    const OUContext ctx2(3, 2);
    const Jordan3DReport report2 = jordan_basis(2, ctx2);
    CHECK(report2.segre == std::vector<int>{5, 1});
    CHECK(report2.algebraic == 6);
    CHECK(report2.geometric == 2);

    const OUContext ctx4(3, 4);
    const Jordan3DReport report4 = jordan_basis(4, ctx4);
    CHECK(report4.segre == std::vector<int>{9, 5, 1});
    CHECK(report4.algebraic == 15);

    const OUContext ctx0(3, 0);
    const Jordan3DReport report0 = jordan_basis(0, ctx0);
    CHECK(report0.segre == std::vector<int>{1});
    CHECK(report0.chains.size() == 1);
}

TEST_CASE("minors report") {
    const MinorsReport n3 = minors_report(3, 6);
    CHECK(n3.negative.empty());
    CHECK(n3.all_s_positive);
    CHECK(n3.s_determinants[0] == 6);

    // the full minor multiset of S_0 = [[2,2],[2,5]] is {2,2,2,5,6}
    const TransitionMatrices t3 = transition_matrices(3);
    std::vector<Rational> minors_of_s0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) minors_of_s0.push_back(minor(t3.S[0], {i}, {j}));
    minors_of_s0.push_back(minor(t3.S[0], {0, 1}, {0, 1}));
    std::sort(minors_of_s0.begin(), minors_of_s0.end());
    CHECK(minors_of_s0 ==
          std::vector<Rational>{Rational(2), Rational(2), Rational(2), Rational(5), Rational(6)});

    const MinorsReport n1 = minors_report(1, 6);
    CHECK(n1.negative.empty());

    for (int n = 1; n <= 9; ++n) {
        const MinorsReport report = minors_report(n, 6);
        CHECK(report.negative.empty());
        CHECK(report.all_s_positive);
    }
}

TEST_CASE("argument validation") {
    const OUContext ctx(3, 2);
    CHECK_THROWS_AS(lead_vector(2, 2, ctx), Error);        // k > r
    CHECK_THROWS_AS(lead_vector(2, -1, ctx), Error);
    CHECK_THROWS_AS(lead_vector(3, 0, ctx), Error);        // level mismatch
    CHECK_THROWS_AS(eigenfunction(3, 0, ctx), Error);
    CHECK_THROWS_AS(jordan_basis(2, OUContext(2, 2)), Error); // wrong dimension
    CHECK_THROWS_AS(transition_matrices(0), Error);
    CHECK_THROWS_AS(conjecture_check(0), Error);

    CHECK_THROWS_AS(OUContext(1, 2), Error);
    CHECK_THROWS_AS(OUContext(3, -1), Error);
    CHECK_THROWS_AS(OUContext(3, 2, Rational(0), Rational(1)), Error);
    CHECK_THROWS_AS(OUContext(3, 2, Rational(1), Rational(-1)), Error);
}

TEST_CASE("conjecture experiment") {
    const auto rows3 = conjecture_check(3);
    REQUIRE(rows3.size() == 2);
    CHECK(rows3[0].k == 0);
    CHECK(rows3[0].lambda == 1);
    CHECK(rows3[0].holds);
    CHECK(rows3[1].lambda == 90); // 2*1*3*3*5 for odd n
    CHECK(rows3[1].holds);

    const auto rows1 = conjecture_check(1);
    REQUIRE(rows1.size() == 1);
    CHECK(rows1[0].holds);
    CHECK(rows1[0].lambda == 1);

    // The sweep is an experiment: outcomes are reported, not asserted. The
    // test only pins the internal consistency of the report.
    int held = 0, total = 0;
    for (int n = 1; n <= 10; ++n)
        for (const ConjectureRow& row : conjecture_check(n)) {
            ++total;
            held += row.holds ? 1 : 0;
            CHECK(row.holds == (row.ratio.has_value() && *row.ratio == row.lambda));
            if (row.holds) {
                // then lambda is an eigenvalue: a root of the char poly
                Rational value = 0;
                for (auto it = row.char_poly.rbegin(); it != row.char_poly.rend(); ++it)
                    value = value * row.lambda + *it;
                CHECK(value == 0);
            }
        }
    MESSAGE("conjecture outcome for n <= 10: ", held, " of ", total, " cases hold");
}
