#include "oujordan/jordan2d.hpp"

#include "oujordan/error.hpp"

namespace oujordan {

namespace {

void require_d2(const OUContext& ctx) {
    if (ctx.dim != 2) throw Error(ErrorCode::DimensionMismatch, "requires a d=2 context");
}

} // namespace

HermitePoly g_poly(int i, const OUContext& ctx) {
    require_d2(ctx);
    if (i < 0) throw Error(ErrorCode::BadIndex, "negative generator index");
    HermitePoly result(2, ctx.rho);
    const Rational base = -ctx.rho / (2 * ctx.c * ctx.c);
    for (int j = 0; 2 * j <= i; ++j) {
        const Rational weight = rational_pow(Rational(1, 2), j) /
                                Rational(factorial(j) * factorial(i - 2 * j)) *
                                rational_pow(base, j);
        result.add_term(MultiIndex{i - 2 * j, 0}, weight);
    }
    return result;
}

bool verify_recursion(int i, const OUContext& ctx) {
    require_d2(ctx);
    if (i < 2) throw Error(ErrorCode::BadIndex, "recursion starts at i = 2");
    const HermitePoly gi = g_poly(i, ctx);
    // (-ic - A_2) G_i
    HermitePoly lhs = -Rational(i) * ctx.c * gi - apply_A(gi, ctx);
    HermitePoly rhs = -g_poly(i - 1, ctx).multiply_by_variable(1) +
                      ctx.rho / (2 * ctx.c) * g_poly(i - 2, ctx);
    return lhs == rhs;
}

HermitePoly closed_form_element(int n, int k, const OUContext& ctx) {
    require_d2(ctx);
    if (k < 0 || k > n) throw Error(ErrorCode::BadIndex, "chain position outside 0..n");
    HermitePoly result(2, ctx.rho);
    const Rational base = -ctx.rho / (2 * ctx.c);
    for (int i = std::max(0, n - 2 * k); i <= n - k; ++i) {
        const Rational weight = rational_pow(base, n - k - i) * Rational(binomial(k, n - k - i));
        if (weight == 0) continue;
        // G_i(x) H_{2k-n+i}(y)
        HermitePoly term = g_poly(i, ctx);
        const int y_deg = 2 * k - n + i;
        HermitePoly shifted(2, ctx.rho);
        for (const auto& [index, value] : term.terms())
            shifted.add_term(MultiIndex{index[0], y_deg}, value);
        result += weight * shifted;
    }
    if (k % 2 != 0) result *= Rational(-1);
    return result;
}

Chain2D build_chain_2d(int n, const OUContext& ctx) {
    require_d2(ctx);
    if (ctx.level != n) throw Error(ErrorCode::BadIndex, "context level does not match n");

    Chain2D chain;
    chain.n = n;
    chain.elements.push_back(g_poly(n, ctx));
    for (int k = 1; k <= n; ++k)
        chain.elements.push_back(apply_shifted(chain.elements.back(), ctx));
    for (int k = 0; k <= n; ++k)
        chain.closed_form.push_back(closed_form_element(n, k, ctx));

    for (int k = 0; k <= n; ++k)
        if (chain.elements[static_cast<std::size_t>(k)] != chain.closed_form[static_cast<std::size_t>(k)])
            throw Error(ErrorCode::MismatchWithClosedForm,
                        "iterate and closed form differ first at k = " + std::to_string(k));

    // The chain must end at (-1)^n H_n(y) and die on one more application.
    HermitePoly eigen(2, ctx.rho);
    eigen.add_term(MultiIndex{0, n}, n % 2 == 0 ? Rational(1) : Rational(-1));
    if (chain.elements.back() != eigen)
        throw Error(ErrorCode::MismatchWithClosedForm, "final element is not (-1)^n H_n(y)");
    if (!apply_shifted(chain.elements.back(), ctx).is_zero())
        throw Error(ErrorCode::MismatchWithClosedForm, "final element is not an eigenfunction");

    return chain;
}

} // namespace oujordan
