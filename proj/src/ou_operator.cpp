#include "oujordan/ou_operator.hpp"

#include "oujordan/error.hpp"

namespace oujordan {

namespace {

void require_dim(const HermitePoly& p, const OUContext& ctx) {
    if (p.dim() != ctx.dim)
        throw Error(ErrorCode::DimensionMismatch, "polynomial dimension does not match context");
    if (p.rho() != ctx.rho)
        throw Error(ErrorCode::DimensionMismatch, "polynomial rho does not match context");
}

MultiIndex shifted_index(const MultiIndex& index, int var_a, int delta_a, int var_b, int delta_b) {
    MultiIndex result = index;
    result.entries[static_cast<std::size_t>(var_a)] += delta_a;
    result.entries[static_cast<std::size_t>(var_b)] += delta_b;
    return result;
}

// Coupling images of one basis term under x_{s+1} d/dx_s, s = 0..d-2.
// same_grade picks the H_{j+1} piece, lower_grade the j rho H_{j-1} piece.
template <typename Sink>
void for_each_coupling(const MultiIndex& index, const Rational& value, const Rational& rho,
                       bool same_grade, bool lower_grade, Sink&& sink) {
    const int d = index.dim();
    for (int s = 0; s + 1 < d; ++s) {
        const int i = index[s];
        if (i == 0) continue;
        const int j = index[s + 1];
        if (same_grade) sink(shifted_index(index, s, -1, s + 1, +1), value * i);
        if (lower_grade && j > 0)
            sink(shifted_index(index, s, -1, s + 1, -1), value * i * j * rho);
    }
}

} // namespace

HermitePoly apply_A(const HermitePoly& p, const OUContext& ctx) {
    require_dim(p, ctx);
    HermitePoly result(p.dim(), p.rho());
    for (const auto& [index, value] : p.terms()) {
        result.add_term(index, -ctx.c * index.degree() * value);
        for_each_coupling(index, value, ctx.rho, true, true,
                          [&](const MultiIndex& target, const Rational& coeff) {
                              result.add_term(target, coeff);
                          });
    }
    return result;
}

HermitePoly apply_shifted(const HermitePoly& p, const OUContext& ctx) {
    require_dim(p, ctx);
    HermitePoly result(p.dim(), p.rho());
    for (const auto& [index, value] : p.terms()) {
        result.add_term(index, (index.degree() - ctx.level) * ctx.c * value);
        for_each_coupling(index, value, ctx.rho, true, true,
                          [&](const MultiIndex& target, const Rational& coeff) {
                              result.add_term(target, -coeff);
                          });
    }
    return result;
}

HermitePoly apply_projected(const HermitePoly& p, int grade, const OUContext& ctx) {
    require_dim(p, ctx);
    HermitePoly result(p.dim(), p.rho());
    const Rational diagonal = (grade - ctx.level) * ctx.c;
    for (const auto& [index, value] : p.terms()) {
        if (index.degree() != grade) continue;
        result.add_term(index, diagonal * value);
        for_each_coupling(index, value, ctx.rho, true, false,
                          [&](const MultiIndex& target, const Rational& coeff) {
                              result.add_term(target, -coeff);
                          });
    }
    return result;
}

HermitePoly apply_projected_lower(const HermitePoly& p, int grade, const OUContext& ctx) {
    require_dim(p, ctx);
    HermitePoly result(p.dim(), p.rho());
    for (const auto& [index, value] : p.terms()) {
        if (index.degree() != grade) continue;
        for_each_coupling(index, value, ctx.rho, false, true,
                          [&](const MultiIndex& target, const Rational& coeff) {
                              result.add_term(target, -coeff);
                          });
    }
    return result;
}

HermitePoly apply_power(const HermitePoly& p, const OUContext& ctx, int t) {
    if (t < 0) throw Error(ErrorCode::BadIndex, "negative operator power");
    HermitePoly result = p;
    for (int i = 0; i < t; ++i) result = apply_shifted(result, ctx);
    return result;
}

} // namespace oujordan
