#include "oujordan/hermite.hpp"

#include "oujordan/error.hpp"

namespace oujordan {

HermitePoly HermitePoly::basis(const MultiIndex& index, const Rational& rho) {
    HermitePoly p(index.dim(), rho);
    p.add_term(index, 1);
    return p;
}

HermitePoly HermitePoly::constant(int dim, const Rational& rho, const Rational& value) {
    HermitePoly p(dim, rho);
    p.add_term(MultiIndex(std::vector<int>(static_cast<std::size_t>(dim), 0)), value);
    return p;
}

Rational HermitePoly::coeff(const MultiIndex& index) const {
    const auto it = terms_.find(index);
    return it == terms_.end() ? Rational(0) : it->second;
}

void HermitePoly::add_term(const MultiIndex& index, const Rational& value) {
    if (index.dim() != dim_)
        throw Error(ErrorCode::DimensionMismatch, "term index dimension mismatch");
    if (value == 0) return;
    const auto [it, inserted] = terms_.emplace(index, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

void HermitePoly::require_compatible(const HermitePoly& other) const {
    if (dim_ != other.dim_ || rho_ != other.rho_)
        throw Error(ErrorCode::DimensionMismatch, "operands differ in dimension or rho");
}

HermitePoly& HermitePoly::operator+=(const HermitePoly& other) {
    require_compatible(other);
    for (const auto& [index, value] : other.terms_) add_term(index, value);
    return *this;
}

HermitePoly& HermitePoly::operator-=(const HermitePoly& other) {
    require_compatible(other);
    for (const auto& [index, value] : other.terms_) add_term(index, -value);
    return *this;
}

HermitePoly& HermitePoly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [index, value] : terms_) value *= scalar;
    return *this;
}

HermitePoly HermitePoly::operator-() const {
    HermitePoly result = *this;
    for (auto& [index, value] : result.terms_) value = -value;
    return result;
}

HermitePoly HermitePoly::project(int grade) const {
    HermitePoly result(dim_, rho_);
    for (const auto& [index, value] : terms_)
        if (index.degree() == grade) result.terms_.emplace(index, value);
    return result;
}

bool HermitePoly::is_homogeneous(int grade) const {
    for (const auto& [index, value] : terms_)
        if (index.degree() != grade) return false;
    return true;
}

std::set<int> HermitePoly::degree_support() const {
    std::set<int> grades;
    for (const auto& [index, value] : terms_) grades.insert(index.degree());
    return grades;
}

Rational HermitePoly::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != dim_)
        throw Error(ErrorCode::DimensionMismatch, "point dimension mismatch");

    const auto eval_1d = [&](int n, const Rational& x) {
        const auto coeffs = hermite_1d(n, rho_);
        Rational value = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * x + *it;
        return value;
    };

    Rational total = 0;
    for (const auto& [index, value] : terms_) {
        Rational factor = value;
        for (int s = 0; s < dim_; ++s)
            if (factor != 0) factor *= eval_1d(index[s], point[static_cast<std::size_t>(s)]);
        total += factor;
    }
    return total;
}

HermitePoly HermitePoly::multiply_by_variable(int var) const {
    if (var < 0 || var >= dim_)
        throw Error(ErrorCode::BadIndex, "variable index out of range");
    HermitePoly result(dim_, rho_);
    for (const auto& [index, value] : terms_) {
        MultiIndex up = index;
        up.entries[static_cast<std::size_t>(var)] += 1;
        result.add_term(up, value);
        const int i = index[var];
        if (i > 0) {
            MultiIndex down = index;
            down.entries[static_cast<std::size_t>(var)] -= 1;
            result.add_term(down, value * i * rho_);
        }
    }
    return result;
}

std::vector<Rational> hermite_1d(int n, const Rational& rho) {
    if (n < 0) throw Error(ErrorCode::BadIndex, "negative Hermite degree");
    std::vector<Rational> prev{Rational(1)};
    if (n == 0) return prev;
    std::vector<Rational> curr{Rational(0), Rational(1)};
    for (int m = 1; m < n; ++m) {
        std::vector<Rational> next(static_cast<std::size_t>(m) + 2, Rational(0));
        for (std::size_t t = 0; t < curr.size(); ++t) next[t + 1] = curr[t];
        for (std::size_t t = 0; t < prev.size(); ++t) next[t] -= m * rho * prev[t];
        prev = std::move(curr);
        curr = std::move(next);
    }
    return curr;
}

HermitePoly monomial_to_hermite(int n, const Rational& rho) {
    if (n < 0) throw Error(ErrorCode::BadIndex, "negative monomial degree");
    HermitePoly result(1, rho);
    for (int k = 0; 2 * k <= n; ++k) {
        const Rational coeff = Rational(binomial(n, 2 * k) * double_factorial(2 * k - 1)) *
                               rational_pow(rho, k);
        result.add_term(MultiIndex{n - 2 * k}, coeff);
    }
    return result;
}

} // namespace oujordan
