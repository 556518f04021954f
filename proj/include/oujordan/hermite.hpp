#pragma once

#include <map>
#include <set>
#include <span>
#include <vector>

#include "oujordan/multi_index.hpp"
#include "oujordan/rational.hpp"

namespace oujordan {

// Sparse polynomial in the tensor Hermite basis with variance parameter rho.
// Zero coefficients are never stored; the zero polynomial has an empty term
// map but still tracks its dimension and rho.
class HermitePoly {
public:
    using TermMap = std::map<MultiIndex, Rational, CanonicalLess>;

    HermitePoly(int dim, Rational rho) : dim_(dim), rho_(std::move(rho)) {}

    static HermitePoly basis(const MultiIndex& index, const Rational& rho);
    static HermitePoly constant(int dim, const Rational& rho, const Rational& value);

    int dim() const { return dim_; }
    const Rational& rho() const { return rho_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // Total degree of the highest term, -1 for the zero polynomial.
    int top_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

    Rational coeff(const MultiIndex& index) const;
    void add_term(const MultiIndex& index, const Rational& value);

    HermitePoly& operator+=(const HermitePoly& other);
    HermitePoly& operator-=(const HermitePoly& other);
    HermitePoly& operator*=(const Rational& scalar);

    friend HermitePoly operator+(HermitePoly a, const HermitePoly& b) { return a += b; }
    friend HermitePoly operator-(HermitePoly a, const HermitePoly& b) { return a -= b; }
    friend HermitePoly operator*(HermitePoly p, const Rational& s) { return p *= s; }
    friend HermitePoly operator*(const Rational& s, HermitePoly p) { return p *= s; }
    HermitePoly operator-() const;

    bool operator==(const HermitePoly& other) const = default;

    // Canonical projection Q_m: the part supported on total degree exactly m.
    HermitePoly project(int grade) const;
    bool is_homogeneous(int grade) const;

    // { m : project(p, m) != 0 }
    std::set<int> degree_support() const;

    Rational evaluate(std::span<const Rational> point) const;

    // x_var * p via the multiplication rule x H_i = H_{i+1} + i rho H_{i-1}.
    HermitePoly multiply_by_variable(int var) const;

private:
    int dim_;
    Rational rho_;
    TermMap terms_;

    void require_compatible(const HermitePoly& other) const;
};

// Monomial coefficients [a0,...,an] of H_n(x) = sum a_t x^t, from the
// three-term recurrence H_0 = 1, H_1 = x, H_{m+1} = x H_m - m rho H_{m-1}.
std::vector<Rational> hermite_1d(int n, const Rational& rho);

// Hermite expansion of x^n:
//   x^n = sum_k C(n,2k) (2k-1)!! rho^k H_{n-2k}(x).
HermitePoly monomial_to_hermite(int n, const Rational& rho);

} // namespace oujordan
