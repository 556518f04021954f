#pragma once

#include "oujordan/rational.hpp"

namespace oujordan {

// Parameters of one spectral problem: dimension d >= 2, drift constant
// c > 0, diffusion constant sigma^2 > 0, and the eigenvalue level n with
// gamma = -n c. rho = sigma^2 / c is the Hermite variance.
struct OUContext {
    int dim;
    Rational c;
    Rational sigma2;
    Rational rho;
    int level;

    OUContext(int dim_, int level_, Rational c_ = Rational(1), Rational sigma2_ = Rational(1))
        : dim(dim_), c(std::move(c_)), sigma2(std::move(sigma2_)), rho(checked_ratio(sigma2, c)),
          level(level_) {
        if (dim < 2) throw Error(ErrorCode::BadIndex, "dimension must be at least 2");
        if (level < 0) throw Error(ErrorCode::BadIndex, "level must be nonnegative");
    }

    Rational gamma() const { return -level * c; }
    int r() const { return level / 2; }

private:
    static Rational checked_ratio(const Rational& sigma2, const Rational& c) {
        if (c <= 0 || sigma2 <= 0)
            throw Error(ErrorCode::BadRational, "c and sigma^2 must be positive");
        return sigma2 / c;
    }
};

} // namespace oujordan
