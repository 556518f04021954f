#include "oujordan/matrix.hpp"

#include <sstream>
#include <utility>

namespace oujordan {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw Error(ErrorCode::DimensionMismatch, "entry count does not match rows*cols");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void ExactMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap(entries_[a * cols_ + j], entries_[b * cols_ + j]);
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
    if (cols_ != other.rows_)
        throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
    ExactMatrix result(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Rational& b = other(k, j);
                if (b != 0) result(i, j) += a * b;
            }
        }
    return result;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix result = *this;
    for (auto& e : result.entries_) e = -e;
    return result;
}

std::vector<Rational> ExactMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_)
        throw Error(ErrorCode::DimensionMismatch, "vector length does not match columns");
    std::vector<Rational> result(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) result[i] += (*this)(i, j) * v[j];
    return result;
}

std::string ExactMatrix::to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i == 0 ? "[" : " ") << "[";
        for (std::size_t j = 0; j < cols_; ++j)
            out << (j ? ", " : "") << to_string((*this)(i, j));
        out << "]" << (i + 1 == rows_ ? "]" : ",\n");
    }
    return out.str();
}

namespace {

struct Elimination {
    std::size_t rank = 0;
    int sign = 1;
    Rational last_pivot = 1;
    bool column_skipped = false;
};

// Bareiss fraction-free elimination. Each produced entry is (up to sign) a
// minor of the input, so growth stays polynomial instead of exponential.
Elimination eliminate(ExactMatrix m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    Elimination result;
    Rational prev = 1;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < nc && pr < nr; ++pc) {
        std::size_t piv = pr;
        while (piv < nr && m(piv, pc) == 0) ++piv;
        if (piv == nr) {
            result.column_skipped = true;
            continue;
        }
        if (piv != pr) {
            m.swap_rows(piv, pr);
            result.sign = -result.sign;
        }
        const Rational pivot = m(pr, pc);
        for (std::size_t i = pr + 1; i < nr; ++i) {
            for (std::size_t j = pc + 1; j < nc; ++j)
                m(i, j) = (m(i, j) * pivot - m(i, pc) * m(pr, j)) / prev;
            m(i, pc) = 0;
        }
        prev = pivot;
        ++pr;
    }
    result.rank = pr;
    result.last_pivot = prev;
    return result;
}

} // namespace

std::size_t rank(const ExactMatrix& m) {
    return eliminate(m).rank;
}

std::size_t kernel_dimension(const ExactMatrix& m) {
    return m.cols() - rank(m);
}

Rational determinant(const ExactMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::NonSquare, "determinant needs a square matrix");
    if (m.rows() == 0) return 1;
    const Elimination e = eliminate(m);
    if (e.rank < m.rows()) return 0;
    // Full rank without column skips: the final pivot is det of the permuted
    // matrix.
    return e.sign > 0 ? e.last_pivot : -e.last_pivot;
}

Rational minor(const ExactMatrix& m, const std::vector<std::size_t>& row_sel,
               const std::vector<std::size_t>& col_sel) {
    if (row_sel.size() != col_sel.size())
        throw Error(ErrorCode::NonSquareSelection, "row and column selections differ in length");
    const auto check = [&](const std::vector<std::size_t>& sel, std::size_t bound) {
        for (std::size_t i = 0; i < sel.size(); ++i) {
            if (sel[i] >= bound)
                throw Error(ErrorCode::BadSelection, "selection index out of bounds");
            if (i > 0 && sel[i - 1] >= sel[i])
                throw Error(ErrorCode::BadSelection, "selection not strictly increasing");
        }
    };
    check(row_sel, m.rows());
    check(col_sel, m.cols());

    ExactMatrix sub(row_sel.size(), col_sel.size());
    for (std::size_t i = 0; i < row_sel.size(); ++i)
        for (std::size_t j = 0; j < col_sel.size(); ++j)
            sub(i, j) = m(row_sel[i], col_sel[j]);
    return determinant(sub);
}

std::vector<Rational> solve_lower_triangular(const ExactMatrix& lower,
                                             const std::vector<Rational>& rhs) {
    if (!lower.is_square())
        throw Error(ErrorCode::NonSquare, "triangular solve needs a square matrix");
    if (rhs.size() != lower.rows())
        throw Error(ErrorCode::DimensionMismatch, "rhs length does not match matrix");
    const std::size_t n = lower.rows();
    for (std::size_t i = 0; i < n; ++i)
        if (lower(i, i) == 0)
            throw Error(ErrorCode::ZeroDiagonal, "zero diagonal entry at " + std::to_string(i));

    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        Rational acc = rhs[i];
        for (std::size_t j = 0; j < i; ++j)
            if (lower(i, j) != 0) acc -= lower(i, j) * x[j];
        x[i] = acc / lower(i, i);
    }
    return x;
}

std::vector<Rational> characteristic_polynomial(const ExactMatrix& m) {
    if (!m.is_square())
        throw Error(ErrorCode::NonSquare, "characteristic polynomial needs a square matrix");
    const std::size_t n = m.rows();
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    ExactMatrix work = ExactMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        work = m * work;
        Rational trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += work(i, i);
        const Rational c = -trace / Rational(static_cast<long>(k));
        coeffs[n - k] = c;
        for (std::size_t i = 0; i < n; ++i) work(i, i) += c;
    }
    return coeffs;
}

std::vector<Rational> solve(const ExactMatrix& m, const std::vector<Rational>& rhs) {
    if (!m.is_square()) throw Error(ErrorCode::NonSquare, "solve needs a square matrix");
    if (rhs.size() != m.rows())
        throw Error(ErrorCode::DimensionMismatch, "rhs length does not match matrix");
    const std::size_t n = m.rows();

    // Fraction-free elimination on the augmented matrix, then back
    // substitution.
    ExactMatrix a(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
        a(i, n) = rhs[i];
    }
    Rational prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k) == 0) ++piv;
        if (piv == n) throw Error(ErrorCode::SingularSystem, "singular system");
        a.swap_rows(piv, k);
        const Rational pivot = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j)
                a(i, j) = (a(i, j) * pivot - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = pivot;
    }

    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = a(i, n);
        for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
        x[i] = acc / a(i, i);
    }
    return x;
}

} // namespace oujordan
