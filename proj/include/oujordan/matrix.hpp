#pragma once

#include <cstddef>
#include <vector>

#include "oujordan/rational.hpp"

namespace oujordan {

// Dense matrix over the exact rationals. Everything in this project is at
// desk scale (dimension <= a few hundred), so density beats cleverness.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b);

    ExactMatrix transposed() const;

    bool operator==(const ExactMatrix& other) const = default;

    ExactMatrix operator*(const ExactMatrix& other) const;
    ExactMatrix operator-() const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    std::string to_text() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

// Exact rank by fraction-free (Bareiss) elimination; the division-controlled
// recurrence keeps intermediate entries at minor size.
std::size_t rank(const ExactMatrix& m);

std::size_t kernel_dimension(const ExactMatrix& m);

Rational determinant(const ExactMatrix& m);

// det m[rowSel, colSel]; selections are strictly increasing and of equal
// length. Index sets are 0-based here and everywhere else in this library
// (the usual linear-algebra literature counts from 1).
Rational minor(const ExactMatrix& m, const std::vector<std::size_t>& row_sel,
               const std::vector<std::size_t>& col_sel);

// Forward substitution; only the lower triangle of L is referenced.
std::vector<Rational> solve_lower_triangular(const ExactMatrix& lower,
                                             const std::vector<Rational>& rhs);

// General square solve, nonsingular systems only.
std::vector<Rational> solve(const ExactMatrix& m, const std::vector<Rational>& rhs);

// Exact characteristic polynomial det(tI - m), ascending coefficients,
// monic; Faddeev-LeVerrier recurrence.
std::vector<Rational> characteristic_polynomial(const ExactMatrix& m);

} // namespace oujordan
