#pragma once

#include <vector>

#include "oujordan/ou_operator.hpp"

namespace oujordan {

// The d=2 Jordan chain at level n: a single chain of length n+1 starting
// from the generator G_n(x) and ending at (-1)^n H_n(y). `elements` holds
// the iterated images (gamma - A_2)^k G_n, `closed_form` the explicit
// double-sum expression for the same elements; build_chain_2d checks they
// agree term for term.
struct Chain2D {
    int n;
    std::vector<HermitePoly> elements;
    std::vector<HermitePoly> closed_form;
};

// The chain generator
//   G_i(x) = sum_{j<=i/2} (1/2^j) (1/(j!(i-2j)!)) (-rho/2c^2)^j H_{i-2j}(x)
// as a d=2 polynomial of y-degree zero.
HermitePoly g_poly(int i, const OUContext& ctx);

// Exact check of the recursion
//   (-ic - A_2) G_i = -y G_{i-1} + (rho/2c) G_{i-2},   i >= 2.
bool verify_recursion(int i, const OUContext& ctx);

// (gamma - A_2)^k G_n in closed form:
//   (-1)^k sum_i (-rho/2c)^{n-k-i} C(k, n-k-i) G_i(x) H_{2k-n+i}(y),
// summed over max(0, n-2k) <= i <= n-k.
HermitePoly closed_form_element(int n, int k, const OUContext& ctx);

Chain2D build_chain_2d(int n, const OUContext& ctx);

} // namespace oujordan
