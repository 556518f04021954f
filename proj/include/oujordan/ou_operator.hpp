#pragma once

#include "oujordan/hermite.hpp"
#include "oujordan/ou_context.hpp"

namespace oujordan {

// The operator
//
//   A_d = sum_s (-c x_s + x_{s+1}) d/dx_s + sigma^2 Laplacian
//
// (last drift term has no shift) acts on a tensor Hermite basis element by
// three rules, applied per variable:
//
//   (-rho d^2 + x d) H_i = i H_i          (number operator; A_d's diagonal)
//   d H_i = i H_{i-1}
//   x H_i = H_{i+1} + i rho H_{i-1}
//
// so each coupling term x_{s+1} d/dx_s sends H_i(x_s)H_j(x_{s+1}) to
// i H_{i-1}(x_s) [H_{j+1}(x_{s+1}) + j rho H_{j-1}(x_{s+1})].

// A_d p.
HermitePoly apply_A(const HermitePoly& p, const OUContext& ctx);

// (gamma - A_d) p with gamma = -n c. Implemented directly from the term
// rules, independently of apply_A.
HermitePoly apply_shifted(const HermitePoly& p, const OUContext& ctx);

// Q_m (gamma - A_d) Q_m p: the grade-preserving part
//   (m-n) c H_... - sum_s i_s H_{i_s - 1} H_{i_{s+1} + 1} ...
HermitePoly apply_projected(const HermitePoly& p, int grade, const OUContext& ctx);

// Q_{m-2} (gamma - A_d) Q_m p: the grade-dropping part
//   - sum_s i_s i_{s+1} rho H_{i_s - 1} H_{i_{s+1} - 1} ...
HermitePoly apply_projected_lower(const HermitePoly& p, int grade, const OUContext& ctx);

// (gamma - A_d)^t p.
HermitePoly apply_power(const HermitePoly& p, const OUContext& ctx, int t);

} // namespace oujordan
