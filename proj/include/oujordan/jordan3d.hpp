#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oujordan/matrix.hpp"
#include "oujordan/ou_operator.hpp"

namespace oujordan {

// One eigenfunction of the level-n problem: psi is the top-grade part
//   psi_k = sum_i (-2)^{k-i} C(k,i) H_{k-i}(x) H_{2i}(y) H_{n-k-i}(z)
// and h = psi + (lower-grade correction) satisfies (gamma - A_3) h = 0.
struct KernelElement {
    int n;
    int k;
    HermitePoly psi;
    HermitePoly h;
};

// Jordan chain number k: q = 2n+1-4k elements, element j is
// (gamma - A_3)^j applied to the lead vector, the last one is the
// eigenfunction h_k.
struct JordanChain3D {
    int n;
    int k;
    int q;
    HermitePoly lead;
    std::vector<HermitePoly> elements;
};

// Bidiagonal step matrices of the height-by-height evolution inside grade n,
// and their products S_k. For odd n the recursion is S_0 = D_0 A_0,
// S_k = D_k C_k S_{k-1} B_k A_k; for even n it starts from S_0 = Id.
// Entries that the recursion never uses (B_0/C_0, and all four at k=0 in the
// even case) stay empty.
struct TransitionMatrices {
    int n;
    bool odd;
    std::vector<std::optional<ExactMatrix>> A, B, C, D; // indexed by k = 0..r
    std::vector<ExactMatrix> S;                         // k = 0..r; S[k] is (r+1-k)-square
};

struct ConjectureRow {
    int k;
    bool holds;                   // S_k u_{r-k} == lambda_k u_{r-k}, exactly
    Rational lambda;              // conjectured eigenvalue
    std::optional<Rational> ratio; // actual ratio when S_k u_{r-k} is proportional to u_{r-k}
    std::vector<Rational> char_poly; // exact char poly of S_k, ascending, monic
};

struct MinorFinding {
    std::string matrix; // "A", "B", "C", "D", "S"
    int k;
    std::vector<std::size_t> rows, cols;
    Rational value;
};

struct MinorsReport {
    int n;
    long long minors_checked = 0;
    std::vector<MinorFinding> negative; // expected empty
    std::vector<Rational> s_determinants;
    bool all_s_positive = false;
};

struct Jordan3DReport {
    int n;
    std::vector<int> segre;
    int geometric;
    int algebraic;
    std::vector<JordanChain3D> chains;
    std::vector<ConjectureRow> conjecture;
};

// Grade-n basis elements at the given height, decreasing lexicographic.
std::vector<MultiIndex> height_slice(int n, int h);

// Matrix of one height step of the projected operator inside grade n, in the
// height_slice bases. Independent of c and sigma^2; equals minus the
// corresponding displayed step pattern.
ExactMatrix derived_step_matrix(int n, int h);

// psi_k, cross-checked against the homogeneous system it must solve: the
// bidiagonal system matrix is rebuilt from the projected operator, must have
// a 1-dimensional kernel, and must annihilate the closed-form coefficients.
HermitePoly kernel_basis_psi(int n, int k, const OUContext& ctx);

// Unique f in grade m with Q_m (gamma - A_3) f = g, by forward substitution
// over the canonical (DAG-topological) order; needs m != n.
HermitePoly solve_projected(const HermitePoly& g, int m, const OUContext& ctx);

// Unique degree-matched solution of (gamma - A_3) f = g. g must have no
// component in grades n, n+2, n+4, ...
HermitePoly solve_inhomogeneous(const HermitePoly& g, const OUContext& ctx);

KernelElement eigenfunction(int n, int k, const OUContext& ctx);

// Builds the displayed step patterns and the S_k products, and cross-checks
// every pattern against derived_step_matrix.
TransitionMatrices transition_matrices(int n);

JordanChain3D lead_vector(int n, int k, const OUContext& ctx);

Jordan3DReport jordan_basis(int n, const OUContext& ctx);

// Enumerates minors of every step matrix and S_k up to the given submatrix
// size: exhaustive when the matrix dimension is <= 6, at least 500 uniform
// samples (fixed seed) otherwise. Also records det S_k per k.
MinorsReport minors_report(int n, int max_size);

// The eigenvector experiment: reported, never asserted.
std::vector<ConjectureRow> conjecture_check(int n);

} // namespace oujordan
