// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

// Closed-form and numeric versions of the comparison bounds the sorters are
// tested against: the two-branch recurrence solver, the QuickMergesort
// linear-term composition, the imbalanced-mergesort penalty functions f and
// eps, the undersampling trade-off g with its optimal theta, and the exact
// Eq-style buffered mergesort ceiling.

namespace qms::analysis {

// Mergesort linear-term constant: T_MS(n) <= n log2 n - kappa * n + 1.
inline constexpr double kKappa = 0.91;

// Constant upper bound for eps(xi) over [0, 1).
inline constexpr double kEpsMax = 0.015;

struct LinearSolution {
  double coefficient;  // C / (1 - alpha - beta)
  double zeta;         // root of alpha^z + beta^z = 1
};

// Solves T(n) <= T(alpha n) + T(beta n) + C n  ->  coefficient * n + O(n^zeta).
// Requires alpha + beta < 1 and alpha, beta, C > 0; throws std::domain_error.
LinearSolution linear_coefficient(double alpha, double beta, double C);

// Root of alpha^z + beta^z = 1, bisected to 1e-9.
double zeta_exponent(double alpha, double beta);

// Linear term of x(n) = x(alpha n) + (1-alpha) n log((1-alpha) n) + C n:
// alpha*log2(alpha)/(1-alpha) + log2(1-alpha) + C/(1-alpha).
double q_coefficient(double alpha, double C);

// Imbalanced-merge penalty: -kappa for ell < 2, else
// -kappa - log2(ell) + ell/2 + 1/2 - 1/ell.
double f(double ell);

// Rounding error term: max{0, 5xi - 4 + (4 - 2xi) log2(2 - xi) - xi^2}.
double eps(double xi);

// Grid maximum of eps over [0, 1), used to validate kEpsMax.
double eps_grid_max(int points);

// Worst-case linear term of uMQMS(theta) as a function of the pivot
// fraction alpha in [1/(5 theta), 1/2]; throws std::domain_error outside.
double g(double alpha, double theta);

// Solves g(1/2, theta) = g(1/(5 theta), theta) on [2, 3] by bisection.
double find_theta_opt();

// Exact worst case of balanced top-down mergesort: s*ceil(log2 s) -
// 2^ceil(log2 s) + 1 (0 for s <= 1).
std::uint64_t merge_sort_worst_case(std::uint64_t s);

// Worst-case comparisons of mergesort over n elements with a buffer of m:
// balanced bound for n <= 4m, otherwise the unrolled chunk cascade
// k*T(2m) + T(n - 2mk) + nk - mk(k-1) with k = ceil(n/2m) - 2.
std::uint64_t ms_buffered_bound(std::uint64_t n, std::uint64_t m);

// Average-case linear terms (counting convention of this library).
double mom_average_coefficient();                 // 125/32
double umqms_average_coefficient(double theta);   // -1.24 + 10/(3 theta)

}  // namespace qms::analysis
