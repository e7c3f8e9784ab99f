// SPDX-License-Identifier: Apache-2.0
#include "qms/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qms::analysis {

namespace {

double lg(double x) { return std::log2(x); }

}  // namespace

double zeta_exponent(double alpha, double beta) {
  // alpha^z + beta^z is strictly decreasing in z (0 < alpha, beta < 1),
  // equals 2 at z = 0 and tends to 0, so the root is unique.
  double lo = 1e-9, hi = 64.0;
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double v = std::pow(alpha, mid) + std::pow(beta, mid);
    (v > 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

LinearSolution linear_coefficient(double alpha, double beta, double C) {
  if (!(alpha > 0.0) || !(beta > 0.0) || !(C > 0.0) || alpha + beta >= 1.0) {
    throw std::domain_error("linear_coefficient: need alpha, beta, C > 0 and alpha + beta < 1");
  }
  return {C / (1.0 - alpha - beta), zeta_exponent(alpha, beta)};
}

double q_coefficient(double alpha, double C) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::domain_error("q_coefficient: need 0 < alpha < 1");
  }
  const double gamma = 1.0 - alpha;
  return alpha * lg(alpha) / gamma + lg(gamma) + C / gamma;
}

double f(double ell) {
  if (ell < 2.0) return -kKappa;
  return -kKappa - lg(ell) + ell / 2.0 + 0.5 - 1.0 / ell;
}

double eps(double xi) {
  const double v = 5.0 * xi - 4.0 + (4.0 - 2.0 * xi) * lg(2.0 - xi) - xi * xi;
  return std::max(0.0, v);
}

double eps_grid_max(int points) {
  double best = 0.0;
  for (int i = 0; i < points; ++i) {
    best = std::max(best, eps(static_cast<double>(i) / points));
  }
  return best;
}

double g(double alpha, double theta) {
  if (alpha < 1.0 / (5.0 * theta) - 1e-12 || alpha > 0.5 + 1e-12) {
    throw std::domain_error("g: need 1/(5 theta) <= alpha <= 1/2");
  }
  const double gamma = 1.0 - alpha;
  return alpha * lg(alpha) / gamma + lg(gamma) + f(gamma / (2.0 * alpha)) +
         (1.0 / gamma) * (1.0 + 41.0 / (15.0 * theta)) + kEpsMax;
}

double find_theta_opt() {
  // g(1/2, theta) falls with theta while g(1/(5 theta), theta) rises, so the
  // difference changes sign exactly once on [2, 3].
  const auto diff = [](double th) { return g(0.5, th) - g(1.0 / (5.0 * th), th); };
  double lo = 2.0, hi = 3.0;
  for (int i = 0; i < 80 && hi - lo > 1e-9; ++i) {
    const double mid = 0.5 * (lo + hi);
    (diff(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::uint64_t merge_sort_worst_case(std::uint64_t s) {
  if (s <= 1) return 0;
  std::uint64_t ceil_lg = 0, pow2 = 1;
  while (pow2 < s) {
    ++ceil_lg;
    pow2 <<= 1;
  }
  return s * ceil_lg - pow2 + 1;
}

std::uint64_t ms_buffered_bound(std::uint64_t n, std::uint64_t m) {
  if (m == 0 || n <= 4 * m) return merge_sort_worst_case(n);
  const std::uint64_t k = (n + 2 * m - 1) / (2 * m) - 2;
  const std::uint64_t q = n - 2 * m * k;
  return k * merge_sort_worst_case(2 * m) + merge_sort_worst_case(q) + n * k -
         m * k * (k - 1);
}

double mom_average_coefficient() { return 125.0 / 32.0; }

double umqms_average_coefficient(double theta) { return -1.24 + 10.0 / (3.0 * theta); }

}  // namespace qms::analysis
