#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace izeta {

// t_p = (2p)! / (p! (p+1)!), exact for p <= 30.
std::uint64_t catalan(int p);

// Exact binomial coefficient; throws OverflowError past 64 bits.
std::uint64_t binomial(int n, int k);

// Limiting moment of the ensemble from the Catalan-sum closed form.
// m_k(0) = delta_{k,0} by continuity.
double limit_moment_closed(int k, double v);

struct LimitMoments {
  double v = 0.0;
  std::vector<double> values;  // values[k], k = 0..k_max
};

// Same moments from the quadratic recurrence
//   m_{k+1} = v^2 m_k + v^2 sum_{j<k} m_{k-1-j} m_j,  m_0 = 1, m_1 = v^2.
LimitMoments limit_moment_recurrence(int k_max, double v);

// Semicircle of radius 2|v| centered at v^2. At v = 0 the law is the unit
// point mass at the origin.
class LimitLaw {
 public:
  explicit LimitLaw(double v);

  double v() const noexcept { return v_; }
  double support_low() const noexcept { return v_ * v_ - 2.0 * std::abs(v_); }
  double support_high() const noexcept { return v_ * v_ + 2.0 * std::abs(v_); }
  bool degenerate() const noexcept { return v_ == 0.0; }

  // Density; throws std::invalid_argument for the degenerate law.
  double pdf(double lambda) const;
  double cdf(double lambda) const;
  // Left limit F(lambda-); differs from cdf only at the atom of the degenerate law.
  double cdf_left(double lambda) const;
  double moment(int k) const { return limit_moment_closed(k, v_); }

 private:
  double v_;
};

double semicircle_pdf(double v, double lambda);
double semicircle_cdf(double v, double lambda);

// Integral of (v^2 + lambda)^k against the centered semicircle of radius
// 2|v|, by second-kind Gauss-Chebyshev quadrature with enough nodes to be exact.
double semicircle_moment(double v, int k);

// Stieltjes transform of the centered semicircle: the root of
// v^2 f^2 + xi f + 1 = 0 that decays like -1/xi.
std::complex<double> stieltjes_f(double v, std::complex<double> xi);

// Stieltjes transform of the shifted law, g(xi) = f(xi - v^2).
std::complex<double> stieltjes_g(double v, std::complex<double> xi);

// First-order finite-rho correction to the k-th moment, evaluated from the
// three-sum closed form with the factor v^(2k-2p) t_p taken inside each sum.
double correction_R1(int k, double v);

struct IdentitySides {
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
};

// (2p)! / ((p-2)! (p+2)!) against t_p p (p-1) / (p+2), for p >= 2.
IdentitySides walk_count_identity(int p);

// sum_{a+b=p} (2a+1) t_a t_b against (p+1) t_{p+1}.
IdentitySides marked_tree_identity(int p);

// (2/pi) * integral over [-1, 1] of log(1 + v^2 + 2 v nu) sqrt(1 - nu^2),
// by node_count-point quadrature. For complex v the integrand is evaluated as
// log(1 + v e^{i theta}) + log(1 + v e^{-i theta}), nu = cos theta, which is
// the holomorphic continuation into |v| < 1 and equals the principal log for
// real v.
std::complex<double> xi_limit(std::complex<double> v, int node_count);

// xi_limit with the node count doubled from 64 until successive values agree
// to 1e-12 (at most 1024 nodes).
std::complex<double> xi_limit(std::complex<double> v);

struct RhDefect {
  double v = 0.0;
  double defect = 0.0;  // |v^2 / 2 - xi_limit(v)|
};

std::vector<RhDefect> rh_defect(std::span<const double> v_grid, int node_count = 128);

}  // namespace izeta
