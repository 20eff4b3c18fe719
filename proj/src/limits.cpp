#include "izeta/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "izeta/error.hpp"
#include "izeta/linalg.hpp"

namespace izeta {

namespace {

using u128 = unsigned __int128;

std::uint64_t narrow(u128 x, const char* what) {
  if (x > static_cast<u128>(UINT64_MAX)) throw OverflowError(std::string(what) + ": exceeds 64 bits", 0);
  return static_cast<std::uint64_t>(x);
}

double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

std::uint64_t catalan(int p) {
  if (p < 0 || p > 30) throw std::invalid_argument("catalan: p must be in [0, 30]");
  u128 t = 1;
  for (int q = 0; q < p; ++q) t = t * static_cast<u128>(2 * (2 * q + 1)) / static_cast<u128>(q + 2);
  return narrow(t, "catalan");
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  u128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<u128>(n - k + i) / static_cast<u128>(i);
    if (c > static_cast<u128>(UINT64_MAX)) throw OverflowError("binomial: exceeds 64 bits", 0);
  }
  return static_cast<std::uint64_t>(c);
}

double limit_moment_closed(int k, double v) {
  if (k < 0) throw std::invalid_argument("limit_moment_closed: k must be >= 0");
  const int l = k / 2;
  const double v2 = v * v;
  // v^{2k - 2l} * sum_p v^{-2p} ... rewritten with non-negative powers so the
  // v = 0 limit needs no special case.
  double sum = 0.0;
  for (int p = 0; p <= l; ++p) {
    sum += static_cast<double>(binomial(k, 2 * p)) * static_cast<double>(catalan(p)) * ipow(v2, k - p);
  }
  return sum;
}

LimitMoments limit_moment_recurrence(int k_max, double v) {
  if (k_max < 1) throw std::invalid_argument("limit_moment_recurrence: k_max must be >= 1");
  const double v2 = v * v;
  LimitMoments out{v, std::vector<double>(static_cast<std::size_t>(k_max) + 1, 0.0)};
  auto& m = out.values;
  m[0] = 1.0;
  m[1] = v2;
  for (int k = 1; k < k_max; ++k) {
    double conv = 0.0;
    for (int j = 0; j < k; ++j) conv += m[static_cast<std::size_t>(k - 1 - j)] * m[static_cast<std::size_t>(j)];
    m[static_cast<std::size_t>(k + 1)] = v2 * m[static_cast<std::size_t>(k)] + v2 * conv;
  }
  return out;
}

LimitLaw::LimitLaw(double v) : v_(v) {
  if (!std::isfinite(v)) throw std::invalid_argument("LimitLaw: v must be finite");
}

double LimitLaw::pdf(double lambda) const {
  if (degenerate()) throw std::invalid_argument("LimitLaw::pdf: point mass at v = 0 has no density");
  const double x = lambda - v_ * v_;
  const double r2 = 4.0 * v_ * v_;
  if (x * x >= r2) return 0.0;
  return std::sqrt(r2 - x * x) / (2.0 * std::numbers::pi * v_ * v_);
}

double LimitLaw::cdf(double lambda) const {
  if (degenerate()) return lambda >= 0.0 ? 1.0 : 0.0;
  const double radius = 2.0 * std::abs(v_);
  const double x = std::clamp(lambda - v_ * v_, -radius, radius);
  const double f = 0.5 + x * std::sqrt(radius * radius - x * x) / (std::numbers::pi * radius * radius) +
                   std::asin(x / radius) / std::numbers::pi;
  return std::clamp(f, 0.0, 1.0);
}

double LimitLaw::cdf_left(double lambda) const {
  if (degenerate()) return lambda > 0.0 ? 1.0 : 0.0;
  return cdf(lambda);
}

double semicircle_pdf(double v, double lambda) { return LimitLaw(v).pdf(lambda); }

double semicircle_cdf(double v, double lambda) { return LimitLaw(v).cdf(lambda); }

double semicircle_moment(double v, int k) {
  if (k < 0) throw std::invalid_argument("semicircle_moment: k must be >= 0");
  // lambda = 2|v| nu turns d mu_v into (2/pi) sqrt(1 - nu^2) d nu.
  const auto rule = gauss_chebyshev2_nodes(k / 2 + 1);
  const double v2 = v * v;
  const double radius = 2.0 * std::abs(v);
  double sum = 0.0;
  for (const auto& q : rule) sum += q.weight * ipow(v2 + radius * q.node, k);
  return 2.0 / std::numbers::pi * sum;
}

std::complex<double> stieltjes_f(double v, std::complex<double> xi) {
  const double v2 = v * v;
  const double radius = 2.0 * std::abs(v);
  if (xi.imag() == 0.0 && std::abs(xi.real()) <= radius) {
    throw std::invalid_argument("stieltjes_f: xi lies on the support");
  }
  // Roots are -2 / (xi +- s) with s^2 = xi^2 - 4 v^2; their product is 1/v^2
  // and the transform is the one of smaller modulus.
  const std::complex<double> s = std::sqrt(xi * xi - 4.0 * v2);
  const std::complex<double> plus = xi + s;
  const std::complex<double> minus = xi - s;
  return -2.0 / (std::abs(plus) >= std::abs(minus) ? plus : minus);
}

std::complex<double> stieltjes_g(double v, std::complex<double> xi) {
  const double v2 = v * v;
  if (xi.imag() == 0.0 && std::abs(xi.real() - v2) <= 2.0 * std::abs(v)) {
    throw std::invalid_argument("stieltjes_g: xi lies on the support");
  }
  return stieltjes_f(v, xi - v2);
}

double correction_R1(int k, double v) {
  if (k < 1) throw std::invalid_argument("correction_R1: k must be >= 1");
  const double v2 = v * v;
  auto t = [](int p) { return static_cast<double>(catalan(p)); };
  auto c = [](int n, int r) { return static_cast<double>(binomial(n, r)); };
  double first = 0.0;
  for (int p = 0; p <= k / 2; ++p) {
    first += c(k, 2 * p) * t(p) * (p * (p - 1.0) / (p + 2.0)) * ipow(v2, k - p);
  }
  double second = 0.0;
  for (int p = 0; 2 * p + 1 <= k; ++p) {
    second += c(k, 2 * p + 1) * t(p) * p * ipow(v2, k - p);
  }
  double third = 0.0;
  for (int p = 0; 2 * p + 2 <= k; ++p) {
    third += c(k, 2 * p + 2) * t(p) * ((4.0 * p + 2.0) / (p + 2.0)) * ipow(v2, k - p);
  }
  return first + 4.0 * second + third;
}

IdentitySides walk_count_identity(int p) {
  if (p < 2 || p > 30) throw std::invalid_argument("walk_count_identity: p must be in [2, 30]");
  // (2p)! / ((p-2)! (p+2)!) as a running product of exact binomial steps.
  u128 lhs = 1;
  for (int i = 1; i <= p - 2; ++i) lhs = lhs * static_cast<u128>(p + 2 + i) / static_cast<u128>(i);
  const u128 numer = static_cast<u128>(catalan(p)) * static_cast<u128>(p) * static_cast<u128>(p - 1);
  if (numer % static_cast<u128>(p + 2) != 0) {
    throw std::logic_error("walk_count_identity: t_p p (p-1) not divisible by p+2 at p = " + std::to_string(p));
  }
  return {narrow(lhs, "walk_count_identity"), narrow(numer / static_cast<u128>(p + 2), "walk_count_identity")};
}

IdentitySides marked_tree_identity(int p) {
  if (p < 0 || p > 29) throw std::invalid_argument("marked_tree_identity: p must be in [0, 29]");
  u128 lhs = 0;
  for (int a = 0; a <= p; ++a) {
    lhs += static_cast<u128>(2 * a + 1) * static_cast<u128>(catalan(a)) * static_cast<u128>(catalan(p - a));
  }
  const u128 rhs = static_cast<u128>(p + 1) * static_cast<u128>(catalan(p + 1));
  return {narrow(lhs, "marked_tree_identity"), narrow(rhs, "marked_tree_identity")};
}

std::complex<double> xi_limit(std::complex<double> v, int node_count) {
  if (node_count < 8) throw std::invalid_argument("xi_limit: node_count must be >= 8");
  if (!(std::abs(v) <= 1.0 - 1e-6)) throw DomainError("xi_limit: requires |v| <= 1 - 1e-6");
  const auto rule = gauss_chebyshev2_nodes(node_count);
  std::complex<double> sum = 0.0;
  for (const auto& q : rule) {
    if (v.imag() == 0.0) {
      const double x = v.real();
      const double arg = 1.0 + x * x + 2.0 * x * q.node;
      if (arg <= 0.0) throw DomainError("xi_limit: integrand on the branch cut");
      sum += q.weight * std::log(arg);
      continue;
    }
    const double s = std::sqrt(std::max(0.0, 1.0 - q.node * q.node));
    const std::complex<double> a = 1.0 + v * std::complex<double>(q.node, s);
    const std::complex<double> b = 1.0 + v * std::complex<double>(q.node, -s);
    if (a.real() <= 0.0 || b.real() <= 0.0) throw DomainError("xi_limit: integrand on the branch cut");
    sum += q.weight * (std::log(a) + std::log(b));
  }
  return 2.0 / std::numbers::pi * sum;
}

std::complex<double> xi_limit(std::complex<double> v) {
  int nodes = 64;
  std::complex<double> prev = xi_limit(v, nodes);
  while (nodes < 1024) {
    nodes *= 2;
    std::complex<double> next = xi_limit(v, nodes);
    if (std::abs(next - prev) < 1e-12) return next;
    prev = next;
  }
  return prev;
}

std::vector<RhDefect> rh_defect(std::span<const double> v_grid, int node_count) {
  std::vector<RhDefect> out;
  out.reserve(v_grid.size());
  for (double v : v_grid) {
    if (!(v > -1.0 && v < 1.0)) throw std::invalid_argument("rh_defect: grid points must lie in (-1, 1)");
    out.push_back({v, std::abs(v * v / 2.0 - xi_limit(v, node_count).real())});
  }
  return out;
}

}  // namespace izeta
