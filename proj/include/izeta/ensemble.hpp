#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/SparseCore>

#include "izeta/graph.hpp"
#include "izeta/limits.hpp"
#include "izeta/linalg.hpp"

namespace izeta {

// H = (v^2 / rho) B - (v / sqrt(rho)) A.
SymMatrix build_H(const GraphSample& g, double rho, double v);

// The same matrix in compressed sparse form, for trace computations.
Eigen::SparseMatrix<double> build_H_sparse(const GraphSample& g, double rho, double v);

// ((|E| - n) / n) log(1 - u^2), the Euler-characteristic term of (1/n) log Z^{-1}.
std::complex<double> theta_term(const GraphSample& g, std::complex<double> u);

// Empirical spectral distribution: ascending eigenvalues, each of mass 1/size.
class SpectralMeasure {
 public:
  SpectralMeasure() = default;
  explicit SpectralMeasure(std::vector<double> eigenvalues);

  std::span<const double> eigenvalues() const noexcept { return eigenvalues_; }
  std::size_t size() const noexcept { return eigenvalues_.size(); }
  double cdf(double lambda) const;
  double moment(int k) const;

 private:
  std::vector<double> eigenvalues_;
};

SpectralMeasure esd(const SymMatrix& h);

// Pools several measures with equal total weight each (replica average).
SpectralMeasure average_measures(std::span<const SpectralMeasure> measures);

// sup |F_hat - F| evaluated at the breakpoints of F_hat, using both one-sided
// limits so atoms of either distribution are handled.
double ks_distance(const SpectralMeasure& measure, const LimitLaw& law);

// (1/n) sum lambda^k for k = 0..k_max.
std::vector<double> power_moments(std::span<const double> eigenvalues, int k_max);

// (1/n) Tr H^k for k = 0..k_max from sparse products, Tr H^{a+b} = <H^a, H^b>_F.
std::vector<double> trace_moments(const GraphSample& g, double rho, double v, int k_max);

enum class MomentMethod {
  kEigenvalues,  // diagonalize H, average powers of the eigenvalues
  kTraces,       // sparse matrix powers; no diagonalization
};

struct MomentOptions {
  unsigned threads = 1;  // 0 = hardware concurrency
  MomentMethod method = MomentMethod::kEigenvalues;
};

struct MomentEstimate {
  int k_max = 0;
  std::vector<double> values;  // replica mean of (1/n) Tr H^k
  std::vector<double> standard_errors;
  std::size_t replicas = 0;
};

MomentEstimate empirical_moments(const EnsembleParams& params, int k_max, const MomentOptions& options = {});

// Exact E (1/n) Tr H^k over G(n, rho/n) by enumerating all index assignments
// of every word in the expansion of (v^2 B/rho - v A/sqrt(rho))^k. Each
// assignment scores p^(distinct edges used). Limited to n <= 6, k <= 4.
double exact_moment_oracle(int n, double rho, double v, int k);

struct XiRecord {
  double xi = 0.0;                 // (1/n) sum log|1_rho + lambda_i|
  std::size_t negative_count = 0;  // #{i : 1_rho + lambda_i < 0}
  double one_rho = 1.0;            // 1 - v^2 / rho
};

XiRecord xi_from_eigenvalues(std::span<const double> eigenvalues, double rho, double v);
XiRecord xi_finite(const GraphSample& g, double rho, double v);

// (1/n) log Z(v / sqrt(rho)) on the real branch. Throws NegativeSpectrumError
// when 1_rho + H has negative eigenvalues.
double log_zeta_normalized(const GraphSample& g, double rho, double v);
double log_zeta_normalized(const GraphSample& g, double rho, double v, const XiRecord& xi);

}  // namespace izeta
