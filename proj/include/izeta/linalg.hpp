#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace izeta {

// Dense real symmetric matrix. Only the lower triangle is stored (packed,
// row-major), so entry(i, j) == entry(j, i) holds by construction.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t dim);

  // Builds from a dense matrix, reading its lower triangle only.
  static SymMatrix from_lower(const Eigen::MatrixXd& dense);

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, double value) { data_[index(i, j)] = value; }
  void add(std::size_t i, std::size_t j, double value) { data_[index(i, j)] += value; }

  double trace() const;
  double frobenius_norm() const;
  Eigen::MatrixXd to_dense() const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i < j) std::swap(i, j);
    return i * (i + 1) / 2 + j;
  }

  std::size_t dim_;
  std::vector<double> data_;
};

struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;                 // ascending
  std::optional<Eigen::MatrixXd> eigenvectors;  // columns match eigenvalues
};

// Householder reduction to tridiagonal form followed by implicit-shift QL.
// The QL stage gets a budget of 40 * dim sweeps in total; exhausting it
// throws ConvergenceError carrying the index of the unconverged eigenvalue.
EigenDecomposition sym_eigen(const SymMatrix& h, bool want_vectors = false);

// Eigenvalues of the symmetric tridiagonal matrix (diag, offdiag). When z is
// non-null, the rotations are accumulated into its columns. Results are
// unsorted. Exposed for testing.
void tridiagonal_ql(Eigen::VectorXd& diag, Eigen::VectorXd& offdiag, Eigen::MatrixXd* z);

using ComplexMatrix = Eigen::MatrixXcd;

struct LogDet {
  double log_modulus = 0.0;
  double argument = 0.0;  // in (-pi, pi]

  std::complex<double> value() const { return std::polar(std::exp(log_modulus), argument); }
};

// log|det M| and arg det M by LU with partial pivoting. Throws SingularError
// when a pivot vanishes relative to the matrix scale.
LogDet complex_logdet(const ComplexMatrix& m);

// Wraps an angle into (-pi, pi].
double wrap_angle(double theta);

struct QuadratureNode {
  double node = 0.0;
  double weight = 0.0;
};

// Gauss-Chebyshev rule of the second kind for the weight sqrt(1 - x^2) on
// (-1, 1); exact for polynomials of degree <= 2 * count - 1.
std::vector<QuadratureNode> gauss_chebyshev2_nodes(int count);

}  // namespace izeta
