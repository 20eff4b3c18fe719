#include "izeta/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "izeta/error.hpp"

namespace izeta {

SymMatrix::SymMatrix(std::size_t dim) : dim_(dim), data_(dim * (dim + 1) / 2, 0.0) {
  if (dim == 0) throw std::invalid_argument("SymMatrix dimension must be positive");
}

SymMatrix SymMatrix::from_lower(const Eigen::MatrixXd& dense) {
  if (dense.rows() != dense.cols()) throw std::invalid_argument("SymMatrix::from_lower: matrix not square");
  SymMatrix m(static_cast<std::size_t>(dense.rows()));
  for (Eigen::Index i = 0; i < dense.rows(); ++i)
    for (Eigen::Index j = 0; j <= i; ++j)
      m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), dense(i, j));
  return m;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < i; ++j) s += 2.0 * (*this)(i, j) * (*this)(i, j);
    s += (*this)(i, i) * (*this)(i, i);
  }
  return std::sqrt(s);
}

Eigen::MatrixXd SymMatrix::to_dense() const {
  const auto n = static_cast<Eigen::Index>(dim_);
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      double x = (*this)(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      out(i, j) = x;
      out(j, i) = x;
    }
  }
  return out;
}

void tridiagonal_ql(Eigen::VectorXd& d, Eigen::VectorXd& offdiag, Eigen::MatrixXd* z) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return;
  // e[i] couples rows i and i+1; e[n-1] is scratch.
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
  for (int i = 0; i + 1 < n; ++i) e[i] = offdiag[i];

  const double eps = std::numeric_limits<double>::epsilon();
  const long budget = 40L * n;
  long sweeps = 0;

  for (int l = 0; l < n; ++l) {
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++sweeps > budget) {
        throw ConvergenceError("tridiagonal QL did not converge for eigenvalue " + std::to_string(l) +
                                   " within " + std::to_string(budget) + " sweeps",
                               static_cast<std::size_t>(l));
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      int i = m - 1;
      bool underflow = false;
      for (; i >= l; --i) {
        double f = s * e[i];
        double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        if (z != nullptr) {
          auto zi = z->col(i);
          auto zi1 = z->col(i + 1);
          for (Eigen::Index k = 0; k < z->rows(); ++k) {
            double t = zi1[k];
            zi1[k] = s * zi[k] + c * t;
            zi[k] = c * zi[k] - s * t;
          }
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

EigenDecomposition sym_eigen(const SymMatrix& h, bool want_vectors) {
  const auto n = static_cast<Eigen::Index>(h.dim());
  Eigen::MatrixXd dense = h.to_dense();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = j; i < n; ++i) {
      if (!std::isfinite(dense(i, j))) throw std::invalid_argument("sym_eigen: non-finite entry");
    }
  }

  Eigen::VectorXd diag;
  Eigen::VectorXd sub;
  std::optional<Eigen::MatrixXd> q;
  if (n == 1) {
    diag = dense.diagonal();
    sub = Eigen::VectorXd();
    if (want_vectors) q = Eigen::MatrixXd::Identity(1, 1);
  } else {
    Eigen::Tridiagonalization<Eigen::MatrixXd> tri(dense);
    diag = tri.diagonal();
    sub = tri.subDiagonal();
    if (want_vectors) q = Eigen::MatrixXd(tri.matrixQ());
  }
  dense.resize(0, 0);

  tridiagonal_ql(diag, sub, q ? &*q : nullptr);

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) { return diag[a] < diag[b]; });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) out.eigenvalues[k] = diag[order[static_cast<std::size_t>(k)]];
  if (q) {
    Eigen::MatrixXd sorted(n, n);
    for (Eigen::Index k = 0; k < n; ++k) sorted.col(k) = q->col(order[static_cast<std::size_t>(k)]);
    out.eigenvectors = std::move(sorted);
  }
  return out;
}

double wrap_angle(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  theta = std::remainder(theta, two_pi);  // [-pi, pi]
  if (theta <= -std::numbers::pi) theta += two_pi;
  return theta;
}

LogDet complex_logdet(const ComplexMatrix& input) {
  if (input.rows() != input.cols() || input.rows() == 0) {
    throw std::invalid_argument("complex_logdet: matrix must be square and non-empty");
  }
  const Eigen::Index n = input.rows();
  ComplexMatrix a = input;
  double scale = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) {
        throw std::invalid_argument("complex_logdet: non-finite entry");
      }
      scale = std::max(scale, std::abs(a(i, j)));
    }
  }
  const double tiny = static_cast<double>(n) * std::numeric_limits<double>::epsilon() * scale;

  LogDet out;
  double arg = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index piv = k;
    double best = std::abs(a(k, k));
    for (Eigen::Index i = k + 1; i < n; ++i) {
      double mag = std::abs(a(i, k));
      if (mag > best) {
        best = mag;
        piv = i;
      }
    }
    if (best <= tiny || best == 0.0) {
      throw SingularError("complex_logdet: singular matrix (pivot " + std::to_string(k) + " vanishes)");
    }
    if (piv != k) {
      a.row(k).swap(a.row(piv));
      arg += std::numbers::pi;
    }
    const std::complex<double> pivot = a(k, k);
    out.log_modulus += std::log(best);
    arg += std::arg(pivot);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      std::complex<double> factor = a(i, k) / pivot;
      if (factor == 0.0) continue;
      a.row(i).tail(n - k - 1) -= factor * a.row(k).tail(n - k - 1);
    }
    // Keep the running argument bounded so long products do not lose digits.
    arg = wrap_angle(arg);
  }
  out.argument = wrap_angle(arg);
  return out;
}

std::vector<QuadratureNode> gauss_chebyshev2_nodes(int count) {
  if (count < 1) throw std::invalid_argument("gauss_chebyshev2_nodes: count must be positive");
  std::vector<QuadratureNode> rule;
  rule.reserve(static_cast<std::size_t>(count));
  const double h = std::numbers::pi / (count + 1);
  for (int j = 1; j <= count; ++j) {
    double s = std::sin(j * h);
    double node = std::cos(j * h);
    // cos is inexact at the midpoint; pin the symmetric rule's center.
    if (2 * j == count + 1) node = 0.0;
    rule.push_back({node, h * s * s});
  }
  return rule;
}

}  // namespace izeta
