// Independent references for the unit tests: companion-matrix eigenvalues
// through Eigen's solver, Eigen-side Lyapunov residuals, random stable
// systems. Nothing here touches the library's own Routh/Jacobi/solver paths.
#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <complex>
#include <random>
#include <vector>

#include "rmrac/lti.hpp"
#include "rmrac/matrix.hpp"
#include "rmrac/polynomial.hpp"

namespace oracles {

inline Eigen::MatrixXd to_eigen(const rmrac::Matrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(static_cast<long>(i), static_cast<long>(j)) = m(i, j);
  return out;
}

inline rmrac::Matrix from_eigen(const Eigen::MatrixXd& m) {
  rmrac::Matrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return out;
}

// roots of a monic-normalized polynomial as eigenvalues of its companion matrix
inline std::vector<std::complex<double>> poly_roots(const rmrac::Polynomial& p) {
  const rmrac::Polynomial m = p.monic();
  const int n = m.degree();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -m.coeff(n - 1 - i);
  // bottom-companion transpose; either convention shares the spectrum
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) roots[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
  return roots;
}

inline bool all_roots_in_lhp(const rmrac::Polynomial& p) {
  for (const auto& r : poly_roots(p))
    if (r.real() >= 0.0) return false;
  return true;
}

inline double spectral_abscissa(const rmrac::Matrix& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(m));
  double a = -1e300;
  for (long i = 0; i < es.eigenvalues().size(); ++i) a = std::max(a, es.eigenvalues()(i).real());
  return a;
}

// random dense matrix shifted until comfortably Hurwitz
inline rmrac::Matrix random_hurwitz(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(static_cast<long>(i), static_cast<long>(j)) = u(rng);
  Eigen::EigenSolver<Eigen::MatrixXd> es(m);
  double a = -1e300;
  for (long i = 0; i < es.eigenvalues().size(); ++i) a = std::max(a, es.eigenvalues()(i).real());
  const double shift = a + 0.2 + std::abs(u(rng));
  for (std::size_t i = 0; i < n; ++i) m(static_cast<long>(i), static_cast<long>(i)) -= shift;
  return from_eigen(m);
}

inline rmrac::Matrix random_spd(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(static_cast<long>(i), static_cast<long>(j)) = u(rng);
  Eigen::MatrixXd spd = m * m.transpose() + 0.1 * Eigen::MatrixXd::Identity(n, n);
  return from_eigen(spd);
}

inline rmrac::Matrix random_symmetric(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  rmrac::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
  return m;
}

inline std::pair<double, double> sym_extrema_eigen(const rmrac::Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(m));
  return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
}

// random monic polynomial of the given degree with roots in a disc, mixing
// stable and unstable draws
inline rmrac::Polynomial random_monic(std::mt19937& rng, int degree) {
  std::uniform_real_distribution<double> u(-3.0, 1.5);
  std::uniform_real_distribution<double> w(0.2, 4.0);
  std::bernoulli_distribution coin(0.5);
  rmrac::Polynomial p({1.0});
  int left = degree;
  while (left > 0) {
    if (left >= 2 && coin(rng)) {
      const double re = u(rng), im = w(rng);
      p = p * rmrac::Polynomial({1.0, -2.0 * re, re * re + im * im});
      left -= 2;
    } else {
      p = p * rmrac::Polynomial({1.0, -u(rng)});
      left -= 1;
    }
  }
  return p;
}

}  // namespace oracles
