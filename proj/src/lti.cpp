#include "rmrac/lti.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rmrac {

StateSpace::StateSpace(Matrix a, Vector b_in, Vector c_in)
    : A(std::move(a)), b(std::move(b_in)), c(std::move(c_in)) {
  if (A.rows() != A.cols()) throw std::invalid_argument("state space: A must be square");
  if (b.size() != A.rows() || c.size() != A.rows())
    throw std::invalid_argument("state space: b/c dimension mismatch");
}

TransferFunction::TransferFunction(Polynomial n, Polynomial d)
    : num(std::move(n)), den(std::move(d)) {
  if (num.degree() > den.degree())
    throw std::invalid_argument("transfer function: improper (deg num > deg den)");
  const double lead = den.leading();
  den = den.monic();
  num = num.scaled(1.0 / lead);
}

RouthReport roots_in_lhp(const Polynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("roots_in_lhp: degree must be >= 1");
  const int n = p.degree();
  // normalize to a positive leading coefficient; stability is sign-invariant
  std::vector<double> c = p.coeffs();
  if (c[0] < 0.0)
    for (double& v : c) v = -v;

  // rows[0] = c0, c2, c4, ...  rows[1] = c1, c3, ...
  const std::size_t width = static_cast<std::size_t>(n) / 2 + 1;
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(n) + 1,
                                        std::vector<double>(width, 0.0));
  for (int i = 0; i <= n; ++i) rows[static_cast<std::size_t>(i % 2)][static_cast<std::size_t>(i / 2)] = c[static_cast<std::size_t>(i)];

  RouthReport rep;
  constexpr double kEps = 1e-12;
  bool pivot_substituted = false;

  for (std::size_t r = 2; r <= static_cast<std::size_t>(n); ++r) {
    bool all_zero = true;
    for (double v : rows[r - 1])
      if (v != 0.0) all_zero = false;
    if (all_zero) {
      // an entire zero row signals roots symmetric about the origin
      // (imaginary-axis pairs): not strictly Hurwitz
      rep.zero_row = true;
      break;
    }
    double pivot = rows[r - 1][0];
    if (pivot == 0.0) {
      pivot = kEps;
      pivot_substituted = true;
    }
    for (std::size_t j = 0; j + 1 < width; ++j)
      rows[r][j] = (pivot * rows[r - 2][j + 1] - rows[r - 2][0] * rows[r - 1][j + 1]) / pivot;
  }

  rep.first_column.reserve(static_cast<std::size_t>(n) + 1);
  for (std::size_t r = 0; r <= static_cast<std::size_t>(n); ++r) rep.first_column.push_back(rows[r][0]);

  rep.hurwitz = !rep.zero_row && !pivot_substituted;
  rep.margin = rep.first_column.size() > 1 ? rep.first_column[1] : 0.0;
  for (std::size_t r = 1; r < rep.first_column.size(); ++r) {
    rep.margin = std::min(rep.margin, rep.first_column[r]);
    if (rep.first_column[r] <= 0.0 && rep.first_failing_row < 0) {
      rep.first_failing_row = static_cast<int>(r);
      rep.hurwitz = false;
    }
  }
  if (rep.zero_row && rep.first_failing_row < 0) rep.first_failing_row = static_cast<int>(n);
  return rep;
}

bool cubic_hurwitz(double a1, double a2, double a3) {
  return a1 > 0.0 && a3 > 0.0 && a1 * a2 > a3;
}

StateSpace realize_controllable(const TransferFunction& tf) {
  const int n = tf.den.degree();
  if (tf.num.degree() >= n)
    throw std::invalid_argument("realize_controllable: transfer function must be strictly proper");
  const std::size_t sn = static_cast<std::size_t>(n);

  Matrix A(sn, sn);
  for (std::size_t i = 0; i + 1 < sn; ++i) A(i, i + 1) = 1.0;
  for (int j = 0; j < n; ++j) A(sn - 1, static_cast<std::size_t>(j)) = -tf.den.coeff(j);

  int low = 0;
  while (low <= tf.num.degree() && tf.num.coeff(low) == 0.0) ++low;
  const double k = tf.num.coeff(low);

  Vector b(sn, 0.0), c(sn, 0.0);
  b[sn - 1] = k;
  for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(j)] = tf.num.coeff(j) / k;
  return StateSpace(std::move(A), std::move(b), std::move(c));
}

namespace {

// Faddeev-LeVerrier: returns char-poly coefficients (monic, descending) and,
// when collect_adj, the adjugate expansion matrices M_1..M_n with
// adj(sI - A) = sum_k M_k s^(n-k).
std::vector<double> faddeev_leverrier(const Matrix& A, std::vector<Matrix>* adj_terms) {
  const std::size_t n = A.rows();
  std::vector<double> coeffs{1.0};
  Matrix M = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (adj_terms) adj_terms->push_back(M);
    Matrix AM = A * M;
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
    const double ck = -tr / static_cast<double>(k);
    coeffs.push_back(ck);
    M = AM;
    for (std::size_t i = 0; i < n; ++i) M(i, i) += ck;
  }
  return coeffs;
}

}  // namespace

Polynomial char_poly(const Matrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("char_poly: A must be square");
  if (A.rows() == 0) return Polynomial::constant(1.0);
  return Polynomial(faddeev_leverrier(A, nullptr));
}

TransferFunction ss_to_tf(const StateSpace& ss) {
  const std::size_t n = ss.n();
  if (n == 0) throw std::invalid_argument("ss_to_tf: empty system");
  std::vector<Matrix> adj;
  std::vector<double> den = faddeev_leverrier(ss.A, &adj);
  std::vector<double> num(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) num[k] = dot(ss.c, mat_vec(adj[k], ss.b));
  bool all_zero = true;
  for (double v : num)
    if (v != 0.0) all_zero = false;
  if (all_zero) throw std::invalid_argument("ss_to_tf: identically zero transfer function");
  return TransferFunction(Polynomial(std::move(num)), Polynomial(std::move(den)));
}

Matrix lyapunov_solve(const Matrix& Abar, const Matrix& Q) {
  const std::size_t n = Abar.rows();
  if (Abar.cols() != n) throw std::invalid_argument("lyapunov_solve: Abar must be square");
  if (Q.rows() != n || Q.cols() != n) throw std::invalid_argument("lyapunov_solve: Q dimension mismatch");
  if (Q.symmetry_defect() > 1e-12 * std::max(1.0, Q.frobenius_norm()))
    throw std::invalid_argument("lyapunov_solve: Q is not symmetric");

  // unknowns: p_ij for i <= j, indexed by idx(i,j)
  const std::size_t m = n * (n + 1) / 2;
  std::vector<std::size_t> idx(n * n);
  {
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) idx[i * n + j] = idx[j * n + i] = next++;
  }

  // equation (i,j), i <= j:  sum_k A(k,i) P(k,j) + sum_k P(i,k) A(k,j) = -Q(i,j)
  std::vector<std::vector<double>> M(m, std::vector<double>(m + 1, 0.0));
  {
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j, ++row) {
        for (std::size_t k = 0; k < n; ++k) {
          M[row][idx[k * n + j]] += Abar(k, i);
          M[row][idx[i * n + k]] += Abar(k, j);
        }
        M[row][m] = -Q(i, j);
      }
  }

  // Gaussian elimination with partial pivoting
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < m; ++r)
      if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
    if (std::abs(M[piv][col]) < 1e-13 * std::max(1.0, Abar.max_abs()))
      throw std::runtime_error(
          "lyapunov_solve: singular system (Abar has eigenvalue pair summing to zero; not Hurwitz)");
    std::swap(M[col], M[piv]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || M[r][col] == 0.0) continue;
      const double f = M[r][col] / M[col][col];
      for (std::size_t cc = col; cc <= m; ++cc) M[r][cc] -= f * M[col][cc];
    }
  }

  Matrix P(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const std::size_t u = idx[i * n + j];
      P(i, j) = P(j, i) = M[u][m] / M[u][u];
    }

  const Matrix residual = Abar.transpose() * P + P * Abar + Q;
  if (residual.frobenius_norm() > 1e-10 * Q.frobenius_norm())
    throw std::runtime_error("lyapunov_solve: residual exceeds tolerance (Abar likely not Hurwitz)");
  return P;
}

std::pair<double, double> sym_eig_extrema(const Matrix& M_in) {
  const std::size_t n = M_in.rows();
  if (M_in.cols() != n) throw std::invalid_argument("sym_eig_extrema: matrix must be square");
  const double scale = M_in.frobenius_norm();
  if (M_in.symmetry_defect() > 1e-12 * std::max(1.0, scale))
    throw std::invalid_argument("sym_eig_extrema: matrix is not symmetric");
  if (n == 0) throw std::invalid_argument("sym_eig_extrema: empty matrix");

  Matrix A = M_in;
  const double tol = 1e-12 * scale;
  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * A(i, j) * A(i, j);
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && off_norm() > tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double tau = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(tau * tau + 1.0));
        const double cs = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * cs;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = A(k, p), akq = A(k, q);
          A(k, p) = cs * akp - sn * akq;
          A(k, q) = sn * akp + cs * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = A(p, k), aqk = A(q, k);
          A(p, k) = cs * apk - sn * aqk;
          A(q, k) = sn * apk + cs * aqk;
        }
      }
  }

  double lo = A(0, 0), hi = A(0, 0);
  for (std::size_t i = 1; i < n; ++i) {
    lo = std::min(lo, A(i, i));
    hi = std::max(hi, A(i, i));
  }
  return {lo, hi};
}

double hinf_norm(const TransferFunction& tf) {
  if (tf.den.degree() >= 1) {
    if (!roots_in_lhp(tf.den).hurwitz)
      throw std::invalid_argument("hinf_norm: denominator is not Hurwitz");
  }
  auto mag = [&](double w) { return std::abs(tf.eval(std::complex<double>(0.0, w))); };

  constexpr int kGrid = 10000;
  const double lw0 = std::log10(1e-3), lw1 = std::log10(1e4);
  double best_w = 0.0, best = mag(0.0);
  for (int i = 0; i < kGrid; ++i) {
    const double w = std::pow(10.0, lw0 + (lw1 - lw0) * i / (kGrid - 1));
    const double m = mag(w);
    if (m > best) {
      best = m;
      best_w = w;
    }
  }

  // golden-section refinement around the best grid point
  double a = best_w > 0.0 ? best_w / std::pow(10.0, (lw1 - lw0) / (kGrid - 1)) : 0.0;
  double b = best_w > 0.0 ? best_w * std::pow(10.0, (lw1 - lw0) / (kGrid - 1)) : 1e-3;
  constexpr double kPhi = 0.6180339887498949;
  double x1 = b - kPhi * (b - a), x2 = a + kPhi * (b - a);
  double f1 = mag(x1), f2 = mag(x2);
  for (int it = 0; it < 200 && (b - a) > 1e-12 * (1.0 + b); ++it) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kPhi * (b - a);
      f1 = mag(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kPhi * (b - a);
      f2 = mag(x2);
    }
  }
  return std::max({best, f1, f2});
}

Polynomial closed_loop_qc(const Polynomial& q_eta, const Polynomial& p_eta, double a_p,
                          double k_p, double theta_max) {
  if (k_p == 0.0) throw std::invalid_argument("closed_loop_qc: k_p must be nonzero");
  const Polynomial s_minus_ap({1.0, -a_p});
  const double gain = k_p * theta_max;
  if (gain == 0.0) return q_eta * s_minus_ap;
  return q_eta * s_minus_ap + p_eta.scaled(gain);
}

}  // namespace rmrac
