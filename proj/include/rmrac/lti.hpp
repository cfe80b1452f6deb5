#pragma once

#include <utility>

#include "rmrac/matrix.hpp"
#include "rmrac/polynomial.hpp"

namespace rmrac {

// x' = A x + b u,  y = c^T x
struct StateSpace {
  Matrix A;
  Vector b;
  Vector c;

  StateSpace() = default;
  StateSpace(Matrix a, Vector b_in, Vector c_in);

  std::size_t n() const { return b.size(); }
};

// num(s)/den(s), den normalized to monic. deg(num) <= deg(den).
struct TransferFunction {
  Polynomial num;
  Polynomial den;

  TransferFunction(Polynomial n, Polynomial d);

  std::complex<double> eval(std::complex<double> s) const { return num.eval(s) / den.eval(s); }
  double dc_gain() const { return num.coeff(0) / den.coeff(0); }
};

// Routh-Hurwitz verdict with the array's first column exposed for margin
// reporting. `hurwitz` is strict: an imaginary-axis root (whole zero row,
// or a zero in the first column) reports false.
struct RouthReport {
  bool hurwitz = false;
  std::vector<double> first_column;  // one entry per array row, degree+1 rows
  int first_failing_row = -1;        // -1 when hurwitz
  bool zero_row = false;             // an all-zero row appeared (roots on the axis)
  double margin = 0.0;               // min of the first column below the leading entry
};

// Full Routh array on p (degree >= 1). Zero first-column pivots are replaced
// by 1e-12 to let the array continue; the verdict in that case is "not
// strictly Hurwitz".
RouthReport roots_in_lhp(const Polynomial& p);

// s^3 + a1 s^2 + a2 s + a3: Hurwitz iff a1 > 0, a3 > 0, a1 a2 > a3.
bool cubic_hurwitz(double a1, double a2, double a3);

// Controllable canonical realization of a strictly proper transfer function.
// The gain sits in the input vector: with k the lowest-order nonzero
// numerator coefficient, b = [0, ..., 0, k]^T and c = num/k zero-padded, so
// that e.g. w^2/(s^2 + 2 z w s + w^2) realizes as b = [0, w^2]^T, c = [1, 0]^T
// and ||b|| = w^2.
StateSpace realize_controllable(const TransferFunction& tf);

// Characteristic polynomial of A by the Faddeev-LeVerrier recursion (monic).
Polynomial char_poly(const Matrix& A);

// Exact transfer function of a state-space triple: den = char_poly(A),
// num from c^T adj(sI - A) b via the same recursion.
TransferFunction ss_to_tf(const StateSpace& ss);

// Solve Abar^T P + P Abar = -Q for symmetric P as a dense linear system in
// the n(n+1)/2 independent entries. Throws if the system is singular or the
// residual exceeds 1e-10 * ||Q||_F (both indicate a non-Hurwitz Abar).
Matrix lyapunov_solve(const Matrix& Abar, const Matrix& Q);

// (lambda_min, lambda_max) of a symmetric matrix by cyclic Jacobi rotations,
// iterated until the off-diagonal norm is <= 1e-12 * ||M||_F.
std::pair<double, double> sym_eig_extrema(const Matrix& M);

// max over omega of |G(j omega)|: 1e4-point log grid on [1e-3, 1e4] rad/s
// (plus omega = 0) refined by golden section. Requires a Hurwitz denominator.
double hinf_norm(const TransferFunction& tf);

// q_eta(s) (s - a_p) + k_p theta_max p_eta(s): characteristic polynomial of
// the loop closed with the fixed gain theta = -theta_max.
Polynomial closed_loop_qc(const Polynomial& q_eta, const Polynomial& p_eta, double a_p,
                          double k_p, double theta_max);

}  // namespace rmrac
