#pragma once

#include <complex>
#include <string>
#include <vector>

namespace rmrac {

// Real polynomial with coefficients stored in descending degree order.
// The leading coefficient is always nonzero after construction (leading
// zeros are trimmed); the zero polynomial is not representable.
class Polynomial {
 public:
  // coeffs = {a_n, ..., a_1, a_0} for a_n s^n + ... + a_0
  explicit Polynomial(std::vector<double> coeffs);

  static Polynomial constant(double c) { return Polynomial({c}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double leading() const { return coeffs_.front(); }

  // coefficient of s^power (0 when power > degree)
  double coeff(int power) const;

  double eval(double s) const;
  std::complex<double> eval(std::complex<double> s) const;

  Polynomial scaled(double factor) const;
  Polynomial monic() const { return scaled(1.0 / leading()); }

  std::string to_string() const;  // e.g. "s^3 + 31 s^2 + 259 s + 229"

 private:
  std::vector<double> coeffs_;
};

Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator+(const Polynomial& a, const Polynomial& b);

}  // namespace rmrac
