#include "rmrac/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rmrac {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("polynomial: empty coefficient list");
  for (double c : coeffs_)
    if (!std::isfinite(c)) throw std::invalid_argument("polynomial: non-finite coefficient");
  std::size_t lead = 0;
  while (lead + 1 < coeffs_.size() && coeffs_[lead] == 0.0) ++lead;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
  if (coeffs_.size() == 1 && coeffs_[0] == 0.0)
    throw std::invalid_argument("polynomial: zero polynomial is not representable");
}

double Polynomial::coeff(int power) const {
  if (power < 0 || power > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(degree() - power)];
}

double Polynomial::eval(double s) const {
  double acc = 0.0;
  for (double c : coeffs_) acc = acc * s + c;
  return acc;
}

std::complex<double> Polynomial::eval(std::complex<double> s) const {
  std::complex<double> acc = 0.0;
  for (double c : coeffs_) acc = acc * s + c;
  return acc;
}

Polynomial Polynomial::scaled(double factor) const {
  if (factor == 0.0) throw std::invalid_argument("polynomial: scaling by zero");
  std::vector<double> out = coeffs_;
  for (double& c : out) c *= factor;
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    double c = coeff(p);
    if (c == 0.0 && degree() > 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    double a = std::abs(c);
    if (a != 1.0 || p == 0) os << a;
    if (p >= 1) {
      if (a != 1.0) os << " ";
      os << "s";
      if (p > 1) os << "^" << p;
    }
  }
  return os.str();
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<double> out(static_cast<std::size_t>(a.degree() + b.degree()) + 1, 0.0);
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < cb.size(); ++j) out[i + j] += ca[i] * cb[j];
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const int deg = std::max(a.degree(), b.degree());
  std::vector<double> out(static_cast<std::size_t>(deg) + 1, 0.0);
  for (int p = 0; p <= deg; ++p) out[static_cast<std::size_t>(deg - p)] = a.coeff(p) + b.coeff(p);
  return Polynomial(std::move(out));
}

}  // namespace rmrac
