#include <sstream>
#include <stdexcept>

#include "wreathchar/partitions.hpp"

namespace wreathchar {

QPoly::QPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(long constant) {
  if (constant != 0) coeffs_.push_back(mpz_class(constant));
}

QPoly QPoly::monomial(long coeff, int degree) {
  std::vector<mpz_class> c(degree + 1, 0);
  c[degree] = coeff;
  return QPoly(std::move(c));
}

QPoly QPoly::binomial(int k, long c) {
  std::vector<mpz_class> v(k + 1, 0);
  v[k] += 1;
  v[0] -= c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpz_class QPoly::evaluate(const mpz_class& q) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPoly QPoly::negate_variable() const {
  auto c = coeffs_;
  for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return QPoly(std::move(c));
}

QPoly QPoly::substitute_power(int k) const {
  if (coeffs_.empty()) return {};
  std::vector<mpz_class> c(static_cast<size_t>(degree()) * k + 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i * k] = coeffs_[i];
  return QPoly(std::move(c));
}

QPoly QPoly::exact_divide(const QPoly& divisor) const {
  if (divisor.is_zero()) throw std::logic_error("QPoly: division by zero polynomial");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw std::logic_error("QPoly: inexact division");
  auto rem = coeffs_;
  const int dd = divisor.degree();
  const mpz_class& lead = divisor.coeffs_.back();
  std::vector<mpz_class> quo(degree() - dd + 1, 0);
  for (int i = degree() - dd; i >= 0; --i) {
    const mpz_class& top = rem[i + dd];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw std::logic_error("QPoly: inexact division");
    const mpz_class c = top / lead;
    quo[i] = c;
    for (int j = 0; j <= dd; ++j) rem[i + j] -= c * divisor.coeffs_[j];
  }
  for (const auto& r : rem)
    if (sgn(r) != 0) throw std::logic_error("QPoly: inexact division");
  return QPoly(std::move(quo));
}

QPoly QPoly::exact_divide(const mpz_class& d) const {
  if (sgn(d) == 0) throw std::logic_error("QPoly: division by zero");
  auto c = coeffs_;
  for (auto& x : c) {
    if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()))
      throw std::logic_error("QPoly: inexact integer division");
    x /= d;
  }
  return QPoly(std::move(c));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return QPoly(std::move(c));
}

QPoly QPoly::operator-() const {
  auto c = coeffs_;
  for (auto& x : c) x = -x;
  return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return QPoly(std::move(c));
}

std::string QPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0)
      os << coeffs_[i].get_str();
    else if (i == 1)
      os << coeffs_[i].get_str() << "*q";
    else
      os << coeffs_[i].get_str() << "*q^" << i;
  }
  return os.str();
}

}  // namespace wreathchar
