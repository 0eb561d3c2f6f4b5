#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wreathchar {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in cyclotomic field") {}
};

/// Exact element of a cyclotomic field Q(zeta_N).
///
/// Values are kept in canonical form: the order N is the conductor of the
/// smallest cyclotomic field containing the value, and the coefficient vector
/// is the unique representative of degree < phi(N) modulo the N-th cyclotomic
/// polynomial, in the power basis 1, zeta_N, zeta_N^2, ...  Equality is
/// therefore plain structural comparison.
///
/// Instances are immutable once built; all operations return new values.
class CycloNum {
 public:
  CycloNum();
  CycloNum(long value);  // NOLINT(google-explicit-constructor)
  CycloNum(const mpq_class& value);  // NOLINT(google-explicit-constructor)

  /// zeta_N^k. Throws std::invalid_argument for N = 0.
  static CycloNum root_of_unity(long k, long n);

  long order() const { return order_; }
  /// Canonical coefficients; size phi(order()).
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return order_ == 1; }
  /// Throws std::domain_error unless is_rational().
  mpq_class to_rational() const;
  /// True when rational with denominator 1.
  bool is_integer() const;
  /// True when all canonical coefficients are integers (algebraic integer test
  /// in the power basis, which is an integral basis of Z[zeta_N]).
  bool is_cyclotomic_integer() const;

  /// Image under zeta -> zeta^{-1}.
  CycloNum conjugate() const;
  /// Image under zeta_N -> zeta_N^k for gcd(k, N) = 1.
  CycloNum galois(long k) const;
  CycloNum inverse() const;

  friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b);
  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& b) { return *this = *this + b; }
  CycloNum& operator-=(const CycloNum& b) { return *this = *this - b; }
  CycloNum& operator*=(const CycloNum& b) { return *this = *this * b; }
  CycloNum& operator/=(const CycloNum& b) { return *this = *this / b; }

  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  /// `N:[e1=p1/q1, e2=p2/q2, ...]`, exponents ascending, zero terms omitted,
  /// integral coefficients printed without a denominator.
  std::string to_string() const;
  /// Inverse of to_string(). Non-canonical input (any exponents below N) is
  /// accepted and canonicalized. Throws std::invalid_argument on bad syntax.
  static CycloNum parse(std::string_view text);

 private:
  // Builds a canonical value from a raw coefficient vector indexed by
  // exponent mod n (length n).
  static CycloNum from_raw(long n, std::vector<mpq_class> raw);

  long order_ = 1;
  std::vector<mpq_class> coeffs_;
};

enum class ArithOp { Add, Sub, Mul, Div };
CycloNum arith(const CycloNum& a, const CycloNum& b, ArithOp op);

/// Euler's totient.
long euler_phi(long n);
/// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<long long> cyclotomic_polynomial(long n);

}  // namespace wreathchar
