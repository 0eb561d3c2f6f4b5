#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wreathchar {

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  /// Sorts and drops zeros first.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](size_t i) const { return parts_[i]; }

  Partition conjugate() const;
  /// n(lambda) = sum (i-1) lambda_i.
  long n_statistic() const;
  /// Hook lengths row by row.
  std::vector<int> hook_lengths() const;
  /// Multiplicity of each part size.
  std::map<int, int> multiplicities() const;
  /// z_mu = prod m_j! j^{m_j}.
  mpz_class centralizer_order() const;

  /// `[a,b,c]`
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// A partition read as the cycle lengths of a permutation.
using CycleType = Partition;

/// Integer polynomial in q, dense, constant term first, no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpz_class> coeffs);
  QPoly(long constant);  // NOLINT(google-explicit-constructor)

  static QPoly monomial(long coeff, int degree);
  /// q^k - c
  static QPoly binomial(int k, long c);

  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  mpz_class leading() const { return coeffs_.empty() ? mpz_class(0) : coeffs_.back(); }

  mpz_class evaluate(const mpz_class& q) const;
  /// p(q) -> p(-q)
  QPoly negate_variable() const;
  /// p(q) -> p(q^k)
  QPoly substitute_power(int k) const;
  /// Exact quotient; throws std::logic_error when the divisor does not divide.
  QPoly exact_divide(const QPoly& divisor) const;
  /// Exact division of all coefficients by an integer; throws std::logic_error otherwise.
  QPoly exact_divide(const mpz_class& d) const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;
  QPoly& operator+=(const QPoly& b) { return *this = *this + b; }
  QPoly& operator*=(const QPoly& b) { return *this = *this * b; }
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// `c0 + c1*q + c2*q^2 + ...`, zero terms omitted; the zero polynomial prints as `0`.
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// All partitions of n in reverse lexicographic order ((n) first, (1^n) last).
std::vector<Partition> enumerate_partitions(int n);

/// Compositions (ordered, positive parts) of n.
std::vector<std::vector<int>> enumerate_compositions(int n);

/// chi^lambda(mu) by the Murnaghan-Nakayama rule. Throws std::invalid_argument
/// when |lambda| != |mu|.
long mn_character(const Partition& lambda, const CycleType& mu);

/// Dense character table of S_n: rows and columns indexed by
/// enumerate_partitions(n).
class SymmetricCharacterTable {
 public:
  explicit SymmetricCharacterTable(int n);
  int n() const { return n_; }
  const std::vector<Partition>& partitions() const { return parts_; }
  size_t index_of(const Partition& p) const;
  long value(size_t irr, size_t cls) const { return table_[irr][cls]; }
  long value(size_t irr, const CycleType& mu) const { return table_[irr][index_of(mu)]; }
  long degree(size_t irr) const { return table_[irr][parts_.size() - 1]; }

 private:
  int n_;
  std::vector<Partition> parts_;
  std::map<Partition, size_t> index_;
  std::vector<std::vector<long>> table_;
};

/// |GL_n(q)|_{p'} = prod_{i<=n} (q^i - 1).
QPoly gl_order_pprime(int n);
/// prod_{i<=n} (q^i - (-1)^i).
QPoly gu_order_pprime(int n);
/// |GL_n(q)| and |GU_n(q)| including the q^{n(n-1)/2} factor.
QPoly gl_order(int n);
QPoly gu_order(int n);

/// Unipotent degree of GL_n(q) labelled by lambda (hook formula).
QPoly generic_degree_gl(const Partition& lambda);

struct SignedDegree {
  int sign = 1;
  QPoly degree;
};

/// D_lambda(-q) normalised to be positive at q = 2, with the sign removed.
SignedDegree unitary_sign_and_degree(const Partition& lambda);

enum class TorusType { Linear, Unitary };

/// Degree of the unipotent character attached to lambda, obtained from the
/// class-sum average of Deligne-Lusztig degrees over maximal tori of type mu.
QPoly degree_via_class_sum(const Partition& lambda, TorusType type);

/// M[lambda][mu] = <Ind_{S_mu}^{S_n} 1, chi^lambda>, both indexed by
/// enumerate_partitions(n).
std::vector<std::vector<long>> kostka_matrix(int n);

/// Exact determinant of an integer matrix (Bareiss).
mpz_class integer_determinant(const std::vector<std::vector<long>>& m);

}  // namespace wreathchar
