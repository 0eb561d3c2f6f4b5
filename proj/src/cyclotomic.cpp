#include "wreathchar/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace wreathchar {

namespace {

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

const std::vector<long long>& phi_poly(long n) {
  // Per-thread memo; values never change once computed.
  thread_local std::map<long, std::vector<long long>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // x^n - 1 divided by every Phi_d for proper divisors d.
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (long d : divisors(n)) {
    if (d == n) continue;
    const auto& den = phi_poly(d);
    const long dd = static_cast<long>(den.size()) - 1;
    const long nd = static_cast<long>(num.size()) - 1;
    std::vector<long long> quo(nd - dd + 1, 0);
    for (long i = nd - dd; i >= 0; --i) {
      const long long c = num[i + dd];  // den is monic
      quo[i] = c;
      for (long j = 0; j <= dd; ++j) num[i + j] -= c * den[j];
    }
    for (long j = 0; j < dd; ++j)
      if (num[j] != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
    num = std::move(quo);
  }
  return cache.emplace(n, std::move(num)).first->second;
}

// Reduces a raw vector (any length) modulo Phi_n in place; result has length phi(n).
void reduce_mod_phi(long n, std::vector<mpq_class>& a) {
  const auto& p = phi_poly(n);
  const long deg = static_cast<long>(p.size()) - 1;
  for (long e = static_cast<long>(a.size()) - 1; e >= deg; --e) {
    if (sgn(a[e]) == 0) continue;
    const mpq_class c = a[e];
    for (long j = 0; j < deg; ++j)
      if (p[j] != 0) a[e - deg + j] -= c * mpq_class(static_cast<long>(p[j]));
    a[e] = 0;
  }
  a.resize(deg);
}

// Solves x = sum_j c_j zeta_n^{j*n/m} (j < phi(m)) for c over Q if possible.
bool express_in_subfield(long n, long m, const std::vector<mpq_class>& x,
                         std::vector<mpq_class>& out) {
  const long rows = static_cast<long>(x.size());
  const long cols = euler_phi(m);
  const long step = n / m;
  // Augmented matrix, column-major basis vectors then rhs.
  std::vector<std::vector<mpq_class>> mat(rows, std::vector<mpq_class>(cols + 1));
  for (long j = 0; j < cols; ++j) {
    std::vector<mpq_class> v(static_cast<size_t>(j * step) + 1, 0);
    v[j * step] = 1;
    if (static_cast<long>(v.size()) < rows) v.resize(rows, 0);
    reduce_mod_phi(n, v);
    for (long r = 0; r < rows; ++r) mat[r][j] = v[r];
  }
  for (long r = 0; r < rows; ++r) mat[r][cols] = x[r];

  std::vector<long> pivot_col;
  long prow = 0;
  for (long c = 0; c < cols && prow < rows; ++c) {
    long sel = -1;
    for (long r = prow; r < rows; ++r)
      if (sgn(mat[r][c]) != 0) { sel = r; break; }
    if (sel < 0) continue;
    std::swap(mat[prow], mat[sel]);
    const mpq_class inv = 1 / mat[prow][c];
    for (long k = c; k <= cols; ++k) mat[prow][k] *= inv;
    for (long r = 0; r < rows; ++r) {
      if (r == prow || sgn(mat[r][c]) == 0) continue;
      const mpq_class f = mat[r][c];
      for (long k = c; k <= cols; ++k) mat[r][k] -= f * mat[prow][k];
    }
    pivot_col.push_back(c);
    ++prow;
  }
  for (long r = prow; r < rows; ++r)
    if (sgn(mat[r][cols]) != 0) return false;
  out.assign(cols, 0);
  for (long r = 0; r < prow; ++r) out[pivot_col[r]] = mat[r][cols];
  return true;
}

}  // namespace

long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long long> cyclotomic_polynomial(long n) {
  if (n <= 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  return phi_poly(n);
}

CycloNum::CycloNum() : order_(1), coeffs_{mpq_class(0)} {}
CycloNum::CycloNum(long value) : order_(1), coeffs_{mpq_class(value)} {}
CycloNum::CycloNum(const mpq_class& value) : order_(1), coeffs_{value} {
  coeffs_[0].canonicalize();
}

CycloNum CycloNum::from_raw(long n, std::vector<mpq_class> raw) {
  reduce_mod_phi(n, raw);
  CycloNum out;
  bool rational = true;
  for (size_t e = 1; e < raw.size(); ++e)
    if (sgn(raw[e]) != 0) { rational = false; break; }
  if (rational) {
    out.coeffs_[0] = raw.empty() ? mpq_class(0) : raw[0];
    return out;
  }
  for (long m : divisors(n)) {
    if (m == 1 || m == n || m % 4 == 2) continue;
    std::vector<mpq_class> sub;
    if (express_in_subfield(n, m, raw, sub)) {
      out.order_ = m;
      out.coeffs_ = std::move(sub);
      return out;
    }
  }
  out.order_ = n;
  out.coeffs_ = std::move(raw);
  return out;
}

CycloNum CycloNum::root_of_unity(long k, long n) {
  if (n <= 0) throw std::invalid_argument("root_of_unity: order must be positive");
  std::vector<mpq_class> raw(n, 0);
  raw[mod(k, n)] = 1;
  return from_raw(n, std::move(raw));
}

bool CycloNum::is_zero() const { return order_ == 1 && sgn(coeffs_[0]) == 0; }

mpq_class CycloNum::to_rational() const {
  if (!is_rational()) throw std::domain_error("CycloNum is not rational: " + to_string());
  return coeffs_[0];
}

bool CycloNum::is_integer() const {
  return is_rational() && coeffs_[0].get_den() == 1;
}

bool CycloNum::is_cyclotomic_integer() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

CycloNum CycloNum::galois(long k) const {
  if (order_ == 1) return *this;
  if (std::gcd(mod(k, order_), order_) != 1)
    throw std::invalid_argument("galois: exponent not coprime to the order");
  std::vector<mpq_class> raw(order_, 0);
  for (size_t e = 0; e < coeffs_.size(); ++e)
    raw[mod(static_cast<long>(e) * k, order_)] += coeffs_[e];
  return from_raw(order_, std::move(raw));
}

CycloNum CycloNum::conjugate() const { return galois(-1); }

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (order_ == 1) return CycloNum(mpq_class(1 / coeffs_[0]));
  CycloNum others(1);
  for (long k = 2; k < order_; ++k)
    if (std::gcd(k, order_) == 1) others = others * galois(k);
  const CycloNum norm = *this * others;
  return others * CycloNum(mpq_class(1 / norm.to_rational()));
}

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

namespace {

std::vector<mpq_class> embed_raw(const CycloNum& a, long n) {
  std::vector<mpq_class> raw(n, 0);
  const long step = n / a.order();
  const auto& c = a.coefficients();
  for (size_t e = 0; e < c.size(); ++e) raw[static_cast<long>(e) * step] += c[e];
  return raw;
}

}  // namespace

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
  if (a.order_ == 1 && b.order_ == 1) return CycloNum(mpq_class(a.coeffs_[0] + b.coeffs_[0]));
  const long n = lcm_long(a.order_, b.order_);
  auto raw = embed_raw(a, n);
  const auto rb = embed_raw(b, n);
  for (long e = 0; e < n; ++e) raw[e] += rb[e];
  return CycloNum::from_raw(n, std::move(raw));
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) { return a + (-b); }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  if (a.order_ == 1 && b.order_ == 1) return CycloNum(mpq_class(a.coeffs_[0] * b.coeffs_[0]));
  if (a.order_ == 1 || b.order_ == 1) {
    const CycloNum& r = a.order_ == 1 ? a : b;
    const CycloNum& x = a.order_ == 1 ? b : a;
    if (sgn(r.coeffs_[0]) == 0) return CycloNum();
    CycloNum out = x;
    for (auto& c : out.coeffs_) c *= r.coeffs_[0];
    return out;
  }
  const long n = lcm_long(a.order_, b.order_);
  const long sa = n / a.order_;
  const long sb = n / b.order_;
  std::vector<mpq_class> raw(n, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      raw[mod(static_cast<long>(i) * sa + static_cast<long>(j) * sb, n)] +=
          a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return CycloNum::from_raw(n, std::move(raw));
}

CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }

bool operator==(const CycloNum& a, const CycloNum& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

CycloNum arith(const CycloNum& a, const CycloNum& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw std::invalid_argument("arith: unknown op");
}

std::string CycloNum::to_string() const {
  std::ostringstream os;
  os << order_ << ":[";
  bool first = true;
  for (size_t e = 0; e < coeffs_.size(); ++e) {
    if (sgn(coeffs_[e]) == 0) continue;
    if (!first) os << ", ";
    first = false;
    os << e << '=' << coeffs_[e].get_str();
  }
  os << ']';
  return os.str();
}

CycloNum CycloNum::parse(std::string_view text) {
  auto fail = [&]() -> CycloNum {
    throw std::invalid_argument("CycloNum::parse: malformed input '" + std::string(text) + "'");
  };
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || text.size() < colon + 3 || text[colon + 1] != '[' ||
      text.back() != ']')
    return fail();
  long n = 0;
  try {
    size_t used = 0;
    n = std::stol(std::string(text.substr(0, colon)), &used);
    if (used != colon) return fail();
  } catch (const std::logic_error&) {
    return fail();
  }
  if (n <= 0) return fail();
  std::vector<mpq_class> raw(n, 0);
  std::string body(text.substr(colon + 2, text.size() - colon - 3));
  std::stringstream ss(body);
  std::string term;
  while (std::getline(ss, term, ',')) {
    const auto b = term.find_first_not_of(' ');
    if (b == std::string::npos) return fail();
    term = term.substr(b);
    const auto eq = term.find('=');
    if (eq == std::string::npos) return fail();
    long e = 0;
    try {
      size_t used = 0;
      e = std::stol(term.substr(0, eq), &used);
      if (used != eq) return fail();
    } catch (const std::logic_error&) {
      return fail();
    }
    if (e < 0 || e >= n) return fail();
    mpq_class q;
    if (q.set_str(term.substr(eq + 1), 10) != 0) return fail();
    if (q.get_den() == 0) return fail();
    q.canonicalize();
    raw[e] += q;
  }
  return from_raw(n, std::move(raw));
}

}  // namespace wreathchar
