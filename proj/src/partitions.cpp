#include "wreathchar/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wreathchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts_.empty()) return {};
  for (int j = 1; j <= parts_[0]; ++j) {
    int count = 0;
    for (int p : parts_)
      if (p >= j) ++count;
    c.push_back(count);
  }
  return Partition(std::move(c));
}

long Partition::n_statistic() const {
  long s = 0;
  for (size_t i = 0; i < parts_.size(); ++i) s += static_cast<long>(i) * parts_[i];
  return s;
}

std::vector<int> Partition::hook_lengths() const {
  const Partition c = conjugate();
  std::vector<int> hooks;
  for (size_t i = 0; i < parts_.size(); ++i)
    for (int j = 0; j < parts_[i]; ++j)
      hooks.push_back((parts_[i] - j - 1) + (c[j] - static_cast<int>(i) - 1) + 1);
  return hooks;
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

mpz_class Partition::centralizer_order() const {
  mpz_class z = 1;
  for (auto [part, mult] : multiplicities()) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(mult));
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part),
                  static_cast<unsigned long>(mult));
    z *= f * pw;
  }
  return z;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ']';
  return os.str();
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<std::vector<int>> enumerate_compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = remaining; p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

namespace {

// beta is a strictly decreasing beta-set; removes rim hooks of lengths mu[k..].
long mn_beta(std::vector<int>& beta, const std::vector<int>& mu, size_t k) {
  if (k == mu.size()) return 1;
  const int r = mu[k];
  long total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    const int t = b - r;
    if (t < 0) continue;
    if (std::find(beta.begin(), beta.end(), t) != beta.end()) continue;
    int between = 0;
    for (int x : beta)
      if (x > t && x < b) ++between;
    std::vector<int> next = beta;
    next[i] = t;
    std::sort(next.begin(), next.end(), std::greater<>());
    const long sub = mn_beta(next, mu, k + 1);
    total += (between % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

long mn_character(const Partition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("mn_character: |lambda| != |mu|");
  const int len = lambda.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  return mn_beta(beta, mu.parts(), 0);
}

SymmetricCharacterTable::SymmetricCharacterTable(int n) : n_(n), parts_(enumerate_partitions(n)) {
  for (size_t i = 0; i < parts_.size(); ++i) index_.emplace(parts_[i], i);
  table_.assign(parts_.size(), std::vector<long>(parts_.size(), 0));
  for (size_t i = 0; i < parts_.size(); ++i)
    for (size_t j = 0; j < parts_.size(); ++j) table_[i][j] = mn_character(parts_[i], parts_[j]);
}

size_t SymmetricCharacterTable::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::invalid_argument("partition " + p.to_string() + " not of size " + std::to_string(n_));
  return it->second;
}

QPoly gl_order_pprime(int n) {
  QPoly p(1);
  for (int i = 1; i <= n; ++i) p *= QPoly::binomial(i, 1);
  return p;
}

QPoly gu_order_pprime(int n) {
  QPoly p(1);
  for (int i = 1; i <= n; ++i) p *= QPoly::binomial(i, i % 2 == 0 ? 1 : -1);
  return p;
}

QPoly gl_order(int n) { return QPoly::monomial(1, n * (n - 1) / 2) * gl_order_pprime(n); }
QPoly gu_order(int n) { return QPoly::monomial(1, n * (n - 1) / 2) * gu_order_pprime(n); }

QPoly generic_degree_gl(const Partition& lambda) {
  QPoly num = QPoly::monomial(1, static_cast<int>(lambda.n_statistic())) * gl_order_pprime(lambda.size());
  QPoly den(1);
  for (int h : lambda.hook_lengths()) den *= QPoly::binomial(h, 1);
  return num.exact_divide(den);
}

SignedDegree unitary_sign_and_degree(const Partition& lambda) {
  const QPoly twisted = generic_degree_gl(lambda).negate_variable();
  const int sign = sgn(twisted.evaluate(2)) >= 0 ? 1 : -1;
  return {sign, sign == 1 ? twisted : -twisted};
}

QPoly degree_via_class_sum(const Partition& lambda, TorusType type) {
  const int n = lambda.size();
  mpz_class nfact;
  mpz_fac_ui(nfact.get_mpz_t(), static_cast<unsigned long>(n));
  const QPoly group = type == TorusType::Linear ? gl_order_pprime(n) : gu_order_pprime(n);
  QPoly acc;
  for (const Partition& mu : enumerate_partitions(n)) {
    const long chi = mn_character(lambda, mu);
    if (chi == 0) continue;
    QPoly torus(1);
    for (int c : mu.parts())
      torus *= QPoly::binomial(c, type == TorusType::Linear ? 1 : (c % 2 == 0 ? 1 : -1));
    // eps_G eps_T agrees with sign(w) = (-1)^{n - l(mu)} up to a global sign.
    const long sign_w = ((n - mu.length()) % 2 == 0) ? 1 : -1;
    const mpz_class weight = nfact / mu.centralizer_order();
    acc += group.exact_divide(torus) * QPoly(std::vector<mpz_class>{weight * chi * sign_w});
  }
  QPoly result = acc.exact_divide(nfact);
  if (sgn(result.evaluate(2)) < 0) result = -result;
  return result;
}

std::vector<std::vector<long>> kostka_matrix(int n) {
  const auto parts = enumerate_partitions(n);
  std::vector<std::vector<long>> m(parts.size(), std::vector<long>(parts.size(), 0));
  for (size_t col = 0; col < parts.size(); ++col) {
    const auto& mu = parts[col].parts();
    // Average chi^lambda over the Young subgroup S_mu by cycle types of its factors.
    std::vector<std::vector<Partition>> choices;
    for (int part : mu) choices.push_back(enumerate_partitions(part));
    std::vector<mpq_class> sums(parts.size(), 0);
    std::vector<size_t> idx(mu.size(), 0);
    while (true) {
      std::vector<int> cycles;
      mpz_class z = 1;
      for (size_t f = 0; f < mu.size(); ++f) {
        const Partition& nu = choices[f][idx[f]];
        cycles.insert(cycles.end(), nu.parts().begin(), nu.parts().end());
        z *= nu.centralizer_order();
      }
      const Partition cyc = Partition::from_unsorted(cycles);
      for (size_t row = 0; row < parts.size(); ++row)
        sums[row] += mpq_class(mn_character(parts[row], cyc)) / mpq_class(z);
      size_t f = 0;
      while (f < mu.size() && ++idx[f] == choices[f].size()) idx[f++] = 0;
      if (f == mu.size()) break;
    }
    for (size_t row = 0; row < parts.size(); ++row) {
      sums[row].canonicalize();
      if (sums[row].get_den() != 1) throw std::logic_error("kostka_matrix: non-integral multiplicity");
      m[row][col] = sums[row].get_num().get_si();
    }
  }
  return m;
}

mpz_class integer_determinant(const std::vector<std::vector<long>>& in) {
  const size_t n = in.size();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = in[i][j];
  int sign = 1;
  mpz_class prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      size_t r = k + 1;
      while (r < n && sgn(a[r][k]) == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace wreathchar
