#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <random>

#include "wreathchar/cyclotomic.hpp"

using namespace wreathchar;
using cplx = std::complex<double>;

namespace {

// Numeric embedding zeta_N -> exp(2 pi i / N), used as an independent oracle.
cplx numeric(const CycloNum& x) {
  cplx acc = 0;
  const double pi = std::acos(-1.0);
  for (size_t k = 0; k < x.coefficients().size(); ++k)
    acc += x.coefficients()[k].get_d() * std::polar(1.0, 2 * pi * static_cast<double>(k) / x.order());
  return acc;
}

CycloNum random_cyclo(std::mt19937_64& rng) {
  static const long orders[] = {1, 2, 3, 4, 5, 6, 8, 12};
  std::uniform_int_distribution<int> pick(0, 7), coef(-4, 4), den(1, 3);
  const long n = orders[pick(rng)];
  CycloNum x;
  for (long k = 0; k < n; ++k) x += CycloNum(mpq_class(coef(rng), den(rng))) * CycloNum::root_of_unity(k, n);
  return x;
}

}  // namespace

TEST_CASE("roots of unity") {
  CHECK(CycloNum::root_of_unity(0, 1) == CycloNum(1));
  CHECK(CycloNum::root_of_unity(1, 2) == CycloNum(-1));
  CHECK(CycloNum::root_of_unity(1, 3) + CycloNum::root_of_unity(2, 3) == CycloNum(-1));
  CHECK(CycloNum::root_of_unity(2, 4) == CycloNum(-1));
  CHECK(CycloNum::root_of_unity(3, 6).order() == 1);
  CHECK_THROWS_AS(CycloNum::root_of_unity(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic examples") {
  const CycloNum z3 = CycloNum::root_of_unity(1, 3), z4 = CycloNum::root_of_unity(1, 4);
  const CycloNum z5 = CycloNum::root_of_unity(1, 5);
  CHECK(arith(z4, z4, ArithOp::Mul) == CycloNum(-1));
  CHECK(arith(1 + z5, 1 + z5, ArithOp::Div) == CycloNum(1));
  CHECK(CycloNum(1) / (1 - z3) == (2 + z3) / CycloNum(3));
  CHECK_THROWS_AS(CycloNum(1) / CycloNum(), DivisionByZero);
}

TEST_CASE("conjugation") {
  const CycloNum z3 = CycloNum::root_of_unity(1, 3), z4 = CycloNum::root_of_unity(1, 4);
  CHECK(CycloNum(1).conjugate() == CycloNum(1));
  CHECK(z3.conjugate() == CycloNum::root_of_unity(2, 3));
  CHECK((1 + z4).conjugate() * (1 + z4) == CycloNum(2));
  CHECK(z4.galois(3) == z4.conjugate());
}

TEST_CASE("canonical order is the conductor") {
  const CycloNum z6 = CycloNum::root_of_unity(1, 6);
  CHECK(z6.order() == 3);  // zeta_6 = -zeta_3^2
  CHECK((z6 + z6.conjugate()).is_rational());
  CHECK((CycloNum::root_of_unity(1, 8) * CycloNum::root_of_unity(1, 8)).order() == 4);
  CHECK(CycloNum(mpq_class(3, 6)).to_rational() == mpq_class(1, 2));
}

TEST_CASE("string round trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const CycloNum x = random_cyclo(rng);
    CHECK(CycloNum::parse(x.to_string()) == x);
    CHECK(CycloNum::parse(x.to_string()).to_string() == x.to_string());
  }
  CHECK(CycloNum(-1).to_string() == "1:[0=-1]");
  CHECK(CycloNum().to_string() == "1:[]");
  CHECK(CycloNum::parse("4:[2=1]") == CycloNum(-1));
  CHECK_THROWS_AS(CycloNum::parse("4:[2=1"), std::invalid_argument);
  CHECK_THROWS_AS(CycloNum::parse("x"), std::invalid_argument);
}

TEST_CASE("field axioms on random inputs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const CycloNum a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == CycloNum());
    CHECK(a.conjugate().conjugate() == a);
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("operations agree with the complex embedding") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const CycloNum a = random_cyclo(rng), b = random_cyclo(rng);
    CHECK(std::abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-9);
    CHECK(std::abs(numeric(a + b) - (numeric(a) + numeric(b))) < 1e-9);
    CHECK(std::abs(numeric(a.conjugate()) - std::conj(numeric(a))) < 1e-9);
    if (!b.is_zero()) CHECK(std::abs(numeric(a / b) - numeric(a) / numeric(b)) < 1e-6);
  }
}

TEST_CASE("geometric sums of roots of unity vanish") {
  for (long m = 2; m <= 30; ++m)
    for (long k = 1; k < m; ++k) {
      const CycloNum u = CycloNum::root_of_unity(k, m);
      CycloNum s, p(1);
      for (long j = 0; j < m; ++j) {
        s += p;
        p *= u;
      }
      CHECK(s.is_zero());
    }
}

TEST_CASE("integrality") {
  CHECK(CycloNum(3).is_integer());
  CHECK_FALSE(CycloNum(mpq_class(1, 2)).is_integer());
  CHECK(CycloNum::root_of_unity(1, 7).is_cyclotomic_integer());
  CHECK_FALSE((CycloNum::root_of_unity(1, 7) / CycloNum(2)).is_cyclotomic_integer());
}

TEST_CASE("euler phi and cyclotomic polynomials") {
  const long phi[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
  for (long n = 1; n <= 12; ++n) CHECK(euler_phi(n) == phi[n - 1]);
  CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
}
