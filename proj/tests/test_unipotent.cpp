#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "wreathchar/permwreath.hpp"
#include "wreathchar/unipotent.hpp"

using namespace wreathchar;

namespace {

Perm cyc(int deg, std::vector<std::vector<int>> cycles) { return Perm::from_cycles(deg, cycles); }

GroupSpec one(int n, int d, std::vector<Perm> gens, Perm sigma, int twist) {
  GroupSpec s;
  s.factors.push_back({n, d, std::move(gens), std::move(sigma), twist});
  return s;
}

Partition P(std::vector<int> p) { return Partition(std::move(p)); }

}  // namespace

TEST_CASE("connected labels") {
  CHECK(conn_labels(analyze(one(2, 1, {}, Perm::identity(1), 0))).size() == 2);
  const Perm c3 = cyc(3, {{0, 1, 2}});
  CHECK(conn_labels(analyze(one(2, 3, {c3}, c3, 0))).size() == 2);
  CHECK(conn_labels(analyze(levi_normalizer(5, {2, 3}, 0, {}))).size() == 6);
  CHECK(to_string(ConnLabel{P({2}), P({1, 1})}) == "([2],[1,1])");
}

TEST_CASE("signs and degrees") {
  const FixedStructure gl3 = analyze(one(3, 1, {}, Perm::identity(1), 0));
  const SignedDegree triv = sign_and_degree(gl3, {P({3})});
  CHECK(triv.sign == 1);
  CHECK(triv.degree == QPoly(1));
  const SignedDegree u = sign_and_degree(analyze(one(3, 1, {}, Perm::identity(1), 1)), {P({1, 1, 1})});
  CHECK(u.sign == -1);
  CHECK(u.degree == QPoly::monomial(1, 3));
  const Perm c3 = cyc(3, {{0, 1, 2}});
  const SignedDegree l3 = sign_and_degree(analyze(one(2, 3, {c3}, c3, 0)), {P({1, 1})});
  CHECK(l3.sign == 1);
  CHECK(l3.degree == QPoly::monomial(1, 3));
  CHECK_THROWS_AS(sign_and_degree(gl3, {P({2})}), std::invalid_argument);
}

TEST_CASE("unipotent label counts") {
  const FixedStructure gl3 = analyze(one(3, 1, {}, Perm::identity(1), 0));
  const auto l = unipotent_labels(gl3);
  CHECK(l.size() == 3);
  for (const UnipotentLabel& x : l) CHECK(x.xi.to_string() == "1");
  const Perm s2 = cyc(2, {{0, 1}});
  CHECK(unipotent_labels(analyze(one(2, 2, {s2}, Perm::identity(2), 0))).size() == 5);
  CHECK(unipotent_labels(analyze(one(1, 2, {s2}, Perm::identity(2), 1))).size() == 2);
}

TEST_CASE("degrees at q = 1 square-sum to the Weyl group order") {
  const Perm s2 = cyc(2, {{0, 1}}), c3 = cyc(3, {{0, 1, 2}});
  for (const GroupSpec& s : {one(3, 1, {}, Perm::identity(1), 0), one(2, 2, {s2}, Perm::identity(2), 0),
                             one(2, 3, {c3}, Perm::identity(3), 0), one(2, 3, {c3, cyc(3, {{0, 1}})}, Perm::identity(3), 0),
                             levi_normalizer(4, {1, 1, 2}, 0, {})}) {
    const FixedStructure fs = analyze(s);
    mpz_class sum;
    for (const UnipotentLabel& l : unipotent_labels(fs)) sum += l.degree.evaluate(1) * l.degree.evaluate(1);
    CHECK(sum == Group(weyl_group_with_top(fs)).order());
  }
}

TEST_CASE("signs are positive-degree and linear orbits have sign +1") {
  const Perm s2 = cyc(2, {{0, 1}}), c3 = cyc(3, {{0, 1, 2}});
  for (const GroupSpec& s : {one(3, 1, {}, Perm::identity(1), 1), one(4, 1, {}, Perm::identity(1), 0),
                             one(2, 2, {s2}, Perm::identity(2), 1), one(2, 3, {c3}, c3, 1)}) {
    const FixedStructure fs = analyze(s);
    for (const UnipotentLabel& l : unipotent_labels(fs)) {
      for (long q = 2; q <= 5; ++q) CHECK(sgn(l.degree.evaluate(q)) > 0);
      bool linear = true;
      for (const OrbitInfo& o : fs.orbits) linear = linear && o.type == TorusType::Linear;
      if (linear) CHECK(l.sign == 1);
    }
  }
}

TEST_CASE("equivariance") {
  const Perm c3 = cyc(3, {{0, 1, 2}});
  const FixedStructure fs = analyze(one(2, 3, {c3, cyc(3, {{0, 1}})}, Perm::identity(3), 1));
  std::mt19937_64 rng(9);
  const auto etas = conn_labels(fs);
  const auto& elems = fs.AF.elements();
  for (int i = 0; i < 40; ++i) {
    const ConnLabel& eta = etas[rng() % etas.size()];
    CHECK(equivariance_check(fs, elems[rng() % elems.size()], eta));
    CHECK(equivariance_check(fs, Perm::identity(3), eta));
  }
  const FixedStructure cyclic = analyze(one(2, 3, {c3}, Perm::identity(3), 0));
  CHECK_THROWS_AS(equivariance_check(cyclic, cyc(3, {{0, 1}}), conn_labels(cyclic)[0]), std::invalid_argument);
}

TEST_CASE("mellin transform") {
  const Perm s2 = cyc(2, {{0, 1}});
  const FixedStructure gl2 = analyze(one(2, 1, {}, Perm::identity(1), 0));
  const MellinTransform triv = mellin(gl2, {P({2})});
  CHECK(triv.forward == std::vector<std::vector<CycloNum>>{{CycloNum(1)}});
  CHECK(triv.round_trip());

  const FixedStructure w = analyze(one(2, 2, {s2}, Perm::identity(2), 0));
  const MellinTransform m = mellin(w, {P({2}), P({2})});
  REQUIRE(m.elements.size() == 2);
  CHECK(m.round_trip());
  // Rows a = 1 and a = swap: (1, 1) and (1, -1) in some character order.
  CycloNum row0, row1;
  for (const CycloNum& v : m.vector_at(Perm::identity(2))) row0 += v;
  for (const CycloNum& v : m.vector_at(s2)) row1 += v;
  CHECK(row0 == CycloNum(2));
  CHECK(row1 == CycloNum(0));
  CHECK(mellin(w, {P({2}), P({1, 1})}).elements.size() == 1);

  const Perm c3 = cyc(3, {{0, 1, 2}});
  CHECK(mellin(analyze(one(1, 3, {c3}, Perm::identity(3), 0)), {P({1}), P({1}), P({1})}).round_trip());
  CHECK_THROWS_AS(mellin(analyze(one(1, 3, {c3, cyc(3, {{0, 1}})}, Perm::identity(3), 0)), {P({1}), P({1}), P({1})}),
                  std::domain_error);
}

TEST_CASE("support identity in the Weyl model") {
  const Perm s2 = cyc(2, {{0, 1}}), c3 = cyc(3, {{0, 1, 2}});
  const FixedStructure w = analyze(one(2, 2, {s2}, Perm::identity(2), 0));
  for (const ConnLabel& eta : {ConnLabel{P({2}), P({2})}, ConnLabel{P({1, 1}), P({1, 1})}})
    for (const Perm& a : {Perm::identity(2), s2}) {
      const SupportReport r = support_identity_weyl_model(w, eta, a);
      CHECK(r.ok);
      CHECK(r.evaluations == 8);
    }
  const FixedStructure z3 = analyze(one(1, 3, {c3}, Perm::identity(3), 0));
  for (const Perm& a : {Perm::identity(3), c3, c3 * c3})
    CHECK(support_identity_weyl_model(z3, {P({1}), P({1}), P({1})}, a).ok);
  CHECK_THROWS_AS(support_identity_weyl_model(w, {P({2}), P({1, 1})}, s2), std::invalid_argument);
}

TEST_CASE("formal coefficients") {
  const FixedStructure gl2 = analyze(one(2, 1, {}, Perm::identity(1), 0));
  const auto c = rtilde_coefficients(gl2, {P({1, 1})}, Perm::identity(1));
  REQUIRE(c.size() == 2);
  for (const auto& [w, v] : c) CHECK(v == CycloNum(w.is_identity() ? 1 : -1));
  const Perm s2 = cyc(2, {{0, 1}});
  const FixedStructure w = analyze(one(2, 2, {s2}, s2, 0));
  CHECK(rtilde_coefficients(w, {P({2})}, s2).size() == 2);
  CHECK(rtilde_coefficients(w, {P({2})}, Perm::identity(2)).size() == 4);
}
