#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "wreathchar/twistmult.hpp"

using namespace wreathchar;
using nlohmann::json;

namespace {

Perm cyc(int deg, std::vector<std::vector<int>> cycles) { return Perm::from_cycles(deg, cycles); }

GroupSpec one(int n, int d, std::vector<Perm> gens, Perm sigma, int twist) {
  GroupSpec s;
  s.factors.push_back({n, d, std::move(gens), std::move(sigma), twist});
  return s;
}

Partition P(std::vector<int> p) { return Partition(std::move(p)); }

LeviLabel trivial_label(const LeviDatum& d) {
  LeviLabel l;
  for (const auto& comp : d.compositions) {
    std::vector<Partition> row;
    for (int c : comp) row.push_back(P({c}));
    l.push_back(row);
  }
  return l;
}

}  // namespace

TEST_CASE("eta transport") {
  const FixedStructure gl2 = analyze(one(2, 1, {}, Perm::identity(1), 0));
  const EtaTransport id = eta_transport(gl2, {P({1, 1})}, Perm::identity(1));
  CHECK(id.on_a_orbits == std::vector<Partition>{P({1, 1})});
  CHECK(id.merged == std::vector<Partition>{P({1, 1})});

  const Perm s2 = cyc(2, {{0, 1}});
  const FixedStructure sq = analyze(one(2, 2, {s2}, Perm::identity(2), 0));
  const EtaTransport diag = eta_transport(sq, {P({2}), P({2})}, s2);
  CHECK(diag.on_a_orbits == std::vector<Partition>{P({2})});
  CHECK(diag.a_orbits == std::vector<std::vector<int>>{{0, 1}});
  CHECK_THROWS_AS(eta_transport(sq, {P({2}), P({1, 1})}, s2), std::invalid_argument);

  const Perm sigma = cyc(4, {{0, 1}, {2, 3}}), a = cyc(4, {{0, 2}, {1, 3}});
  const FixedStructure four = analyze(one(2, 4, {a}, sigma, 0));
  const EtaTransport merged = eta_transport(four, {P({1, 1}), P({1, 1})}, a);
  CHECK(merged.merged == std::vector<Partition>{P({1, 1})});
  CHECK(merged.merged_orbits.size() == 1);
  CHECK(merged.on_a_orbits.size() == 2);
}

TEST_CASE("regular representation multiplicities") {
  const FixedStructure gl3 = analyze(one(3, 1, {}, Perm::identity(1), 0));
  const LeviDatum d = LeviDatum::from_json(gl3, json{{"composition", {1, 1, 1}}});
  const MultiplicityTable t = m_table(d, trivial_label(d), Perm::identity(1));
  REQUIRE(t.etas.size() == 3);
  const SymmetricCharacterTable s3(3);
  for (size_t e = 0; e < t.etas.size(); ++e)
    CHECK(t.m[e] == CycloNum(s3.degree(s3.index_of(t.etas[e][0]))));
  CHECK(t.reexpansion_exact());
}

TEST_CASE("young subgroup of S3") {
  const FixedStructure gl3 = analyze(one(3, 1, {}, Perm::identity(1), 0));
  const LeviDatum d = LeviDatum::from_json(gl3, json{{"composition", {2, 1}}});
  const MultiplicityTable t = m_table(d, {{P({2}), P({1})}}, Perm::identity(1));
  REQUIRE(t.etas.size() == 3);
  CHECK(t.etas[0][0] == P({3}));
  CHECK(t.m == std::vector<CycloNum>{CycloNum(1), CycloNum(1), CycloNum(0)});
  const json j = t.to_json();
  CHECK(j.at("schema") == 1);
  CHECK(j.at("entries").size() == 3);
}

TEST_CASE("trivial labels give Kostka numbers") {
  for (int n = 1; n <= 4; ++n) {
    const FixedStructure fs = analyze(one(n, 1, {}, Perm::identity(1), 0));
    const auto parts = enumerate_partitions(n);
    const auto K = kostka_matrix(n);
    for (const auto& comp : enumerate_compositions(n)) {
      const LeviDatum d = LeviDatum::from_json(fs, json{{"composition", comp}});
      const MultiplicityTable t = m_table(d, trivial_label(d), Perm::identity(1));
      const size_t mu = std::find(parts.begin(), parts.end(), Partition::from_unsorted(comp)) - parts.begin();
      for (size_t e = 0; e < t.etas.size(); ++e) {
        const size_t l = std::find(parts.begin(), parts.end(), t.etas[e][0]) - parts.begin();
        CHECK(t.m[e] == CycloNum(K[l][mu]));
      }
    }
  }
}

TEST_CASE("full-cycle crosscheck against ordinary induction") {
  const LeviDatum full = lemma51_datum(2, 2, {2});
  const MultiplicityTable t = m_table(full, {{P({2})}, {P({2})}}, full.ambient.factors[0].spec.sigma);
  for (size_t e = 0; e < t.etas.size(); ++e) CHECK(t.m[e] == CycloNum(t.etas[e][0] == P({2}) ? 1 : 0));
  for (auto [e, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}})
    for (const auto& comp : enumerate_compositions(n)) {
      const LeviDatum d = lemma51_datum(e, n, comp);
      for (const LeviLabel& l : levi_labels(d)) CHECK(lemma51_crosscheck(d, l));
    }
  CHECK(ordinary_induction_multiplicity({1, 1}, {P({1}), P({1})}, P({1, 1})) == CycloNum(1));
  CHECK(ordinary_induction_multiplicity({2}, {P({2})}, P({1, 1})) == CycloNum(0));
}

TEST_CASE("nontrivial w1") {
  const FixedStructure gl2 = analyze(one(2, 1, {}, Perm::identity(1), 0));
  const LeviDatum d = LeviDatum::from_json(gl2, json{{"composition", {1, 1}}, {"w1", {{1, 0}}}});
  CHECK_FALSE(d.w1_trivial());
  const MultiplicityTable t = m_table(d, {{P({1}), P({1})}}, Perm::identity(1));
  CHECK(t.reexpansion_exact());
  for (const CycloNum& m : t.m) CHECK(m.is_cyclotomic_integer());

  const FixedStructure gl3 = analyze(one(3, 1, {}, Perm::identity(1), 1));
  const LeviDatum d3 = LeviDatum::from_json(gl3, json{{"composition", {1, 1, 1}}, {"w1", {{1, 2, 0}}}});
  const MultiplicityTable t3 = m_table(d3, trivial_label(d3), Perm::identity(1));
  CHECK(t3.reexpansion_exact());
  for (const CycloNum& m : t3.m) CHECK(m.is_cyclotomic_integer());
}

TEST_CASE("w1 together with a nontrivial A_L") {
  const Perm s2 = cyc(2, {{0, 1}});
  const FixedStructure fs = analyze(one(2, 2, {s2}, Perm::identity(2), 0));
  const LeviDatum d =
      LeviDatum::from_json(fs, json{{"composition", {1, 1}}, {"AL", {{1, 0}}}, {"w1", {{1, 0}, {1, 0}}}});
  for (const LeviLabel& l : levi_labels(d))
    for (const Perm& a : {Perm::identity(2), s2}) {
      const MultiplicityTable t = m_table(d, l, a);
      CHECK(t.reexpansion_exact());
      for (const CycloNum& m : t.m) CHECK(m.is_cyclotomic_integer());
    }
}

TEST_CASE("levi datum validation") {
  const Perm s2 = cyc(2, {{0, 1}});
  const FixedStructure fs = analyze(one(2, 2, {s2}, Perm::identity(2), 0));
  CHECK_THROWS_AS(LeviDatum::from_json(fs, json{{"composition", {1, 2}}}), std::invalid_argument);
  CHECK_THROWS_AS(LeviDatum::from_json(fs, json{{"compositions", {{2}, {1, 1}}}, {"AL", {{1, 0}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      LeviDatum::from_json(fs, json{{"composition", {1, 1}}, {"AL", {{1, 0}}}, {"w1", {{1, 0}, {0, 1}}}}),
      std::invalid_argument);
  CHECK_THROWS_AS(LeviDatum::from_json(fs, json{{"composition", "x"}}), std::invalid_argument);
  const FixedStructure gl3 = analyze(one(3, 1, {}, Perm::identity(1), 0));
  CHECK_THROWS_AS(LeviDatum::from_json(gl3, json{{"composition", {2, 1}}, {"w1", {{2, 1, 0}}}}),
                  std::invalid_argument);
  const LeviDatum d = LeviDatum::from_json(fs, json{{"composition", {1, 1}}, {"AL", {{1, 0}}}});
  const LeviLabel ok = {{P({1}), P({1})}, {P({1}), P({1})}};
  CHECK_NOTHROW(m_table(d, ok, s2));
  const LeviDatum no_al = LeviDatum::from_json(fs, json{{"composition", {1, 1}}});
  CHECK_THROWS_AS(m_table(no_al, ok, s2), std::invalid_argument);
  CHECK_THROWS_AS(m_table(d, {{P({1})}, {P({1}), P({1})}}, s2), std::invalid_argument);
  CHECK_THROWS_AS(m_table(d, {{P({2})}, {P({1}), P({1})}}, s2), std::invalid_argument);
  const LeviDatum mixed = LeviDatum::from_json(fs, json{{"compositions", {{1, 1}, {2}}}});
  CHECK_THROWS_AS(m_table(mixed, {{P({1}), P({1})}, {P({2})}}, s2), std::invalid_argument);
}

TEST_CASE("integrality of the induction basis") {
  CHECK(integrality_basis_check(2));
  CHECK(integrality_basis_check(4));
  CHECK(integrality_basis_check(6));
}

TEST_CASE("shifted-cycle identities") {
  const Step4Report trivial = step4_identities(1, 3, 2, 0);
  CHECK(trivial.ok());
  const Step4Report small = step4_identities(2, 2, 2, 1);
  CHECK(small.ok());
  CHECK(small.evaluations > 0);
  const Step4Report vacuous = step4_identities(3, 2, 1, 1);
  CHECK(vacuous.orbits_equal);
  CHECK(vacuous.ok());
  for (int e = 1; e <= 8; ++e)
    for (int k = 1; e * k <= 8; ++k)
      for (int n = 1; e * k * n <= 8; ++n)
        for (int m : {1, e - 1}) CHECK(step4_identities(e, k, n, std::max(m, 0) % e).ok());
}
