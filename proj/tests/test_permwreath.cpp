#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "wreathchar/permwreath.hpp"

using namespace wreathchar;

namespace {

Perm cyc(int deg, std::vector<std::vector<int>> cycles) { return Perm::from_cycles(deg, cycles); }

IrrLabel part(std::vector<int> p) { return IrrLabel::of_partition(Partition(std::move(p))); }

// Conjugacy classes by direct search over the element list: (representative, size).
std::vector<std::pair<Perm, size_t>> brute_classes(const std::vector<Perm>& elems) {
  std::set<Perm> seen;
  std::vector<std::pair<Perm, size_t>> out;
  for (const Perm& g : elems) {
    if (seen.count(g)) continue;
    std::set<Perm> cls;
    for (const Perm& x : elems) cls.insert(x * g * x.inverse());
    seen.insert(cls.begin(), cls.end());
    out.emplace_back(g, cls.size());
  }
  return out;
}

void check_character_table(const GroupDescriptor& d) {
  const Group G(d);
  const auto& elems = G.elements().elements();
  REQUIRE(mpz_class(static_cast<unsigned long>(elems.size())) == G.order());
  const auto classes = brute_classes(elems);
  const auto& labels = G.irr_labels();
  CHECK(labels.size() == classes.size());
  mpz_class squares;
  std::vector<std::vector<CycloNum>> table;
  for (const IrrLabel& l : labels) {
    squares += G.char_degree(l) * G.char_degree(l);
    std::vector<CycloNum> row;
    for (const auto& [rep, size] : classes) row.push_back(G.char_value(l, rep));
    CHECK(G.char_value(l, Perm::identity(G.degree())) == CycloNum(G.char_degree(l)));
    table.push_back(std::move(row));
  }
  CHECK(squares == G.order());
  const CycloNum order(static_cast<long>(elems.size()));
  for (size_t i = 0; i < table.size(); ++i)
    for (size_t j = 0; j < table.size(); ++j) {
      CycloNum s;
      for (size_t c = 0; c < classes.size(); ++c)
        s += CycloNum(static_cast<long>(classes[c].second)) * table[i][c] * table[j][c].conjugate();
      CHECK(s / order == CycloNum(i == j ? 1 : 0));
    }
}

}  // namespace

TEST_CASE("perm composition and structure") {
  const Perm p = cyc(3, {{0, 1}}), q = cyc(3, {{1, 2}});
  CHECK((p * q)(1) == p(q(1)));
  CHECK((p * q)(1) == 2);
  CHECK((p * q).order() == 3);
  CHECK((p * q).inverse() == q * p);
  CHECK(cyc(5, {{0, 1, 2}, {3, 4}}).cycle_type() == Partition({3, 2}));
  CHECK(cyc(4, {{0, 2}}).pow(-1) == cyc(4, {{0, 2}}));
  CHECK(cyc(4, {{1, 3}}).to_string() == "[0,3,2,1]");
  CHECK_THROWS_AS(Perm({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_cycles(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("perm groups") {
  const PermGroup s3(3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})});
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(s3.orbits() == std::vector<std::vector<int>>{{0, 1, 2}});
  const PermGroup c3 = s3.centralizer_of(cyc(3, {{0, 1, 2}}));
  CHECK(c3.order() == 3);
  CHECK(c3.is_abelian());
  CHECK(s3.left_transversal(c3).size() == 2);
  CHECK(s3.subgroup_where([](const Perm& g) { return g(2) == 2; }).order() == 2);
  CHECK_THROWS_AS(PermGroup(6, {cyc(6, {{0, 1}}), cyc(6, {{0, 1, 2, 3, 4, 5}})}, 100), CapExceeded);
  const PermGroup klein = PermGroup::from_elements(4, PermGroup(4, {cyc(4, {{0, 1}}), cyc(4, {{2, 3}})}).elements());
  CHECK(klein.order() == 4);
}

TEST_CASE("element counts") {
  CHECK(enumerate_elements(GroupDescriptor::symmetric(3)).size() == 6);
  CHECK(enumerate_elements(GroupDescriptor::wreath(GroupDescriptor::symmetric(2), 2, {cyc(2, {{0, 1}})})).size() == 8);
  CHECK(enumerate_elements(GroupDescriptor::wreath(GroupDescriptor::symmetric(2), 3, {cyc(3, {{0, 1, 2}})})).size() ==
        24);
  CHECK(Group(GroupDescriptor::product({GroupDescriptor::symmetric(2), GroupDescriptor::symmetric(3)})).order() == 12);
}

TEST_CASE("label counts") {
  CHECK(irr_labels(GroupDescriptor::symmetric(4)).size() == 5);
  const auto s2s2 = GroupDescriptor::wreath(GroupDescriptor::symmetric(2), 2, {cyc(2, {{0, 1}})});
  CHECK(irr_labels(s2s2).size() == 5);
  const auto s2s3 =
      GroupDescriptor::wreath(GroupDescriptor::symmetric(2), 3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})});
  CHECK(irr_labels(s2s3).size() == 10);
  std::vector<long> degs;
  const Group G(s2s2);
  for (const IrrLabel& l : G.irr_labels()) degs.push_back(G.char_degree(l));
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<long>{1, 1, 1, 1, 2});
}

TEST_CASE("character tables are orthonormal") {
  const auto S2 = GroupDescriptor::symmetric(2), S3 = GroupDescriptor::symmetric(3);
  const Perm swap = cyc(2, {{0, 1}});
  check_character_table(S3);
  check_character_table(GroupDescriptor::product({S2, S3}));
  check_character_table(GroupDescriptor::wreath(S2, 2, {swap}));
  check_character_table(GroupDescriptor::wreath(S2, 3, {cyc(3, {{0, 1, 2}})}));
  check_character_table(GroupDescriptor::wreath(S3, 2, {swap}));
  check_character_table(GroupDescriptor::wreath(S2, 3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})}));
  check_character_table(GroupDescriptor::wreath(S2, 4, {cyc(4, {{0, 1}, {2, 3}})}));
  check_character_table(GroupDescriptor::wreath(GroupDescriptor::wreath(S2, 2, {swap}), 2, {swap}));
  check_character_table(GroupDescriptor::wreath(S2, 4, {cyc(4, {{0, 1, 2, 3}})}));
  // Top acting through a quotient: the 3-cycle permutes coordinate blocks trivially.
  check_character_table(GroupDescriptor::wreath(GroupDescriptor::symmetric(1), 3, {cyc(3, {{0, 1, 2}})}, {0, 0, 0}));
}

TEST_CASE("top characters") {
  const TopCharacters z3(PermGroup(3, {cyc(3, {{0, 1, 2}})}));
  CHECK(z3.count() == 3);
  CycloNum sum;
  for (size_t i = 0; i < 3; ++i) sum += z3.value(i, cyc(3, {{0, 1, 2}}));
  CHECK(sum.is_zero());
  CHECK(z3.value(z3.trivial(), cyc(3, {{0, 2, 1}})) == CycloNum(1));
  const TopCharacters s3(PermGroup(3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})}));
  CHECK(s3.count() == 3);
  CHECK(TopCharacters(PermGroup(1, {})).count() == 1);
  CHECK(TopCharacters(PermGroup(1, {})).label(0).to_string() == "1");
  const PermGroup d8(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 2}})});
  CHECK_THROWS_AS(TopCharacters{d8}, std::domain_error);
}

TEST_CASE("fixed point subgroups") {
  const auto S2 = GroupDescriptor::symmetric(2), S3 = GroupDescriptor::symmetric(3);
  const FixedPointData diag = fixed_point_subgroup(S2, 3, PermGroup(3, {cyc(3, {{0, 1, 2}})}));
  CHECK(diag.orbits.size() == 1);
  CHECK(diag.descriptor.kind == GroupDescriptor::Kind::Symmetric);
  CHECK(diag.embed({cyc(2, {{0, 1}})}) == std::vector<Perm>(3, cyc(2, {{0, 1}})));
  const FixedPointData triv = fixed_point_subgroup(S2, 3, PermGroup(3, {}));
  CHECK(triv.orbits.size() == 3);
  const FixedPointData two = fixed_point_subgroup(S3, 4, PermGroup(4, {cyc(4, {{0, 1}, {2, 3}})}));
  CHECK(two.orbits.size() == 2);
  CHECK(Group(two.descriptor).order() == 36);
}

TEST_CASE("canonical extension examples") {
  const Group S2(GroupDescriptor::symmetric(2));
  const Perm t = cyc(2, {{0, 1}}), e = Perm::identity(2);
  const std::vector<IrrLabel> sgn2 = {part({1, 1}), part({1, 1})};
  CHECK(canonical_extension_value(S2, sgn2, cyc(2, {{0, 1}}), {t, e}) == CycloNum(-1));
  CHECK(canonical_extension_value(S2, sgn2, Perm::identity(2), {t, e}) == CycloNum(-1));
  CHECK(canonical_extension_value(S2, sgn2, Perm::identity(2), {t, t}) == CycloNum(1));
  const std::vector<IrrLabel> triv3(3, part({2}));
  const PermGroup s3(3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})});
  for (const Perm& a : s3.elements())
    CHECK(canonical_extension_value(S2, triv3, a, {t, e, t}) == CycloNum(1));
}

TEST_CASE("canonical extension does not depend on the section") {
  const Group S3(GroupDescriptor::symmetric(3));
  const PermGroup S3e = S3.elements();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<size_t> pick(0, 5);
  const Perm a = cyc(4, {{0, 1, 2, 3}});
  const Perm b = cyc(4, {{0, 2}, {1, 3}});
  for (const IrrLabel& l : S3.irr_labels())
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Perm> h;
      for (int i = 0; i < 4; ++i) h.push_back(S3e.elements()[pick(rng)]);
      const std::vector<IrrLabel> chi(4, l);
      const int x = static_cast<int>(pick(rng) % 4);
      CHECK(canonical_extension_value(S3, chi, a, h) == canonical_extension_value(S3, chi, a, h, {x}));
      CHECK(canonical_extension_value(S3, chi, b, h) ==
            canonical_extension_value(S3, chi, b, h, {x % 2 == 0 ? 2 : 3, x % 2 == 0 ? 1 : 0}));
    }
}

TEST_CASE("restriction of the extension to the base is chi") {
  const Group S3(GroupDescriptor::symmetric(3));
  const auto& elems = S3.elements().elements();
  for (const IrrLabel& l1 : S3.irr_labels())
    for (const IrrLabel& l2 : S3.irr_labels())
      for (const Perm& g1 : elems)
        for (const Perm& g2 : elems)
          CHECK(canonical_extension_value(S3, {l1, l2}, Perm::identity(2), {g1, g2}) ==
                S3.char_value(l1, g1) * S3.char_value(l2, g2));
}

TEST_CASE("label stabilisers") {
  const PermGroup s2(2, {cyc(2, {{0, 1}})});
  CHECK(stabilizer_of_label(s2, {part({2}), part({2})}).order() == 2);
  CHECK(stabilizer_of_label(s2, {part({2}), part({1, 1})}).order() == 1);
  const PermGroup c3(3, {cyc(3, {{0, 1, 2}})});
  CHECK(stabilizer_of_label(c3, {part({2}), part({2}), part({1, 1})}).order() == 1);
}

TEST_CASE("wreath decomposition round trip") {
  const Group W(GroupDescriptor::wreath(GroupDescriptor::symmetric(3), 3, {cyc(3, {{0, 1, 2}})}));
  for (const Perm& g : W.elements().elements()) {
    CHECK(W.contains(g));
    CHECK(W.compose(W.decompose(g)) == g);
  }
  CHECK_FALSE(W.contains(Perm::from_cycles(W.degree(), {{0, 3}})));
}

TEST_CASE("descriptor json round trip") {
  const auto d = GroupDescriptor::wreath(GroupDescriptor::symmetric(2), 3, {cyc(3, {{0, 1, 2}})}, {0, 0, 0});
  const auto back = GroupDescriptor::from_json(d.to_json());
  CHECK(back.to_json() == d.to_json());
  CHECK(Group(back).order() == Group(d).order());
  CHECK_THROWS_AS(GroupDescriptor::from_json(nlohmann::json{{"kind", "bogus"}}), std::invalid_argument);
}
