// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "finite_field.hpp"
#include "wreathchar/groupspec.hpp"
#include "wreathchar/verify.hpp"

using namespace wreathchar;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome from_suite(const SuiteResult& r, size_t min_checks = 1) {
  if (!r.ok) return {false, r.detail};
  if (r.checks < min_checks)
    return {false, std::to_string(r.checks) + " checks, expected at least " + std::to_string(min_checks)};
  return {true, std::to_string(r.checks) + " checks"};
}

// Coverage of the counting specs: linear and unitary orbits, cyclic and symmetric tops.
Outcome counting() {
  const auto specs = builtin_specs();
  bool linear = false, unitary = false, cyclic = false, symmetric = false;
  for (const GroupSpec& s : specs) {
    const FixedStructure fs = analyze(s);
    for (const OrbitInfo& o : fs.orbits) {
      linear = linear || o.type == TorusType::Linear;
      unitary = unitary || o.type == TorusType::Unitary;
    }
    const size_t order = fs.AF.order();
    if (order > 1 && fs.AF.is_abelian()) {
      for (const Perm& g : fs.AF.elements()) cyclic = cyclic || PermGroup(g.degree(), {g}).order() == order;
    }
    symmetric = symmetric || (!fs.AF.is_abelian() && order == 6);
  }
  if (specs.size() < 8) return {false, "fewer than 8 specs"};
  if (!(linear && unitary && cyclic && symmetric)) return {false, "spec coverage incomplete"};
  return from_suite(verify_label_counts(specs), specs.size());
}

GroupSpec one(int n, int d, Perm sigma, int twist) {
  GroupSpec s;
  s.factors.push_back({n, d, {}, std::move(sigma), twist});
  return s;
}

// Orders at q = 2 against brute-force matrix counts and the frozen values.
Outcome orders() {
  struct Case {
    const char* name;
    GroupSpec spec;
    long brute;
    long frozen;
  };
  const Case cases[] = {
      {"GL2(2)", one(2, 1, Perm::identity(1), 0), ffcount::count_gl(2, 2), 6},
      {"GU2(2)", one(2, 1, Perm::identity(1), 1), ffcount::count_gu(2, 2), 18},
      {"GL1(4)", one(1, 2, Perm::from_cycles(2, {{0, 1}}), 0), ffcount::count_gl(1, 2, 2), 3},
  };
  for (const Case& c : cases) {
    const mpz_class got = order_polynomial(analyze(c.spec)).evaluate(2);
    if (got != c.brute || c.brute != c.frozen)
      return {false, std::string(c.name) + ": polynomial " + got.get_str() + ", count " + std::to_string(c.brute)};
  }
  return from_suite(verify_orders(), 3);
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 means the global 60 s budget
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "character tables n<=7", 5, [] { return from_suite(verify_character_tables(7), 7); }},
      {2, "hook and class-sum degrees n<=6", 10, [] { return from_suite(verify_hook_degrees(6), 6); }},
      {3, "unitary signs n<=5", 0, [] { return from_suite(verify_unitary_signs(5), 5); }},
      {4, "coset orthonormal bases", 0, [] { return from_suite(verify_coset_bases()); }},
      {5, "Clifford counts", 0, [] { return from_suite(verify_clifford_counts(), 16); }},
      {6, "coset Frobenius reciprocity", 0, [] { return from_suite(verify_frobenius(1, 100), 1000); }},
      {7, "full-cycle induction crosscheck", 60,
       [] { return from_suite(verify_lemma51({{2, 2}, {2, 3}, {3, 2}})); }},
      {8, "multiplicity re-expansion", 0, [] { return from_suite(verify_reexpansion(), 5); }},
      {9, "Kostka determinants n<=7", 0, [] { return from_suite(verify_kostka(7), 7); }},
      {10, "shifted-cycle identities ekn<=8", 0, [] { return from_suite(verify_step4(8)); }},
      {11, "unipotent label counts", 0, counting},
      {12, "Mellin transform and support", 0, [] { return from_suite(verify_mellin(builtin_specs())); }},
      {13, "orders at q=2", 0, orders},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double limit = c.limit_s > 0 ? c.limit_s : 60;
    if (o.ok && s >= limit) o = {false, "took " + std::to_string(s) + " s, limit " + std::to_string(limit) + " s"};
    std::printf("%s\t%2d\t%s\t%.2fs\t%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, s, o.detail.c_str());
    failures += !o.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
