#include "wreathchar/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "wreathchar/cosetfun.hpp"
#include "wreathchar/partitions.hpp"
#include "wreathchar/permwreath.hpp"
#include "wreathchar/twistmult.hpp"
#include "wreathchar/unipotent.hpp"

namespace wreathchar {

namespace {

bool fail(SuiteResult& r, std::string why) {
  if (r.ok) r.detail = std::move(why);
  r.ok = false;
  return false;
}

bool check(SuiteResult& r, bool cond, const std::function<std::string()>& why) {
  ++r.checks;
  return cond || fail(r, why());
}

struct WreathCase {
  int base_n;
  int d;
  std::vector<Perm> top;
  std::string name;
};

std::vector<WreathCase> wreath_matrix() {
  const Perm z2 = Perm::from_cycles(2, {{0, 1}});
  const Perm z3 = Perm::from_cycles(3, {{0, 1, 2}});
  const Perm s2 = Perm::from_cycles(4, {{0, 1}, {2, 3}});
  const Perm s3a = Perm::from_cycles(3, {{0, 1}}), s3b = Perm::from_cycles(3, {{1, 2}});
  std::vector<WreathCase> out;
  for (int n : {2, 3}) {
    const std::string b = "S" + std::to_string(n);
    out.push_back({n, 2, {z2}, b + " wr Z2"});
    out.push_back({n, 3, {z3}, b + " wr Z3"});
    out.push_back({n, 4, {s2}, b + " wr S2 on 4 points"});
    out.push_back({n, 3, {s3a, s3b}, b + " wr S3"});
  }
  return out;
}

size_t conjugacy_class_count(const PermGroup& G) {
  return CosetContext::conjugation(G, Perm::identity(G.degree())).classes().size();
}

std::vector<std::vector<Partition>> invariant_tuples(int n, const Perm& a) {
  const auto parts = enumerate_partitions(n);
  std::vector<std::vector<Partition>> out;
  const auto cycles = a.cycles();
  std::vector<size_t> idx(cycles.size(), 0);
  while (true) {
    std::vector<Partition> t(a.degree());
    for (size_t c = 0; c < cycles.size(); ++c)
      for (int i : cycles[c]) t[i] = parts[idx[c]];
    out.push_back(std::move(t));
    size_t c = cycles.size();
    while (c > 0 && ++idx[c - 1] == parts.size()) idx[--c] = 0;
    if (c == 0) break;
  }
  return out;
}

GroupSpec one_factor(int n, int d, std::vector<Perm> gens, Perm sigma, int twist) {
  GroupSpec s;
  s.factors.push_back({n, d, std::move(gens), std::move(sigma), twist});
  return s;
}

}  // namespace

std::vector<GroupSpec> builtin_specs() {
  const Perm swap2 = Perm::from_cycles(2, {{0, 1}});
  const Perm cyc3 = Perm::from_cycles(3, {{0, 1, 2}});
  const Perm t01 = Perm::from_cycles(3, {{0, 1}});
  std::vector<GroupSpec> out;
  out.push_back(one_factor(3, 1, {}, Perm::identity(1), 0));
  out.push_back(one_factor(3, 1, {}, Perm::identity(1), 1));
  out.push_back(one_factor(2, 2, {swap2}, Perm::identity(2), 0));
  out.push_back(one_factor(2, 2, {swap2}, Perm::identity(2), 1));
  out.push_back(one_factor(2, 2, {swap2}, swap2, 0));
  out.push_back(one_factor(1, 3, {cyc3}, Perm::identity(3), 0));
  out.push_back(one_factor(2, 3, {cyc3}, Perm::identity(3), 1));
  out.push_back(one_factor(2, 3, {cyc3, t01}, Perm::identity(3), 0));
  out.push_back(one_factor(1, 4, {Perm::from_cycles(4, {{0, 1}, {2, 3}})}, Perm::from_cycles(4, {{0, 2}, {1, 3}}), 1));
  out.push_back(levi_normalizer(4, {1, 1, 2}, 1, {}));
  return out;
}

SuiteResult verify_character_tables(int max_n) {
  SuiteResult r;
  r.name = "chartable";
  for (int n = 1; n <= max_n && r.ok; ++n) {
    const SymmetricCharacterTable t(n);
    const auto& parts = t.partitions();
    mpz_class nfact;
    mpz_fac_ui(nfact.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_class dims;
    for (size_t i = 0; i < parts.size(); ++i) dims += t.degree(i) * t.degree(i);
    check(r, dims == nfact, [&] { return "sum of squared degrees wrong for n=" + std::to_string(n); });
    for (size_t i = 0; i < parts.size(); ++i)
      for (size_t j = 0; j < parts.size(); ++j) {
        mpz_class row, col;
        for (size_t c = 0; c < parts.size(); ++c)
          row += (nfact / parts[c].centralizer_order()) * t.value(i, c) * t.value(j, c);
        for (size_t k = 0; k < parts.size(); ++k) col += mpz_class(t.value(k, i)) * t.value(k, j);
        check(r, row == (i == j ? nfact : mpz_class(0)),
              [&] { return "row orthogonality fails at n=" + std::to_string(n); });
        check(r, col == (i == j ? parts[i].centralizer_order() : mpz_class(0)),
              [&] { return "column orthogonality fails at n=" + std::to_string(n); });
      }
  }
  return r;
}

SuiteResult verify_hook_degrees(int max_n) {
  SuiteResult r;
  r.name = "hook";
  for (int n = 1; n <= max_n; ++n) {
    const SymmetricCharacterTable t(n);
    for (size_t i = 0; i < t.partitions().size(); ++i) {
      const Partition& l = t.partitions()[i];
      const QPoly d = generic_degree_gl(l);
      check(r, d == degree_via_class_sum(l, TorusType::Linear),
            [&] { return "hook and class-sum degrees differ at " + l.to_string(); });
      check(r, d.evaluate(1) == t.degree(i), [&] { return "D(1) != f at " + l.to_string(); });
    }
  }
  return r;
}

SuiteResult verify_unitary_signs(int max_n) {
  SuiteResult r;
  r.name = "unitary";
  for (int n = 1; n <= max_n; ++n)
    for (const Partition& l : enumerate_partitions(n)) {
      const SignedDegree u = unitary_sign_and_degree(l);
      check(r, u.degree == degree_via_class_sum(l, TorusType::Unitary),
            [&] { return "unitary degree differs from class sum at " + l.to_string(); });
      const QPoly twisted = generic_degree_gl(l).negate_variable();
      for (long q = 2; q <= 5; ++q)
        check(r, sgn(twisted.evaluate(q)) == u.sign && sgn(u.degree.evaluate(q)) > 0,
              [&] { return "sign changes at q=" + std::to_string(q) + " for " + l.to_string(); });
    }
  return r;
}

SuiteResult verify_coset_bases() {
  SuiteResult r;
  r.name = "cosetbasis";
  for (const WreathCase& wc : wreath_matrix()) {
    const GroupDescriptor base = GroupDescriptor::symmetric(wc.base_n);
    const PermGroup top(wc.d, wc.top);
    for (const Perm& a : top.elements()) {
      std::vector<CosetClassFunction> fam;
      for (const auto& t : invariant_tuples(wc.base_n, a)) {
        std::vector<IrrLabel> chi;
        for (const Partition& p : t) chi.push_back(IrrLabel::of_partition(p));
        fam.push_back(extension_restricted_to_coset(base, chi, a));
      }
      const size_t classes = fam.front().context().classes().size();
      check(r, fam.size() == classes, [&] {
        return wc.name + ", a=" + a.to_string() + ": " + std::to_string(fam.size()) + " extensions for " +
               std::to_string(classes) + " classes";
      });
      for (size_t i = 0; i < fam.size(); ++i)
        for (size_t j = 0; j < fam.size(); ++j)
          check(r, coset_inner(fam[i], fam[j]) == CycloNum(i == j ? 1 : 0),
                [&] { return wc.name + ", a=" + a.to_string() + ": Gram matrix is not the identity"; });
    }
  }
  return r;
}

SuiteResult verify_clifford_counts() {
  SuiteResult r;
  r.name = "clifford";
  for (const WreathCase& wc : wreath_matrix()) {
    const Group G(GroupDescriptor::wreath(GroupDescriptor::symmetric(wc.base_n), wc.d, wc.top));
    const auto& labels = G.irr_labels();
    const size_t classes = conjugacy_class_count(G.elements());
    check(r, labels.size() == classes, [&] {
      return wc.name + ": " + std::to_string(labels.size()) + " labels for " + std::to_string(classes) + " classes";
    });
    mpz_class sum;
    for (const IrrLabel& l : labels) sum += G.char_degree(l) * G.char_degree(l);
    check(r, sum == G.order(), [&] { return wc.name + ": sum of squared degrees != |G|"; });
  }
  return r;
}

SuiteResult verify_frobenius(uint64_t seed, size_t trials) {
  SuiteResult r;
  r.name = "frobenius";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-3, 3);
  auto random_function = [&](const CosetContext& ctx) {
    std::vector<CycloNum> v;
    for (size_t c = 0; c < ctx.classes().size(); ++c)
      v.push_back(CycloNum(coef(rng)) + CycloNum(coef(rng)) * CycloNum::root_of_unity(1, 3));
    return CosetClassFunction(ctx, std::move(v));
  };
  for (const WreathCase& wc : wreath_matrix()) {
    const Group W(GroupDescriptor::wreath(GroupDescriptor::symmetric(wc.base_n), wc.d, wc.top));
    if (W.order() > 10000) continue;
    const size_t nbase = W.base().generators().size() * static_cast<size_t>(wc.d);
    const PermGroup H(W.degree(), std::vector<Perm>(W.generators().begin(), W.generators().begin() + nbase));
    for (const Perm& a : wc.top) {
      const Perm s = W.lift_top(a);
      const CosetContext ctx = CosetContext::conjugation(H, s);
      const PermGroup sub = H.subgroup_where([&](const Perm& h) { return h * s == s * h; });
      const CosetContext sub_ctx = CosetContext::conjugation(sub, s);
      for (size_t t = 0; t < trials; ++t) {
        const CosetClassFunction f = random_function(ctx);
        const CosetClassFunction fp = random_function(sub_ctx);
        const CycloNum lhs = coset_inner(coset_induce(fp, ctx), f);
        const CycloNum rhs = coset_inner(fp, coset_restrict(f, sub));
        check(r, lhs == rhs, [&] { return wc.name + ", a=" + a.to_string() + ": reciprocity fails"; });
      }
    }
  }
  return r;
}

SuiteResult verify_lemma51(const std::vector<std::pair<int, int>>& cases) {
  SuiteResult r;
  r.name = "lemma51";
  for (auto [e, n] : cases)
    for (const auto& comp : enumerate_compositions(n)) {
      const LeviDatum datum = lemma51_datum(e, n, comp);
      for (const LeviLabel& l : levi_labels(datum))
        check(r, lemma51_crosscheck(datum, l), [&, e = e, n = n] {
          return "e=" + std::to_string(e) + " n=" + std::to_string(n) + " lambda=" + to_string(l);
        });
    }
  return r;
}

SuiteResult verify_lemma51_spec(const GroupSpec& spec) {
  if (spec.factors.size() != 1) throw std::invalid_argument("lemma51: single-factor spec required");
  const FactorSpec& f = spec.factors.front();
  const FixedStructure fs = analyze(spec);
  if (fs.orbits.size() != 1) throw std::invalid_argument("lemma51: sigma must be a single d-cycle");
  if (PermGroup(f.d, f.A_gens).elements() != PermGroup(f.d, {f.sigma}).elements())
    throw std::invalid_argument("lemma51: A must be generated by sigma");
  if (f.twist != 0) throw std::invalid_argument("lemma51: untwisted spec required");
  return verify_lemma51({{f.d, f.n}});
}

SuiteResult verify_reexpansion() {
  SuiteResult r;
  r.name = "mtable";
  const Perm swap2 = Perm::from_cycles(2, {{0, 1}});
  struct Case {
    GroupSpec spec;
    nlohmann::json levi;
  };
  std::vector<Case> cases;
  cases.push_back({one_factor(2, 2, {swap2}, swap2, 0), {{"composition", {1, 1}}, {"AL", {{1, 0}}}}});
  cases.push_back({one_factor(3, 1, {}, Perm::identity(1), 0), {{"composition", {2, 1}}}});
  cases.push_back({one_factor(2, 1, {}, Perm::identity(1), 0), {{"composition", {1, 1}}, {"w1", {{1, 0}}}}});
  cases.push_back({one_factor(3, 1, {}, Perm::identity(1), 0), {{"composition", {1, 1, 1}}, {"w1", {{1, 2, 0}}}}});
  cases.push_back({one_factor(3, 1, {}, Perm::identity(1), 1), {{"composition", {1, 1, 1}}, {"w1", {{2, 1, 0}}}}});
  cases.push_back({one_factor(2, 2, {swap2}, Perm::identity(2), 0),
                   {{"composition", {1, 1}}, {"AL", {{1, 0}}}, {"w1", {{1, 0}, {1, 0}}}}});
  cases.push_back({one_factor(2, 3, {Perm::from_cycles(3, {{0, 1, 2}})}, Perm::from_cycles(3, {{0, 1, 2}}), 0),
                   {{"composition", {1, 1}}, {"AL", {{1, 2, 0}}}}});
  for (const Case& c : cases) {
    const LeviDatum datum = LeviDatum::from_json(analyze(c.spec), c.levi);
    const PermGroup AL(datum.compositions.size(), datum.AL_gens);
    for (const LeviLabel& l : levi_labels(datum))
      for (const Perm& a : AL.elements()) {
        bool fixed = true;
        for (int i = 0; i < a.degree(); ++i) fixed = fixed && l[a(i)] == l[i];
        if (!fixed) continue;
        const MultiplicityTable t = m_table(datum, l, a);
        const std::string where = c.levi.dump() + " lambda=" + to_string(l) + " a=" + a.to_string();
        check(r, t.reexpansion_exact(), [&] { return "re-expansion fails for " + where; });
        for (const CycloNum& m : t.m)
          check(r, m.is_cyclotomic_integer(), [&] { return "non-integral m for " + where; });
      }
  }
  return r;
}

SuiteResult verify_kostka(int max_n) {
  SuiteResult r;
  r.name = "kostka";
  for (int n = 1; n <= max_n; ++n)
    check(r, integrality_basis_check(n), [&] { return "determinant is not +-1 for n=" + std::to_string(n); });
  return r;
}

SuiteResult verify_step4(int max_product) {
  SuiteResult r;
  r.name = "step4";
  for (int e = 1; e <= max_product; ++e)
    for (int k = 1; e * k <= max_product; ++k)
      for (int n = 1; e * k * n <= max_product; ++n)
        for (int m = 0; m < e; ++m) {
          const Step4Report rep = step4_identities(e, k, n, m);
          check(r, rep.ok(), [&] {
            return "e=" + std::to_string(e) + " k=" + std::to_string(k) + " n=" + std::to_string(n) +
                   " m=" + std::to_string(m) + ": " + rep.failure;
          });
        }
  return r;
}

SuiteResult verify_label_counts(const std::vector<GroupSpec>& specs) {
  SuiteResult r;
  r.name = "counting";
  for (size_t i = 0; i < specs.size(); ++i) {
    const FixedStructure fs = analyze(specs[i]);
    const size_t labels = unipotent_labels(fs).size();
    const size_t classes = conjugacy_class_count(Group(weyl_group_with_top(fs)).elements());
    check(r, labels == classes, [&] {
      return "spec " + std::to_string(i) + ": " + std::to_string(labels) + " labels for " +
             std::to_string(classes) + " classes";
    });
    for (const ConnLabel& eta : conn_labels(fs))
      for (const Perm& b : fs.AF.generators())
        check(r, equivariance_check(fs, b, eta), [&] { return "equivariance fails at " + to_string(eta); });
  }
  return r;
}

SuiteResult verify_mellin(const std::vector<GroupSpec>& specs) {
  SuiteResult r;
  r.name = "mellin";
  for (size_t i = 0; i < specs.size(); ++i) {
    const FixedStructure fs = analyze(specs[i]);
    if (!fs.AF.is_abelian()) continue;
    for (const ConnLabel& eta : conn_labels(fs)) {
      const MellinTransform m = mellin(fs, eta);
      check(r, m.round_trip(), [&] { return "round trip fails at " + to_string(eta); });
      for (const Perm& a : m.elements) {
        const SupportReport rep = support_identity_weyl_model(fs, eta, a);
        check(r, rep.ok, [&] { return "support identity at " + to_string(eta) + ": " + rep.failure; });
      }
    }
  }
  return r;
}

SuiteResult verify_orders() {
  SuiteResult r;
  r.name = "orders";
  // Point counts of GL_2(2), GU_2(2) and GL_1(4).
  const std::vector<std::pair<GroupSpec, long>> cases = {
      {one_factor(2, 1, {}, Perm::identity(1), 0), 6},
      {one_factor(2, 1, {}, Perm::identity(1), 1), 18},
      {one_factor(1, 2, {}, Perm::from_cycles(2, {{0, 1}}), 0), 3},
  };
  for (const auto& [spec, expected] : cases) {
    const mpz_class got = order_polynomial(analyze(spec)).evaluate(2);
    check(r, got == expected, [&, expected = expected] {
      return "order at q=2 is " + got.get_str() + ", expected " + std::to_string(expected);
    });
  }
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"chartable", "hook",    "unitary", "cosetbasis", "clifford",
                                                 "frobenius", "lemma51", "mtable",  "kostka", "step4",
                                                 "counting",  "mellin",  "orders"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  auto specs = [&] { return opts.spec ? std::vector<GroupSpec>{*opts.spec} : builtin_specs(); };
  if (name == "chartable") return verify_character_tables(7);
  if (name == "hook") return verify_hook_degrees(6);
  if (name == "unitary") return verify_unitary_signs(5);
  if (name == "cosetbasis") return verify_coset_bases();
  if (name == "clifford") return verify_clifford_counts();
  if (name == "frobenius") return verify_frobenius(opts.seed, opts.trials);
  if (name == "lemma51") return opts.spec ? verify_lemma51_spec(*opts.spec) : verify_lemma51({{2, 2}, {2, 3}, {3, 2}});
  if (name == "mtable") return verify_reexpansion();
  if (name == "kostka") return verify_kostka(7);
  if (name == "step4") return verify_step4(8);
  if (name == "counting") return verify_label_counts(specs());
  if (name == "mellin") return verify_mellin(specs());
  if (name == "orders") return verify_orders();
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace wreathchar
