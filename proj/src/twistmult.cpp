#include "wreathchar/twistmult.hpp"

#include <algorithm>
#include <stdexcept>

#include "wreathchar/permwreath.hpp"

namespace wreathchar {

namespace {

const FactorStructure& single_factor(const FixedStructure& fs) {
  if (fs.factors.size() != 1) throw std::invalid_argument("single-factor spec required");
  return fs.factors.front();
}

// Young blocks of W° = S_n^d on d*n flat points, coordinate-major.
struct YoungBlocks {
  std::vector<std::vector<int>> points;
  std::vector<std::pair<int, int>> index;  // (coordinate, part)
};

YoungBlocks young_blocks(int n, const std::vector<std::vector<int>>& comps) {
  YoungBlocks yb;
  for (size_t i = 0; i < comps.size(); ++i) {
    int off = static_cast<int>(i) * n;
    for (size_t j = 0; j < comps[i].size(); ++j) {
      std::vector<int> pts;
      for (int p = 0; p < comps[i][j]; ++p) pts.push_back(off + p);
      off += comps[i][j];
      yb.points.push_back(std::move(pts));
      yb.index.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return yb;
}

// Coordinate permutation c acting on S_n^d by moving whole coordinates.
Perm coordinate_lift(const Perm& c, int n) {
  std::vector<int> img(c.degree() * n);
  for (int i = 0; i < c.degree(); ++i)
    for (int p = 0; p < n; ++p) img[i * n + p] = c(i) * n + p;
  return Perm(std::move(img));
}

Perm tuple_to_flat(const std::vector<Perm>& w, int n) {
  std::vector<int> img(w.size() * n);
  for (size_t i = 0; i < w.size(); ++i)
    for (int p = 0; p < n; ++p) img[i * n + p] = static_cast<int>(i) * n + w[i](p);
  return Perm(std::move(img));
}

// Block permutation induced by g, or throws when g does not permute the blocks.
std::vector<size_t> block_action(const std::vector<std::vector<int>>& blocks, const Perm& g) {
  std::vector<int> owner(g.degree(), -1);
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int p : blocks[b]) owner[p] = static_cast<int>(b);
  std::vector<size_t> out(blocks.size());
  for (size_t b = 0; b < blocks.size(); ++b) {
    const int t = owner[g(blocks[b].front())];
    if (t < 0 || blocks[t].size() != blocks[b].size())
      throw std::invalid_argument("element does not permute the Young blocks");
    for (int p : blocks[b])
      if (owner[g(p)] != t) throw std::invalid_argument("element does not permute the Young blocks");
    out[b] = static_cast<size_t>(t);
  }
  return out;
}

Perm w1_sigma_flat(const LeviDatum& d) {
  const FactorSpec& f = d.ambient.factors.front().spec;
  return tuple_to_flat(d.w1, f.n) * coordinate_lift(f.sigma, f.n);
}

bool label_invariant(const LeviLabel& lambda, const YoungBlocks& yb, const std::vector<size_t>& act) {
  for (size_t b = 0; b < act.size(); ++b) {
    const auto [i, j] = yb.index[b];
    const auto [i2, j2] = yb.index[act[b]];
    if (!(lambda[i][j] == lambda[i2][j2])) return false;
  }
  return true;
}

}  // namespace

LeviDatum LeviDatum::from_json(const FixedStructure& fs, const nlohmann::json& j) {
  try {
    const FactorSpec& f = single_factor(fs).spec;
    LeviDatum datum;
    datum.ambient = fs;
    if (j.contains("compositions")) {
      datum.compositions = j.at("compositions").get<std::vector<std::vector<int>>>();
    } else {
      datum.compositions.assign(f.d, j.at("composition").get<std::vector<int>>());
    }
    if (j.contains("AL"))
      for (const auto& g : j.at("AL")) datum.AL_gens.emplace_back(g.get<std::vector<int>>());
    if (j.contains("w1")) {
      for (const auto& w : j.at("w1")) datum.w1.emplace_back(w.get<std::vector<int>>());
    } else {
      datum.w1.assign(f.d, Perm::identity(f.n));
    }
    datum.validate();
    return datum;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("levi datum: ") + e.what());
  }
}

void LeviDatum::validate() const {
  const FactorSpec& f = single_factor(ambient).spec;
  if (static_cast<int>(compositions.size()) != f.d)
    throw std::invalid_argument("levi datum: one composition per coordinate required");
  for (const auto& c : compositions) {
    int s = 0;
    for (int p : c) {
      if (p <= 0) throw std::invalid_argument("levi datum: composition parts must be positive");
      s += p;
    }
    if (s != f.n) throw std::invalid_argument("levi datum: composition does not sum to n");
  }
  if (static_cast<int>(w1.size()) != f.d) throw std::invalid_argument("levi datum: w1 needs one entry per coordinate");
  for (const Perm& w : w1)
    if (w.degree() != f.n) throw std::invalid_argument("levi datum: w1 entries must act on n points");
  const PermGroup AL(f.d, AL_gens);
  if (!AL.is_abelian()) throw std::invalid_argument("levi datum: A_L must be abelian");
  for (const Perm& a : AL_gens) {
    if (!ambient.AF.contains(a)) throw std::invalid_argument("levi datum: A_L must lie in A^F");
    for (int i = 0; i < f.d; ++i) {
      if (compositions[a(i)] != compositions[i])
        throw std::invalid_argument("levi datum: A_L does not stabilise W_L");
      if (w1[a(i)] != w1[i]) throw std::invalid_argument("levi datum: w1 is not centralised by A_L");
    }
  }
  block_action(young_blocks(f.n, compositions).points, w1_sigma_flat(*this));
}

bool LeviDatum::w1_trivial() const {
  return std::all_of(w1.begin(), w1.end(), [](const Perm& w) { return w.is_identity(); });
}

LeviLabel levi_label_from_json(const nlohmann::json& j) {
  try {
    LeviLabel out;
    for (const auto& coord : j) {
      std::vector<Partition> row;
      for (const auto& p : coord) row.emplace_back(p.get<std::vector<int>>());
      out.push_back(std::move(row));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("levi label: ") + e.what());
  }
}

std::string to_string(const LeviLabel& lambda) {
  std::string s = "(";
  for (size_t i = 0; i < lambda.size(); ++i) {
    s += i ? ";" : "";
    for (size_t j = 0; j < lambda[i].size(); ++j) s += (j ? "," : "") + lambda[i][j].to_string();
  }
  return s + ")";
}

std::vector<LeviLabel> levi_labels(const LeviDatum& datum) {
  const FactorSpec& f = single_factor(datum.ambient).spec;
  const YoungBlocks yb = young_blocks(f.n, datum.compositions);
  const auto act = block_action(yb.points, w1_sigma_flat(datum));
  std::vector<std::vector<Partition>> choices;
  for (const auto& pts : yb.points) choices.push_back(enumerate_partitions(static_cast<int>(pts.size())));
  std::vector<LeviLabel> out;
  std::vector<size_t> idx(choices.size(), 0);
  while (true) {
    LeviLabel lambda(datum.compositions.size());
    for (size_t b = 0; b < choices.size(); ++b) lambda[yb.index[b].first].push_back(choices[b][idx[b]]);
    if (label_invariant(lambda, yb, act)) out.push_back(std::move(lambda));
    size_t b = choices.size();
    while (b > 0 && ++idx[b - 1] == choices[b - 1].size()) idx[--b] = 0;
    if (b == 0) break;
  }
  return out;
}

EtaTransport eta_transport(const FixedStructure& fs, const ConnLabel& eta, const Perm& a) {
  const FactorSpec& f = single_factor(fs).spec;
  if (a.degree() != f.d) throw std::invalid_argument("eta_transport: a must act on the coordinates");
  if (a * f.sigma != f.sigma * a) throw std::invalid_argument("eta_transport: a must commute with sigma");
  if (act_on_label(fs, a, eta) != eta) throw std::invalid_argument("eta_transport: a does not fix eta");
  EtaTransport t;
  t.merged_orbits = PermGroup(f.d, {f.sigma, a}).orbits();
  for (const auto& o : t.merged_orbits) t.merged.push_back(eta[fs.orbit_of[o.front()]]);
  for (auto cyc : a.cycles()) {
    std::sort(cyc.begin(), cyc.end());
    t.on_a_orbits.push_back(eta[fs.orbit_of[cyc.front()]]);
    t.a_orbits.push_back(std::move(cyc));
  }
  return t;
}

bool MultiplicityTable::reexpansion_exact() const {
  std::vector<CycloNum> sum(induced.class_values().size());
  for (size_t e = 0; e < basis.size(); ++e)
    for (size_t c = 0; c < sum.size(); ++c) sum[c] += m[e] * basis[e].class_values()[c];
  return sum == induced.class_values();
}

nlohmann::json MultiplicityTable::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (size_t e = 0; e < etas.size(); ++e)
    entries.push_back({{"eta", to_string(etas[e])}, {"m", m[e].to_string()}});
  return {{"schema", 1}, {"entries", entries}, {"reexpansion_exact", reexpansion_exact()}};
}

MultiplicityTable m_table(const LeviDatum& datum, const LeviLabel& lambda, const Perm& a) {
  datum.validate();
  const FixedStructure& fs = datum.ambient;
  const FactorSpec& f = single_factor(fs).spec;
  const PermGroup AL(f.d, datum.AL_gens);
  if (!AL.contains(a)) throw std::invalid_argument("m_table: a is not in A_L");
  if (lambda.size() != datum.compositions.size()) throw std::invalid_argument("m_table: lambda has wrong shape");
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i].size() != datum.compositions[i].size())
      throw std::invalid_argument("m_table: lambda has wrong shape");
    for (size_t j = 0; j < lambda[i].size(); ++j)
      if (lambda[i][j].size() != datum.compositions[i][j])
        throw std::invalid_argument("m_table: lambda does not match the composition");
  }
  const YoungBlocks yb = young_blocks(f.n, datum.compositions);
  if (!label_invariant(lambda, yb, block_action(yb.points, w1_sigma_flat(datum))))
    throw std::invalid_argument("m_table: lambda is not w1 sigma-invariant");
  for (int i = 0; i < f.d; ++i)
    if (lambda[a(i)] != lambda[i]) throw std::invalid_argument("m_table: a does not fix lambda");

  const FixedPointModel model = fixed_point_model(f.n, f.d, a);
  const Perm sbar = model.lift_coordinate_perm(f.sigma);
  const Perm s = model.embed(datum.w1) * sbar;
  const int r = static_cast<int>(model.orbits.size());

  std::vector<std::vector<int>> sub_blocks;
  std::vector<Partition> sub_labels;
  std::vector<Perm> sub_gens;
  for (int k = 0; k < r; ++k) {
    const int rep = model.orbits[k].front();
    int off = k * f.n;
    for (size_t j = 0; j < datum.compositions[rep].size(); ++j) {
      std::vector<int> pts;
      for (int p = 0; p < datum.compositions[rep][j]; ++p) pts.push_back(off + p);
      for (size_t p = 0; p + 1 < pts.size(); ++p) sub_gens.push_back(Perm::from_cycles(r * f.n, {{pts[p], pts[p + 1]}}));
      off += datum.compositions[rep][j];
      sub_blocks.push_back(std::move(pts));
      sub_labels.push_back(lambda[rep][j]);
    }
  }
  const CosetContext sub_ctx = CosetContext::conjugation(PermGroup(r * f.n, std::move(sub_gens)), s);
  const CosetClassFunction lambda_ext = CosetClassFunction::from_pointwise(
      sub_ctx, [&](const Perm& g) { return block_extension_value(sub_blocks, sub_labels, g * s); });
  const CosetContext ctx = CosetContext::conjugation(model.group, sbar);

  MultiplicityTable table{{}, {}, {}, coset_induce(lambda_ext, ctx)};
  for (const ConnLabel& eta : conn_labels(fs)) {
    if (act_on_label(fs, a, eta) != eta) continue;
    std::vector<Partition> labels;
    for (const auto& orb : model.orbits) labels.push_back(eta[fs.orbit_of[orb.front()]]);
    CosetClassFunction basis = CosetClassFunction::from_pointwise(
        ctx, [&](const Perm& g) { return block_extension_value(model.blocks, labels, g * sbar); });
    table.m.push_back(coset_inner(table.induced, basis));
    table.basis.push_back(std::move(basis));
    table.etas.push_back(eta);
  }
  return table;
}

CycloNum ordinary_induction_multiplicity(const std::vector<int>& composition,
                                         const std::vector<Partition>& lambda, const Partition& eta) {
  if (composition.size() != lambda.size()) throw std::invalid_argument("induction: label shape mismatch");
  const int n = eta.size();
  std::vector<Perm> gens;
  std::vector<std::vector<int>> parts;
  int off = 0;
  for (int c : composition) {
    std::vector<int> pts;
    for (int p = 0; p < c; ++p) pts.push_back(off + p);
    for (int p = 0; p + 1 < c; ++p) gens.push_back(Perm::from_cycles(n, {{off + p, off + p + 1}}));
    off += c;
    parts.push_back(std::move(pts));
  }
  if (off != n) throw std::invalid_argument("induction: composition does not sum to |eta|");
  const PermGroup young(n, std::move(gens));
  long total = 0;
  for (const Perm& g : young.elements()) {
    long v = mn_character(eta, g.cycle_type());
    for (size_t j = 0; j < parts.size() && v != 0; ++j)
      v *= mn_character(lambda[j], g.restrict_to(parts[j]).cycle_type());
    total += v;
  }
  return CycloNum(mpq_class(total, static_cast<long>(young.order())));
}

LeviDatum lemma51_datum(int e, int n, const std::vector<int>& composition) {
  std::vector<int> cyc(e);
  for (int i = 0; i < e; ++i) cyc[i] = (i + 1) % e;
  const Perm sigma(cyc);
  GroupSpec spec;
  spec.factors.push_back({n, e, {sigma}, sigma, 0});
  LeviDatum d;
  d.ambient = analyze(spec);
  d.compositions.assign(e, composition);
  if (!sigma.is_identity()) d.AL_gens.push_back(sigma);
  d.w1.assign(e, Perm::identity(n));
  d.validate();
  return d;
}

bool lemma51_crosscheck(const LeviDatum& datum, const LeviLabel& lambda) {
  const FactorSpec& f = single_factor(datum.ambient).spec;
  if (!datum.w1_trivial()) throw std::invalid_argument("lemma51_crosscheck: w1 must be trivial");
  if (datum.ambient.orbits.size() != 1) throw std::invalid_argument("lemma51_crosscheck: sigma must be a full cycle");
  for (int i = 0; i < f.d; ++i) {
    const MultiplicityTable t = m_table(datum, lambda, f.sigma.pow(i));
    for (size_t e = 0; e < t.etas.size(); ++e)
      if (t.m[e] != ordinary_induction_multiplicity(datum.compositions[0], lambda[0], t.etas[e][0])) return false;
  }
  return true;
}

bool integrality_basis_check(int n) {
  if (n < 1) throw std::invalid_argument("integrality_basis_check: n must be positive");
  const mpz_class det = integer_determinant(kostka_matrix(n));
  return det == 1 || det == -1;
}

namespace {

std::vector<std::vector<int>> sorted_orbits(std::vector<std::vector<int>> orbits) {
  for (auto& o : orbits) std::sort(o.begin(), o.end());
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

}  // namespace

Step4Report step4_identities(int e, int k, int n, int m) {
  if (e < 1 || k < 1 || n < 1 || m < 0) throw std::invalid_argument("step4: parameters must be positive");
  const int D = e * k;
  std::vector<int> sig(D), shift(D), tau(D);
  for (int i = 0; i < D; ++i) {
    sig[i] = (i / e) * e + (i % e + 1) % e;
    shift[i] = (i + e) % D;
    tau[i] = i < e ? (i + 1) % e : i;
  }
  const Perm sigma(sig), c(shift), b = Perm(tau).pow(m);
  const Perm bc = b * c;
  Step4Report rep;

  rep.orbits_equal = sorted_orbits(bc.cycles()) == sorted_orbits(PermGroup(D, {b, c}).orbits());

  std::vector<Perm> wgens;
  for (int i = 0; i < D; ++i)
    for (int p = 0; p + 1 < n; ++p) wgens.push_back(Perm::from_cycles(D * n, {{i * n + p, i * n + p + 1}}));
  const PermGroup W(D * n, std::move(wgens));
  const Perm Lbc = coordinate_lift(bc, n), Lb = coordinate_lift(b, n), Lc = coordinate_lift(c, n);
  const PermGroup fixed_bc = W.subgroup_where([&](const Perm& w) { return Lbc * w == w * Lbc; });
  const PermGroup fixed_cb =
      W.subgroup_where([&](const Perm& w) { return Lb * w == w * Lb && Lc * w == w * Lc; });
  rep.fixed_subgroups_equal = fixed_bc.elements() == fixed_cb.elements();
  if (!rep.orbits_equal || !rep.fixed_subgroups_equal) {
    rep.failure = "W°<bc> and W°<c,b> differ";
    return rep;
  }

  // Left side: W°<bc> = S_n^r over the <bc>-orbits, sigma permuting them.
  const FixedPointModel m_bc = fixed_point_model(n, D, bc);
  std::vector<int> sig_on_bc(m_bc.orbits.size());
  for (size_t o = 0; o < m_bc.orbits.size(); ++o) sig_on_bc[o] = m_bc.orbit_of[sigma(m_bc.orbits[o].front())];
  const Perm sigma_bc(sig_on_bc);
  const Group sym_n(GroupDescriptor::symmetric(n));

  // Right side: W°<c> = S_n^e over the c-orbits with sigma acting as a cycle
  // tau_bar, then the fixed points of tau_bar^m.
  const FixedPointModel m_c = fixed_point_model(n, D, c);
  std::vector<int> tb(m_c.orbits.size());
  for (size_t o = 0; o < m_c.orbits.size(); ++o) tb[o] = m_c.orbit_of[sigma(m_c.orbits[o].front())];
  const Perm tau_bar(tb);
  const FixedPointModel m_2 = fixed_point_model(n, static_cast<int>(m_c.orbits.size()), tau_bar.pow(m));
  const Perm tau_bar_2 = m_2.lift_coordinate_perm(tau_bar);

  for (const Partition& lambda : enumerate_partitions(n)) {
    const std::vector<IrrLabel> chi(m_bc.orbits.size(), IrrLabel::of_partition(lambda));
    const std::vector<Partition> labels2(m_2.orbits.size(), lambda);
    for (const Perm& w : fixed_bc.elements()) {
      std::vector<Perm> tuple(D);
      for (int i = 0; i < D; ++i) tuple[i] = w.restrict_to([&] {
        std::vector<int> pts;
        for (int p = 0; p < n; ++p) pts.push_back(i * n + p);
        return pts;
      }());
      std::vector<Perm> h(m_bc.orbits.size());
      for (size_t o = 0; o < m_bc.orbits.size(); ++o) h[o] = tuple[m_bc.orbits[o].front()];
      // The element w.sigma has base part w read on orbits, so the base at
      // orbit sigma(o) is h_{sigma(o)}.
      const CycloNum lhs = canonical_extension_value(sym_n, chi, sigma_bc, h);

      std::vector<Perm> on_c(m_c.orbits.size());
      for (size_t o = 0; o < m_c.orbits.size(); ++o) on_c[o] = tuple[m_c.orbits[o].front()];
      const Perm w2 = m_2.embed(on_c);
      const CycloNum rhs = block_extension_value(m_2.blocks, labels2, w2 * tau_bar_2);
      ++rep.evaluations;
      if (lhs != rhs) {
        rep.extensions_equal = false;
        rep.failure = "extension mismatch at " + w.to_string() + " for " + lambda.to_string();
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace wreathchar
