#include "wreathchar/unipotent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "wreathchar/permwreath.hpp"

namespace wreathchar {

std::string to_string(const ConnLabel& eta) {
  std::string s = "(";
  for (size_t i = 0; i < eta.size(); ++i) s += (i ? "," : "") + eta[i].to_string();
  return s + ")";
}

std::vector<ConnLabel> conn_labels(const FixedStructure& fs) {
  std::vector<std::vector<Partition>> per;
  for (const OrbitInfo& o : fs.orbits) per.push_back(enumerate_partitions(o.n));
  std::vector<ConnLabel> out;
  std::vector<size_t> idx(per.size(), 0);
  while (true) {
    ConnLabel eta;
    for (size_t i = 0; i < per.size(); ++i) eta.push_back(per[i][idx[i]]);
    out.push_back(std::move(eta));
    size_t i = per.size();
    while (i > 0 && ++idx[i - 1] == per[i - 1].size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

SignedDegree sign_and_degree(const FixedStructure& fs, const ConnLabel& eta) {
  if (eta.size() != fs.orbits.size()) throw std::invalid_argument("sign_and_degree: one partition per orbit required");
  SignedDegree out{1, QPoly(1)};
  for (size_t o = 0; o < eta.size(); ++o) {
    const OrbitInfo& orb = fs.orbits[o];
    if (eta[o].size() != orb.n)
      throw std::invalid_argument("sign_and_degree: " + eta[o].to_string() + " is not a partition of " +
                                  std::to_string(orb.n));
    if (orb.type == TorusType::Linear) {
      out.degree *= generic_degree_gl(eta[o]).substitute_power(orb.length);
    } else {
      const SignedDegree u = unitary_sign_and_degree(eta[o]);
      out.sign *= u.sign;
      out.degree *= u.degree.substitute_power(orb.length);
    }
  }
  return out;
}

ConnLabel act_on_label(const FixedStructure& fs, const Perm& b, const ConnLabel& eta) {
  const auto act = fs.orbit_action(b);
  ConnLabel out(eta.size());
  for (size_t o = 0; o < eta.size(); ++o) out[act[o]] = eta[o];
  return out;
}

PermGroup eta_stabilizer(const FixedStructure& fs, const ConnLabel& eta) {
  return fs.AF.subgroup_where([&](const Perm& b) { return act_on_label(fs, b, eta) == eta; });
}

std::vector<UnipotentLabel> unipotent_labels(const FixedStructure& fs) {
  const auto etas = conn_labels(fs);
  std::map<ConnLabel, size_t> rank;
  for (size_t i = 0; i < etas.size(); ++i) rank.emplace(etas[i], i);
  std::vector<UnipotentLabel> out;
  for (size_t i = 0; i < etas.size(); ++i) {
    bool minimal = true;
    for (const Perm& b : fs.AF.elements())
      if (rank.at(act_on_label(fs, b, etas[i])) < i) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    const PermGroup stab = eta_stabilizer(fs, etas[i]);
    const TopCharacters chars(stab);
    const SignedDegree sd = sign_and_degree(fs, etas[i]);
    const long index = static_cast<long>(fs.AF.order() / stab.order());
    for (size_t x = 0; x < chars.count(); ++x)
      out.push_back({etas[i], chars.label(x), sd.sign, QPoly(index * chars.degree(x)) * sd.degree});
  }
  return out;
}

bool equivariance_check(const FixedStructure& fs, const Perm& b, const ConnLabel& eta) {
  if (!fs.AF.contains(b)) throw std::invalid_argument("equivariance_check: b is not in A^F");
  const ConnLabel moved = act_on_label(fs, b, eta);
  const PermGroup s1 = eta_stabilizer(fs, eta);
  const PermGroup s2 = eta_stabilizer(fs, moved);
  const Perm binv = b.inverse();
  std::vector<Perm> conj;
  for (const Perm& x : s1.elements()) conj.push_back(b * x * binv);
  std::sort(conj.begin(), conj.end());
  if (conj != s2.elements()) return false;
  const SignedDegree d1 = sign_and_degree(fs, eta), d2 = sign_and_degree(fs, moved);
  return d1.sign == d2.sign && d1.degree == d2.degree;
}

bool MellinTransform::round_trip() const {
  const size_t n = elements.size();
  if (characters.size() != n) return false;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      CycloNum fi, if_;
      for (size_t k = 0; k < n; ++k) {
        fi += forward[i][k] * inverse[k][j];
        if_ += inverse[i][k] * forward[k][j];
      }
      const CycloNum expect(i == j ? 1 : 0);
      if (fi != expect || if_ != expect) return false;
    }
  return true;
}

const std::vector<CycloNum>& MellinTransform::vector_at(const Perm& a) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), a);
  if (it == elements.end() || *it != a) throw std::invalid_argument("mellin: element not in A_eta");
  return forward[static_cast<size_t>(it - elements.begin())];
}

MellinTransform mellin(const FixedStructure& fs, const ConnLabel& eta) {
  if (!fs.AF.is_abelian()) throw std::domain_error("mellin: A^F is not abelian");
  const PermGroup stab = eta_stabilizer(fs, eta);
  const TopCharacters chars(stab);
  MellinTransform m;
  m.elements = stab.elements();
  for (size_t x = 0; x < chars.count(); ++x) m.characters.push_back(chars.label(x));
  const CycloNum order(static_cast<long>(stab.order()));
  m.inverse.assign(chars.count(), std::vector<CycloNum>(m.elements.size()));
  for (size_t i = 0; i < m.elements.size(); ++i) {
    std::vector<CycloNum> row;
    const Perm inv = m.elements[i].inverse();
    for (size_t x = 0; x < chars.count(); ++x) {
      row.push_back(chars.value(x, inv));
      m.inverse[x][i] = chars.value(x, m.elements[i]) / order;
    }
    m.forward.push_back(std::move(row));
  }
  return m;
}

namespace {

// W^F x| A^F on flat points: one block of n_O points per orbit, then the
// coordinates carrying A^F.
struct WeylModel {
  const FixedStructure* fs = nullptr;
  std::vector<std::vector<int>> blocks;
  int top_offset = 0;
  int degree = 0;

  explicit WeylModel(const FixedStructure& f) : fs(&f) {
    for (const OrbitInfo& o : f.orbits) {
      std::vector<int> pts;
      for (int p = 0; p < o.n; ++p) pts.push_back(top_offset + p);
      top_offset += o.n;
      blocks.push_back(std::move(pts));
    }
    degree = top_offset + f.total_points;
  }

  Perm lift(const Perm& b) const {
    const auto act = fs->orbit_action(b);
    std::vector<int> img(degree);
    for (size_t o = 0; o < blocks.size(); ++o)
      for (size_t p = 0; p < blocks[o].size(); ++p) img[blocks[o][p]] = blocks[act[o]][p];
    for (int x = 0; x < fs->total_points; ++x) img[top_offset + x] = top_offset + b(x);
    return Perm(std::move(img));
  }

  Perm top_of(const Perm& y) const {
    std::vector<int> img(fs->total_points);
    for (int x = 0; x < fs->total_points; ++x) img[x] = y(top_offset + x) - top_offset;
    return Perm(std::move(img));
  }

  PermGroup group() const {
    std::vector<Perm> gens;
    for (const auto& blk : blocks)
      for (size_t p = 0; p + 1 < blk.size(); ++p) gens.push_back(Perm::from_cycles(degree, {{blk[p], blk[p + 1]}}));
    for (const Perm& b : fs->AF.generators()) gens.push_back(lift(b));
    return PermGroup(degree, std::move(gens));
  }
};

}  // namespace

SupportReport support_identity_weyl_model(const FixedStructure& fs, const ConnLabel& eta, const Perm& a) {
  if (!fs.AF.is_abelian()) throw std::domain_error("support identity: A^F is not abelian");
  const PermGroup stab = eta_stabilizer(fs, eta);
  if (!stab.contains(a)) throw std::invalid_argument("support identity: a does not fix eta");
  const TopCharacters chars(stab);
  const WeylModel model(fs);
  const PermGroup W = model.group();
  const std::vector<Perm> transversal = fs.AF.left_transversal(stab);
  std::vector<Perm> lifted, lifted_inv;
  for (const Perm& t : transversal) {
    lifted.push_back(model.lift(t));
    lifted_inv.push_back(lifted.back().inverse());
  }
  // chi_{eta*xi}(y) by induction from W^F x| A_eta; A^F abelian, so t^-1 b t = b.
  auto induced = [&](size_t xi, const Perm& y) {
    const Perm b = model.top_of(y);
    if (!stab.contains(b)) return CycloNum();
    CycloNum v;
    for (size_t t = 0; t < transversal.size(); ++t)
      v += block_extension_value(model.blocks, eta, lifted_inv[t] * y * lifted[t]);
    return v * chars.value(xi, b);
  };
  const Perm a_inv = a.inverse();
  std::vector<CycloNum> coeff;
  for (size_t xi = 0; xi < chars.count(); ++xi) coeff.push_back(chars.value(xi, a_inv));
  const CycloNum order(static_cast<long>(stab.order()));
  SupportReport rep;
  for (const Perm& y : W.elements()) {
    CycloNum lhs;
    for (size_t xi = 0; xi < chars.count(); ++xi) lhs += coeff[xi] * induced(xi, y);
    const CycloNum rhs = model.top_of(y) == a ? order * induced(chars.trivial(), y) : CycloNum();
    ++rep.evaluations;
    if (lhs != rhs) {
      rep.ok = false;
      rep.failure = "mismatch at " + y.to_string() + ": " + lhs.to_string() + " vs " + rhs.to_string();
      return rep;
    }
  }
  return rep;
}

std::vector<std::pair<Perm, CycloNum>> rtilde_coefficients(const FixedStructure& fs, const ConnLabel& eta,
                                                           const Perm& a) {
  if (fs.factors.size() != 1) throw std::invalid_argument("rtilde_coefficients: single-factor specs only");
  const FactorStructure& st = fs.factors.front();
  const Perm& sigma = st.spec.sigma;
  if (a * sigma != sigma * a) throw std::invalid_argument("rtilde_coefficients: a must commute with sigma");
  if (act_on_label(fs, a, eta) != eta) throw std::invalid_argument("rtilde_coefficients: a does not fix eta");
  const FixedPointModel model = fixed_point_model(st.spec.n, st.spec.d, a);
  std::vector<Partition> labels;
  for (const auto& orb : model.orbits) labels.push_back(eta[fs.orbit_of[orb.front()]]);
  const Perm sbar = model.lift_coordinate_perm(sigma);
  std::vector<std::pair<Perm, CycloNum>> out;
  for (const Perm& w : model.group.elements())
    out.emplace_back(w, block_extension_value(model.blocks, labels, w * sbar));
  return out;
}

}  // namespace wreathchar
