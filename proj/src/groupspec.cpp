#include "wreathchar/groupspec.hpp"

#include <algorithm>
#include <stdexcept>

namespace wreathchar {

GroupSpec GroupSpec::from_json(const nlohmann::json& j) {
  try {
    GroupSpec spec;
    for (const auto& f : j.at("factors")) {
      FactorSpec fs;
      fs.n = f.at("n").get<int>();
      fs.d = f.at("d").get<int>();
      if (fs.n < 1 || fs.d < 1) throw std::invalid_argument("factor: n and d must be positive");
      if (f.contains("A_gens"))
        for (const auto& g : f.at("A_gens")) fs.A_gens.emplace_back(g.get<std::vector<int>>());
      fs.sigma = f.contains("sigma") ? Perm(f.at("sigma").get<std::vector<int>>()) : Perm::identity(fs.d);
      fs.twist = f.contains("twist") ? f.at("twist").get<int>() : 0;
      if (fs.twist != 0 && fs.twist != 1) throw std::invalid_argument("factor: twist must be 0 or 1");
      spec.factors.push_back(std::move(fs));
    }
    if (spec.factors.empty()) throw std::invalid_argument("spec: at least one factor required");
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("spec: ") + e.what());
  }
}

nlohmann::json GroupSpec::to_json() const {
  using nlohmann::json;
  json fs = json::array();
  for (const FactorSpec& f : factors) {
    json gens = json::array();
    for (const Perm& g : f.A_gens) gens.push_back(g.images());
    fs.push_back({{"n", f.n}, {"d", f.d}, {"A_gens", gens}, {"sigma", f.sigma.images()}, {"twist", f.twist}});
  }
  return {{"factors", fs}};
}

std::vector<size_t> FixedStructure::orbit_action(const Perm& a) const {
  std::vector<size_t> out(orbits.size());
  for (size_t o = 0; o < orbits.size(); ++o) {
    const int global = factors[orbits[o].factor].offset + orbits[o].points.front();
    out[o] = orbit_of[a(global)];
  }
  return out;
}

FixedStructure analyze(const GroupSpec& spec) {
  if (spec.factors.empty()) throw std::invalid_argument("analyze: spec has no factors");
  FixedStructure fs;
  std::vector<Perm> af_gens;
  for (size_t f = 0; f < spec.factors.size(); ++f) {
    const FactorSpec& s = spec.factors[f];
    if (s.sigma.degree() != s.d) throw std::invalid_argument("analyze: sigma must act on d points");
    for (const Perm& g : s.A_gens)
      if (g.degree() != s.d) throw std::invalid_argument("analyze: A generator must act on d points");
    FactorStructure st;
    st.spec = s;
    st.A = PermGroup(s.d, s.A_gens);
    const Perm sinv = s.sigma.inverse();
    for (const Perm& g : st.A.generators())
      if (!st.A.contains(s.sigma * g * sinv))
        throw std::invalid_argument("analyze: sigma " + s.sigma.to_string() + " does not normalise A");
    st.AF = st.A.centralizer_of(s.sigma);
    st.offset = fs.total_points;
    for (const auto& cyc : s.sigma.cycles()) {
      OrbitInfo o;
      o.factor = f;
      o.points = cyc;
      o.n = s.n;
      o.length = static_cast<int>(cyc.size());
      o.type = (s.twist * o.length) % 2 == 1 ? TorusType::Unitary : TorusType::Linear;
      st.orbit_ids.push_back(fs.orbits.size());
      fs.orbits.push_back(std::move(o));
    }
    fs.total_points += s.d;
    fs.factors.push_back(std::move(st));
  }
  fs.orbit_of.assign(fs.total_points, 0);
  for (size_t o = 0; o < fs.orbits.size(); ++o)
    for (int p : fs.orbits[o].points) fs.orbit_of[fs.factors[fs.orbits[o].factor].offset + p] = o;
  for (const FactorStructure& st : fs.factors)
    for (const Perm& g : st.AF.generators()) {
      std::vector<int> img(fs.total_points);
      for (int x = 0; x < fs.total_points; ++x) img[x] = x;
      for (int x = 0; x < st.spec.d; ++x) img[st.offset + x] = st.offset + g(x);
      af_gens.emplace_back(std::move(img));
    }
  fs.AF = PermGroup(fs.total_points, std::move(af_gens));
  if (fs.orbits.size() == 1) {
    fs.WF = GroupDescriptor::symmetric(fs.orbits.front().n);
  } else {
    std::vector<GroupDescriptor> parts;
    for (const OrbitInfo& o : fs.orbits) parts.push_back(GroupDescriptor::symmetric(o.n));
    fs.WF = GroupDescriptor::product(std::move(parts));
  }
  return fs;
}

QPoly order_polynomial(const FixedStructure& fs) {
  QPoly p(static_cast<long>(fs.AF.order()));
  for (const OrbitInfo& o : fs.orbits)
    p *= (o.type == TorusType::Linear ? gl_order(o.n) : gu_order(o.n)).substitute_power(o.length);
  return p;
}

GroupSpec levi_normalizer(int n, const std::vector<int>& parts, int twist, const std::map<int, Perm>& sigma) {
  int total = 0;
  std::map<int, int> count;
  for (int p : parts) {
    if (p <= 0) throw std::invalid_argument("levi_normalizer: parts must be positive");
    total += p;
    ++count[p];
  }
  if (total != n) throw std::invalid_argument("levi_normalizer: parts do not sum to n");
  GroupSpec spec;
  for (auto [m, d] : count) {
    FactorSpec f;
    f.n = m;
    f.d = d;
    for (int i = 0; i + 1 < d; ++i) f.A_gens.push_back(Perm::from_cycles(d, {{i, i + 1}}));
    auto it = sigma.find(m);
    f.sigma = it == sigma.end() ? Perm::identity(d) : it->second;
    if (f.sigma.degree() != d) throw std::invalid_argument("levi_normalizer: sigma has wrong degree");
    f.twist = twist;
    spec.factors.push_back(std::move(f));
  }
  return spec;
}

GroupDescriptor weyl_group_with_top(const FixedStructure& fs) {
  std::vector<GroupDescriptor> items;
  for (const FactorStructure& st : fs.factors) {
    if (st.AF.order() == 1) {
      for (size_t o : st.orbit_ids) items.push_back(GroupDescriptor::symmetric(fs.orbits[o].n));
      continue;
    }
    std::vector<int> blocks(st.spec.d);
    for (size_t k = 0; k < st.orbit_ids.size(); ++k)
      for (int p : fs.orbits[st.orbit_ids[k]].points) blocks[p] = static_cast<int>(k);
    items.push_back(GroupDescriptor::wreath(GroupDescriptor::symmetric(st.spec.n),
                                            static_cast<int>(st.orbit_ids.size()), st.AF.generators(),
                                            std::move(blocks)));
  }
  return items.size() == 1 ? items.front() : GroupDescriptor::product(std::move(items));
}

Perm FixedPointModel::embed(const std::vector<Perm>& w) const {
  if (static_cast<int>(w.size()) != d) throw std::invalid_argument("embed: tuple length mismatch");
  std::vector<int> img(orbits.size() * n);
  for (size_t k = 0; k < orbits.size(); ++k) {
    const Perm& x = w[orbits[k].front()];
    for (int i : orbits[k])
      if (w[i] != x) throw std::invalid_argument("embed: tuple not constant on orbits");
    for (int p = 0; p < n; ++p) img[k * n + p] = static_cast<int>(k) * n + x(p);
  }
  return Perm(std::move(img));
}

std::vector<Perm> FixedPointModel::expand(const Perm& g) const {
  std::vector<Perm> out(d);
  for (int i = 0; i < d; ++i) {
    const int k = orbit_of[i];
    std::vector<int> img(n);
    for (int p = 0; p < n; ++p) img[p] = g(k * n + p) - k * n;
    out[i] = Perm(std::move(img));
  }
  return out;
}

Perm FixedPointModel::lift_coordinate_perm(const Perm& c) const {
  std::vector<int> img(orbits.size() * n);
  for (size_t k = 0; k < orbits.size(); ++k) {
    const int target = orbit_of[c(orbits[k].front())];
    for (int i : orbits[k])
      if (orbit_of[c(i)] != target) throw std::invalid_argument("lift: permutation does not respect the orbits");
    for (int p = 0; p < n; ++p) img[k * n + p] = target * n + p;
  }
  return Perm(std::move(img));
}

FixedPointModel fixed_point_model(int n, int d, const Perm& a) {
  if (a.degree() != d) throw std::invalid_argument("fixed_point_model: a must act on d points");
  FixedPointModel m;
  m.n = n;
  m.d = d;
  m.orbit_of.assign(d, 0);
  for (auto cyc : a.cycles()) {
    std::sort(cyc.begin(), cyc.end());
    for (int i : cyc) m.orbit_of[i] = static_cast<int>(m.orbits.size());
    m.orbits.push_back(std::move(cyc));
  }
  const int r = static_cast<int>(m.orbits.size());
  std::vector<Perm> gens;
  for (int k = 0; k < r; ++k) {
    std::vector<int> pts;
    for (int p = 0; p < n; ++p) pts.push_back(k * n + p);
    m.blocks.push_back(pts);
    for (int p = 0; p + 1 < n; ++p) gens.push_back(Perm::from_cycles(r * n, {{k * n + p, k * n + p + 1}}));
  }
  m.group = PermGroup(r * n, std::move(gens));
  return m;
}

}  // namespace wreathchar
