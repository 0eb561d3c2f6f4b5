#include "wreathchar/permwreath.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>

namespace wreathchar {

GroupDescriptor GroupDescriptor::symmetric(int n) {
  if (n < 0) throw std::invalid_argument("symmetric: negative degree");
  GroupDescriptor d;
  d.kind = Kind::Symmetric;
  d.n = n;
  return d;
}

GroupDescriptor GroupDescriptor::product(std::vector<GroupDescriptor> factors) {
  GroupDescriptor d;
  d.kind = Kind::Product;
  d.children = std::move(factors);
  return d;
}

GroupDescriptor GroupDescriptor::wreath(GroupDescriptor base, int deg, std::vector<Perm> top_gens,
                                        std::vector<int> blocks) {
  if (deg < 1) throw std::invalid_argument("wreath: degree must be positive");
  GroupDescriptor d;
  d.kind = Kind::Wreath;
  d.children.push_back(std::move(base));
  d.deg = deg;
  d.top_points = blocks.empty() ? deg : static_cast<int>(blocks.size());
  for (const Perm& g : top_gens)
    if (g.degree() != d.top_points)
      throw std::invalid_argument("wreath: top generator " + g.to_string() + " has wrong degree");
  for (int b : blocks)
    if (b < 0 || b >= deg) throw std::invalid_argument("wreath: block index out of range");
  d.top_gens = std::move(top_gens);
  d.blocks = std::move(blocks);
  return d;
}

nlohmann::json GroupDescriptor::to_json() const {
  using nlohmann::json;
  switch (kind) {
    case Kind::Symmetric:
      return json{{"sym", n}};
    case Kind::Product: {
      json arr = json::array();
      for (const auto& c : children) arr.push_back(c.to_json());
      return json{{"prod", arr}};
    }
    case Kind::Wreath: {
      json gens = json::array();
      for (const Perm& g : top_gens) gens.push_back(g.images());
      json w{{"base", base().to_json()}, {"deg", deg}, {"top_gens", gens}};
      if (!blocks.empty()) w["blocks"] = blocks;
      return json{{"wreath", w}};
    }
  }
  return {};
}

GroupDescriptor GroupDescriptor::from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || j.size() != 1)
      throw std::invalid_argument("group descriptor must be an object with one key");
    if (j.contains("sym")) return symmetric(j.at("sym").get<int>());
    if (j.contains("prod")) {
      std::vector<GroupDescriptor> fs;
      for (const auto& f : j.at("prod")) fs.push_back(from_json(f));
      return product(std::move(fs));
    }
    if (j.contains("wreath")) {
      const auto& w = j.at("wreath");
      std::vector<Perm> gens;
      for (const auto& g : w.at("top_gens")) gens.emplace_back(g.get<std::vector<int>>());
      std::vector<int> blocks;
      if (w.contains("blocks")) blocks = w.at("blocks").get<std::vector<int>>();
      return wreath(from_json(w.at("base")), w.at("deg").get<int>(), std::move(gens),
                    std::move(blocks));
    }
    throw std::invalid_argument("unknown group descriptor key");
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("group descriptor: ") + e.what());
  }
}

namespace {

// Induced permutation of the coordinates; identity blocks when `blocks` is empty.
Perm coordinate_perm(const Perm& a, const std::vector<int>& blocks, int deg) {
  if (blocks.empty()) return a;
  std::vector<int> img(deg, -1);
  for (size_t p = 0; p < blocks.size(); ++p) {
    const int from = blocks[p], to = blocks[a(static_cast<int>(p))];
    if (img[from] >= 0 && img[from] != to)
      throw std::invalid_argument("top element " + a.to_string() + " does not respect the blocks");
    img[from] = to;
  }
  for (int i = 0; i < deg; ++i)
    if (img[i] < 0) img[i] = i;
  return Perm(std::move(img));
}

Perm slice(const Perm& g, int off, int len) {
  std::vector<int> img(len);
  for (int x = 0; x < len; ++x) {
    img[x] = g(off + x) - off;
    if (img[x] < 0 || img[x] >= len) throw std::invalid_argument("element does not preserve a factor");
  }
  return Perm(std::move(img));
}

Perm embed_at(const Perm& local, int off, int total) {
  std::vector<int> img(total);
  for (int x = 0; x < total; ++x) img[x] = x;
  for (int x = 0; x < local.degree(); ++x) img[off + x] = off + local(x);
  return Perm(std::move(img));
}

struct CliffordData {
  std::vector<IrrLabel> chi;
  PermGroup stabilizer;
  std::optional<TopCharacters> chars;
  size_t xi = 0;
  std::vector<Perm> transversal;
  std::vector<Perm> transversal_inv;
  std::vector<Perm> lifted;
  std::vector<Perm> lifted_inv;
};

}  // namespace

struct Group::Impl {
  GroupDescriptor desc;
  size_t cap = kDefaultElementCap;
  int degree = 0;
  std::vector<Perm> gens;

  std::optional<SymmetricCharacterTable> table;

  std::vector<Group> factors;
  std::vector<int> offsets;

  int nb = 0;
  int deg = 0;
  int m = 0;
  bool appended = false;
  std::vector<int> blocks;  // empty unless appended
  std::optional<PermGroup> top;

  std::once_flag elements_once;
  std::optional<PermGroup> elements;
  std::once_flag labels_once;
  std::vector<IrrLabel> labels;
  std::mutex mu;
  std::map<std::string, std::shared_ptr<const CliffordData>> clifford;

  Perm top_of(const Perm& g) const {
    if (appended) return slice(g, deg * nb, m);
    std::vector<int> img(deg);
    for (int i = 0; i < deg; ++i) img[i] = g(i * nb) / nb;
    return Perm(std::move(img));
  }

  std::shared_ptr<const CliffordData> clifford_data(const IrrLabel& label);
};

Group::Group(const GroupDescriptor& d, size_t cap) : impl_(std::make_shared<Impl>()) {
  Impl& s = *impl_;
  s.desc = d;
  s.cap = cap;
  switch (d.kind) {
    case GroupDescriptor::Kind::Symmetric:
      s.degree = d.n;
      for (int i = 0; i + 1 < d.n; ++i) s.gens.push_back(Perm::from_cycles(d.n, {{i, i + 1}}));
      s.table.emplace(d.n);
      break;
    case GroupDescriptor::Kind::Product: {
      for (const auto& c : d.children) {
        s.offsets.push_back(s.degree);
        s.factors.emplace_back(c, cap);
        s.degree += s.factors.back().degree();
      }
      for (size_t f = 0; f < s.factors.size(); ++f)
        for (const Perm& g : s.factors[f].generators())
          s.gens.push_back(embed_at(g, s.offsets[f], s.degree));
      break;
    }
    case GroupDescriptor::Kind::Wreath: {
      if (d.children.size() != 1) throw std::invalid_argument("wreath: exactly one base required");
      s.factors.emplace_back(d.base(), cap);
      s.nb = s.factors[0].degree();
      s.deg = d.deg;
      s.m = d.top_points;
      bool identity_blocks = d.blocks.empty();
      if (!identity_blocks && s.m == s.deg) {
        identity_blocks = true;
        for (int p = 0; p < s.m; ++p) identity_blocks = identity_blocks && d.blocks[p] == p;
      }
      s.appended = !identity_blocks || s.nb == 0;
      if (s.appended) {
        s.blocks = d.blocks;
        if (s.blocks.empty())
          for (int p = 0; p < s.m; ++p) s.blocks.push_back(p);
      }
      s.top.emplace(s.m, d.top_gens, cap);
      for (const Perm& a : s.top->generators()) coordinate_perm(a, s.blocks, s.deg);
      s.degree = s.deg * s.nb + (s.appended ? s.m : 0);
      for (int i = 0; i < s.deg; ++i)
        for (const Perm& b : s.factors[0].generators())
          s.gens.push_back(embed_at(b, i * s.nb, s.degree));
      for (const Perm& a : s.top->generators()) s.gens.push_back(lift_top(a));
      break;
    }
  }
}

const GroupDescriptor& Group::descriptor() const { return impl_->desc; }
int Group::degree() const { return impl_->degree; }
const std::vector<Perm>& Group::generators() const { return impl_->gens; }

mpz_class Group::order() const {
  const Impl& s = *impl_;
  switch (s.desc.kind) {
    case GroupDescriptor::Kind::Symmetric: {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(s.desc.n));
      return f;
    }
    case GroupDescriptor::Kind::Product: {
      mpz_class o = 1;
      for (const Group& f : s.factors) o *= f.order();
      return o;
    }
    case GroupDescriptor::Kind::Wreath: {
      mpz_class o;
      mpz_pow_ui(o.get_mpz_t(), s.factors[0].order().get_mpz_t(), static_cast<unsigned long>(s.deg));
      return o * static_cast<unsigned long>(s.top->order());
    }
  }
  return 0;
}

bool Group::contains(const Perm& g) const {
  const Impl& s = *impl_;
  if (g.degree() != s.degree) return false;
  try {
    switch (s.desc.kind) {
      case GroupDescriptor::Kind::Symmetric:
        return true;
      case GroupDescriptor::Kind::Product:
        for (size_t f = 0; f < s.factors.size(); ++f)
          if (!s.factors[f].contains(slice(g, s.offsets[f], s.factors[f].degree()))) return false;
        return true;
      case GroupDescriptor::Kind::Wreath: {
        const Perm a = s.top_of(g);
        if (s.appended && !s.top->contains(a)) return false;
        const Perm abar = s.appended ? coordinate_perm(a, s.blocks, s.deg) : a;
        if (!s.appended && !s.top->contains(abar)) return false;
        for (int i = 0; i < s.deg; ++i) {
          std::vector<int> img(s.nb);
          for (int p = 0; p < s.nb; ++p) {
            const int y = g(i * s.nb + p);
            if (y / s.nb != abar(i) || y >= s.deg * s.nb) return false;
            img[p] = y - abar(i) * s.nb;
          }
          if (!s.factors[0].contains(Perm(std::move(img)))) return false;
        }
        return true;
      }
    }
  } catch (const std::invalid_argument&) {
    return false;
  }
  return false;
}

const PermGroup& Group::elements() const {
  Impl& s = *impl_;
  std::call_once(s.elements_once, [&] {
    if (order() > static_cast<unsigned long>(s.cap))
      throw CapExceeded("group order " + order().get_str() + " exceeds element cap " +
                        std::to_string(s.cap));
    s.elements.emplace(s.degree, s.gens, s.cap);
  });
  return *s.elements;
}

const Group& Group::base() const {
  if (impl_->desc.kind != GroupDescriptor::Kind::Wreath) throw std::logic_error("base(): not a wreath");
  return impl_->factors[0];
}

const PermGroup& Group::top() const {
  if (impl_->desc.kind != GroupDescriptor::Kind::Wreath) throw std::logic_error("top(): not a wreath");
  return *impl_->top;
}

const std::vector<Group>& Group::factors() const { return impl_->factors; }
int Group::factor_offset(size_t i) const { return impl_->offsets.at(i); }

Perm Group::coordinate_action(const Perm& a) const {
  return coordinate_perm(a, impl_->blocks, impl_->deg);
}

WreathElement Group::decompose(const Perm& g) const {
  const Impl& s = *impl_;
  if (s.desc.kind != GroupDescriptor::Kind::Wreath) throw std::logic_error("decompose(): not a wreath");
  WreathElement e;
  e.top = s.top_of(g);
  const Perm abar = coordinate_action(e.top);
  e.base.resize(s.deg);
  for (int i = 0; i < s.deg; ++i) {
    const int j = abar(i);
    std::vector<int> img(s.nb);
    for (int p = 0; p < s.nb; ++p) img[p] = g(i * s.nb + p) - j * s.nb;
    e.base[j] = Perm(std::move(img));
  }
  return e;
}

Perm Group::compose(const WreathElement& e) const {
  const Impl& s = *impl_;
  if (s.desc.kind != GroupDescriptor::Kind::Wreath) throw std::logic_error("compose(): not a wreath");
  if (static_cast<int>(e.base.size()) != s.deg) throw std::invalid_argument("compose: base length mismatch");
  const Perm abar = coordinate_action(e.top);
  std::vector<int> img(s.degree);
  for (int i = 0; i < s.deg; ++i) {
    const int j = abar(i);
    for (int p = 0; p < s.nb; ++p) img[i * s.nb + p] = j * s.nb + e.base[j](p);
  }
  if (s.appended)
    for (int p = 0; p < s.m; ++p) img[s.deg * s.nb + p] = s.deg * s.nb + e.top(p);
  return Perm(std::move(img));
}

Perm Group::lift_top(const Perm& a) const {
  return compose({std::vector<Perm>(impl_->deg, Perm::identity(impl_->nb)), a});
}

const std::vector<IrrLabel>& Group::irr_labels() const {
  Impl& s = *impl_;
  std::call_once(s.labels_once, [&] {
    std::vector<IrrLabel> out;
    switch (s.desc.kind) {
      case GroupDescriptor::Kind::Symmetric:
        for (const Partition& p : s.table->partitions()) out.push_back(IrrLabel::of_partition(p));
        break;
      case GroupDescriptor::Kind::Product: {
        std::vector<std::vector<IrrLabel>> per;
        for (const Group& f : s.factors) per.push_back(f.irr_labels());
        std::vector<size_t> idx(per.size(), 0);
        while (true) {
          std::vector<IrrLabel> parts;
          for (size_t f = 0; f < per.size(); ++f) parts.push_back(per[f][idx[f]]);
          out.push_back(IrrLabel::tuple(std::move(parts)));
          size_t f = per.size();
          while (f > 0 && ++idx[f - 1] == per[f - 1].size()) idx[--f] = 0;
          if (f == 0) break;
        }
        break;
      }
      case GroupDescriptor::Kind::Wreath: {
        const auto& base_labels = s.factors[0].irr_labels();
        const size_t k = base_labels.size();
        std::vector<Perm> coord;
        for (const Perm& a : s.top->elements()) coord.push_back(coordinate_perm(a, s.blocks, s.deg));
        std::vector<size_t> t(s.deg, 0);
        while (true) {
          bool minimal = true;
          std::vector<size_t> moved(s.deg);
          for (const Perm& c : coord) {
            for (int i = 0; i < s.deg; ++i) moved[c(i)] = t[i];
            if (moved < t) {
              minimal = false;
              break;
            }
          }
          if (minimal) {
            std::vector<IrrLabel> chi;
            for (size_t x : t) chi.push_back(base_labels[x]);
            const PermGroup stab = stabilizer_of_label(*s.top, chi, s.blocks);
            const TopCharacters chars(stab);
            for (size_t xi = 0; xi < chars.count(); ++xi)
              out.push_back(IrrLabel::clifford(chi, chars.label(xi)));
          }
          int i = s.deg;
          while (i > 0 && ++t[i - 1] == k) t[--i] = 0;
          if (i == 0) break;
        }
        break;
      }
    }
    s.labels = std::move(out);
  });
  return s.labels;
}

std::shared_ptr<const CliffordData> Group::Impl::clifford_data(const IrrLabel& label) {
  if (label.kind != IrrLabel::Kind::Clifford || static_cast<int>(label.parts.size()) != deg)
    throw std::invalid_argument("label " + label.to_string() + " does not belong to this wreath product");
  const std::string key = label.to_string();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = clifford.find(key);
    if (it != clifford.end()) return it->second;
  }
  auto data = std::make_shared<CliffordData>();
  data->chi = label.parts;
  data->stabilizer = stabilizer_of_label(*top, data->chi, blocks);
  data->chars.emplace(data->stabilizer);
  data->xi = data->chars->index_of(label.xi.front());
  data->transversal = top->left_transversal(data->stabilizer);
  for (const Perm& t : data->transversal) {
    data->transversal_inv.push_back(t.inverse());
    // Same as Group::lift_top, without needing the owning Group.
    const Perm tbar = coordinate_perm(t, blocks, deg);
    std::vector<int> img(degree);
    for (int i = 0; i < deg; ++i)
      for (int p = 0; p < nb; ++p) img[i * nb + p] = tbar(i) * nb + p;
    if (appended)
      for (int p = 0; p < m; ++p) img[deg * nb + p] = deg * nb + t(p);
    data->lifted.emplace_back(img);
    data->lifted_inv.push_back(data->lifted.back().inverse());
  }
  std::lock_guard<std::mutex> lock(mu);
  return clifford.emplace(key, std::move(data)).first->second;
}

long Group::char_degree(const IrrLabel& label) const {
  const Impl& s = *impl_;
  switch (s.desc.kind) {
    case GroupDescriptor::Kind::Symmetric:
      if (label.kind != IrrLabel::Kind::Partition)
        throw std::invalid_argument("expected a partition label, got " + label.to_string());
      return s.table->degree(s.table->index_of(label.partition));
    case GroupDescriptor::Kind::Product: {
      if (label.kind != IrrLabel::Kind::Tuple || label.parts.size() != s.factors.size())
        throw std::invalid_argument("label " + label.to_string() + " does not match product");
      long d = 1;
      for (size_t f = 0; f < s.factors.size(); ++f) d *= s.factors[f].char_degree(label.parts[f]);
      return d;
    }
    case GroupDescriptor::Kind::Wreath: {
      auto data = impl_->clifford_data(label);
      long d = static_cast<long>(data->transversal.size()) * data->chars->degree(data->xi);
      for (const IrrLabel& c : data->chi) d *= s.factors[0].char_degree(c);
      return d;
    }
  }
  return 0;
}

CycloNum Group::char_value(const IrrLabel& label, const Perm& g) const {
  const Impl& s = *impl_;
  if (g.degree() != s.degree) throw std::invalid_argument("char_value: element has wrong degree");
  switch (s.desc.kind) {
    case GroupDescriptor::Kind::Symmetric:
      if (label.kind != IrrLabel::Kind::Partition)
        throw std::invalid_argument("expected a partition label, got " + label.to_string());
      return CycloNum(s.table->value(s.table->index_of(label.partition), g.cycle_type()));
    case GroupDescriptor::Kind::Product: {
      if (label.kind != IrrLabel::Kind::Tuple || label.parts.size() != s.factors.size())
        throw std::invalid_argument("label " + label.to_string() + " does not match product");
      CycloNum v(1);
      for (size_t f = 0; f < s.factors.size(); ++f) {
        v *= s.factors[f].char_value(label.parts[f], slice(g, s.offsets[f], s.factors[f].degree()));
        if (v.is_zero()) break;
      }
      return v;
    }
    case GroupDescriptor::Kind::Wreath: {
      auto data = impl_->clifford_data(label);
      const Perm a = s.top_of(g);
      CycloNum v;
      for (size_t t = 0; t < data->transversal.size(); ++t) {
        const Perm conj_a = data->transversal_inv[t] * a * data->transversal[t];
        if (!data->stabilizer.contains(conj_a)) continue;
        const WreathElement e = decompose(data->lifted_inv[t] * g * data->lifted[t]);
        v += canonical_extension_value(s.factors[0], data->chi, coordinate_action(e.top), e.base) *
             data->chars->value(data->xi, e.top);
      }
      return v;
    }
  }
  return {};
}

std::vector<Perm> enumerate_elements(const GroupDescriptor& d, size_t cap) {
  return Group(d, cap).elements().elements();
}

std::vector<IrrLabel> irr_labels(const GroupDescriptor& d) { return Group(d).irr_labels(); }

std::vector<Perm> FixedPointData::embed(const std::vector<Perm>& per_orbit) const {
  if (per_orbit.size() != orbits.size()) throw std::invalid_argument("embed: one element per orbit required");
  size_t d = 0;
  for (const auto& o : orbits) d += o.size();
  std::vector<Perm> out(d);
  for (size_t k = 0; k < orbits.size(); ++k)
    for (int i : orbits[k]) out[i] = per_orbit[k];
  return out;
}

FixedPointData fixed_point_subgroup(const GroupDescriptor& base, int d, const PermGroup& A) {
  if (A.degree() != d) throw std::invalid_argument("fixed_point_subgroup: A must act on d points");
  FixedPointData out;
  out.orbits = A.orbits();
  if (out.orbits.size() == 1) {
    out.descriptor = base;
  } else {
    out.descriptor = GroupDescriptor::product(std::vector<GroupDescriptor>(out.orbits.size(), base));
  }
  return out;
}

PermGroup stabilizer_of_label(const PermGroup& A, const std::vector<IrrLabel>& chi,
                              const std::vector<int>& blocks) {
  const int deg = static_cast<int>(chi.size());
  return A.subgroup_where([&](const Perm& a) {
    const Perm c = coordinate_perm(a, blocks, deg);
    for (int i = 0; i < deg; ++i)
      if (!(chi[c(i)] == chi[i])) return false;
    return true;
  });
}

CycloNum canonical_extension_value(const Group& base, const std::vector<IrrLabel>& chi,
                                   const Perm& a_bar, const std::vector<Perm>& h,
                                   const std::vector<int>& section) {
  const int deg = static_cast<int>(chi.size());
  if (a_bar.degree() != deg || static_cast<int>(h.size()) != deg)
    throw std::invalid_argument("canonical_extension_value: size mismatch");
  for (int i = 0; i < deg; ++i)
    if (!(chi[a_bar(i)] == chi[i]))
      throw std::invalid_argument("canonical_extension_value: " + a_bar.to_string() +
                                  " does not stabilise the label");
  CycloNum v(1);
  for (const auto& cycle : a_bar.cycles()) {
    int x = cycle.front();
    if (!section.empty()) {
      auto it = std::find_if(section.begin(), section.end(), [&](int p) {
        return std::find(cycle.begin(), cycle.end(), p) != cycle.end();
      });
      if (it == section.end()) throw std::invalid_argument("section misses an orbit");
      x = *it;
    }
    Perm prod = h[x];
    for (int y = a_bar(x); y != x; y = a_bar(y)) prod = h[y] * prod;
    v *= base.char_value(chi[x], prod);
    if (v.is_zero()) break;
  }
  return v;
}

CycloNum block_extension_value(const std::vector<std::vector<int>>& blocks,
                               const std::vector<Partition>& labels, const Perm& g) {
  if (blocks.size() != labels.size()) throw std::invalid_argument("block_extension_value: size mismatch");
  std::vector<int> block_of(g.degree(), -1), pos(g.degree(), -1);
  for (size_t b = 0; b < blocks.size(); ++b)
    for (size_t k = 0; k < blocks[b].size(); ++k) {
      block_of[blocks[b][k]] = static_cast<int>(b);
      pos[blocks[b][k]] = static_cast<int>(k);
    }
  auto image_block = [&](size_t b) {
    const int target = block_of[g(blocks[b].front())];
    if (target < 0 || blocks[target].size() != blocks[b].size())
      throw std::invalid_argument("block_extension_value: element does not permute the blocks");
    for (int p : blocks[b])
      if (block_of[g(p)] != target)
        throw std::invalid_argument("block_extension_value: element does not permute the blocks");
    return static_cast<size_t>(target);
  };
  std::vector<char> seen(blocks.size(), 0);
  long value = 1;
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (seen[b]) continue;
    int r = 0;
    for (size_t c = b; !seen[c]; c = image_block(c)) {
      seen[c] = 1;
      if (!(labels[c] == labels[b]))
        throw std::invalid_argument("block_extension_value: labels not invariant");
      ++r;
    }
    std::vector<int> img(blocks[b].size());
    for (size_t k = 0; k < blocks[b].size(); ++k) {
      int p = blocks[b][k];
      for (int step = 0; step < r; ++step) p = g(p);
      img[k] = pos[p];
    }
    value *= mn_character(labels[b], Perm(std::move(img)).cycle_type());
    if (value == 0) break;
  }
  return CycloNum(value);
}

}  // namespace wreathchar
