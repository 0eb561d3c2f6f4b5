#include "wreathchar/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace wreathchar {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || x >= static_cast<int>(img_.size()) || seen[x])
      throw std::invalid_argument("Perm: images do not form a bijection");
    seen[x] = 1;
  }
}

Perm Perm::identity(int degree) {
  Perm p;
  p.img_.resize(degree);
  std::iota(p.img_.begin(), p.img_.end(), 0);
  return p;
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);
  for (const auto& c : cycles) {
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || c[i] >= degree || used[c[i]])
        throw std::invalid_argument("Perm::from_cycles: bad or repeated point");
      used[c[i]] = 1;
      img[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("Perm: degree mismatch in product");
  Perm r;
  r.img_.resize(img_.size());
  for (size_t x = 0; x < img_.size(); ++x) r.img_[x] = img_[rhs.img_[x]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (size_t x = 0; x < img_.size(); ++x) r.img_[img_[x]] = static_cast<int>(x);
  return r;
}

Perm Perm::pow(long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Perm acc = identity(degree());
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Perm::is_identity() const {
  for (size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != static_cast<int>(x)) return false;
  return true;
}

long Perm::order() const {
  long o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, static_cast<long>(c.size()));
  return o;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (size_t s = 0; s < img_.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    for (int x = static_cast<int>(s); !seen[x]; x = img_[x]) {
      seen[x] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

CycleType Perm::cycle_type() const {
  std::vector<int> lens;
  for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
  return Partition::from_unsorted(std::move(lens));
}

Perm Perm::restrict_to(const std::vector<int>& points) const {
  std::unordered_map<int, int> pos;
  for (size_t i = 0; i < points.size(); ++i) pos.emplace(points[i], static_cast<int>(i));
  std::vector<int> img(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    auto it = pos.find(img_[points[i]]);
    if (it == pos.end()) throw std::invalid_argument("Perm::restrict_to: point set not invariant");
    img[i] = it->second;
  }
  return Perm(std::move(img));
}

std::string Perm::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < img_.size(); ++i) os << (i ? "," : "") << img_[i];
  os << ']';
  return os.str();
}

size_t PermHash::operator()(const Perm& p) const noexcept {
  size_t h = 1469598103934665603ull;
  for (int x : p.images()) h = (h ^ static_cast<size_t>(x)) * 1099511628211ull;
  return h;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators, size_t cap)
    : degree_(degree) {
  for (auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("PermGroup: generator degree mismatch");
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> queue;
  const Perm id = Perm::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    const Perm x = std::move(queue.front());
    queue.pop_front();
    for (const Perm& g : generators_) {
      Perm y = g * x;
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw CapExceeded("group order exceeds element cap " + std::to_string(cap));
        queue.push_back(std::move(y));
      }
    }
  }
  elements_.assign(seen.begin(), seen.end());
  std::sort(elements_.begin(), elements_.end());
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elements) {
  PermGroup g;
  g.degree_ = degree;
  std::sort(elements.begin(), elements.end());
  g.generators_ = small_generating_set(degree, elements);
  g.elements_ = std::move(elements);
  return g;
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

size_t PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p)
    throw std::invalid_argument("PermGroup::index_of: " + p.to_string() + " not in group");
  return static_cast<size_t>(it - elements_.begin());
}

bool PermGroup::is_abelian() const {
  for (size_t i = 0; i < generators_.size(); ++i)
    for (size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
  return true;
}

PermGroup PermGroup::subgroup_where(const std::function<bool(const Perm&)>& keep) const {
  std::vector<Perm> kept;
  for (const Perm& g : elements_)
    if (keep(g)) kept.push_back(g);
  return from_elements(degree_, std::move(kept));
}

std::vector<Perm> PermGroup::left_transversal(const PermGroup& sub) const {
  if (order() % sub.order() != 0)
    throw std::invalid_argument("left_transversal: not a subgroup");
  std::vector<char> covered(order(), 0);
  std::vector<Perm> reps;
  for (size_t i = 0; i < elements_.size(); ++i) {
    if (covered[i]) continue;
    reps.push_back(elements_[i]);
    for (const Perm& h : sub.elements()) covered[index_of(elements_[i] * h)] = 1;
  }
  return reps;
}

PermGroup PermGroup::centralizer_of(const Perm& s) const {
  return subgroup_where([&](const Perm& g) { return g * s == s * g; });
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<int> label(degree_, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < degree_; ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> orbit{s};
    label[s] = static_cast<int>(out.size());
    for (size_t k = 0; k < orbit.size(); ++k)
      for (const Perm& g : generators_) {
        const int y = g(orbit[k]);
        if (label[y] < 0) {
          label[y] = label[s];
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<Perm> small_generating_set(int degree, const std::vector<Perm>& elements) {
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> span{Perm::identity(degree)};
  for (const Perm& g : elements) {
    if (span.count(g)) continue;
    gens.push_back(g);
    PermGroup closure(degree, gens);
    span = std::unordered_set<Perm, PermHash>(closure.elements().begin(), closure.elements().end());
    if (span.size() == elements.size()) break;
  }
  return gens;
}

IrrLabel IrrLabel::of_partition(Partition p) {
  IrrLabel l;
  l.kind = Kind::Partition;
  l.partition = std::move(p);
  return l;
}

IrrLabel IrrLabel::tuple(std::vector<IrrLabel> parts) {
  IrrLabel l;
  l.kind = Kind::Tuple;
  l.parts = std::move(parts);
  return l;
}

IrrLabel IrrLabel::abelian(std::vector<int> exponents) {
  IrrLabel l;
  l.kind = Kind::Abelian;
  l.exponents = std::move(exponents);
  return l;
}

IrrLabel IrrLabel::clifford(std::vector<IrrLabel> chi, IrrLabel xi) {
  IrrLabel l;
  l.kind = Kind::Clifford;
  l.parts = std::move(chi);
  l.xi.push_back(std::move(xi));
  return l;
}

namespace {

std::string join_labels(const std::vector<IrrLabel>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s;
}

}  // namespace

std::string IrrLabel::to_string() const {
  switch (kind) {
    case Kind::Partition:
      return partition.to_string();
    case Kind::Tuple:
      return parts.empty() ? "1" : "<" + join_labels(parts) + ">";
    case Kind::Abelian: {
      std::string s = "z(";
      for (size_t i = 0; i < exponents.size(); ++i) s += (i ? "," : "") + std::to_string(exponents[i]);
      return s + ")";
    }
    case Kind::Clifford:
      return "{<" + join_labels(parts) + ">|" + xi.front().to_string() + "}";
  }
  return {};
}

int compare(const IrrLabel& a, const IrrLabel& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (a.partition != b.partition) return a.partition < b.partition ? -1 : 1;
  if (a.exponents != b.exponents) return a.exponents < b.exponents ? -1 : 1;
  auto cmp_list = [](const std::vector<IrrLabel>& x, const std::vector<IrrLabel>& y) {
    for (size_t i = 0; i < std::min(x.size(), y.size()); ++i)
      if (int c = compare(x[i], y[i])) return c;
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    return 0;
  };
  if (int c = cmp_list(a.parts, b.parts)) return c;
  return cmp_list(a.xi, b.xi);
}

namespace {

std::vector<int> union_points(const std::vector<std::vector<int>>& orbits, const std::vector<size_t>& pick) {
  std::vector<int> pts;
  for (size_t i : pick) pts.insert(pts.end(), orbits[i].begin(), orbits[i].end());
  std::sort(pts.begin(), pts.end());
  return pts;
}

size_t projection_order(const PermGroup& g, const std::vector<int>& pts) {
  std::unordered_set<Perm, PermHash> img;
  for (const Perm& x : g.elements()) img.insert(x.restrict_to(pts));
  return img.size();
}

}  // namespace

TopCharacters::TopCharacters(const PermGroup& group) {
  const auto orbits = group.orbits();
  std::vector<size_t> remaining;
  for (size_t i = 0; i < orbits.size(); ++i)
    if (projection_order(group, orbits[i]) > 1) remaining.push_back(i);

  // Split off the smallest orbit group containing the first remaining orbit
  // whose projection is a direct factor.
  std::vector<std::vector<int>> factors;
  while (!remaining.empty()) {
    const size_t rest = remaining.size() - 1;
    std::vector<size_t> chosen;
    bool found = false;
    for (size_t extra = 0; extra <= rest && !found; ++extra) {
      std::vector<char> mask(rest, 0);
      std::fill(mask.begin(), mask.begin() + extra, 1);
      do {
        std::vector<size_t> pick{remaining[0]}, other;
        for (size_t j = 0; j < rest; ++j) (mask[j] ? pick : other).push_back(remaining[j + 1]);
        const auto pts = union_points(orbits, pick);
        const size_t inside = projection_order(group, pts);
        const size_t outside = other.empty() ? 1 : projection_order(group, union_points(orbits, other));
        if (inside * outside == group.order() || other.empty()) {
          chosen = pick;
          found = true;
          break;
        }
      } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    factors.push_back(union_points(orbits, chosen));
    std::vector<size_t> next;
    for (size_t i : remaining)
      if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) next.push_back(i);
    remaining = std::move(next);
  }
  // The search above only tests the split against the union of the rest; the
  // product of all factor orders confirms the whole decomposition.
  {
    size_t prod = 1;
    for (const auto& pts : factors) prod *= projection_order(group, pts);
    if (prod != group.order())
      throw std::domain_error("TopCharacters: group is not a direct product over its orbits");
  }

  for (const auto& pts : factors) {
    Component c;
    c.points = pts;
    std::unordered_set<Perm, PermHash> img;
    for (const Perm& x : group.elements()) img.insert(x.restrict_to(pts));
    c.local = PermGroup::from_elements(static_cast<int>(pts.size()),
                                       std::vector<Perm>(img.begin(), img.end()));
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), pts.size());
    const bool transitive = c.local.orbits().size() == 1;
    if (transitive && fact == static_cast<unsigned long>(c.local.order())) {
      c.symmetric = true;
      c.table.emplace(static_cast<int>(pts.size()));
      radix_.push_back(c.table->partitions().size());
    } else if (c.local.is_abelian()) {
      const auto& gens = c.local.generators();
      std::vector<long> ords;
      for (const Perm& g : gens) {
        ords.push_back(g.order());
        c.exponent = std::lcm(c.exponent, g.order());
      }
      const size_t m = c.local.order();
      const size_t id_index = c.local.index_of(Perm::identity(static_cast<int>(pts.size())));
      size_t tuples = 1;
      for (long o : ords) tuples *= static_cast<size_t>(o);
      for (size_t t = 0; t < tuples; ++t) {
        std::vector<int> k(gens.size());
        for (size_t i = gens.size(), r = t; i-- > 0;) {
          k[i] = static_cast<int>(r % ords[i]);
          r /= ords[i];
        }
        // Propagate the candidate values along the Cayley graph and keep the
        // tuple only when every relation is respected.
        std::vector<long> val(m, -1);
        val[id_index] = 0;
        std::vector<size_t> queue{id_index};
        bool ok = true;
        for (size_t qi = 0; qi < queue.size() && ok; ++qi) {
          const Perm& x = c.local.elements()[queue[qi]];
          for (size_t i = 0; i < gens.size() && ok; ++i) {
            const size_t y = c.local.index_of(gens[i] * x);
            const long v = (val[queue[qi]] + k[i] * (c.exponent / ords[i])) % c.exponent;
            if (val[y] < 0) {
              val[y] = v;
              queue.push_back(y);
            } else if (val[y] != v) {
              ok = false;
            }
          }
        }
        if (ok) {
          c.exps.push_back(std::move(k));
          c.values.push_back(std::move(val));
        }
      }
      if (c.values.size() != m)
        throw std::logic_error("TopCharacters: abelian character count mismatch");
      radix_.push_back(m);
    } else {
      throw std::domain_error(
          "TopCharacters: unsupported top group (neither symmetric on an orbit nor abelian)");
    }
    components_.push_back(std::move(c));
  }

  for (size_t r : radix_) count_ *= r;
  for (size_t i = 0; i < count_; ++i) {
    const auto d = digits(i);
    std::vector<IrrLabel> parts;
    for (size_t j = 0; j < components_.size(); ++j) {
      const Component& c = components_[j];
      parts.push_back(c.symmetric ? IrrLabel::of_partition(c.table->partitions()[d[j]])
                                  : IrrLabel::abelian(c.exps[d[j]]));
    }
    labels_.push_back(parts.size() == 1 ? parts.front() : IrrLabel::tuple(std::move(parts)));
  }
}

std::vector<size_t> TopCharacters::digits(size_t i) const {
  std::vector<size_t> d(radix_.size());
  for (size_t j = radix_.size(); j-- > 0;) {
    d[j] = i % radix_[j];
    i /= radix_[j];
  }
  return d;
}

size_t TopCharacters::index_of(const IrrLabel& label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw std::invalid_argument("TopCharacters: unknown label " + label.to_string());
}

CycloNum TopCharacters::value(size_t i, const Perm& a) const {
  const auto d = digits(i);
  CycloNum v(1);
  for (size_t j = 0; j < components_.size(); ++j) {
    const Component& c = components_[j];
    const Perm r = a.restrict_to(c.points);
    if (c.symmetric) {
      v *= CycloNum(c.table->value(d[j], r.cycle_type()));
    } else {
      v *= CycloNum::root_of_unity(c.values[d[j]][c.local.index_of(r)], c.exponent);
    }
  }
  return v;
}

long TopCharacters::degree(size_t i) const {
  const auto d = digits(i);
  long deg = 1;
  for (size_t j = 0; j < components_.size(); ++j)
    if (components_[j].symmetric) deg *= components_[j].table->degree(d[j]);
  return deg;
}

}  // namespace wreathchar
