#include "wreathchar/cosetfun.hpp"

#include <stdexcept>

namespace wreathchar {

struct CosetContext::Data {
  PermGroup group;
  std::optional<Perm> ambient;
  std::vector<Perm> images;
  std::vector<size_t> phi;
  std::vector<PhiClass> classes;
  std::vector<size_t> class_of;
};

namespace {

void build_classes(const PermGroup& G, const std::vector<Perm>& images, std::vector<PhiClass>& classes,
                   std::vector<size_t>& class_of) {
  const auto& gens = G.generators();
  std::vector<Perm> inv_images;
  for (const Perm& p : images) inv_images.push_back(p.inverse());
  class_of.assign(G.order(), SIZE_MAX);
  for (size_t i = 0; i < G.order(); ++i) {
    if (class_of[i] != SIZE_MAX) continue;
    const size_t id = classes.size();
    std::vector<size_t> orbit{i};
    class_of[i] = id;
    for (size_t k = 0; k < orbit.size(); ++k) {
      const Perm& g = G.elements()[orbit[k]];
      for (size_t j = 0; j < gens.size(); ++j) {
        const size_t y = G.index_of(gens[j] * g * inv_images[j]);
        if (class_of[y] == SIZE_MAX) {
          class_of[y] = id;
          orbit.push_back(y);
        }
      }
    }
    classes.push_back({G.elements()[i], orbit.size()});
  }
}

std::vector<Perm> perms_from_json(const nlohmann::json& j) {
  std::vector<Perm> out;
  for (const auto& p : j) out.emplace_back(p.get<std::vector<int>>());
  return out;
}

}  // namespace

CosetContext CosetContext::conjugation(PermGroup G, Perm s) {
  if (s.degree() != G.degree()) throw std::invalid_argument("coset: ambient element has wrong degree");
  auto d = std::make_shared<Data>();
  const Perm s_inv = s.inverse();
  for (const Perm& g : G.generators()) {
    Perm img = s * g * s_inv;
    if (!G.contains(img))
      throw std::invalid_argument("coset: " + s.to_string() + " does not normalise the group");
    d->images.push_back(std::move(img));
  }
  d->phi.resize(G.order());
  for (size_t i = 0; i < G.order(); ++i) d->phi[i] = G.index_of(s * G.elements()[i] * s_inv);
  d->ambient = std::move(s);
  d->group = std::move(G);
  build_classes(d->group, d->images, d->classes, d->class_of);
  CosetContext c;
  c.d_ = std::move(d);
  return c;
}

CosetContext CosetContext::from_generator_images(PermGroup G, std::vector<Perm> images) {
  const auto& gens = G.generators();
  if (images.size() != gens.size()) throw std::invalid_argument("coset: one image per generator required");
  for (const Perm& p : images)
    if (!G.contains(p)) throw std::invalid_argument("coset: generator image outside the group");
  auto d = std::make_shared<Data>();
  const size_t n = G.order();
  d->phi.assign(n, SIZE_MAX);
  const size_t id = G.index_of(Perm::identity(G.degree()));
  d->phi[id] = id;
  std::vector<size_t> queue{id};
  for (size_t k = 0; k < queue.size(); ++k) {
    const Perm& x = G.elements()[queue[k]];
    const Perm& fx = G.elements()[d->phi[queue[k]]];
    for (size_t j = 0; j < gens.size(); ++j) {
      const size_t y = G.index_of(gens[j] * x);
      const size_t fy = G.index_of(images[j] * fx);
      if (d->phi[y] == SIZE_MAX) {
        d->phi[y] = fy;
        queue.push_back(y);
      } else if (d->phi[y] != fy) {
        throw std::invalid_argument("coset: generator images do not define a homomorphism");
      }
    }
  }
  std::vector<char> hit(n, 0);
  for (size_t v : d->phi) {
    if (v == SIZE_MAX || hit[v]) throw std::invalid_argument("coset: generator images do not define an automorphism");
    hit[v] = 1;
  }
  d->images = std::move(images);
  d->group = std::move(G);
  build_classes(d->group, d->images, d->classes, d->class_of);
  CosetContext c;
  c.d_ = std::move(d);
  return c;
}

const PermGroup& CosetContext::group() const { return d_->group; }
bool CosetContext::has_ambient() const { return d_->ambient.has_value(); }
const Perm& CosetContext::ambient() const {
  if (!d_->ambient) throw std::logic_error("coset context has no ambient representative");
  return *d_->ambient;
}
const std::vector<Perm>& CosetContext::generator_images() const { return d_->images; }
Perm CosetContext::phi(const Perm& g) const { return d_->group.elements()[d_->phi[d_->group.index_of(g)]]; }
size_t CosetContext::phi_index(size_t i) const { return d_->phi[i]; }
const std::vector<PhiClass>& CosetContext::classes() const { return d_->classes; }
size_t CosetContext::class_index(size_t i) const { return d_->class_of[i]; }
size_t CosetContext::class_of(const Perm& g) const { return d_->class_of[d_->group.index_of(g)]; }

bool CosetContext::same_as(const CosetContext& other) const {
  if (d_ == other.d_) return true;
  return d_->group.elements() == other.d_->group.elements() && d_->phi == other.d_->phi;
}

nlohmann::json CosetContext::to_json() const {
  using nlohmann::json;
  json gens = json::array();
  for (const Perm& g : d_->group.generators()) gens.push_back(g.images());
  json phi;
  if (d_->ambient) {
    phi["conj"] = d_->ambient->images();
  } else {
    json imgs = json::array();
    for (const Perm& p : d_->images) imgs.push_back(p.images());
    phi["images"] = imgs;
  }
  return json{{"degree", d_->group.degree()}, {"generators", gens}, {"phi", phi}};
}

CosetContext CosetContext::from_json(const nlohmann::json& j) {
  try {
    const int degree = j.at("degree").get<int>();
    PermGroup G(degree, perms_from_json(j.at("generators")));
    const auto& phi = j.at("phi");
    if (phi.contains("conj")) return conjugation(std::move(G), Perm(phi.at("conj").get<std::vector<int>>()));
    return from_generator_images(std::move(G), perms_from_json(phi.at("images")));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("coset context: ") + e.what());
  }
}

std::vector<PhiClass> phi_classes(const CosetContext& ctx) { return ctx.classes(); }

CosetClassFunction::CosetClassFunction(CosetContext ctx, std::vector<CycloNum> class_values)
    : ctx_(std::move(ctx)), values_(std::move(class_values)) {
  if (values_.size() != ctx_.classes().size())
    throw std::invalid_argument("class function: one value per phi-class required");
}

CosetClassFunction CosetClassFunction::from_pointwise(CosetContext ctx,
                                                      const std::function<CycloNum(const Perm&)>& f) {
  std::vector<std::optional<CycloNum>> vals(ctx.classes().size());
  const auto& elems = ctx.group().elements();
  for (size_t i = 0; i < elems.size(); ++i) {
    CycloNum v = f(elems[i]);
    auto& slot = vals[ctx.class_index(i)];
    if (!slot) {
      slot = std::move(v);
    } else if (*slot != v) {
      throw std::invalid_argument("class function: values not constant on the phi-class of " +
                                  elems[i].to_string());
    }
  }
  std::vector<CycloNum> out;
  for (auto& v : vals) out.push_back(std::move(*v));
  return CosetClassFunction(std::move(ctx), std::move(out));
}

CosetClassFunction CosetClassFunction::constant(CosetContext ctx, const CycloNum& c) {
  const size_t n = ctx.classes().size();
  return CosetClassFunction(std::move(ctx), std::vector<CycloNum>(n, c));
}

CycloNum CosetClassFunction::at(const Perm& g) const { return values_[ctx_.class_of(g)]; }

CycloNum CosetClassFunction::at_ambient(const Perm& y) const {
  return at(y * ctx_.ambient().inverse());
}

CosetClassFunction operator+(const CosetClassFunction& a, const CosetClassFunction& b) {
  if (!a.ctx_.same_as(b.ctx_)) throw std::invalid_argument("class function: context mismatch");
  std::vector<CycloNum> v(a.values_.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.values_[i] + b.values_[i];
  return CosetClassFunction(a.ctx_, std::move(v));
}

CosetClassFunction operator*(const CycloNum& c, const CosetClassFunction& f) {
  std::vector<CycloNum> v;
  for (const CycloNum& x : f.values_) v.push_back(c * x);
  return CosetClassFunction(f.ctx_, std::move(v));
}

bool operator==(const CosetClassFunction& a, const CosetClassFunction& b) {
  return a.ctx_.same_as(b.ctx_) && a.values_ == b.values_;
}

nlohmann::json CosetClassFunction::to_json() const {
  nlohmann::json vals = nlohmann::json::array();
  for (size_t c = 0; c < values_.size(); ++c)
    vals.push_back({ctx_.classes()[c].representative.images(), values_[c].to_string()});
  return {{"ctx", ctx_.to_json()}, {"values", vals}};
}

CosetClassFunction CosetClassFunction::from_json(const nlohmann::json& j) {
  try {
    CosetContext ctx = CosetContext::from_json(j.at("ctx"));
    std::vector<std::optional<CycloNum>> vals(ctx.classes().size());
    for (const auto& entry : j.at("values")) {
      const Perm rep(entry.at(0).get<std::vector<int>>());
      vals.at(ctx.class_of(rep)) = CycloNum::parse(entry.at(1).get<std::string>());
    }
    std::vector<CycloNum> out;
    for (auto& v : vals) {
      if (!v) throw std::invalid_argument("class function: missing phi-class value");
      out.push_back(std::move(*v));
    }
    return CosetClassFunction(std::move(ctx), std::move(out));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("class function: ") + e.what());
  }
}

CycloNum coset_inner(const CosetClassFunction& f, const CosetClassFunction& fp) {
  if (!f.context().same_as(fp.context())) throw std::invalid_argument("coset_inner: context mismatch");
  const auto& classes = f.context().classes();
  CycloNum acc;
  for (size_t c = 0; c < classes.size(); ++c)
    acc += CycloNum(static_cast<long>(classes[c].size)) * f.class_values()[c] *
           fp.class_values()[c].conjugate();
  return acc / CycloNum(static_cast<long>(f.context().group().order()));
}

namespace {

void require_subgroup(const PermGroup& sub, const PermGroup& G) {
  if (sub.degree() != G.degree()) throw std::invalid_argument("coset: subgroup degree mismatch");
  for (const Perm& g : sub.generators())
    if (!G.contains(g)) throw std::invalid_argument("coset: " + g.to_string() + " is not in the group");
}

}  // namespace

CosetClassFunction coset_restrict(const CosetClassFunction& f, const PermGroup& sub,
                                  const std::optional<Perm>& sub_ambient) {
  const CosetContext& ctx = f.context();
  require_subgroup(sub, ctx.group());
  if (ctx.has_ambient()) {
    const Perm s = sub_ambient.value_or(ctx.ambient());
    if (!ctx.group().contains(s * ctx.ambient().inverse()))
      throw std::invalid_argument("coset_restrict: sub-coset representative outside the coset");
    CosetContext sc = CosetContext::conjugation(sub, s);
    return CosetClassFunction::from_pointwise(sc, [&](const Perm& g) { return f.at_ambient(g * s); });
  }
  if (sub_ambient) throw std::invalid_argument("coset_restrict: context has no ambient representative");
  std::vector<Perm> images;
  for (const Perm& g : sub.generators()) images.push_back(ctx.phi(g));
  CosetContext sc = CosetContext::from_generator_images(sub, std::move(images));
  return CosetClassFunction::from_pointwise(sc, [&](const Perm& g) { return f.at(g); });
}

CosetClassFunction coset_induce(const CosetClassFunction& fp, const CosetContext& target) {
  const CosetContext& src = fp.context();
  const PermGroup& G = target.group();
  const PermGroup& sub = src.group();
  require_subgroup(sub, G);
  if (target.has_ambient() != src.has_ambient())
    throw std::invalid_argument("coset_induce: mixed ambient and table contexts");
  std::optional<Perm> s_sub_inv;
  if (target.has_ambient()) {
    if (!G.contains(src.ambient() * target.ambient().inverse()))
      throw std::invalid_argument("coset_induce: sub-coset not contained in the coset");
    s_sub_inv = src.ambient().inverse();
  } else {
    for (const Perm& g : sub.generators())
      if (target.phi(g) != src.phi(g))
        throw std::invalid_argument("coset_induce: automorphisms disagree on the subgroup");
  }
  std::vector<Perm> inverses;
  for (const Perm& x : G.elements()) inverses.push_back(x.inverse());
  std::vector<CycloNum> values;
  for (const PhiClass& cls : target.classes()) {
    CycloNum acc;
    for (size_t i = 0; i < G.order(); ++i) {
      const Perm& x = G.elements()[i];
      Perm z = s_sub_inv ? x * cls.representative * target.ambient() * inverses[i] * *s_sub_inv
                         : x * cls.representative * G.elements()[target.phi_index(G.index_of(inverses[i]))];
      if (sub.contains(z)) acc += fp.at(z);
    }
    values.push_back(acc / CycloNum(static_cast<long>(sub.order())));
  }
  return CosetClassFunction(target, std::move(values));
}

CosetClassFunction extension_restricted_to_coset(const GroupDescriptor& base,
                                                 const std::vector<IrrLabel>& chi, const Perm& a) {
  const int d = static_cast<int>(chi.size());
  const Group W(GroupDescriptor::wreath(base, d, {a}));
  const size_t nbase = W.base().generators().size() * static_cast<size_t>(d);
  std::vector<Perm> hgens(W.generators().begin(), W.generators().begin() + nbase);
  PermGroup H(W.degree(), std::move(hgens));
  const Perm s = W.lift_top(a);
  CosetContext ctx = CosetContext::conjugation(std::move(H), s);
  return CosetClassFunction::from_pointwise(ctx, [&](const Perm& h) {
    const WreathElement e = W.decompose(h * s);
    return canonical_extension_value(W.base(), chi, a, e.base);
  });
}

}  // namespace wreathchar
