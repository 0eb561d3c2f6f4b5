#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "json.hpp"
#include "wreathchar/cyclotomic.hpp"
#include "wreathchar/permwreath.hpp"

namespace wreathchar {

struct PhiClass {
  Perm representative;  // minimal element of the class
  size_t size = 0;
};

/// A finite group G with an automorphism phi, standing for the coset G.phi.
///
/// Either phi is conjugation by an ambient permutation s normalising G (the
/// coset is then the set G*s of permutations), or phi is given by the images
/// of G.generators().
class CosetContext {
 public:
  static CosetContext conjugation(PermGroup G, Perm s);
  /// Throws std::invalid_argument unless the images define an automorphism.
  static CosetContext from_generator_images(PermGroup G, std::vector<Perm> images);

  const PermGroup& group() const;
  bool has_ambient() const;
  /// The ambient representative s. Throws std::logic_error without one.
  const Perm& ambient() const;
  /// Images of group().generators() under phi.
  const std::vector<Perm>& generator_images() const;

  Perm phi(const Perm& g) const;
  size_t phi_index(size_t element_index) const;

  const std::vector<PhiClass>& classes() const;
  size_t class_index(size_t element_index) const;
  size_t class_of(const Perm& g) const;

  /// Same group and same automorphism.
  bool same_as(const CosetContext& other) const;

  nlohmann::json to_json() const;
  static CosetContext from_json(const nlohmann::json& j);

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// phi-classes: orbits of g -> x g phi(x)^{-1}, ordered by representative.
std::vector<PhiClass> phi_classes(const CosetContext& ctx);

/// A G-invariant function on G.phi, stored per phi-class.
class CosetClassFunction {
 public:
  CosetClassFunction(CosetContext ctx, std::vector<CycloNum> class_values);
  /// Samples f(g.phi) on every element; throws std::invalid_argument when
  /// the values are not constant on phi-classes.
  static CosetClassFunction from_pointwise(CosetContext ctx,
                                           const std::function<CycloNum(const Perm&)>& f);
  static CosetClassFunction constant(CosetContext ctx, const CycloNum& c);

  const CosetContext& context() const { return ctx_; }
  const std::vector<CycloNum>& class_values() const { return values_; }
  /// f(g.phi) for g in G.
  CycloNum at(const Perm& g) const;
  /// f(y) for y = g*s in the ambient coset.
  CycloNum at_ambient(const Perm& y) const;

  friend CosetClassFunction operator+(const CosetClassFunction& a, const CosetClassFunction& b);
  friend CosetClassFunction operator*(const CycloNum& c, const CosetClassFunction& f);
  friend bool operator==(const CosetClassFunction& a, const CosetClassFunction& b);

  /// {"ctx": ..., "values": [[class_rep, cyclo-string], ...]}
  nlohmann::json to_json() const;
  static CosetClassFunction from_json(const nlohmann::json& j);

 private:
  CosetContext ctx_;
  std::vector<CycloNum> values_;
};

/// |G|^{-1} sum_g f(g.phi) conj(f'(g.phi)). Throws std::invalid_argument on
/// context mismatch.
CycloNum coset_inner(const CosetClassFunction& f, const CosetClassFunction& fp);

/// Restriction to G'.phi. In the ambient form the sub-coset may use another
/// representative s' in G*s (G' s' inside G s); by default s' = s. Throws
/// std::invalid_argument when G' is not phi-stable or the sub-coset is not
/// contained in the coset.
CosetClassFunction coset_restrict(const CosetClassFunction& f, const PermGroup& sub,
                                  const std::optional<Perm>& sub_ambient = std::nullopt);

/// Ind(f')(g.phi) = |G'|^{-1} sum over x in G with x g phi(x)^{-1} in G'
/// of f'(x g phi(x)^{-1} . phi), the adjoint of coset_restrict.
CosetClassFunction coset_induce(const CosetClassFunction& fp, const CosetContext& target);

/// h -> (chi x| <a>)(h a) on the coset H.a of H = M(X, H0) with X = the
/// coordinates of chi, realised inside the wreath product base wr <a>.
CosetClassFunction extension_restricted_to_coset(const GroupDescriptor& base,
                                                 const std::vector<IrrLabel>& chi, const Perm& a);

}  // namespace wreathchar
