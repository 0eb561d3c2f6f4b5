#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "wreathchar/cyclotomic.hpp"
#include "wreathchar/partitions.hpp"
#include "wreathchar/perm.hpp"

namespace wreathchar {

/// Recursive description of a group built from symmetric groups by direct
/// products and wreath products.
///
/// A wreath node's top group acts on `top_points` points. With `blocks` empty
/// those points are the coordinates themselves; otherwise `blocks[p]` names
/// the coordinate moved along with point p, which lets the top act on the
/// coordinates non-faithfully.
struct GroupDescriptor {
  enum class Kind { Symmetric, Product, Wreath };

  Kind kind = Kind::Symmetric;
  int n = 0;
  std::vector<GroupDescriptor> children;  // product factors, or {base}
  int deg = 0;
  int top_points = 0;
  std::vector<Perm> top_gens;
  std::vector<int> blocks;

  static GroupDescriptor symmetric(int n);
  static GroupDescriptor product(std::vector<GroupDescriptor> factors);
  static GroupDescriptor wreath(GroupDescriptor base, int deg, std::vector<Perm> top_gens,
                                std::vector<int> blocks = {});

  const GroupDescriptor& base() const { return children.front(); }

  /// {"sym": n} | {"prod": [...]} | {"wreath": {"base", "deg", "top_gens", "blocks"?}}
  nlohmann::json to_json() const;
  /// Throws std::invalid_argument on malformed input.
  static GroupDescriptor from_json(const nlohmann::json& j);
};

/// (h, a): base tuple indexed by coordinate, top element on the top points.
struct WreathElement {
  std::vector<Perm> base;
  Perm top;
};

/// A GroupDescriptor realised as a permutation group on flat points.
///
/// Product factors occupy consecutive point ranges. In a wreath node
/// coordinate i owns the points [i*N, (i+1)*N) of the base degree N, followed
/// by the top points when the node has a blocks map. The element (h, a) sends
/// (i, p) to (a(i), h_{a(i)}(p)), so (h, a)(h', a') = (h * a(h'), a a').
class Group {
 public:
  explicit Group(const GroupDescriptor& d, size_t cap = kDefaultElementCap);

  const GroupDescriptor& descriptor() const;
  int degree() const;
  mpz_class order() const;
  const std::vector<Perm>& generators() const;
  bool contains(const Perm& g) const;
  /// Enumerates on first use; throws CapExceeded beyond the cap.
  const PermGroup& elements() const;

  /// Irr(G): partitions, tuples over product factors, or Clifford pairs
  /// (A-minimal chi tuple, xi in Irr(A_chi)).
  const std::vector<IrrLabel>& irr_labels() const;
  long char_degree(const IrrLabel& label) const;
  CycloNum char_value(const IrrLabel& label, const Perm& g) const;

  // Wreath nodes only.
  const Group& base() const;
  const PermGroup& top() const;
  /// a on the coordinates, for a on the top points.
  Perm coordinate_action(const Perm& a) const;
  WreathElement decompose(const Perm& g) const;
  Perm compose(const WreathElement& e) const;
  Perm lift_top(const Perm& a) const;

  // Product nodes only.
  const std::vector<Group>& factors() const;
  int factor_offset(size_t i) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

std::vector<Perm> enumerate_elements(const GroupDescriptor& d, size_t cap = kDefaultElementCap);

std::vector<IrrLabel> irr_labels(const GroupDescriptor& d);

/// M(X, H0)^A as M(X/A, H0).
struct FixedPointData {
  GroupDescriptor descriptor;  // H0 for a single orbit, else a product of copies
  std::vector<std::vector<int>> orbits;

  /// Tuple constant on orbits from one base element per orbit.
  std::vector<Perm> embed(const std::vector<Perm>& per_orbit) const;
};

FixedPointData fixed_point_subgroup(const GroupDescriptor& base, int d, const PermGroup& A);

/// {a in A : chi_{a(i)} = chi_i}; `blocks` maps top points to coordinates as
/// in GroupDescriptor.
PermGroup stabilizer_of_label(const PermGroup& A, const std::vector<IrrLabel>& chi,
                              const std::vector<int>& blocks = {});

/// (chi x| A_chi)(h a): product over <a>-orbits with representative x and
/// length r of chi_x(h_{a^{r-1}x} ... h_{a x} h_x). `a_bar` acts on
/// coordinates. `section` picks one representative per orbit (any order);
/// empty selects the smallest point. Throws std::invalid_argument when a does
/// not fix chi.
CycloNum canonical_extension_value(const Group& base, const std::vector<IrrLabel>& chi,
                                   const Perm& a_bar, const std::vector<Perm>& h,
                                   const std::vector<int>& section = {});

/// Canonical extension of a product of symmetric-group characters over
/// blocks of points to an element g permuting those blocks, identifying
/// blocks in increasing point order: product over block cycles B -> gB -> ...
/// of length r of chi_{label(B)}(g^r restricted to B).
CycloNum block_extension_value(const std::vector<std::vector<int>>& blocks,
                               const std::vector<Partition>& labels, const Perm& g);

}  // namespace wreathchar
