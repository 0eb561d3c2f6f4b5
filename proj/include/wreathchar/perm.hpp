#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wreathchar/cyclotomic.hpp"
#include "wreathchar/partitions.hpp"

namespace wreathchar {

/// Bijection of {0, ..., m-1}. Products compose right to left:
/// (p * q)(x) = p(q(x)).
class Perm {
 public:
  Perm() = default;
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Perm(std::vector<int> images);
  static Perm identity(int degree);
  /// Cycles use 0-based points; omitted points are fixed.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm pow(long k) const;
  bool is_identity() const;
  long order() const;
  /// Cycles including fixed points, each starting at its smallest point,
  /// ordered by that point.
  std::vector<std::vector<int>> cycles() const;
  CycleType cycle_type() const;
  /// Restriction to an invariant point set, renumbered by position in `points`.
  Perm restrict_to(const std::vector<int>& points) const;

  /// `[i0,i1,...]`
  std::string to_string() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<int> img_;
};

struct PermHash {
  size_t operator()(const Perm& p) const noexcept;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr size_t kDefaultElementCap = 10'000'000;

/// A small permutation group held as its sorted element list.
class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}
  /// Closure of `generators` acting on `degree` points.
  PermGroup(int degree, std::vector<Perm> generators, size_t cap = kDefaultElementCap);
  /// Wraps an element list that is already closed under multiplication.
  static PermGroup from_elements(int degree, std::vector<Perm> elements);

  int degree() const { return degree_; }
  size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  bool contains(const Perm& p) const;
  size_t index_of(const Perm& p) const;
  bool is_abelian() const;

  PermGroup subgroup_where(const std::function<bool(const Perm&)>& keep) const;
  /// Left coset representatives t (G = union of t*sub), each the minimal element of its coset.
  std::vector<Perm> left_transversal(const PermGroup& sub) const;
  PermGroup centralizer_of(const Perm& s) const;
  /// Orbits on {0..degree-1}, each sorted, ordered by smallest point.
  std::vector<std::vector<int>> orbits() const;

 private:
  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
};

/// Greedy generating set: scan in order, keep elements outside the span so far.
std::vector<Perm> small_generating_set(int degree, const std::vector<Perm>& elements);

/// Irreducible character label shared by the symmetric, product, abelian and
/// Clifford (wreath) constructions.
struct IrrLabel {
  enum class Kind { Partition, Tuple, Abelian, Clifford };

  Kind kind = Kind::Tuple;
  Partition partition;
  std::vector<IrrLabel> parts;  // Tuple components, or the chi tuple of a Clifford label
  std::vector<int> exponents;   // Abelian: images of the canonical generators
  std::vector<IrrLabel> xi;     // Clifford: exactly one entry

  static IrrLabel of_partition(Partition p);
  static IrrLabel tuple(std::vector<IrrLabel> parts);
  static IrrLabel abelian(std::vector<int> exponents);
  static IrrLabel clifford(std::vector<IrrLabel> chi, IrrLabel xi);

  std::string to_string() const;
};

int compare(const IrrLabel& a, const IrrLabel& b);
inline bool operator==(const IrrLabel& a, const IrrLabel& b) { return compare(a, b) == 0; }
inline bool operator<(const IrrLabel& a, const IrrLabel& b) { return compare(a, b) < 0; }

/// Irreducible characters of a small permutation group that splits as a
/// direct product (over groups of orbits) of full symmetric groups on single
/// orbits and abelian groups. Other structures raise std::domain_error.
class TopCharacters {
 public:
  explicit TopCharacters(const PermGroup& group);

  size_t count() const { return count_; }
  const IrrLabel& label(size_t i) const { return labels_[i]; }
  size_t index_of(const IrrLabel& label) const;
  CycloNum value(size_t i, const Perm& a) const;
  long degree(size_t i) const;
  /// Index of the trivial character.
  size_t trivial() const { return 0; }

 private:
  struct Component {
    std::vector<int> points;
    bool symmetric = false;
    // symmetric
    std::optional<SymmetricCharacterTable> table;
    // abelian
    PermGroup local;
    long exponent = 1;
    std::vector<std::vector<int>> exps;     // label per character
    std::vector<std::vector<long>> values;  // [char][local element index] -> k, value zeta_exponent^k
  };

  std::vector<size_t> digits(size_t i) const;

  std::vector<Component> components_;
  std::vector<size_t> radix_;
  size_t count_ = 1;
  std::vector<IrrLabel> labels_;
};

}  // namespace wreathchar
