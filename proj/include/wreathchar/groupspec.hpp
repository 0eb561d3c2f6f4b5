#pragma once

#include <map>
#include <vector>

#include "json.hpp"
#include "wreathchar/partitions.hpp"
#include "wreathchar/perm.hpp"
#include "wreathchar/permwreath.hpp"

namespace wreathchar {

/// One factor GL_n^d with a finite group A of coordinate permutations and a
/// Frobenius that permutes the coordinates by sigma and applies transpose
/// inverse `twist` times (mod 2).
struct FactorSpec {
  int n = 1;
  int d = 1;
  std::vector<Perm> A_gens;
  Perm sigma;
  int twist = 0;
};

struct GroupSpec {
  std::vector<FactorSpec> factors;

  /// {"factors":[{"n","d","A_gens","sigma","twist"}]}; throws std::invalid_argument.
  static GroupSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct OrbitInfo {
  size_t factor = 0;
  std::vector<int> points;  // sigma-orbit on the factor's coordinates, in sigma order from its minimum
  int n = 1;
  int length = 1;
  TorusType type = TorusType::Linear;
};

struct FactorStructure {
  FactorSpec spec;
  PermGroup A;
  PermGroup AF;  // centraliser of sigma in A
  std::vector<size_t> orbit_ids;
  int offset = 0;  // first coordinate of this factor among all coordinates
};

/// Orbit decomposition and fixed points of a GroupSpec.
struct FixedStructure {
  std::vector<FactorStructure> factors;
  std::vector<OrbitInfo> orbits;
  int total_points = 0;
  std::vector<size_t> orbit_of;  // global coordinate -> orbit index
  PermGroup AF;                  // product of the factors' A^F on all coordinates
  GroupDescriptor WF;            // product over orbits of Symmetric(n)

  /// Action of an element of AF on orbit indices.
  std::vector<size_t> orbit_action(const Perm& a) const;
};

/// Throws std::invalid_argument when sigma does not normalise A or the data
/// are inconsistent.
FixedStructure analyze(const GroupSpec& spec);

/// |A^F| times prod over orbits of |GL_n(q^l)| or |GU_n(q^l)|.
QPoly order_polynomial(const FixedStructure& fs);

/// One factor (m, d_m, S_{d_m}, sigma_m, t) per distinct part m, ascending.
/// `sigma` may supply sigma_m per part; identity otherwise.
GroupSpec levi_normalizer(int n, const std::vector<int>& parts, int twist,
                          const std::map<int, Perm>& sigma = {});

/// W^F x| A^F: per factor a wreath product of Symmetric(n) over its orbits
/// with A^F on the coordinates, or the plain product when A^F is trivial.
GroupDescriptor weyl_group_with_top(const FixedStructure& fs);

/// W°<a> = (S_n^d)^<a> for one factor, realised as S_n^r on r*n points where
/// r is the number of <a>-orbits on the coordinates; orbit k (ordered by
/// smallest coordinate) owns points [k*n, (k+1)*n).
struct FixedPointModel {
  int n = 1;
  int d = 1;
  std::vector<std::vector<int>> orbits;  // <a>-orbits on coordinates
  std::vector<int> orbit_of;             // coordinate -> orbit
  PermGroup group;
  std::vector<std::vector<int>> blocks;  // flat points of each orbit

  /// Element of S_n^d constant on orbits -> flat element.
  Perm embed(const std::vector<Perm>& w) const;
  /// Flat element -> tuple over coordinates.
  std::vector<Perm> expand(const Perm& g) const;
  /// A coordinate permutation commuting with a, acting on the orbits.
  Perm lift_coordinate_perm(const Perm& c) const;
};

FixedPointModel fixed_point_model(int n, int d, const Perm& a);

}  // namespace wreathchar
