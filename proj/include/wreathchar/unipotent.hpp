#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wreathchar/cyclotomic.hpp"
#include "wreathchar/groupspec.hpp"
#include "wreathchar/partitions.hpp"
#include "wreathchar/perm.hpp"

namespace wreathchar {

/// One partition per sigma-orbit, indexed like FixedStructure::orbits.
using ConnLabel = std::vector<Partition>;

std::string to_string(const ConnLabel& eta);

/// All labels, first orbit most significant, each orbit in reverse lex order.
std::vector<ConnLabel> conn_labels(const FixedStructure& fs);

/// Per orbit: linear gives (+1, D_lambda(Q)), unitary gives the q -> -q
/// sign and degree, both with Q = q^length; signs and degrees multiply.
SignedDegree sign_and_degree(const FixedStructure& fs, const ConnLabel& eta);

/// (b.eta)(b(O)) = eta(O) for b in A^F.
ConnLabel act_on_label(const FixedStructure& fs, const Perm& b, const ConnLabel& eta);

/// A^F_eta.
PermGroup eta_stabilizer(const FixedStructure& fs, const ConnLabel& eta);

struct UnipotentLabel {
  ConnLabel eta;  // minimal in its A^F-orbit (conn_labels order)
  IrrLabel xi;    // character of A^F_eta
  int sign = 1;
  QPoly degree;
};

/// A^F-orbit representatives of pairs (eta, xi).
std::vector<UnipotentLabel> unipotent_labels(const FixedStructure& fs);

/// Stabilisers conjugate and sign/degree unchanged under b in A^F.
bool equivariance_check(const FixedStructure& fs, const Perm& b, const ConnLabel& eta);

struct MellinTransform {
  std::vector<Perm> elements;         // A^F_eta, sorted
  std::vector<IrrLabel> characters;   // Irr(A^F_eta)
  std::vector<std::vector<CycloNum>> forward;  // [a][xi] = xi(a^{-1})
  std::vector<std::vector<CycloNum>> inverse;  // [xi][a] = xi(a) / |A^F_eta|

  /// forward * inverse and inverse * forward are both the identity.
  bool round_trip() const;
  /// Coefficients of the transformed vector at `a` over the characters.
  const std::vector<CycloNum>& vector_at(const Perm& a) const;
};

/// Throws std::domain_error unless A^F is abelian.
MellinTransform mellin(const FixedStructure& fs, const ConnLabel& eta);

struct SupportReport {
  bool ok = true;
  size_t evaluations = 0;
  std::string failure;
};

/// In W^F x| A^F with chi_{eta*xi} = Ind(xi.(eta x| A_eta)), checks
/// sum_xi xi(a^{-1}) chi_{eta*xi}(w b) = delta_{ab} |A_eta| chi_{eta*1}(w b)
/// for every element w b. Requires A^F abelian and a in A^F_eta.
SupportReport support_identity_weyl_model(const FixedStructure& fs, const ConnLabel& eta, const Perm& a);

/// The formal coefficients (eta_a x| sigma)(w sigma) for w in W°<a>, single
/// factor specs. `a` acts on the factor's coordinates and must fix eta.
std::vector<std::pair<Perm, CycloNum>> rtilde_coefficients(const FixedStructure& fs, const ConnLabel& eta,
                                                           const Perm& a);

}  // namespace wreathchar
