#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "wreathchar/cosetfun.hpp"
#include "wreathchar/groupspec.hpp"
#include "wreathchar/unipotent.hpp"

namespace wreathchar {

/// A Young-type subgroup W_L of W° = S_n^d (one composition of n per
/// coordinate), an abelian A_L inside A^F and w1 in W° centralised by A_L.
/// Single-factor specs only.
struct LeviDatum {
  FixedStructure ambient;
  std::vector<std::vector<int>> compositions;
  std::vector<Perm> AL_gens;
  std::vector<Perm> w1;  // one permutation of n points per coordinate

  /// {"compositions": [[..],..] | "composition": [..], "AL": [[..]], "w1": [[..],..]}
  static LeviDatum from_json(const FixedStructure& fs, const nlohmann::json& j);
  /// Throws std::invalid_argument when an invariant fails.
  void validate() const;
  bool w1_trivial() const;
};

/// Irr(W_L): a partition per Young block, indexed [coordinate][part].
using LeviLabel = std::vector<std::vector<Partition>>;

LeviLabel levi_label_from_json(const nlohmann::json& j);
std::string to_string(const LeviLabel& lambda);

/// All w1 sigma-invariant labels of W_L.
std::vector<LeviLabel> levi_labels(const LeviDatum& datum);

struct EtaTransport {
  std::vector<std::vector<int>> merged_orbits;  // <sigma, a>-orbits on coordinates
  std::vector<Partition> merged;                // label on each
  std::vector<std::vector<int>> a_orbits;       // <a>-orbits on coordinates
  std::vector<Partition> on_a_orbits;           // eta_a as a label of W°<a>
};

/// eta in Irr(W^F)^<a> to eta_a in Irr(W°<a>)^F. Single-factor specs; throws
/// std::invalid_argument when a does not fix eta.
EtaTransport eta_transport(const FixedStructure& fs, const ConnLabel& eta, const Perm& a);

struct MultiplicityTable {
  std::vector<ConnLabel> etas;        // Irr(W^F)^<a>
  std::vector<CycloNum> m;            // m_eta
  std::vector<CosetClassFunction> basis;  // eta_a x| sigma on W°<a>.sigma
  CosetClassFunction induced;         // Ind(lambda'_a x| w1 sigma)

  /// sum m_eta basis_eta == induced, exactly.
  bool reexpansion_exact() const;
  nlohmann::json to_json() const;
};

/// m_eta = <Ind_{W_L°<a>.w1 sigma}^{W°<a>.sigma}(lambda'_a x| w1 sigma), eta_a x| sigma>.
MultiplicityTable m_table(const LeviDatum& datum, const LeviLabel& lambda, const Perm& a);

/// <eta, Ind_{S_mu}^{S_n} lambda> by averaging over S_mu.
CycloNum ordinary_induction_multiplicity(const std::vector<int>& composition,
                                         const std::vector<Partition>& lambda, const Partition& eta);

/// Datum with sigma the full e-cycle, A = <sigma>, A_L = A, W_L = S_mu^e, w1 = 1.
LeviDatum lemma51_datum(int e, int n, const std::vector<int>& composition);

/// For w1 = 1 and A generated by the full cycle sigma: m_table at every
/// a = sigma^i equals the ordinary induction multiplicities.
bool lemma51_crosscheck(const LeviDatum& datum, const LeviLabel& lambda);

/// kostka_matrix(n) has determinant +-1.
bool integrality_basis_check(int n);

struct Step4Report {
  bool orbits_equal = true;
  bool fixed_subgroups_equal = true;
  bool extensions_equal = true;
  size_t evaluations = 0;
  std::string failure;
  bool ok() const { return orbits_equal && fixed_subgroups_equal && extensions_equal; }
};

/// sigma = k disjoint e-cycles on e*k coordinates, c = shift by e, b = the
/// m-th power of the first e-cycle. Compares W°<bc> with W°<c,b> and the two
/// extensions of a constant eta on the coset W°<bc>.sigma.
Step4Report step4_identities(int e, int k, int n, int m);

}  // namespace wreathchar
