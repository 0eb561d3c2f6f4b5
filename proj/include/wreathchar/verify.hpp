#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wreathchar/groupspec.hpp"

namespace wreathchar {

struct SuiteResult {
  std::string name;
  bool ok = true;
  size_t checks = 0;
  std::string detail;  // first failure, empty on success
};

struct SuiteOptions {
  std::optional<GroupSpec> spec;  // replaces the built-in inputs where a suite accepts one
  uint64_t seed = 1;
  size_t trials = 100;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name or a spec the suite cannot use.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

SuiteResult verify_character_tables(int max_n);
SuiteResult verify_hook_degrees(int max_n);
SuiteResult verify_unitary_signs(int max_n);
/// Orthonormality of the restricted extensions on every coset H.a of the wreath test matrix.
SuiteResult verify_coset_bases();
SuiteResult verify_clifford_counts();
SuiteResult verify_frobenius(uint64_t seed, size_t trials);
/// All compositions and labels for each (e, n); or the single spec's (d, n) when given.
SuiteResult verify_lemma51(const std::vector<std::pair<int, int>>& cases);
SuiteResult verify_lemma51_spec(const GroupSpec& spec);
SuiteResult verify_reexpansion();
SuiteResult verify_kostka(int max_n);
SuiteResult verify_step4(int max_product);
SuiteResult verify_label_counts(const std::vector<GroupSpec>& specs);
SuiteResult verify_mellin(const std::vector<GroupSpec>& specs);
SuiteResult verify_orders();

/// Built-in specs: linear and unitary orbits, cyclic and symmetric tops.
std::vector<GroupSpec> builtin_specs();

}  // namespace wreathchar
