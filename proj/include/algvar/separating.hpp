#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "algvar/catalog.hpp"
#include "algvar/groebner.hpp"

namespace algvar {

/// A target orbit that must miss the separating set. Its parameters are
/// free (renamed with kTargetSuffix) subject to the family domain and the
/// listed exclusions, e.g. T10 with alpha - 1 != 0.
struct ExcludedTarget {
  std::string family;
  std::vector<std::string> exclusions;  // polynomials in the family's own parameters, each != 0
  std::string label() const;
};

/// Closed set R of structure constants given by conditions in the symbols
/// c{i}{j}{k} (coefficient of e_k in e_i e_j, one-based). Conditions may
/// mention parameters of the source family, which then range over its domain.
struct SeparatingSet {
  std::string id;
  std::string source;
  std::vector<std::string> conditions;
  std::vector<ExcludedTarget> excluded;
};

inline const std::string kTargetSuffix = "_tgt";

SeparatingSet separating_from_json(const nlohmann::json& j);
std::vector<SeparatingSet> load_separating_sets(const std::string& path);

/// c111, c112, ..., c222 for n = 2.
std::vector<std::string> constant_symbols(int n);
std::string constant_symbol(int i, int j, int k);

struct SeparatingOptions {
  int samples = 200;
  int borel_per_sample = 5;
  int target_samples = 10;
  std::uint64_t seed = 1;
  GroebnerOptions groebner{};
};

struct TargetReport {
  std::string target;
  Verdict symbolic = Verdict::unknown;  // yes: the orbit misses R
  int sampled_passed = 0;
  int sampled_total = 0;
  bool passed() const { return symbolic == Verdict::yes && sampled_passed == sampled_total; }
};

struct SeparatingReport {
  bool membership = false;
  bool stability_sampled = false;
  int stability_points = 0;
  /// yes: stable for the generic lower-triangular element, proved by ideal
  /// membership or by emptiness of the complement.
  Verdict stability_symbolic = Verdict::unknown;
  std::vector<TargetReport> targets;
  std::string counterexample;

  bool emptiness() const;
  bool passed() const;
};

SeparatingReport verify_separating_set(const Catalog& cat, const SeparatingSet& s,
                                       const SeparatingOptions& options = {});

/// p(c -> N / det) multiplied by det^deg p, so that the result vanishes exactly
/// when the transformed constants satisfy p (for det != 0).
MultiPoly transformed_condition(const MultiPoly& p, const StructureTensor& numerators, const MultiPoly& det);

/// A random point of R with the source parameters fixed: dependent
/// coordinates are solved exactly from conditions linear in them.
std::optional<Assignment> sample_condition_point(const std::vector<MultiPoly>& conditions,
                                                 const std::vector<std::string>& coordinates, std::uint64_t seed);

}  // namespace algvar
