#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "algvar/catalog.hpp"
#include "algvar/groebner.hpp"
#include "algvar/laurent.hpp"
#include "algvar/tensor.hpp"

namespace algvar {

using LaurentMatrix = BasicLinearMap<LaurentPoly>;
using LaurentTensor = BasicBilinearMap<LaurentPoly>;

/// Name of the zero algebra node; it is not a catalog row.
inline const std::string kZeroAlgebra = "k2";

/// A parametrized basis E(t) (column i holds the coordinates of E_i) and an
/// optional parametrized index f(t) for some source parameters. Source
/// parameters that are not indexed stay symbolic, so a witness is checked
/// uniformly over the source domain.
struct DegenerationWitness {
  std::string id;
  std::string source;
  FamilyRef target;  // args are expressions in the source's symbolic parameters
  LaurentMatrix basis;
  std::map<std::string, LaurentPoly> index;

  bool uniform() const { return index.empty(); }
};

DegenerationWitness witness_from_json(const nlohmann::json& j);
nlohmann::json witness_to_json(const DegenerationWitness& w);
/// Reads {"witnesses": [...]} from a file.
std::vector<DegenerationWitness> load_witnesses(const std::string& path);

/// Symbolic tensor of a reference; parameters without arguments stay symbols.
StructureTensor reference_tensor(const Catalog& cat, const FamilyRef& ref);
/// Domain of a family (empty for the zero algebra).
std::vector<MultiPoly> reference_inequations(const Catalog& cat, const std::string& family);

struct DegenerationCheck {
  bool verified = false;
  std::string reason;
  int det_order = 0;
  MultiPoly det_leading;
  /// Limit structure constants at t = 0 when verified.
  StructureTensor limit;
};

/// Substitutes f(t), changes basis with the adjugate, requires det E(t) =
/// d t^k with d nonzero on the source domain, and compares the t^k
/// coefficients of the numerators with d times the target.
DegenerationCheck verify_degeneration(const Catalog& cat, const DegenerationWitness& w,
                                      const GroebnerOptions& options = {});

/// E_i = t e_i, degenerating anything onto the zero algebra.
DegenerationWitness zero_witness(const std::string& source, int dim = 2);

/// A -> B followed by B -> C as g1(t^m) g2(t). Requires `second` to be
/// uniform; `m` rescales the first deformation so its error terms vanish
/// faster than the second basis can amplify them.
DegenerationWitness compose(const DegenerationWitness& first, const DegenerationWitness& second, int m);
/// Tries m = 1..max_m and returns the first verified composite.
std::optional<DegenerationWitness> compose_verified(const Catalog& cat, const DegenerationWitness& first,
                                                    const DegenerationWitness& second, int max_m = 6);

struct LemmaCheck {
  bool pass = false;
  std::string which;  // failing condition when !pass
  int der_a = 0, der_b = 0, square_a = 0, square_b = 0;
};

/// Necessary conditions for A -> B with A not isomorphic to B:
/// dim Der A < dim Der B and dim A^2 >= dim B^2.
LemmaCheck check_lemma_necessary(const StructureTensor& a, const StructureTensor& b);

/// t -> t^m in every coefficient.
LaurentPoly rescale(const LaurentPoly& p, int m);

}  // namespace algvar
