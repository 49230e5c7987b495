#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "algvar/catalog.hpp"
#include "algvar/groebner.hpp"
#include "algvar/param_solver.hpp"
#include "algvar/tensor.hpp"

namespace algvar {

/// A candidate (F, phi). Entries are affine in `free_symbols`.
struct Witness {
  BilinearMap F;
  BilinearForm phi;
  std::vector<std::string> free_symbols;
  std::vector<MultiPoly> constraints;
};

struct IdentityReport {
  Verdict verdict = Verdict::no;
  std::optional<Witness> witness;
  std::optional<int> solution_dim;
  std::string detail;
};

enum class IdentityKind { conservative, rigid };

/// Names of the unknowns in elimination order. For n = 2 these are
/// lambda1, lambda2, mu1, mu2, tau1, tau2, nu1, nu2, phi11, phi12, phi21, phi22.
std::vector<std::string> unknown_names(int n, IdentityKind kind);

/// [L_b, [L_a, P]] for basis vectors a, b.
BilinearMap double_bracket(const StructureTensor& p, int a, int b);

/// The linear system of the identity: rows indexed by (a, b, x, y, k) in
/// lexicographic order, columns by unknown_names.
struct IdentitySystem {
  PolyMatrix matrix;
  std::vector<MultiPoly> rhs;
  int columns = 0;
};
IdentitySystem identity_system(const StructureTensor& p, IdentityKind kind);

IdentityReport is_terminal(const StructureTensor& p);
IdentityReport is_conservative(const StructureTensor& p);
IdentityReport is_rigid(const StructureTensor& p);
IdentityReport decide_identity(const StructureTensor& p, IdentityKind kind);

/// Zero tensors for every (a, b): [L_b,[L_a,P]] + [L_{F(a,b)},P] - phi(a,b) P.
/// Entries are polynomials in the witness symbols and the parameters of p.
std::vector<BilinearMap> witness_residuals(const StructureTensor& p, const BilinearMap& f,
                                           const BilinearForm& phi);
bool witness_satisfies(const StructureTensor& p, const BilinearMap& f, const BilinearForm& phi);

/// Remark 1.5 test: the conservative identity with F(a,b) = 2/3 ab + 1/3 ba, phi = 0.
bool pinned_conservative_holds(const StructureTensor& p);
BilinearMap pinned_terminal_F(const StructureTensor& p);

/// The sixteen basis specializations of the identity for n = 2, each giving two
/// scalar equations (components e1, e2) of the form lhs - rhs, polynomial in the
/// unknowns and the parameters of p.
struct CaseEquations {
  std::string label;  // "1.a" ... "8.b"
  int a, b, x, y;     // zero-based basis indices
  std::vector<MultiPoly> equations;
};
std::vector<CaseEquations> case_conditions(const StructureTensor& p, IdentityKind kind = IdentityKind::rigid);

bool is_commutative(const StructureTensor& p);
/// Full multilinearization of (x^2 y) x = x^2 (y x); throws on non-commutative input.
bool is_jordan(const StructureTensor& p);

/// Parametric decision over a constructible domain.
struct ParametricReport {
  ParamSolveResult solve;
  /// yes: consistent on every cell; no: inconsistent on every cell;
  /// unknown: mixed or incomplete (see cells).
  Verdict verdict = Verdict::unknown;
};
ParametricReport decide_parametric(const StructureTensor& p, IdentityKind kind,
                                   const std::vector<MultiPoly>& domain_eqs,
                                   const std::vector<MultiPoly>& domain_neqs,
                                   const ParamSolverOptions& options = {});

/// A closed-form (F, phi) for some catalog rows, entries kept as expression
/// text because they may divide by parameters. Display symbols listed in
/// `params` are bound to expressions in the row parameters.
struct WitnessDisplay {
  std::string id;
  std::vector<std::string> rows;
  std::vector<std::vector<std::vector<std::string>>> F;  // F[a][b] = coordinates of F(e_a, e_b)
  std::vector<std::vector<std::string>> phi;
  std::map<std::string, std::string> params;
  std::map<std::string, std::string> fix;  // row parameters pinned to values
  std::vector<std::string> nonzero;        // extra inequations in the row parameters
  std::optional<std::vector<std::vector<std::vector<std::string>>>> as_printed;
};

std::vector<WitnessDisplay> load_witness_displays(const std::string& path);

/// Binds row parameters (and mapped display symbols) to `values` and builds
/// (F, phi) as polynomials in the remaining free symbols. With
/// `conservative`, phi11..phinn are set to zero throughout.
std::pair<BilinearMap, BilinearForm> display_at(const WitnessDisplay& d, const Assignment& values, bool conservative,
                                                 bool printed = false);

/// Row parameter points valid for the display: row constraints, `fix` and `nonzero`.
std::vector<Assignment> display_samples(const Catalog& cat, const WitnessDisplay& d, const std::string& row,
                                        int count, std::uint64_t seed);

/// Terminality as polynomial conditions on the parameters (all must vanish).
std::vector<MultiPoly> terminal_conditions(const StructureTensor& p);

}  // namespace algvar
