#pragma once

#include "wittext/extform.hpp"

namespace wittext {

enum class SolverMode { Auto, Dense, Graded };

struct SolverOptions {
  SolverMode mode = SolverMode::Auto;
  /// Hard cap on the number of scalar unknowns of the equivalent dense
  /// problem: (#basis indices) * dim N * dim M * field degree.  Exceeding it
  /// raises Errc::DimensionOverflow before any allocation happens.
  int64_t size_guard = 4000;
};

/// Cochains phi : algebra -> Hom(M, N), one matrix per basis index (offset
/// by the algebra's min index, as in ModuleRep).
using Cochain = std::vector<Matrix>;

struct CocycleReport {
  int dimZ = 0;  // cocycles satisfying both bracket and p-power constraints
  int dimB = 0;  // coboundaries
  int ext = 0;   // dimZ - dimB
  SolverMode mode_used = SolverMode::Dense;
  std::optional<Cochain> witness;  // a cocycle that is not a coboundary
};

/// dim of { h in Hom(M, N) : rho_N(x) h = h rho_M(x) for all x }.
int hom_dim(const ModuleRep& M, const ModuleRep& N);

/// dim Ext(M, N) for two concrete modules over the same algebra and chi, by
/// solving the full cocycle/coboundary systems.  Convention: a cocycle phi
/// glues N below M, 0 -> N -> E -> M -> 0.
CocycleReport ext_dim_full(const ModuleRep& M, const ModuleRep& N,
                           const SolverOptions& opts = {}, bool want_witness = false);

/// True when phi(x) = rho_N(x) h - h rho_M(x) for some h.
bool is_coboundary(const ModuleRep& M, const ModuleRep& N, const Cochain& phi);

/// The block upper-triangular module E = N + M attached to a cochain.
/// Validity (i.e. phi being a cocycle) is the caller's concern; check_module
/// detects a bad gluing.
ModuleRep build_extension(const ModuleRep& M, const ModuleRep& N, const Cochain& phi);

struct ReducedReport {
  int dimZ = 0;
  int dimB = 0;
  int ext = 0;
  std::optional<ADatum> witness;
};

/// dim Ext over U_chi(W_0) of K_{lambda'} by V_chi(lambda), computed in the
/// small coordinate space (a_1, ..., a_{p-2}) with the defining equations
/// assembled generically from the Verma action matrices.
ReducedReport ext_dim_reduced(const FieldElement& lambda, const FieldElement& lambda_prime,
                              const PCharacter& chi, bool want_witness = false);

}  // namespace wittext
