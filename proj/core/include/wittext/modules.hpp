#pragma once

#include "wittext/witt.hpp"

namespace wittext {

enum class Algebra { W, W0 };

enum class ModuleKind { Trivial, S, Verma, SymbolicL, WeightLine };

/// Abstract description of a module; Verma and WeightLine carry a weight.
struct ModuleSpec {
  ModuleKind kind;
  FieldElement lambda;  // meaningful for Verma / WeightLine only
  std::string label;    // display name (K, S, V..., L)
};

/// Concrete matrix model: one action matrix per basis element of W (or W_0).
/// Immutable after construction.
class ModuleRep {
 public:
  ModuleRep(Algebra alg, const PCharacter& chi, int dim);

  Algebra algebra() const { return alg_; }
  int dim() const { return dim_; }
  const PCharacter& chi() const { return chi_; }
  const FieldCtx& ctx() const { return chi_.ctx(); }
  int min_index() const { return alg_ == Algebra::W ? -1 : 0; }
  int max_index() const { return static_cast<int>(chi_.p()) - 2; }

  const Matrix& action(int i) const;
  void set_action(int i, Matrix m);

 private:
  Algebra alg_;
  PCharacter chi_;
  int dim_;
  std::vector<Matrix> actions_;  // offset by min_index
};

/// Reduced Verma module V_chi(lambda), dim p, as a W-module.
ModuleRep build_verma(const PCharacter& chi, const FieldElement& lambda);

/// One-dimensional trivial W-module (chi = 0 only).
ModuleRep build_trivial(const PCharacter& chi);

/// The (p-1)-dimensional simple S at height -1.
ModuleRep build_S(const PCharacter& chi);

/// K_{lambda'} as a W_0-module: e_0 acts by lambda', e_i (i >= 1) by 0.
ModuleRep build_weight_line(const PCharacter& chi, const FieldElement& lambda_prime);

ModuleRep restrict_to_W0(const ModuleRep& rep);

/// Dual module at height -1: actions x -> -x^T.
ModuleRep dual_rep(const ModuleRep& rep);
ModuleSpec dualize(const ModuleSpec& spec, const PCharacter& chi);

/// Catalog of the simple modules for chi (heights -1, 0, 1, p-1).
/// At height p-1 the single entry is the symbolic L (no matrix model);
/// all other simples at that height are projective.
std::vector<ModuleSpec> simple_modules(const PCharacter& chi);

ModuleRep build_from_spec(const ModuleSpec& spec, const PCharacter& chi);

struct ModuleViolation {
  int i, j;  // offending pair, or (i, i) for a p-character failure
  std::string what;
};

/// Verifies bracket compatibility and the p-character identity entry-exactly.
std::vector<ModuleViolation> check_module(const ModuleRep& rep);

ModuleSpec make_verma_spec(const FieldCtx& ctx, const FieldElement& lambda, int height);
ModuleSpec make_trivial_spec(const FieldCtx& ctx);
ModuleSpec make_S_spec(const FieldCtx& ctx);
ModuleSpec make_L_spec(const FieldCtx& ctx);

}  // namespace wittext
