#pragma once

#include <optional>

#include "wittext/modules.hpp"

namespace wittext {

/// The tuple (a_1,...,a_{p-2}) recording e_j w' in an extension of the
/// weight line K_{lambda'} by V_chi(lambda), together with the pair of
/// weights it belongs to.
struct ADatum {
  std::vector<FieldElement> a;  // a[k] = a_{k+1}, length p-2
  FieldElement lambda, lambda_prime;
  PCharacter chi;

  const FieldElement& at(int j) const;  // a_j, 1 <= j <= p-2 (zero beyond)
};

enum class ExtMethod { ClosedForm, OracleFull, OracleReduced };

struct ExtResult {
  int dim = 0;
  ExtMethod method = ExtMethod::ClosedForm;
  bool classified = true;
  std::string note;
  std::optional<ADatum> witness;
};

/// Theta(chi): the diagonal together with (0,p-1) and (p-1,0) when those lie
/// in Lambda(chi) x Lambda(chi) (i.e. at height < 1).
bool theta_membership(const FieldElement& lambda, const FieldElement& lambda_prime,
                      const PCharacter& chi);

/// One step of the defining recursion:
///   (j-1) a_{j+1} = -(-1)^j (prod_{k=1}^{j} (l - l' - k)) (j(l+1) + l' + 1) a_1
///                   - (l - l' - j)(l + l' + j + 1) a_j
/// solved for a_{j+1}; valid for 2 <= j <= p-3.
FieldElement adatum_recursion_step(int j, const FieldElement& a1, const FieldElement& aj,
                                   const FieldElement& lambda, const FieldElement& lambda_prime,
                                   const FieldCtx& ctx);

/// Closed-form coefficients with a_j = A_j a_1 + B_j a_2 (3 <= j <= p-2).
/// Implemented independently of the recursion; the two are cross-checked in
/// the test suite.
FieldElement coeff_A(int j, const FieldElement& lambda, const FieldElement& lambda_prime,
                     const FieldCtx& ctx);
FieldElement coeff_B(int j, const FieldElement& lambda, const FieldElement& lambda_prime,
                     const FieldCtx& ctx);

/// Extends (a_1, a_2) to the full tuple via the recursion.
ADatum extend_adatum(const FieldElement& a1, const FieldElement& a2,
                     const FieldElement& lambda, const FieldElement& lambda_prime,
                     const PCharacter& chi);

/// Checks the full condition set for the tuple to be the datum of an actual
/// extension with p-character chi: the commutator conditions over the index
/// set {(1,p-2)} u {2 <= i < j <= p-2}, the p-character constraint on a_1,
/// and the normalization fixed for pairs off Theta(chi).
std::vector<std::string> check_conditions(const ADatum& a);

/// The explicit (p+1)-dimensional W_0-module attached to a valid datum.
ModuleRep build_Ma(const ADatum& a);

/// dim Ext over U_chi(W_0) of the weight line K_{lambda'} by V_chi(lambda),
/// by the closed-form case analysis.  Valid for any pair of weights in
/// Lambda(chi) (including non-simple Verma weights at height -1).
ExtResult classify_w0_ext(const FieldElement& lambda, const FieldElement& lambda_prime,
                          const PCharacter& chi);

/// A nonzero valid a-datum for the pair, when one exists.
std::optional<ADatum> w0_ext_witness(const FieldElement& lambda,
                                     const FieldElement& lambda_prime, const PCharacter& chi);

/// dim Ext1 between two simple modules of the same chi (convention:
/// Ext(M, N) classifies 0 -> N -> E -> M -> 0).
ExtResult classify_ext_simple(const ModuleSpec& M, const ModuleSpec& N, const PCharacter& chi);

struct ExtTable {
  std::vector<ModuleSpec> simples;
  std::vector<std::vector<int>> dims;  // dims[M][N]
};

ExtTable ext_table(const PCharacter& chi);

/// Human-readable status for the heights the classification does not cover.
std::string not_classified_note(int64_t p, int height);

}  // namespace wittext
