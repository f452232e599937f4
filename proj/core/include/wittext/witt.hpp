#pragma once

#include <map>

#include "wittext/matrix.hpp"

namespace wittext {

/// One term of a bracket evaluation: coeff * e_index, or zero.
struct BracketTerm {
  bool zero = true;
  int64_t coeff = 0;  // residue in {0,...,p-1}
  int index = 0;
};

/// The p-dimensional graded Witt algebra: basis e_{-1},...,e_{p-2},
/// [e_i,e_j] = (j-i) e_{i+j} and p-mapping e_i^[p] = delta_{i0} e_i.
class WittAlgebra {
 public:
  explicit WittAlgebra(int64_t p);

  int64_t p() const { return p_; }
  int min_index() const { return -1; }
  int max_index() const { return static_cast<int>(p_) - 2; }

  BracketTerm bracket(int i, int j) const;

  /// True iff e_i^[p] = e_i (only i = 0); e_i^[p] = 0 otherwise.
  bool p_power_is_e0(int i) const;

 private:
  int64_t p_;
};

/// A functional chi in W*: the values chi(e_i), stored over a field context.
/// Values are constrained to the prime subfield; see the module docs for the
/// scope restriction this encodes.
class PCharacter {
 public:
  PCharacter(const WittAlgebra& alg, const FieldCtx& ctx);
  static PCharacter zero(const WittAlgebra& alg, const FieldCtx& ctx) {
    return PCharacter(alg, ctx);
  }

  int64_t p() const { return p_; }
  const FieldCtx& ctx() const { return ctx_; }

  void set_value(int i, const FieldElement& v);
  FieldElement value(int i) const;  // zero if unset
  const std::map<int, FieldElement>& values() const { return values_; }

  /// Minimal i with chi(e_j) = 0 for all j >= i; -1 iff chi = 0.
  int height() const;

  bool same_as(const PCharacter& other) const;

 private:
  int64_t p_;
  FieldCtx ctx_;
  std::map<int, FieldElement> values_;  // zero values omitted
};

struct WeightSet {
  FieldElement base_root;          // lambda_0 with lambda_0^p - lambda_0 = chi(e_0)^p
  std::vector<FieldElement> elements;  // lambda_0 + i, i = 0..p-1
};

/// Lambda(chi) = { lambda : lambda^p - lambda = chi(e_0)^p }.  Requires
/// height <= 1; at height 1 the context must be the Artin-Schreier field for
/// chi(e_0)^p.
WeightSet weight_set(const PCharacter& chi);

bool in_lambda(const PCharacter& chi, const FieldElement& lambda);

/// The integer representative [mu] in {0,...,p-1} of a prime-subfield value.
int64_t canonical_rep(const FieldElement& mu, const FieldCtx& ctx);

}  // namespace wittext
