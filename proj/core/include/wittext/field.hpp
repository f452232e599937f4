#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wittext/error.hpp"

namespace wittext {

/// Element of F_p or of F_p[x]/(f).  Coefficients of the representative
/// polynomial, little-endian, always of length equal to the field degree and
/// reduced into {0,...,p-1}.
struct FieldElement {
  std::vector<int64_t> c;

  bool operator==(const FieldElement&) const = default;
};

/// Exact arithmetic context for F_p (degree 1) or F_p[x]/(f) with f monic
/// irreducible.  All operations are pure; the context is immutable.
class FieldCtx {
 public:
  /// F_p with p prime, p > 3.
  static FieldCtx prime_field(int64_t p);

  /// F_p[x]/(x^p - x - c), c != 0.  The class of x is a root of t^p - t = c.
  static FieldCtx artin_schreier(int64_t p, int64_t c);

  int64_t p() const { return p_; }
  int degree() const { return d_; }
  const std::vector<int64_t>& modulus() const { return modulus_; }
  bool is_prime_field() const { return d_ == 1; }

  FieldElement zero() const { return FieldElement{std::vector<int64_t>(d_, 0)}; }
  FieldElement one() const { return from_int(1); }
  FieldElement from_int(int64_t v) const;
  /// The class of x (requires degree > 1).
  FieldElement generator() const;
  /// Element from raw coefficient list (length <= degree); reduced mod p.
  FieldElement from_coeffs(const std::vector<int64_t>& coeffs) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, uint64_t e) const;

  bool is_zero(const FieldElement& a) const;
  bool eq(const FieldElement& a, const FieldElement& b) const { return a.c == b.c; }

  /// True when a lies in the prime subfield.
  bool in_prime_field(const FieldElement& a) const;
  /// Residue in {0,...,p-1}; throws NotInPrimeField otherwise.
  int64_t to_residue(const FieldElement& a) const;

  std::string str(const FieldElement& a) const;

  bool same_as(const FieldCtx& other) const {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

  // --- flat coefficient-buffer kernels (used by Matrix) ---------------------
  // Each element occupies degree() consecutive int64 slots.
  void flat_mul(const int64_t* a, const int64_t* b, int64_t* dst) const;
  // dst -= f * src  (elementwise over one element)
  void flat_submul(int64_t* dst, const int64_t* f, const int64_t* src) const;

 private:
  FieldCtx(int64_t p, std::vector<int64_t> modulus);

  // reduce a degree <= 2d-2 coefficient buffer (length 2d-1) mod modulus,
  // writing the low d coefficients to dst.
  void reduce_into(int64_t* work, int64_t* dst) const;

  int64_t p_ = 0;
  int d_ = 1;
  std::vector<int64_t> modulus_;  // monic, length d_+1
};

/// Spec-facing constructors.
FieldCtx make_prime_field(int64_t p);
FieldCtx make_artin_schreier_field(int64_t p, int64_t c);

bool is_prime(int64_t n);

}  // namespace wittext
