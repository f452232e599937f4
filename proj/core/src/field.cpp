#include "wittext/field.hpp"

#include <sstream>

namespace wittext {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::PrimeTooSmall: return "PrimeTooSmall";
    case Errc::ZeroConstant: return "ZeroConstant";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::WeightNotInLambda: return "WeightNotInLambda";
    case Errc::UnsupportedHeight: return "UnsupportedHeight";
    case Errc::NonzeroCharacter: return "NonzeroCharacter";
    case Errc::MixedCharacters: return "MixedCharacters";
    case Errc::ConditionsViolated: return "ConditionsViolated";
    case Errc::WrongFieldContext: return "WrongFieldContext";
    case Errc::NotInPrimeField: return "NotInPrimeField";
    case Errc::DimensionOverflow: return "DimensionOverflow";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {
int64_t mod_norm(int64_t v, int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

int64_t inv_mod(int64_t a, int64_t p) {
  // extended Euclid on integers
  int64_t t = 0, new_t = 1, r = p, new_r = mod_norm(a, p);
  if (new_r == 0) throw Error(Errc::DivisionByZero, "inverse of zero residue");
  while (new_r != 0) {
    int64_t q = r / new_r;
    int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return mod_norm(t, p);
}
}  // namespace

FieldCtx::FieldCtx(int64_t p, std::vector<int64_t> modulus)
    : p_(p), d_(static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)) {}

FieldCtx FieldCtx::prime_field(int64_t p) {
  if (p <= 3) {
    if (is_prime(p)) throw Error(Errc::PrimeTooSmall, "need p > 3");
    throw Error(Errc::NonPrime, "p = " + std::to_string(p) + " is not prime");
  }
  if (!is_prime(p)) throw Error(Errc::NonPrime, "p = " + std::to_string(p) + " is not prime");
  return FieldCtx(p, {0, 1});  // modulus x
}

FieldCtx FieldCtx::artin_schreier(int64_t p, int64_t c) {
  FieldCtx base = prime_field(p);  // validates p
  c = mod_norm(c, p);
  if (c == 0) throw Error(Errc::ZeroConstant, "x^p - x - c needs c != 0");
  // x^p - x - c has no root in F_p when c != 0 (t^p - t = 0 for t in F_p),
  // and an Artin-Schreier polynomial without roots is irreducible.
  std::vector<int64_t> f(static_cast<size_t>(p) + 1, 0);
  f[0] = mod_norm(-c, p);
  f[1] = mod_norm(-1, p);
  f[static_cast<size_t>(p)] = 1;
  return FieldCtx(p, std::move(f));
}

FieldCtx make_prime_field(int64_t p) { return FieldCtx::prime_field(p); }
FieldCtx make_artin_schreier_field(int64_t p, int64_t c) {
  return FieldCtx::artin_schreier(p, c);
}

FieldElement FieldCtx::from_int(int64_t v) const {
  FieldElement e = zero();
  e.c[0] = mod_norm(v, p_);
  return e;
}

FieldElement FieldCtx::generator() const {
  if (d_ < 2) throw Error(Errc::WrongFieldContext, "prime field has no polynomial generator");
  FieldElement e = zero();
  e.c[1] = 1;
  return e;
}

FieldElement FieldCtx::from_coeffs(const std::vector<int64_t>& coeffs) const {
  if (static_cast<int>(coeffs.size()) > d_)
    throw Error(Errc::InvalidArgument, "coefficient list longer than field degree");
  FieldElement e = zero();
  for (size_t i = 0; i < coeffs.size(); ++i) e.c[i] = mod_norm(coeffs[i], p_);
  return e;
}

FieldElement FieldCtx::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = a;
  for (int i = 0; i < d_; ++i) {
    r.c[i] += b.c[i];
    if (r.c[i] >= p_) r.c[i] -= p_;
  }
  return r;
}

FieldElement FieldCtx::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = a;
  for (int i = 0; i < d_; ++i) {
    r.c[i] -= b.c[i];
    if (r.c[i] < 0) r.c[i] += p_;
  }
  return r;
}

FieldElement FieldCtx::neg(const FieldElement& a) const {
  FieldElement r = a;
  for (int i = 0; i < d_; ++i)
    if (r.c[i] != 0) r.c[i] = p_ - r.c[i];
  return r;
}

void FieldCtx::reduce_into(int64_t* work, int64_t* dst) const {
  // modulus is monic; subtract work[k] * x^(k-d) * modulus for k from the top.
  for (int k = 2 * d_ - 2; k >= d_; --k) {
    int64_t lead = work[k] % p_;
    if (lead == 0) continue;
    for (int t = 0; t <= d_; ++t) {
      if (modulus_[t] == 0) continue;
      work[k - d_ + t] -= lead * modulus_[t];
    }
    work[k] = 0;  // redundant with t == d_ but keeps intent clear
  }
  for (int i = 0; i < d_; ++i) dst[i] = mod_norm(work[i], p_);
}

void FieldCtx::flat_mul(const int64_t* a, const int64_t* b, int64_t* dst) const {
  if (d_ == 1) {
    dst[0] = (a[0] * b[0]) % p_;
    return;
  }
  int64_t work[128] = {0};  // degrees in scope are <= 19
  for (int i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d_; ++j) work[i + j] += a[i] * b[j];
  }
  reduce_into(work, dst);
}

void FieldCtx::flat_submul(int64_t* dst, const int64_t* f, const int64_t* src) const {
  if (d_ == 1) {
    dst[0] = mod_norm(dst[0] - f[0] * src[0], p_);
    return;
  }
  int64_t prod[128];
  flat_mul(f, src, prod);
  for (int i = 0; i < d_; ++i) {
    dst[i] -= prod[i];
    if (dst[i] < 0) dst[i] += p_;
  }
}

FieldElement FieldCtx::mul(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = zero();
  flat_mul(a.c.data(), b.c.data(), r.c.data());
  return r;
}

FieldElement FieldCtx::inv(const FieldElement& a) const {
  if (is_zero(a)) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (d_ == 1) return from_int(inv_mod(a.c[0], p_));
  // extended Euclid in F_p[x] against the modulus
  using Poly = std::vector<int64_t>;  // little-endian, may carry leading zeros
  auto deg = [](const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
      if (f[i] != 0) return i;
    return -1;
  };
  Poly r0 = modulus_, r1 = a.c;
  Poly t0 = {0}, t1 = {1};
  while (deg(r1) > 0) {
    // divide r0 by r1: r0 = q*r1 + rem
    int d1 = deg(r1);
    int64_t lead_inv = inv_mod(r1[d1], p_);
    Poly rem = r0;
    Poly q(static_cast<size_t>(std::max(deg(r0) - d1, 0)) + 1, 0);
    for (int k = deg(rem); k >= d1; --k) {
      int64_t coef = mod_norm(rem[k] * lead_inv, p_);
      if (coef == 0) continue;
      q[k - d1] = coef;
      for (int t = 0; t <= d1; ++t)
        rem[k - d1 + t] = mod_norm(rem[k - d1 + t] - coef * r1[t], p_);
    }
    // t_next = t0 - q*t1
    Poly tt(std::max(t0.size(), q.size() + t1.size()), 0);
    for (size_t i = 0; i < t0.size(); ++i) tt[i] = t0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < t1.size(); ++j)
        tt[i + j] = mod_norm(tt[i + j] - q[i] * t1[j], p_);
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(tt);
  }
  if (deg(r1) != 0) throw Error(Errc::DivisionByZero, "element not invertible");
  int64_t s = inv_mod(r1[0], p_);
  FieldElement out = zero();
  for (int i = 0; i < d_ && i < static_cast<int>(t1.size()); ++i)
    out.c[i] = mod_norm(t1[i] * s, p_);
  return out;
}

FieldElement FieldCtx::div(const FieldElement& a, const FieldElement& b) const {
  return mul(a, inv(b));
}

FieldElement FieldCtx::pow(const FieldElement& a, uint64_t e) const {
  FieldElement base = a, r = one();
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool FieldCtx::is_zero(const FieldElement& a) const {
  for (int64_t v : a.c)
    if (v != 0) return false;
  return true;
}

bool FieldCtx::in_prime_field(const FieldElement& a) const {
  for (int i = 1; i < d_; ++i)
    if (a.c[i] != 0) return false;
  return true;
}

int64_t FieldCtx::to_residue(const FieldElement& a) const {
  if (!in_prime_field(a))
    throw Error(Errc::NotInPrimeField, "element has nonzero extension coordinates");
  return a.c[0];
}

std::string FieldCtx::str(const FieldElement& a) const {
  if (d_ == 1) return std::to_string(a.c[0]);
  std::ostringstream os;
  bool first = true;
  for (int i = d_ - 1; i >= 0; --i) {
    if (a.c[i] == 0) continue;
    if (!first) os << "+";
    if (i == 0 || a.c[i] != 1) os << a.c[i];
    if (i > 0) {
      if (a.c[i] != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace wittext
