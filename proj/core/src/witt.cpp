#include "wittext/witt.hpp"

namespace wittext {

WittAlgebra::WittAlgebra(int64_t p) : p_(p) {
  if (!is_prime(p)) throw Error(Errc::NonPrime, "p = " + std::to_string(p));
  if (p <= 3) throw Error(Errc::PrimeTooSmall, "need p > 3");
}

BracketTerm WittAlgebra::bracket(int i, int j) const {
  if (i < min_index() || i > max_index() || j < min_index() || j > max_index())
    throw Error(Errc::IndexOutOfRange, "bracket index outside {-1,...,p-2}");
  BracketTerm t;
  if (i == j) return t;
  int k = i + j;
  if (k < min_index() || k > max_index()) return t;
  int64_t c = (j - i) % p_;
  if (c < 0) c += p_;
  if (c == 0) return t;
  t.zero = false;
  t.coeff = c;
  t.index = k;
  return t;
}

bool WittAlgebra::p_power_is_e0(int i) const {
  if (i < min_index() || i > max_index())
    throw Error(Errc::IndexOutOfRange, "p-power index outside {-1,...,p-2}");
  return i == 0;
}

PCharacter::PCharacter(const WittAlgebra& alg, const FieldCtx& ctx)
    : p_(alg.p()), ctx_(ctx) {
  if (ctx.p() != p_) throw Error(Errc::WrongFieldContext, "field characteristic != algebra p");
}

void PCharacter::set_value(int i, const FieldElement& v) {
  if (i < -1 || i > static_cast<int>(p_) - 2)
    throw Error(Errc::IndexOutOfRange, "character index outside {-1,...,p-2}");
  if (!ctx_.in_prime_field(v))
    throw Error(Errc::InvalidArgument, "character values must lie in the prime subfield");
  if (ctx_.is_zero(v))
    values_.erase(i);
  else
    values_[i] = v;
}

FieldElement PCharacter::value(int i) const {
  auto it = values_.find(i);
  return it == values_.end() ? ctx_.zero() : it->second;
}

int PCharacter::height() const {
  int h = -1;
  for (const auto& [i, v] : values_)
    if (!ctx_.is_zero(v)) h = std::max(h, i + 1);
  return h;
}

bool PCharacter::same_as(const PCharacter& other) const {
  if (p_ != other.p_ || !ctx_.same_as(other.ctx_)) return false;
  return values_ == other.values_;
}

WeightSet weight_set(const PCharacter& chi) {
  const FieldCtx& ctx = chi.ctx();
  int h = chi.height();
  if (h > 1) throw Error(Errc::UnsupportedHeight, "weight set needs height <= 1");
  WeightSet ws;
  if (h <= 0) {
    ws.base_root = ctx.zero();
  } else {
    // chi(e_0) = c != 0; Lambda(chi) lives in F_p[x]/(x^p - x - c^p)
    if (ctx.is_prime_field())
      throw Error(Errc::WrongFieldContext,
                  "height 1 weight set needs the Artin-Schreier extension context");
    FieldElement g = ctx.generator();
    FieldElement target = ctx.pow(chi.value(0), static_cast<uint64_t>(ctx.p()));
    FieldElement check = ctx.sub(ctx.pow(g, static_cast<uint64_t>(ctx.p())), g);
    if (!ctx.eq(check, target))
      throw Error(Errc::WrongFieldContext,
                  "context modulus does not match x^p - x - chi(e_0)^p");
    ws.base_root = g;
  }
  for (int64_t i = 0; i < ctx.p(); ++i)
    ws.elements.push_back(ctx.add(ws.base_root, ctx.from_int(i)));
  return ws;
}

bool in_lambda(const PCharacter& chi, const FieldElement& lambda) {
  const FieldCtx& ctx = chi.ctx();
  FieldElement lhs = ctx.sub(ctx.pow(lambda, static_cast<uint64_t>(ctx.p())), lambda);
  FieldElement rhs = ctx.pow(chi.value(0), static_cast<uint64_t>(ctx.p()));
  return ctx.eq(lhs, rhs);
}

int64_t canonical_rep(const FieldElement& mu, const FieldCtx& ctx) {
  return ctx.to_residue(mu);  // throws NotInPrimeField when mu is not rational
}

}  // namespace wittext
