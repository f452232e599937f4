#pragma once

#include "wittext/oracle.hpp"

namespace wittext::testing {

/// Canonical (ctx, chi) for a height: -1 -> chi = 0; 0 -> chi(e_-1) = 1;
/// 1 -> chi(e_0) = 1 over the matching Artin-Schreier field.
struct Setup {
  FieldCtx ctx;
  PCharacter chi;
};

inline Setup setup_for(int64_t p, int height) {
  FieldCtx ctx = height == 1 ? make_artin_schreier_field(p, 1) : make_prime_field(p);
  WittAlgebra alg(p);
  PCharacter chi(alg, ctx);
  if (height == 0) chi.set_value(-1, ctx.one());
  if (height == 1) chi.set_value(0, ctx.one());
  return Setup{ctx, chi};
}

}  // namespace wittext::testing
