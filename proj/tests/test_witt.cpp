#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace wittext;
using wittext::testing::setup_for;

TEST_CASE("bracket table") {
  WittAlgebra w(7);
  BracketTerm t = w.bracket(-1, 3);
  CHECK_FALSE(t.zero);
  CHECK(t.index == 2);
  CHECK(t.coeff == 4);
  CHECK(w.bracket(2, 2).zero);
  CHECK(w.bracket(4, 5).zero);  // e_9 does not exist
  CHECK(w.bracket(1, 2).coeff == 1);
  CHECK(w.bracket(1, 2).index == 3);
  CHECK_THROWS_AS(w.bracket(-2, 0), Error);
  CHECK_THROWS_AS(w.bracket(0, 6), Error);
}

TEST_CASE("Jacobi identity, exhaustive for p <= 19") {
  for (int64_t p : {5, 7, 11, 13, 17, 19}) {
    WittAlgebra w(p);
    auto addterm = [&](std::vector<int64_t>& acc, int i, int j, int k) {
      // [[e_i, e_j], e_k] expanded into coordinates
      BracketTerm inner = w.bracket(i, j);
      if (inner.zero) return;
      BracketTerm outer = w.bracket(inner.index, k);
      if (outer.zero) return;
      size_t idx = static_cast<size_t>(outer.index + 1);
      acc[idx] = (acc[idx] + inner.coeff * outer.coeff) % p;
    };
    bool ok = true;
    for (int i = -1; i <= p - 2; ++i)
      for (int j = -1; j <= p - 2; ++j)
        for (int k = -1; k <= p - 2; ++k) {
          std::vector<int64_t> acc(static_cast<size_t>(p), 0);
          addterm(acc, i, j, k);
          addterm(acc, j, k, i);
          addterm(acc, k, i, j);
          for (int64_t v : acc)
            if (v % p != 0) ok = false;
        }
    CHECK(ok);
  }
}

TEST_CASE("p-mapping on the basis") {
  WittAlgebra w(11);
  CHECK(w.p_power_is_e0(0));
  for (int i = -1; i <= 9; ++i)
    if (i != 0) CHECK_FALSE(w.p_power_is_e0(i));
}

TEST_CASE("character heights") {
  auto s = setup_for(7, -1);
  CHECK(s.chi.height() == -1);
  auto s0 = setup_for(7, 0);
  CHECK(s0.chi.height() == 0);
  auto s1 = setup_for(7, 1);
  CHECK(s1.chi.height() == 1);

  // height 2 characters are representable even though nothing downstream
  // classifies them
  FieldCtx f = make_prime_field(7);
  WittAlgebra alg(7);
  PCharacter chi(alg, f);
  chi.set_value(1, f.one());
  CHECK(chi.height() == 2);
}

TEST_CASE("weight set at heights <= 0 is the prime field") {
  auto s = setup_for(5, 0);
  WeightSet ws = weight_set(s.chi);
  CHECK(s.ctx.is_zero(ws.base_root));
  REQUIRE(ws.elements.size() == 5);
  for (int64_t i = 0; i < 5; ++i) CHECK(s.ctx.eq(ws.elements[i], s.ctx.from_int(i)));
}

TEST_CASE("weight set at height 1: x + i over F_5[x]/(x^5 - x - 1)") {
  auto s = setup_for(5, 1);
  WeightSet ws = weight_set(s.chi);
  REQUIRE(ws.elements.size() == 5);
  FieldElement target = s.ctx.pow(s.chi.value(0), 5);
  for (const FieldElement& lam : ws.elements) {
    CHECK(s.ctx.eq(s.ctx.sub(s.ctx.pow(lam, 5), lam), target));
    CHECK(in_lambda(s.chi, lam));
  }
  // and nothing rational qualifies
  for (int64_t i = 0; i < 5; ++i) CHECK_FALSE(in_lambda(s.chi, s.ctx.from_int(i)));
}

TEST_CASE("height 1 weight set demands the matching field context") {
  FieldCtx f = make_prime_field(5);
  WittAlgebra alg(5);
  PCharacter chi(alg, f);
  chi.set_value(0, f.one());
  CHECK_THROWS_AS(weight_set(chi), Error);
  // wrong Artin-Schreier constant: x^5 - x = 2 but chi(e_0)^5 = 1
  FieldCtx g = make_artin_schreier_field(5, 2);
  PCharacter chi2(alg, g);
  chi2.set_value(0, g.one());
  CHECK_THROWS_AS(weight_set(chi2), Error);
}

TEST_CASE("canonical representative") {
  FieldCtx f = make_prime_field(11);
  CHECK(canonical_rep(f.from_int(-3), f) == 8);
  FieldCtx g = make_artin_schreier_field(5, 1);
  FieldElement d = g.sub(g.add(g.generator(), g.from_int(4)), g.generator());
  CHECK(canonical_rep(d, g) == 4);
  CHECK_THROWS_AS(canonical_rep(g.generator(), g), Error);
}

TEST_CASE("character values are confined to the prime subfield") {
  FieldCtx g = make_artin_schreier_field(5, 1);
  WittAlgebra alg(5);
  PCharacter chi(alg, g);
  CHECK_THROWS_AS(chi.set_value(0, g.generator()), Error);
  CHECK_NOTHROW(chi.set_value(0, g.from_int(2)));
}
