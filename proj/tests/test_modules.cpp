#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "wittext/serialize.hpp"

using namespace wittext;
using wittext::testing::setup_for;

TEST_CASE("every constructor yields a genuine restricted module") {
  for (int64_t p : {5, 7}) {
    for (int h : {-1, 0, 1}) {
      auto s = setup_for(p, h);
      for (const ModuleSpec& spec : simple_modules(s.chi)) {
        if (spec.kind == ModuleKind::SymbolicL) continue;
        ModuleRep rep = build_from_spec(spec, s.chi);
        CHECK(check_module(rep).empty());
        CHECK(check_module(restrict_to_W0(rep)).empty());
      }
    }
    // weight lines over W_0
    auto s = setup_for(p, 0);
    for (int64_t k = 0; k < p; ++k)
      CHECK(check_module(build_weight_line(s.chi, s.ctx.from_int(k))).empty());
  }
}

TEST_CASE("Verma action entries match the defining formula") {
  auto s = setup_for(5, -1);
  ModuleRep v = build_verma(s.chi, s.ctx.from_int(2));
  // e_1 v_3 = (-1) * 3!/(3-1)! * (2*2 - 3 + 1) v_2 = -6 v_2 = 4 v_2
  CHECK(s.ctx.eq(v.action(1).get(2, 3), s.ctx.from_int(4)));
  // e_0 eigenvalue on v_i is lambda - i
  for (int i = 0; i < 5; ++i)
    CHECK(s.ctx.eq(v.action(0).get(i, i), s.ctx.from_int(2 - i)));
  // e_{-1} shifts the basis down, wrapping with chi(e_{-1})^p = 0
  CHECK(s.ctx.eq(v.action(-1).get(3, 2), s.ctx.one()));
  CHECK(s.ctx.is_zero(v.action(-1).get(0, 4)));

  // at height 0 the wrap coefficient is chi(e_{-1})^p = 1
  auto s0 = setup_for(5, 0);
  ModuleRep v0 = build_verma(s0.chi, s0.ctx.zero());
  CHECK(s0.ctx.eq(v0.action(-1).get(0, 4), s0.ctx.one()));
}

TEST_CASE("S equals the expected quotient model") {
  auto s = setup_for(7, -1);
  ModuleRep sm = build_S(s.chi);
  CHECK(sm.dim() == 6);
  // e_0 w_i = -(i+1) w_i
  for (int i = 0; i < 6; ++i)
    CHECK(s.ctx.eq(sm.action(0).get(i, i), s.ctx.from_int(-(i + 1))));
  // entries agree with V_0(p-1) / top weight line
  ModuleRep v = build_verma(s.chi, s.ctx.from_int(6));
  for (int j = -1; j <= 5; ++j)
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c)
        CHECK(s.ctx.eq(sm.action(j).get(r, c), v.action(j).get(r, c)));
}

TEST_CASE("trivial and S reject nonzero characters") {
  auto s = setup_for(5, 0);
  CHECK_THROWS_AS(build_trivial(s.chi), Error);
  CHECK_THROWS_AS(build_S(s.chi), Error);
}

TEST_CASE("Verma rejects weights outside Lambda(chi)") {
  auto s = setup_for(5, 1);
  CHECK_THROWS_AS(build_verma(s.chi, s.ctx.from_int(2)), Error);
  CHECK_NOTHROW(build_verma(s.chi, s.ctx.add(s.ctx.generator(), s.ctx.from_int(2))));
}

TEST_CASE("simple catalogs per height") {
  auto sm1 = simple_modules(setup_for(7, -1).chi);
  REQUIRE(sm1.size() == 7);  // K, S, V1..V5
  CHECK(sm1[0].label == "K");
  CHECK(sm1[1].label == "S");
  CHECK(sm1[2].label == "V1");
  CHECK(sm1[6].label == "V5");

  auto s0 = simple_modules(setup_for(7, 0).chi);
  REQUIRE(s0.size() == 6);  // V0..V5
  CHECK(s0[0].label == "V0");

  auto s1 = simple_modules(setup_for(7, 1).chi);
  REQUIRE(s1.size() == 7);
  CHECK(s1[0].label == "V[x+0]");

  FieldCtx f = make_prime_field(7);
  WittAlgebra alg(7);
  PCharacter top(alg, f);
  top.set_value(5, f.one());
  auto sl = simple_modules(top);
  REQUIRE(sl.size() == 1);
  CHECK(sl[0].label == "L");
  CHECK_THROWS_AS(build_from_spec(sl[0], top), Error);

  PCharacter mid(alg, f);
  mid.set_value(2, f.one());
  CHECK_THROWS_AS(simple_modules(mid), Error);
}

TEST_CASE("duality at height -1") {
  auto s = setup_for(7, -1);
  // involution on labels: K* = K, S* = S, V(k)* = V(p-1-k)
  for (const ModuleSpec& spec : simple_modules(s.chi)) {
    ModuleSpec d = dualize(spec, s.chi);
    ModuleSpec dd = dualize(d, s.chi);
    CHECK(dd.label == spec.label);
  }
  CHECK(dualize(make_verma_spec(s.ctx, s.ctx.from_int(2), -1), s.chi).label == "V4");

  // dual_rep is a module again, and dualizing twice gives back the actions
  for (const ModuleSpec& spec : simple_modules(s.chi)) {
    ModuleRep rep = build_from_spec(spec, s.chi);
    ModuleRep d = dual_rep(rep);
    CHECK(check_module(d).empty());
    ModuleRep dd = dual_rep(d);
    for (int i = rep.min_index(); i <= rep.max_index(); ++i)
      CHECK(dd.action(i).equals(rep.action(i)));
  }

  auto s0 = setup_for(5, 0);
  CHECK_THROWS_AS(dualize(simple_modules(s0.chi)[0], s0.chi), Error);
}

TEST_CASE("check_module flags a corrupted action") {
  auto s = setup_for(5, -1);
  ModuleRep v = build_verma(s.chi, s.ctx.from_int(1));
  Matrix bad = v.action(1);
  bad.set(0, 0, s.ctx.one());
  v.set_action(1, std::move(bad));
  CHECK_FALSE(check_module(v).empty());
}

TEST_CASE("module JSON round-trip") {
  for (int h : {-1, 0, 1}) {
    auto s = setup_for(5, h);
    auto specs = simple_modules(s.chi);
    ModuleRep rep = build_from_spec(specs.back(), s.chi);
    json j = to_json(rep);
    ModuleRep back = module_from_json(json::parse(j.dump()));
    CHECK(back.dim() == rep.dim());
    CHECK(back.chi().same_as(rep.chi()));
    for (int i = rep.min_index(); i <= rep.max_index(); ++i)
      CHECK(back.action(i).equals(rep.action(i)));
    CHECK(check_module(back).empty());
  }
}
