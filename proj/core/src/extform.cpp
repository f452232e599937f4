#include "wittext/extform.hpp"

namespace wittext {

namespace {

FieldElement ff(const FieldCtx& ctx, int64_t top, int64_t count) {
  // falling factorial top (top-1) ... (top-count+1) as a product mod p
  FieldElement r = ctx.one();
  for (int64_t t = 0; t < count; ++t) r = ctx.mul(r, ctx.from_int(top - t));
  return r;
}

FieldElement factorial(const FieldCtx& ctx, int64_t n) { return ff(ctx, n, n); }

void require_weights(const FieldElement& lambda, const FieldElement& lambda_prime,
                     const PCharacter& chi) {
  if (chi.height() > 1) throw Error(Errc::UnsupportedHeight, "weights need height <= 1");
  if (!in_lambda(chi, lambda) || !in_lambda(chi, lambda_prime))
    throw Error(Errc::WeightNotInLambda, "weight outside Lambda(chi)");
}

}  // namespace

const FieldElement& ADatum::at(int j) const {
  static const FieldElement zero_elem{};  // never returned; placeholder below
  (void)zero_elem;
  if (j < 1 || j > static_cast<int>(a.size()))
    throw Error(Errc::IndexOutOfRange, "a_j index outside 1..p-2");
  return a[static_cast<size_t>(j) - 1];
}

bool theta_membership(const FieldElement& lambda, const FieldElement& lambda_prime,
                      const PCharacter& chi) {
  require_weights(lambda, lambda_prime, chi);
  const FieldCtx& ctx = chi.ctx();
  if (ctx.eq(lambda, lambda_prime)) return true;
  FieldElement z = ctx.zero(), top = ctx.from_int(ctx.p() - 1);
  return (ctx.eq(lambda, z) && ctx.eq(lambda_prime, top)) ||
         (ctx.eq(lambda, top) && ctx.eq(lambda_prime, z));
}

FieldElement adatum_recursion_step(int j, const FieldElement& a1, const FieldElement& aj,
                                   const FieldElement& lambda, const FieldElement& lambda_prime,
                                   const FieldCtx& ctx) {
  const int64_t p = ctx.p();
  if (j < 2 || j > static_cast<int>(p) - 3)
    throw Error(Errc::IndexOutOfRange, "recursion step needs 2 <= j <= p-3");
  FieldElement diff = ctx.sub(lambda, lambda_prime);
  FieldElement prod = ctx.one();
  for (int k = 1; k <= j; ++k) prod = ctx.mul(prod, ctx.sub(diff, ctx.from_int(k)));
  FieldElement lin1 = ctx.add(ctx.mul(ctx.from_int(j), ctx.add(lambda, ctx.one())),
                              ctx.add(lambda_prime, ctx.one()));
  FieldElement term1 = ctx.mul(ctx.mul(prod, lin1), a1);
  if (j % 2 == 0) term1 = ctx.neg(term1);  // -(-1)^j ... a_1

  FieldElement lin2 = ctx.mul(ctx.sub(diff, ctx.from_int(j)),
                              ctx.add(ctx.add(lambda, lambda_prime), ctx.from_int(j + 1)));
  FieldElement rhs = ctx.sub(term1, ctx.mul(lin2, aj));
  return ctx.div(rhs, ctx.from_int(j - 1));
}

FieldElement coeff_A(int j, const FieldElement& lambda, const FieldElement& lambda_prime,
                     const FieldCtx& ctx) {
  const int64_t p = ctx.p();
  if (j < 3 || j > static_cast<int>(p) - 2)
    throw Error(Errc::IndexOutOfRange, "coeff_A needs 3 <= j <= p-2");
  FieldElement diff = ctx.sub(lambda, lambda_prime);
  FieldElement sum = ctx.add(lambda, lambda_prime);

  FieldElement prod = ctx.one();
  for (int k = 1; k <= j - 1; ++k) prod = ctx.mul(prod, ctx.sub(diff, ctx.from_int(k)));

  // (j-1) lambda + lambda' + j
  FieldElement inner = ctx.add(ctx.mul(ctx.from_int(j - 1), lambda),
                               ctx.add(lambda_prime, ctx.from_int(j)));
  FieldElement inv_jm3_fact = ctx.inv(factorial(ctx, j - 3));
  for (int k = 4; k <= j; ++k) {
    FieldElement term = ctx.mul(factorial(ctx, j - k), inv_jm3_fact);
    FieldElement lin = ctx.add(ctx.mul(ctx.from_int(j + 2 - k), lambda),
                               ctx.add(lambda_prime, ctx.from_int(j + 3 - k)));
    term = ctx.mul(term, lin);
    for (int l = 0; l <= k - 4; ++l)
      term = ctx.mul(term, ctx.add(sum, ctx.from_int(j - l)));
    inner = ctx.add(inner, term);
  }

  FieldElement r = ctx.div(ctx.mul(prod, inner), ctx.from_int(j - 2));
  if (j % 2 == 1) r = ctx.neg(r);
  return r;
}

FieldElement coeff_B(int j, const FieldElement& lambda, const FieldElement& lambda_prime,
                     const FieldCtx& ctx) {
  const int64_t p = ctx.p();
  if (j < 3 || j > static_cast<int>(p) - 2)
    throw Error(Errc::IndexOutOfRange, "coeff_B needs 3 <= j <= p-2");
  FieldElement diff = ctx.sub(lambda, lambda_prime);
  FieldElement sum = ctx.add(lambda, lambda_prime);
  FieldElement r = ctx.inv(factorial(ctx, j - 2));
  for (int k = 2; k <= j - 1; ++k) {
    r = ctx.mul(r, ctx.sub(diff, ctx.from_int(k)));
    r = ctx.mul(r, ctx.add(sum, ctx.from_int(k + 1)));
  }
  if (j % 2 == 1) r = ctx.neg(r);
  return r;
}

ADatum extend_adatum(const FieldElement& a1, const FieldElement& a2,
                     const FieldElement& lambda, const FieldElement& lambda_prime,
                     const PCharacter& chi) {
  require_weights(lambda, lambda_prime, chi);
  const FieldCtx& ctx = chi.ctx();
  const int n = static_cast<int>(chi.p()) - 2;
  ADatum d{std::vector<FieldElement>(static_cast<size_t>(n), ctx.zero()), lambda, lambda_prime,
           chi};
  d.a[0] = a1;
  if (n >= 2) d.a[1] = a2;
  for (int j = 2; j <= n - 1; ++j)
    d.a[static_cast<size_t>(j)] =
        adatum_recursion_step(j, a1, d.a[static_cast<size_t>(j) - 1], lambda, lambda_prime, ctx);
  return d;
}

std::vector<std::string> check_conditions(const ADatum& d) {
  std::vector<std::string> out;
  const PCharacter& chi = d.chi;
  const FieldCtx& ctx = chi.ctx();
  const int64_t p = chi.p();
  const int n = static_cast<int>(p) - 2;
  require_weights(d.lambda, d.lambda_prime, chi);
  if (static_cast<int>(d.a.size()) != n) {
    out.push_back("datum length != p-2");
    return out;
  }

  const FieldElement& l = d.lambda;
  const FieldElement& lp = d.lambda_prime;
  FieldElement diff = ctx.sub(l, lp);
  auto a_of = [&](int j) { return j >= 1 && j <= n ? d.at(j) : ctx.zero(); };
  auto rep = [&](int t) {
    // [lambda - lambda' - t]
    return canonical_rep(ctx.sub(diff, ctx.from_int(t)), ctx);
  };

  // recursion consistency for j >= 3
  for (int j = 3; j <= n; ++j) {
    FieldElement expect =
        adatum_recursion_step(j - 1, a_of(1), a_of(j - 1), l, lp, ctx);
    if (!ctx.eq(expect, a_of(j)))
      out.push_back("a_" + std::to_string(j) + " violates the defining recursion");
  }

  // normalization for pairs off Theta(chi)
  if (!theta_membership(l, lp, chi)) {
    bool sum_is_pm1 = ctx.eq(ctx.add(l, lp), ctx.from_int(p - 1));
    if (!sum_is_pm1 && !ctx.is_zero(a_of(1)))
      out.push_back("normalization requires a_1 = 0 off Theta when lambda+lambda' != p-1");
    if (sum_is_pm1 && !ctx.is_zero(a_of(2)))
      out.push_back("normalization requires a_2 = 0 off Theta when lambda+lambda' = p-1");
  }

  // commutator conditions over {1, p-2} and all 2 <= i < j <= p-2
  auto check_pair = [&](int i, int j) {
    int64_t mi = rep(i), mj = rep(j);
    // (j-i) a_{i+j} = [i <= mj] (-1)^i mj!/(mj-i)! (i(l+1)+l'+j) a_j
    //               - [j <= mi] (-1)^j mi!/(mi-j)! (j(l+1)+l'+i) a_i
    FieldElement lhs = ctx.mul(ctx.from_int(j - i), a_of(i + j));
    FieldElement rhs = ctx.zero();
    if (i <= mj) {
      FieldElement t = ff(ctx, mj, i);
      FieldElement lin = ctx.add(ctx.mul(ctx.from_int(i), ctx.add(l, ctx.one())),
                                 ctx.add(lp, ctx.from_int(j)));
      t = ctx.mul(ctx.mul(t, lin), a_of(j));
      if (i % 2 == 1) t = ctx.neg(t);
      rhs = ctx.add(rhs, t);
    }
    if (j <= mi) {
      FieldElement t = ff(ctx, mi, j);
      FieldElement lin = ctx.add(ctx.mul(ctx.from_int(j), ctx.add(l, ctx.one())),
                                 ctx.add(lp, ctx.from_int(i)));
      t = ctx.mul(ctx.mul(t, lin), a_of(i));
      if (j % 2 == 0) t = ctx.neg(t);
      rhs = ctx.sub(rhs, ctx.neg(t));  // subtract (-1)^j (...) a_i
    }
    if (!ctx.eq(lhs, rhs))
      out.push_back("commutator condition fails at (i,j)=(" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
  };
  check_pair(1, n);
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) check_pair(i, j);

  // p-character constraint on a_1 (the only index that can obstruct)
  if (ctx.eq(l, lp)) {
    int h = chi.height();
    bool need_zero =
        (h <= 0 && ctx.eq(ctx.mul(ctx.from_int(2), l), ctx.from_int(p - 1))) || h == 1;
    if (need_zero && !ctx.is_zero(a_of(1)))
      out.push_back("p-character forces a_1 = 0 for this diagonal pair");
  }
  return out;
}

ModuleRep build_Ma(const ADatum& d) {
  auto viol = check_conditions(d);
  if (!viol.empty()) throw Error(Errc::ConditionsViolated, viol.front());
  const PCharacter& chi = d.chi;
  const FieldCtx& ctx = chi.ctx();
  const int p = static_cast<int>(chi.p());
  FieldElement diff = ctx.sub(d.lambda, d.lambda_prime);

  // basis w_0,...,w_{p-1}, w' (index p)
  ModuleRep rep(Algebra::W0, chi, p + 1);
  ModuleRep verma = build_verma(chi, d.lambda);
  for (int j = 0; j <= p - 2; ++j) {
    Matrix m(ctx, p + 1, p + 1);
    const Matrix& vj = verma.action(j);
    for (int r = 0; r < p; ++r)
      for (int c = 0; c < p; ++c) m.set(r, c, vj.get(r, c));
    if (j == 0) {
      m.set(p, p, d.lambda_prime);
    } else {
      int64_t mj = canonical_rep(ctx.sub(diff, ctx.from_int(j)), ctx);
      m.set(static_cast<int>(mj), p, d.at(j));
    }
    rep.set_action(j, std::move(m));
  }
  return rep;
}

ExtResult classify_w0_ext(const FieldElement& lambda, const FieldElement& lambda_prime,
                          const PCharacter& chi) {
  require_weights(lambda, lambda_prime, chi);
  const FieldCtx& ctx = chi.ctx();
  const int64_t p = chi.p();
  const int h = chi.height();
  ExtResult res;
  res.method = ExtMethod::ClosedForm;

  auto is_int = [&](const FieldElement& v, int64_t k) { return ctx.eq(v, ctx.from_int(k)); };

  if (ctx.eq(lambda, lambda_prime)) {
    res.dim = (h <= 0 && (is_int(lambda, 0) || is_int(lambda, p - 1))) ? 1 : 0;
    return res;
  }
  if ((is_int(lambda, 0) && is_int(lambda_prime, p - 1)) ||
      (is_int(lambda, p - 1) && is_int(lambda_prime, 0))) {
    res.dim = 1;
    return res;
  }

  int64_t m = canonical_rep(ctx.sub(lambda, lambda_prime), ctx);
  bool sum_is_pm1 = ctx.eq(ctx.add(lambda, lambda_prime), ctx.from_int(p - 1));
  if (!sum_is_pm1) {
    bool one = false;
    if (m == 1 && (is_int(lambda, 1) || is_int(lambda, p - 1))) one = true;
    if (m == 2 || m == 3) one = true;
    if (m == 4 && (p > 5 || is_int(lambda, 0) || is_int(lambda, 3))) one = true;
    if (m == 5 && (is_int(lambda, 0) || is_int(lambda, 4))) one = true;
    if (m == 6 && p > 7) {
      // 2 lambda = 5 +- sqrt(19), evaluated radical-free
      FieldElement q = ctx.add(
          ctx.sub(ctx.mul(ctx.from_int(2), ctx.mul(lambda, lambda)),
                  ctx.mul(ctx.from_int(10), lambda)),
          ctx.from_int(3));
      if (ctx.is_zero(q)) one = true;
    }
    res.dim = one ? 1 : 0;
  } else {
    res.dim = (m == 2 || m == 3 || m == 4 || (m == 6 && p == 19)) ? 1 : 0;
  }
  return res;
}

std::optional<ADatum> w0_ext_witness(const FieldElement& lambda,
                                     const FieldElement& lambda_prime, const PCharacter& chi) {
  const FieldCtx& ctx = chi.ctx();
  // Every extension datum is determined by (a_1, a_2) through the recursion,
  // so scanning the projective line of seed pairs finds every ray of valid
  // data.
  std::vector<std::pair<FieldElement, FieldElement>> seeds;
  seeds.emplace_back(ctx.zero(), ctx.one());
  for (int64_t s = 0; s < ctx.p(); ++s) seeds.emplace_back(ctx.one(), ctx.from_int(s));
  for (auto& [a1, a2] : seeds) {
    ADatum d = extend_adatum(a1, a2, lambda, lambda_prime, chi);
    if (check_conditions(d).empty()) return d;
  }
  return std::nullopt;
}

ExtResult classify_ext_simple(const ModuleSpec& M, const ModuleSpec& N, const PCharacter& chi) {
  const FieldCtx& ctx = chi.ctx();
  const int64_t p = chi.p();
  const int h = chi.height();
  if (h != -1 && h != 0 && h != 1 && h != static_cast<int>(p) - 1)
    throw Error(Errc::UnsupportedHeight, not_classified_note(p, h));

  ExtResult res;
  res.method = ExtMethod::ClosedForm;

  if (h == static_cast<int>(p) - 1) {
    if (M.kind != ModuleKind::SymbolicL || N.kind != ModuleKind::SymbolicL)
      throw Error(Errc::InvalidArgument, "height p-1 simples are represented by L only");
    res.dim = 1;
    res.note = "closed form only; no matrix model at height p-1";
    return res;
  }

  auto check_simple = [&](const ModuleSpec& s) {
    if (s.kind == ModuleKind::Verma && h == -1) {
      int64_t r = ctx.to_residue(s.lambda);
      if (r == 0 || r == p - 1)
        throw Error(Errc::InvalidArgument,
                    "V(" + std::to_string(r) + ") is not simple at height -1");
    }
    if ((s.kind == ModuleKind::Trivial || s.kind == ModuleKind::S) && h != -1)
      throw Error(Errc::InvalidArgument, "K and S exist at height -1 only");
  };
  check_simple(M);
  check_simple(N);

  if (M.kind == ModuleKind::Verma && N.kind == ModuleKind::Verma) {
    // Ext(V(mu'), V(mu)) = Ext_{W_0}(K_{mu'}, V(mu))
    return classify_w0_ext(N.lambda, M.lambda, chi);
  }

  // height -1 mixed cases (simple weights only)
  auto lam_is = [&](const ModuleSpec& s, std::initializer_list<int64_t> vals) {
    int64_t r = ctx.to_residue(s.lambda);
    for (int64_t v : vals)
      if (r == ((v % p) + p) % p) return true;
    return false;
  };
  int dim = 0;
  if (M.kind == ModuleKind::Verma && N.kind == ModuleKind::Trivial)
    dim = lam_is(M, {p - 2}) ? 1 : 0;
  else if (M.kind == ModuleKind::Trivial && N.kind == ModuleKind::Verma)
    dim = lam_is(N, {1}) ? 1 : 0;
  else if (M.kind == ModuleKind::Verma && N.kind == ModuleKind::S)
    dim = lam_is(M, {p - 3, p - 4, p - 5}) ? 1 : 0;
  else if (M.kind == ModuleKind::S && N.kind == ModuleKind::Verma)
    dim = lam_is(N, {2, 3, 4}) ? 1 : 0;
  else if (M.kind == ModuleKind::Trivial && N.kind == ModuleKind::Trivial)
    dim = 0;
  else if (M.kind == ModuleKind::S && N.kind == ModuleKind::S)
    dim = 0;
  else if ((M.kind == ModuleKind::Trivial && N.kind == ModuleKind::S) ||
           (M.kind == ModuleKind::S && N.kind == ModuleKind::Trivial))
    dim = 2;
  else
    throw Error(Errc::InvalidArgument, "unsupported spec pair");
  res.dim = dim;
  return res;
}

ExtTable ext_table(const PCharacter& chi) {
  ExtTable t;
  t.simples = simple_modules(chi);
  const size_t n = t.simples.size();
  t.dims.assign(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      t.dims[i][j] = classify_ext_simple(t.simples[i], t.simples[j], chi).dim;
  return t;
}

std::string not_classified_note(int64_t p, int height) {
  return "height " + std::to_string(height) + " (2..p-2) not classified: there is a unique "
         "simple module up to isomorphism, it has a non-trivial self-extension, and its Ext "
         "dimensions are not computed here";
}

}  // namespace wittext
