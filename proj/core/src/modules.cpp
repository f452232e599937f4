#include "wittext/modules.hpp"

namespace wittext {

namespace {

// falling factorial i!/(i-j)! as a field element, computed as a product of
// j integer factors (never via division)
FieldElement falling_factorial(const FieldCtx& ctx, int64_t i, int64_t j) {
  FieldElement r = ctx.one();
  for (int64_t t = 0; t < j; ++t) r = ctx.mul(r, ctx.from_int(i - t));
  return r;
}

}  // namespace

ModuleRep::ModuleRep(Algebra alg, const PCharacter& chi, int dim)
    : alg_(alg), chi_(chi), dim_(dim) {
  if (dim <= 0) throw Error(Errc::InvalidArgument, "module dimension must be positive");
  int n = static_cast<int>(chi.p()) - (alg == Algebra::W ? 0 : 1);
  actions_.reserve(n);
  for (int k = 0; k < n; ++k) actions_.emplace_back(chi.ctx(), dim, dim);
}

const Matrix& ModuleRep::action(int i) const {
  if (i < min_index() || i > max_index())
    throw Error(Errc::IndexOutOfRange, "action index outside algebra range");
  return actions_[static_cast<size_t>(i - min_index())];
}

void ModuleRep::set_action(int i, Matrix m) {
  if (i < min_index() || i > max_index())
    throw Error(Errc::IndexOutOfRange, "action index outside algebra range");
  if (m.rows() != dim_ || m.cols() != dim_)
    throw Error(Errc::InvalidArgument, "action matrix shape mismatch");
  actions_[static_cast<size_t>(i - min_index())] = std::move(m);
}

ModuleRep build_verma(const PCharacter& chi, const FieldElement& lambda) {
  const FieldCtx& ctx = chi.ctx();
  if (chi.height() > 1) throw Error(Errc::UnsupportedHeight, "Verma needs height <= 1");
  if (!in_lambda(chi, lambda))
    throw Error(Errc::WeightNotInLambda, "lambda^p - lambda != chi(e_0)^p");
  const int p = static_cast<int>(chi.p());
  ModuleRep rep(Algebra::W, chi, p);

  // e_j v_i = (-1)^j i!/(i-j)! ((j+1) lambda - i + j) v_{i-j}   (j <= i)
  for (int j = 0; j <= p - 2; ++j) {
    Matrix m(ctx, p, p);
    for (int i = j; i <= p - 1; ++i) {
      FieldElement coeff = falling_factorial(ctx, i, j);
      FieldElement lin = ctx.add(ctx.mul(ctx.from_int(j + 1), lambda), ctx.from_int(j - i));
      coeff = ctx.mul(coeff, lin);
      if (j % 2 == 1) coeff = ctx.neg(coeff);
      m.set(i - j, i, coeff);
    }
    rep.set_action(j, std::move(m));
  }

  // e_{-1} v_i = v_{i+1}, wrapping to chi(e_{-1})^p v_0
  Matrix lower(ctx, p, p);
  for (int i = 0; i + 1 <= p - 1; ++i) lower.set(i + 1, i, ctx.one());
  lower.set(0, p - 1, ctx.pow(chi.value(-1), static_cast<uint64_t>(p)));
  rep.set_action(-1, std::move(lower));
  return rep;
}

ModuleRep build_trivial(const PCharacter& chi) {
  if (chi.height() != -1)
    throw Error(Errc::NonzeroCharacter, "trivial module needs chi = 0");
  return ModuleRep(Algebra::W, chi, 1);  // all actions zero
}

ModuleRep build_S(const PCharacter& chi) {
  if (chi.height() != -1)
    throw Error(Errc::NonzeroCharacter, "S needs chi = 0");
  const FieldCtx& ctx = chi.ctx();
  const int p = static_cast<int>(chi.p());
  ModuleRep rep(Algebra::W, chi, p - 1);

  // e_j v_i = (-1)^{j+1} (i+1)!/(i-j)! v_{i-j}   (j <= i)
  for (int j = 0; j <= p - 2; ++j) {
    Matrix m(ctx, p - 1, p - 1);
    for (int i = j; i <= p - 2; ++i) {
      FieldElement coeff = falling_factorial(ctx, i + 1, j + 1);
      if (j % 2 == 0) coeff = ctx.neg(coeff);
      m.set(i - j, i, coeff);
    }
    rep.set_action(j, std::move(m));
  }

  Matrix lower(ctx, p - 1, p - 1);
  for (int i = 0; i + 1 <= p - 2; ++i) lower.set(i + 1, i, ctx.one());
  rep.set_action(-1, std::move(lower));
  return rep;
}

ModuleRep build_weight_line(const PCharacter& chi, const FieldElement& lambda_prime) {
  if (chi.height() > 1) throw Error(Errc::UnsupportedHeight, "weight line needs height <= 1");
  if (!in_lambda(chi, lambda_prime))
    throw Error(Errc::WeightNotInLambda, "lambda'^p - lambda' != chi(e_0)^p");
  ModuleRep rep(Algebra::W0, chi, 1);
  Matrix m(chi.ctx(), 1, 1);
  m.set(0, 0, lambda_prime);
  rep.set_action(0, std::move(m));
  return rep;
}

ModuleRep restrict_to_W0(const ModuleRep& rep) {
  if (rep.algebra() == Algebra::W0) return rep;
  ModuleRep out(Algebra::W0, rep.chi(), rep.dim());
  for (int i = 0; i <= rep.max_index(); ++i) out.set_action(i, rep.action(i));
  return out;
}

ModuleRep dual_rep(const ModuleRep& rep) {
  if (rep.chi().height() != -1)
    throw Error(Errc::UnsupportedHeight, "duals are modeled at height -1 only");
  ModuleRep out(rep.algebra(), rep.chi(), rep.dim());
  for (int i = rep.min_index(); i <= rep.max_index(); ++i)
    out.set_action(i, rep.action(i).transpose().negated());
  return out;
}

ModuleSpec dualize(const ModuleSpec& spec, const PCharacter& chi) {
  if (chi.height() != -1)
    throw Error(Errc::UnsupportedHeight, "dualize is defined at height -1 only");
  const FieldCtx& ctx = chi.ctx();
  switch (spec.kind) {
    case ModuleKind::Trivial:
    case ModuleKind::S:
      return spec;
    case ModuleKind::Verma: {
      FieldElement mu = ctx.sub(ctx.from_int(ctx.p() - 1), spec.lambda);
      return make_verma_spec(ctx, mu, -1);
    }
    default:
      throw Error(Errc::InvalidArgument, "no dual for this spec");
  }
}

ModuleSpec make_verma_spec(const FieldCtx& ctx, const FieldElement& lambda, int height) {
  ModuleSpec s{ModuleKind::Verma, lambda, ""};
  if (height <= 0) {
    s.label = "V" + std::to_string(ctx.to_residue(lambda));
  } else {
    // weights lie off the prime field; label by the offset from the generator
    FieldElement off = ctx.sub(lambda, ctx.generator());
    s.label = "V[x+" + std::to_string(ctx.to_residue(off)) + "]";
  }
  return s;
}

ModuleSpec make_trivial_spec(const FieldCtx& ctx) {
  return ModuleSpec{ModuleKind::Trivial, ctx.zero(), "K"};
}

ModuleSpec make_S_spec(const FieldCtx& ctx) {
  return ModuleSpec{ModuleKind::S, ctx.zero(), "S"};
}

ModuleSpec make_L_spec(const FieldCtx& ctx) {
  return ModuleSpec{ModuleKind::SymbolicL, ctx.zero(), "L"};
}

std::vector<ModuleSpec> simple_modules(const PCharacter& chi) {
  const FieldCtx& ctx = chi.ctx();
  const int64_t p = chi.p();
  int h = chi.height();
  std::vector<ModuleSpec> out;
  if (h == -1) {
    out.push_back(make_trivial_spec(ctx));
    out.push_back(make_S_spec(ctx));
    for (int64_t k = 1; k <= p - 2; ++k)
      out.push_back(make_verma_spec(ctx, ctx.from_int(k), h));
  } else if (h == 0) {
    for (int64_t k = 0; k <= p - 2; ++k)
      out.push_back(make_verma_spec(ctx, ctx.from_int(k), h));
  } else if (h == 1) {
    WeightSet ws = weight_set(chi);
    for (const FieldElement& lam : ws.elements)
      out.push_back(make_verma_spec(ctx, lam, h));
  } else if (h == static_cast<int>(p) - 1) {
    out.push_back(make_L_spec(ctx));
  } else {
    throw Error(Errc::UnsupportedHeight,
                "height " + std::to_string(h) + " is not classified");
  }
  return out;
}

ModuleRep build_from_spec(const ModuleSpec& spec, const PCharacter& chi) {
  switch (spec.kind) {
    case ModuleKind::Trivial: return build_trivial(chi);
    case ModuleKind::S: return build_S(chi);
    case ModuleKind::Verma: return build_verma(chi, spec.lambda);
    case ModuleKind::WeightLine: return build_weight_line(chi, spec.lambda);
    case ModuleKind::SymbolicL:
      throw Error(Errc::UnsupportedHeight, "L at height p-1 has no matrix model");
  }
  throw Error(Errc::InvalidArgument, "unknown module kind");
}

std::vector<ModuleViolation> check_module(const ModuleRep& rep) {
  std::vector<ModuleViolation> out;
  const FieldCtx& ctx = rep.ctx();
  const PCharacter& chi = rep.chi();
  WittAlgebra alg(chi.p());
  const int lo = rep.min_index(), hi = rep.max_index();

  for (int i = lo; i <= hi; ++i) {
    for (int j = i + 1; j <= hi; ++j) {
      Matrix lhs = rep.action(i).mul(rep.action(j)).sub(rep.action(j).mul(rep.action(i)));
      BracketTerm t = alg.bracket(i, j);
      Matrix rhs(ctx, rep.dim(), rep.dim());
      if (!t.zero && t.index >= lo)
        rhs = rep.action(t.index).scaled(ctx.from_int(t.coeff));
      if (!lhs.equals(rhs))
        out.push_back({i, j, "bracket compatibility fails"});
    }
  }

  const uint64_t p = static_cast<uint64_t>(chi.p());
  for (int i = lo; i <= hi; ++i) {
    Matrix lhs = rep.action(i).pow(p);
    Matrix rhs(ctx, rep.dim(), rep.dim());
    if (alg.p_power_is_e0(i)) rhs = rep.action(0);
    FieldElement cp = ctx.pow(chi.value(i), p);
    if (!ctx.is_zero(cp)) rhs = rhs.add(Matrix::identity(ctx, rep.dim()).scaled(cp));
    if (!lhs.equals(rhs))
      out.push_back({i, i, "p-character identity fails"});
  }
  return out;
}

}  // namespace wittext
