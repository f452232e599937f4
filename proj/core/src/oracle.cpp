#include "wittext/oracle.hpp"

namespace wittext {

namespace {

struct Pair {
  int i, j;
};

// scale so the first nonzero coordinate is 1 (deterministic witness form)
void normalize_vec(Vec& v, const FieldCtx& ctx) {
  for (const FieldElement& x : v)
    if (!ctx.is_zero(x)) {
      FieldElement f = ctx.inv(x);
      for (FieldElement& y : v) y = ctx.mul(f, y);
      return;
    }
}

std::vector<Pair> index_pairs(int lo, int hi) {
  std::vector<Pair> out;
  for (int i = lo; i <= hi; ++i)
    for (int j = i + 1; j <= hi; ++j) out.push_back({i, j});
  return out;
}

void check_compatible(const ModuleRep& M, const ModuleRep& N) {
  if (M.algebra() != N.algebra())
    throw Error(Errc::InvalidArgument, "modules live over different algebras");
  if (!M.chi().same_as(N.chi()))
    throw Error(Errc::MixedCharacters, "modules carry different p-characters");
}

/// Weight keys for the graded solver: key[r][c] = [wN_r - wM_c] when e_0 acts
/// diagonally on both modules and every difference is rational; empty
/// otherwise.
std::vector<std::vector<int>> weight_keys(const ModuleRep& M, const ModuleRep& N) {
  const FieldCtx& ctx = M.ctx();
  const Matrix& dM = M.action(0);
  const Matrix& dN = N.action(0);
  auto diagonal = [&](const Matrix& m) {
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        if (r != c && !ctx.is_zero(m.get(r, c))) return false;
    return true;
  };
  if (!diagonal(dM) || !diagonal(dN)) return {};
  std::vector<std::vector<int>> key(static_cast<size_t>(N.dim()),
                                    std::vector<int>(static_cast<size_t>(M.dim())));
  for (int r = 0; r < N.dim(); ++r)
    for (int c = 0; c < M.dim(); ++c) {
      FieldElement d = ctx.sub(dN.get(r, r), dM.get(c, c));
      if (!ctx.in_prime_field(d)) return {};
      key[static_cast<size_t>(r)][static_cast<size_t>(c)] = static_cast<int>(ctx.to_residue(d));
    }
  return key;
}

/// Rows of the intertwiner system rho_N(x) h - h rho_M(x) = phi(x), used both
/// for hom computations and for splitting tests.
Matrix coboundary_system(const ModuleRep& M, const ModuleRep& N, Vec* rhs, const Cochain* phi) {
  const FieldCtx& ctx = M.ctx();
  const int nN = N.dim(), nM = M.dim();
  const int lo = M.min_index(), hi = M.max_index();
  const int nidx = hi - lo + 1;
  Matrix sys(ctx, nidx * nN * nM, nN * nM);
  if (rhs) rhs->assign(static_cast<size_t>(nidx) * nN * nM, ctx.zero());
  int row = 0;
  for (int i = lo; i <= hi; ++i) {
    const Matrix& an = N.action(i);
    const Matrix& am = M.action(i);
    for (int r = 0; r < nN; ++r)
      for (int c = 0; c < nM; ++c) {
        for (int k = 0; k < nN; ++k) {
          const FieldElement v = an.get(r, k);
          if (!ctx.is_zero(v)) sys.set(row, k * nM + c, ctx.add(sys.get(row, k * nM + c), v));
        }
        for (int k = 0; k < nM; ++k) {
          const FieldElement v = am.get(k, c);
          if (!ctx.is_zero(v)) sys.set(row, r * nM + k, ctx.sub(sys.get(row, r * nM + k), v));
        }
        if (rhs) (*rhs)[static_cast<size_t>(row)] = (*phi)[static_cast<size_t>(i - lo)].get(r, c);
        ++row;
      }
  }
  return sys;
}

}  // namespace

int hom_dim(const ModuleRep& M, const ModuleRep& N) {
  check_compatible(M, N);
  return N.dim() * M.dim() - rank(coboundary_system(M, N, nullptr, nullptr));
}

bool is_coboundary(const ModuleRep& M, const ModuleRep& N, const Cochain& phi) {
  check_compatible(M, N);
  Vec rhs;
  Matrix sys = coboundary_system(M, N, &rhs, &phi);
  return solve(std::move(sys), rhs).has_value();
}

ModuleRep build_extension(const ModuleRep& M, const ModuleRep& N, const Cochain& phi) {
  check_compatible(M, N);
  const FieldCtx& ctx = M.ctx();
  const int nN = N.dim(), nM = M.dim();
  ModuleRep out(M.algebra(), M.chi(), nN + nM);
  const int lo = M.min_index();
  for (int i = lo; i <= M.max_index(); ++i) {
    Matrix m(ctx, nN + nM, nN + nM);
    const Matrix& an = N.action(i);
    const Matrix& am = M.action(i);
    const Matrix& f = phi[static_cast<size_t>(i - lo)];
    for (int r = 0; r < nN; ++r)
      for (int c = 0; c < nN; ++c) m.set(r, c, an.get(r, c));
    for (int r = 0; r < nN; ++r)
      for (int c = 0; c < nM; ++c) m.set(r, nN + c, f.get(r, c));
    for (int r = 0; r < nM; ++r)
      for (int c = 0; c < nM; ++c) m.set(nN + r, nN + c, am.get(r, c));
    out.set_action(i, std::move(m));
  }
  return out;
}

CocycleReport ext_dim_full(const ModuleRep& M, const ModuleRep& N, const SolverOptions& opts,
                           bool want_witness) {
  check_compatible(M, N);
  const FieldCtx& ctx = M.ctx();
  const int64_t p = ctx.p();
  const int nN = N.dim(), nM = M.dim();
  const int lo = M.min_index(), hi = M.max_index();
  const int nidx = hi - lo + 1;

  const int64_t scalar_unknowns =
      static_cast<int64_t>(nidx) * nN * nM * ctx.degree();
  if (scalar_unknowns > opts.size_guard)
    throw Error(Errc::DimensionOverflow,
                "cocycle problem needs " + std::to_string(scalar_unknowns) +
                    " scalar unknowns, above the size guard of " +
                    std::to_string(opts.size_guard));

  std::vector<std::vector<int>> key;
  SolverMode mode = opts.mode;
  if (mode != SolverMode::Dense) {
    key = weight_keys(M, N);
    if (mode == SolverMode::Graded && key.empty())
      throw Error(Errc::InvalidArgument,
                  "graded solver needs diagonal weight actions with rational differences");
    mode = key.empty() ? SolverMode::Dense : SolverMode::Graded;
  }
  const bool graded = mode == SolverMode::Graded;

  // Unknown phi(e_i)[r][c]; in graded mode only entries of weight [i] are
  // kept (the remaining cohomology is concentrated there).
  auto wanted = [&](int i, int r, int c) {
    if (!graded) return true;
    int w = static_cast<int>(((i % p) + p) % p);
    return key[static_cast<size_t>(r)][static_cast<size_t>(c)] == w;
  };
  std::vector<int> id(static_cast<size_t>(nidx) * nN * nM, -1);
  auto slot = [&](int i, int r, int c) -> int& {
    return id[(static_cast<size_t>(i - lo) * nN + r) * nM + c];
  };
  int ncols = 0;
  for (int i = lo; i <= hi; ++i)
    for (int r = 0; r < nN; ++r)
      for (int c = 0; c < nM; ++c)
        if (wanted(i, r, c)) slot(i, r, c) = ncols++;

  // Count rows first so the system matrix is allocated once.
  auto pairs = index_pairs(lo, hi);
  int nrows = 0;
  for (const Pair& pr : pairs)
    for (int r = 0; r < nN; ++r)
      for (int c = 0; c < nM; ++c)
        if (wanted(pr.i + pr.j, r, c)) ++nrows;
  for (int i = lo; i <= hi; ++i)
    for (int r = 0; r < nN; ++r)
      for (int c = 0; c < nM; ++c)
        if (wanted(0, r, c)) ++nrows;  // p-power rows live in weight zero

  WittAlgebra alg(p);
  Matrix sys(ctx, nrows, ncols);
  int row = 0;
  auto acc = [&](int r0, int col, const FieldElement& v, bool subtract) {
    if (col < 0 || ctx.is_zero(v)) return;
    FieldElement cur = sys.get(r0, col);
    sys.set(r0, col, subtract ? ctx.sub(cur, v) : ctx.add(cur, v));
  };

  for (const Pair& pr : pairs) {
    const int i = pr.i, j = pr.j;
    const Matrix& ni = N.action(i);
    const Matrix& nj = N.action(j);
    const Matrix& mi = M.action(i);
    const Matrix& mj = M.action(j);
    BracketTerm t = alg.bracket(i, j);
    for (int r = 0; r < nN; ++r)
      for (int c = 0; c < nM; ++c) {
        if (!wanted(i + j, r, c)) continue;
        if (!t.zero && t.index >= lo)
          acc(row, slot(t.index, r, c), ctx.from_int(t.coeff), false);
        for (int k = 0; k < nN; ++k) {
          acc(row, slot(j, k, c), ni.get(r, k), true);
          acc(row, slot(i, k, c), nj.get(r, k), false);
        }
        for (int k = 0; k < nM; ++k) {
          acc(row, slot(j, r, k), mi.get(k, c), false);
          acc(row, slot(i, r, k), mj.get(k, c), true);
        }
        ++row;
      }
  }

  // p-power rows: sum_s rho_N(e_i)^s phi(e_i) rho_M(e_i)^{p-1-s} must equal
  // phi(e_i^[p]) (phi(e_0) when i = 0, zero otherwise).
  for (int i = lo; i <= hi; ++i) {
    std::vector<Matrix> pn, pm;
    pn.reserve(static_cast<size_t>(p));
    pm.reserve(static_cast<size_t>(p));
    pn.push_back(Matrix::identity(ctx, nN));
    pm.push_back(Matrix::identity(ctx, nM));
    for (int64_t s = 1; s < p; ++s) {
      pn.push_back(pn.back().mul(N.action(i)));
      pm.push_back(pm.back().mul(M.action(i)));
    }
    for (int r = 0; r < nN; ++r)
      for (int c = 0; c < nM; ++c) {
        if (!wanted(0, r, c)) continue;
        for (int k = 0; k < nN; ++k)
          for (int l = 0; l < nM; ++l) {
            int col = slot(i, k, l);
            if (col < 0) continue;
            FieldElement coeff = ctx.zero();
            for (int64_t s = 0; s < p; ++s)
              coeff = ctx.add(coeff,
                              ctx.mul(pn[static_cast<size_t>(s)].get(r, k),
                                      pm[static_cast<size_t>(p - 1 - s)].get(l, c)));
            acc(row, col, coeff, false);
          }
        if (i == 0 && alg.p_power_is_e0(0)) acc(row, slot(0, r, c), ctx.one(), true);
        ++row;
      }
  }

  CocycleReport rep;
  rep.mode_used = mode;

  Matrix reduced = sys;
  std::vector<int> pivots = reduced.rref_in_place();
  rep.dimZ = ncols - static_cast<int>(pivots.size());

  int homspace = hom_dim(M, N);
  int hom_cols = graded ? 0 : nN * nM;
  if (graded) {
    for (int r = 0; r < nN; ++r)
      for (int c = 0; c < nM; ++c)
        if (key[static_cast<size_t>(r)][static_cast<size_t>(c)] == 0) ++hom_cols;
  }
  rep.dimB = hom_cols - homspace;
  rep.ext = rep.dimZ - rep.dimB;

  if (want_witness && rep.ext > 0) {
    std::vector<Vec> basis = nullspace(std::move(sys));
    for (Vec& v : basis) {
      normalize_vec(v, ctx);
      Cochain phi;
      for (int i = lo; i <= hi; ++i) {
        Matrix m(ctx, nN, nM);
        for (int r = 0; r < nN; ++r)
          for (int c = 0; c < nM; ++c) {
            int col = slot(i, r, c);
            if (col >= 0) m.set(r, c, v[static_cast<size_t>(col)]);
          }
        phi.push_back(std::move(m));
      }
      if (!is_coboundary(M, N, phi)) {
        rep.witness = std::move(phi);
        break;
      }
    }
  }
  return rep;
}

ReducedReport ext_dim_reduced(const FieldElement& lambda, const FieldElement& lambda_prime,
                              const PCharacter& chi, bool want_witness) {
  const FieldCtx& ctx = chi.ctx();
  const int p = static_cast<int>(chi.p());
  if (chi.height() > 1) throw Error(Errc::UnsupportedHeight, "reduced solver needs height <= 1");
  if (!in_lambda(chi, lambda) || !in_lambda(chi, lambda_prime))
    throw Error(Errc::WeightNotInLambda, "weight outside Lambda(chi)");

  ModuleRep verma = build_verma(chi, lambda);
  FieldElement diff = ctx.sub(lambda, lambda_prime);
  auto rep_of = [&](int t) {
    return static_cast<int>(canonical_rep(ctx.sub(diff, ctx.from_int(t)), ctx));
  };
  const int n = p - 2;  // unknowns a_1..a_{p-2}

  // Rows: p equation components for each pair 0 <= i < j <= p-2 from
  // [E_i, E_j] w' = (j - i) E_{i+j} w', plus one forced-zero row per index
  // whose p-power obstruction is nonzero.
  std::vector<int> forced;
  for (int t = 1; t <= n; ++t) {
    Matrix powm = verma.action(t).pow(static_cast<uint64_t>(p - 1));
    bool obstructed = false;
    int mt = rep_of(t);
    for (int r = 0; r < p; ++r)
      if (!ctx.is_zero(powm.get(r, mt))) obstructed = true;
    if (obstructed) forced.push_back(t);
  }

  auto pairs = index_pairs(0, n);
  Matrix sys(ctx, static_cast<int>(pairs.size()) * p + static_cast<int>(forced.size()), n);
  int row = 0;
  auto acc = [&](int r0, int aj, const FieldElement& v, bool subtract) {
    if (aj < 1 || aj > n || ctx.is_zero(v)) return;
    FieldElement cur = sys.get(r0, aj - 1);
    sys.set(r0, aj - 1, subtract ? ctx.sub(cur, v) : ctx.add(cur, v));
  };
  for (const Pair& pr : pairs) {
    const int i = pr.i, j = pr.j;
    const Matrix& ai = verma.action(i);
    const Matrix& aj = verma.action(j);
    int mi = rep_of(i), mj = rep_of(j), mij = rep_of(i + j);
    for (int r = 0; r < p; ++r) {
      // coefficient of a_j: row r of E_i u_{m_j}, with the e_0 eigenvalue of
      // w' removed when i = 0
      FieldElement cj = ai.get(r, mj);
      if (i == 0 && r == mj) cj = ctx.sub(cj, lambda_prime);
      acc(row, j, cj, false);
      if (i >= 1) acc(row, i, aj.get(r, mi), true);
      if (i + j >= 1 && i + j <= n && r == mij)
        acc(row, i + j, ctx.from_int(j - i), true);
      ++row;
    }
  }
  for (int t : forced) {
    acc(row, t, ctx.one(), false);
    ++row;
  }

  // Coboundary direction: replacing w' by w' + u_{m_0} shifts a_t by the
  // (m_0 - t, m_0) entry of the e_t action.
  int m0 = rep_of(0);
  Vec cob(static_cast<size_t>(n), ctx.zero());
  for (int t = 1; t <= n; ++t)
    if (t <= m0) cob[static_cast<size_t>(t) - 1] = verma.action(t).get(m0 - t, m0);
  bool cob_nonzero = false;
  for (const FieldElement& v : cob)
    if (!ctx.is_zero(v)) cob_nonzero = true;

  ReducedReport out;
  Matrix reduced = sys;
  std::vector<int> pivots = reduced.rref_in_place();
  out.dimZ = n - static_cast<int>(pivots.size());
  out.dimB = cob_nonzero ? 1 : 0;
  out.ext = out.dimZ - out.dimB;

  if (want_witness && out.ext > 0) {
    std::vector<Vec> basis = nullspace(std::move(sys));
    size_t t0 = cob.size();
    for (size_t t = 0; t < cob.size(); ++t)
      if (!ctx.is_zero(cob[t])) {
        t0 = t;
        break;
      }
    for (Vec& v : basis) {
      bool proportional = false;
      if (cob_nonzero) {
        FieldElement f = ctx.div(v[t0], cob[t0]);
        proportional = true;
        for (size_t t = 0; t < cob.size(); ++t)
          if (!ctx.eq(v[t], ctx.mul(f, cob[t]))) proportional = false;
      }
      if (!proportional) {
        normalize_vec(v, ctx);
        out.witness = ADatum{v, lambda, lambda_prime, chi};
        break;
      }
    }
  }
  return out;
}

}  // namespace wittext
