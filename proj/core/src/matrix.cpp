#include "wittext/matrix.hpp"

#include <cstring>

namespace wittext {

Matrix::Matrix(const FieldCtx& ctx, int rows, int cols)
    : ctx_(ctx), rows_(rows), cols_(cols), deg_(ctx.degree()),
      data_(static_cast<size_t>(rows) * cols * ctx.degree(), 0) {
  if (rows < 0 || cols < 0) throw Error(Errc::InvalidArgument, "negative matrix shape");
}

Matrix Matrix::identity(const FieldCtx& ctx, int n) {
  Matrix m(ctx, n, n);
  FieldElement one = ctx.one();
  for (int i = 0; i < n; ++i) m.set(i, i, one);
  return m;
}

FieldElement Matrix::get(int r, int c) const {
  FieldElement e = ctx_.zero();
  std::memcpy(e.c.data(), entry_ptr(r, c), sizeof(int64_t) * deg_);
  return e;
}

void Matrix::set(int r, int c, const FieldElement& v) {
  std::memcpy(entry_ptr(r, c), v.c.data(), sizeof(int64_t) * deg_);
}

Matrix Matrix::mul(const Matrix& other) const {
  if (cols_ != other.rows_) throw Error(Errc::InvalidArgument, "matrix shape mismatch in mul");
  Matrix out(ctx_, rows_, other.cols_);
  int64_t prod[128];
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < other.cols_; ++j) {
      int64_t* dst = out.entry_ptr(i, j);
      for (int k = 0; k < cols_; ++k) {
        const int64_t* a = entry_ptr(i, k);
        bool az = true;
        for (int t = 0; t < deg_; ++t) az = az && a[t] == 0;
        if (az) continue;
        ctx_.flat_mul(a, other.entry_ptr(k, j), prod);
        for (int t = 0; t < deg_; ++t) {
          dst[t] += prod[t];
          if (dst[t] >= ctx_.p()) dst[t] -= ctx_.p();
        }
      }
    }
  }
  return out;
}

Matrix Matrix::add(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(Errc::InvalidArgument, "matrix shape mismatch in add");
  Matrix out = *this;
  for (size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] += other.data_[i];
    if (out.data_[i] >= ctx_.p()) out.data_[i] -= ctx_.p();
  }
  return out;
}

Matrix Matrix::sub(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(Errc::InvalidArgument, "matrix shape mismatch in sub");
  Matrix out = *this;
  for (size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] -= other.data_[i];
    if (out.data_[i] < 0) out.data_[i] += ctx_.p();
  }
  return out;
}

Matrix Matrix::scaled(const FieldElement& f) const {
  Matrix out(ctx_, rows_, cols_);
  int64_t prod[128];
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      ctx_.flat_mul(entry_ptr(i, j), f.c.data(), prod);
      std::memcpy(out.entry_ptr(i, j), prod, sizeof(int64_t) * deg_);
    }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(ctx_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      std::memcpy(out.entry_ptr(j, i), entry_ptr(i, j), sizeof(int64_t) * deg_);
  return out;
}

Matrix Matrix::negated() const {
  Matrix out = *this;
  for (auto& v : out.data_)
    if (v != 0) v = ctx_.p() - v;
  return out;
}

Matrix Matrix::pow(uint64_t e) const {
  if (rows_ != cols_) throw Error(Errc::InvalidArgument, "pow needs a square matrix");
  Matrix base = *this;
  Matrix r = identity(ctx_, rows_);
  while (e) {
    if (e & 1) r = r.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw Error(Errc::InvalidArgument, "vector length mismatch in apply");
  Vec out(rows_, ctx_.zero());
  for (int i = 0; i < rows_; ++i) {
    FieldElement s = ctx_.zero();
    for (int j = 0; j < cols_; ++j) s = ctx_.add(s, ctx_.mul(get(i, j), v[j]));
    out[i] = s;
  }
  return out;
}

bool Matrix::is_zero() const {
  for (int64_t v : data_)
    if (v != 0) return false;
  return true;
}

bool Matrix::equals(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::vector<int> Matrix::rref_in_place() {
  const int64_t p = ctx_.p();
  std::vector<int> pivots;
  int lead = 0;
  int64_t prod[128];
  auto entry_is_zero = [&](int r, int c) {
    const int64_t* e = entry_ptr(r, c);
    for (int t = 0; t < deg_; ++t)
      if (e[t] != 0) return false;
    return true;
  };
  for (int col = 0; col < cols_ && lead < rows_; ++col) {
    int pr = -1;
    for (int r = lead; r < rows_; ++r)
      if (!entry_is_zero(r, col)) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != lead) {
      // swap rows pr and lead
      int64_t* a = entry_ptr(lead, 0);
      int64_t* b = entry_ptr(pr, 0);
      for (int t = 0; t < cols_ * deg_; ++t) std::swap(a[t], b[t]);
    }
    // scale pivot row to make pivot 1
    FieldElement pivinv = ctx_.inv(get(lead, col));
    if (!ctx_.eq(pivinv, ctx_.one())) {
      int64_t* row = entry_ptr(lead, 0);
      if (deg_ == 1) {
        int64_t f = pivinv.c[0];
        for (int c = col; c < cols_; ++c) row[c] = row[c] * f % p;
      } else {
        for (int c = col; c < cols_; ++c) {
          ctx_.flat_mul(row + static_cast<size_t>(c) * deg_, pivinv.c.data(), prod);
          std::memcpy(row + static_cast<size_t>(c) * deg_, prod, sizeof(int64_t) * deg_);
        }
      }
    }
    // eliminate the column everywhere else
    const int64_t* prow = entry_ptr(lead, 0);
    for (int r = 0; r < rows_; ++r) {
      if (r == lead || entry_is_zero(r, col)) continue;
      int64_t* row = entry_ptr(r, 0);
      if (deg_ == 1) {
        int64_t f = row[col];
        for (int c = col; c < cols_; ++c) {
          row[c] -= f * prow[c] % p;
          if (row[c] < 0) row[c] += p;
        }
      } else {
        FieldElement f = get(r, col);
        for (int c = col; c < cols_; ++c)
          ctx_.flat_submul(row + static_cast<size_t>(c) * deg_, f.c.data(),
                           prow + static_cast<size_t>(c) * deg_);
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

int rank(Matrix a) { return static_cast<int>(a.rref_in_place().size()); }

std::vector<Vec> nullspace(Matrix a) {
  const FieldCtx ctx = a.ctx();
  std::vector<int> pivots = a.rref_in_place();
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(a.cols(), ctx.zero());
    v[f] = ctx.one();
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = ctx.neg(a.get(static_cast<int>(r), f));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(Matrix a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw Error(Errc::InvalidArgument, "rhs length mismatch in solve");
  const FieldCtx ctx = a.ctx();
  Matrix aug(ctx, a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug.set(r, c, a.get(r, c));
    aug.set(r, a.cols(), b[r]);
  }
  std::vector<int> pivots = aug.rref_in_place();
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // 0 = 1 row
  Vec x(a.cols(), ctx.zero());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.get(static_cast<int>(r), a.cols());
  return x;
}

}  // namespace wittext
