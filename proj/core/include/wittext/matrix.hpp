#pragma once

#include <optional>
#include <vector>

#include "wittext/field.hpp"

namespace wittext {

using Vec = std::vector<FieldElement>;

/// Dense matrix over a FieldCtx.  Entries live in a flat coefficient buffer
/// (degree() int64 slots per entry) so elimination can run without per-entry
/// allocations.
class Matrix {
 public:
  Matrix(const FieldCtx& ctx, int rows, int cols);
  static Matrix identity(const FieldCtx& ctx, int n);

  const FieldCtx& ctx() const { return ctx_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  FieldElement get(int r, int c) const;
  void set(int r, int c, const FieldElement& v);

  int64_t* entry_ptr(int r, int c) { return data_.data() + (static_cast<size_t>(r) * cols_ + c) * deg_; }
  const int64_t* entry_ptr(int r, int c) const {
    return data_.data() + (static_cast<size_t>(r) * cols_ + c) * deg_;
  }

  Matrix mul(const Matrix& other) const;
  Matrix add(const Matrix& other) const;
  Matrix sub(const Matrix& other) const;
  Matrix scaled(const FieldElement& f) const;
  Matrix transpose() const;
  Matrix negated() const;
  Matrix pow(uint64_t e) const;

  Vec apply(const Vec& v) const;  // matrix * column vector

  bool is_zero() const;
  bool equals(const Matrix& other) const;

  /// In-place reduction to reduced row echelon form; returns pivot columns.
  std::vector<int> rref_in_place();

 private:
  FieldCtx ctx_;
  int rows_, cols_, deg_;
  std::vector<int64_t> data_;
};

int rank(Matrix a);

/// Basis of {v : Av = 0} in echelon-normalized form: one vector per free
/// column, free coordinate set to 1, ordered by free column index.
std::vector<Vec> nullspace(Matrix a);

/// One solution of Ax = b, if the system is consistent.
std::optional<Vec> solve(Matrix a, const Vec& b);

}  // namespace wittext
