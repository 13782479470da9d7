#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gl2sing/field.hpp"

namespace gl2sing {

using FieldVector = std::vector<FieldElement>;

/// Dense row-major matrix over a finite field.
class GFMatrix {
 public:
  GFMatrix() = default;
  GFMatrix(const FieldSpec& F, std::size_t rows, std::size_t cols);
  /// Builds from integer entries reduced into the prime field.
  static GFMatrix from_ints(const FieldSpec& F, const std::vector<std::vector<long long>>& rows);
  static GFMatrix from_elements(const FieldSpec& F, const std::vector<FieldVector>& rows);
  static GFMatrix identity(const FieldSpec& F, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return *f_; }

  FieldElement at(std::size_t r, std::size_t c) const { return FieldElement(f_, data_[r * cols_ + c]); }
  void set(std::size_t r, std::size_t c, const FieldElement& x);
  std::uint32_t raw(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t& raw(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  GFMatrix operator*(const GFMatrix& o) const;
  FieldVector operator*(const FieldVector& v) const;
  GFMatrix operator+(const GFMatrix& o) const;
  GFMatrix transpose() const;
  GFMatrix scaled(const FieldElement& c) const;
  /// Horizontal concatenation [this | o].
  GFMatrix hconcat(const GFMatrix& o) const;
  /// Vertical concatenation [this ; o].
  GFMatrix vconcat(const GFMatrix& o) const;
  bool is_zero() const;
  bool operator==(const GFMatrix& o) const;
  bool operator!=(const GFMatrix& o) const { return !(*this == o); }

  std::string str() const;

 private:
  const FieldSpec* f_ = nullptr;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> data_;
};

/// Row echelon data from Gaussian elimination.
struct Echelon {
  GFMatrix reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_reduce(const GFMatrix& m);
std::size_t matrix_rank(const GFMatrix& m);
/// Basis of the right kernel {v : m v = 0}.
std::vector<FieldVector> kernel_basis(const GFMatrix& m);
/// Some x with m x = b, or nullopt when inconsistent.
std::optional<FieldVector> solve_linear(const GFMatrix& m, const FieldVector& b);
FieldElement det(const GFMatrix& m);
std::optional<GFMatrix> inverse(const GFMatrix& m);
GFMatrix kron(const GFMatrix& a, const GFMatrix& b);

/// Rank of the subspace spanned by the given vectors (as rows).
std::size_t span_rank(const FieldSpec& F, const std::vector<FieldVector>& vectors, std::size_t dim);

}  // namespace gl2sing
