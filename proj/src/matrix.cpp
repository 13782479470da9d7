#include "gl2sing/matrix.hpp"

#include <sstream>

namespace gl2sing {

GFMatrix::GFMatrix(const FieldSpec& F, std::size_t rows, std::size_t cols)
    : f_(&F), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

GFMatrix GFMatrix::from_ints(const FieldSpec& F, const std::vector<std::vector<long long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  GFMatrix m(F, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.raw(i, j) = F.from_int(rows[i][j]).index();
  }
  return m;
}

GFMatrix GFMatrix::from_elements(const FieldSpec& F, const std::vector<FieldVector>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  GFMatrix m(F, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

GFMatrix GFMatrix::identity(const FieldSpec& F, std::size_t n) {
  GFMatrix m(F, n, n);
  for (std::size_t i = 0; i < n; ++i) m.raw(i, i) = 1;
  return m;
}

void GFMatrix::set(std::size_t r, std::size_t c, const FieldElement& x) {
  if (x.field_ptr() != f_) throw Error("field mismatch");
  data_[r * cols_ + c] = x.index();
}

GFMatrix GFMatrix::operator*(const GFMatrix& o) const {
  if (f_ != o.f_) throw Error("field mismatch");
  if (cols_ != o.rows_) throw Error("dimension mismatch in product");
  GFMatrix r(*f_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint32_t a = raw(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        std::uint32_t b = o.raw(k, j);
        if (b) r.raw(i, j) = f_->add(r.raw(i, j), f_->mul(a, b));
      }
    }
  return r;
}

FieldVector GFMatrix::operator*(const FieldVector& v) const {
  if (v.size() != cols_) throw Error("dimension mismatch in product");
  FieldVector out(rows_, f_->zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint32_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j].field_ptr() != f_) throw Error("field mismatch");
      acc = f_->add(acc, f_->mul(raw(i, j), v[j].index()));
    }
    out[i] = FieldElement(f_, acc);
  }
  return out;
}

GFMatrix GFMatrix::operator+(const GFMatrix& o) const {
  if (f_ != o.f_) throw Error("field mismatch");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("dimension mismatch in sum");
  GFMatrix r(*f_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = f_->add(data_[i], o.data_[i]);
  return r;
}

GFMatrix GFMatrix::transpose() const {
  GFMatrix r(*f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.raw(j, i) = raw(i, j);
  return r;
}

GFMatrix GFMatrix::scaled(const FieldElement& c) const {
  GFMatrix r(*f_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = f_->mul(data_[i], c.index());
  return r;
}

GFMatrix GFMatrix::hconcat(const GFMatrix& o) const {
  if (rows_ != o.rows_) throw Error("dimension mismatch in concatenation");
  GFMatrix r(*f_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.raw(i, j) = raw(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r.raw(i, cols_ + j) = o.raw(i, j);
  }
  return r;
}

GFMatrix GFMatrix::vconcat(const GFMatrix& o) const {
  if (cols_ != o.cols_) throw Error("dimension mismatch in concatenation");
  GFMatrix r(*f_, rows_ + o.rows_, cols_);
  std::copy(data_.begin(), data_.end(), r.data_.begin());
  std::copy(o.data_.begin(), o.data_.end(), r.data_.begin() + data_.size());
  return r;
}

bool GFMatrix::is_zero() const {
  for (auto x : data_)
    if (x) return false;
  return true;
}

bool GFMatrix::operator==(const GFMatrix& o) const {
  return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string GFMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Echelon row_reduce(const GFMatrix& m) {
  Echelon e{m, {}};
  GFMatrix& a = e.reduced;
  if (a.rows() == 0 || a.cols() == 0) return e;
  const FieldSpec& F = a.field();
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a.raw(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.raw(piv, j), a.raw(row, j));
    std::uint32_t inv = F.inv(a.raw(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a.raw(row, j) = F.mul(a.raw(row, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      std::uint32_t c = a.raw(i, col);
      if (c == 0) continue;
      std::uint32_t nc = F.neg(c);
      for (std::size_t j = col; j < a.cols(); ++j) {
        std::uint32_t b = a.raw(row, j);
        if (b) a.raw(i, j) = F.add(a.raw(i, j), F.mul(nc, b));
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t matrix_rank(const GFMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<FieldVector> kernel_basis(const GFMatrix& m) {
  Echelon e = row_reduce(m);
  const FieldSpec& F = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<FieldVector> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    FieldVector v(m.cols(), F.zero());
    v[free] = F.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = FieldElement(&F, F.neg(e.reduced.raw(r, free)));
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<FieldVector> solve_linear(const GFMatrix& m, const FieldVector& b) {
  if (b.size() != m.rows()) throw Error("right-hand side length mismatch");
  const FieldSpec& F = m.field();
  GFMatrix bm(F, b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) bm.set(i, 0, b[i]);
  Echelon e = row_reduce(m.hconcat(bm));
  FieldVector x(m.cols(), F.zero());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced.at(r, m.cols());
  }
  return x;
}

FieldElement det(const GFMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  const FieldSpec& F = m.field();
  GFMatrix a = m;
  std::size_t n = a.rows();
  std::uint32_t d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.raw(piv, col) == 0) ++piv;
    if (piv == n) return F.zero();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.raw(piv, j), a.raw(col, j));
      d = F.neg(d);
    }
    std::uint32_t pv = a.raw(col, col);
    d = F.mul(d, pv);
    std::uint32_t inv = F.inv(pv);
    for (std::size_t i = col + 1; i < n; ++i) {
      std::uint32_t c = a.raw(i, col);
      if (c == 0) continue;
      std::uint32_t factor = F.neg(F.mul(c, inv));
      for (std::size_t j = col; j < n; ++j) a.raw(i, j) = F.add(a.raw(i, j), F.mul(factor, a.raw(col, j)));
    }
  }
  return FieldElement(&F, d);
}

std::optional<GFMatrix> inverse(const GFMatrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
  std::size_t n = m.rows();
  Echelon e = row_reduce(m.hconcat(GFMatrix::identity(m.field(), n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  GFMatrix r(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.raw(i, j) = e.reduced.raw(i, n + j);
  return r;
}

GFMatrix kron(const GFMatrix& a, const GFMatrix& b) {
  if (&a.field() != &b.field()) throw Error("field mismatch");
  const FieldSpec& F = a.field();
  GFMatrix r(F, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::uint32_t x = a.raw(i, j);
      if (!x) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r.raw(i * b.rows() + k, j * b.cols() + l) = F.mul(x, b.raw(k, l));
    }
  return r;
}

std::size_t span_rank(const FieldSpec& F, const std::vector<FieldVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  GFMatrix m(F, vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) throw Error("vector length mismatch");
    for (std::size_t j = 0; j < dim; ++j) m.set(i, j, vectors[i][j]);
  }
  return matrix_rank(m);
}

}  // namespace gl2sing
