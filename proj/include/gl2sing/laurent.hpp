#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "gl2sing/field.hpp"

namespace gl2sing {

/// Finite Laurent polynomial in v over a finite field.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const FieldSpec& F) : f_(&F) {}
  /// c * v^k.
  static LaurentPoly monomial(const FieldElement& c, int k);
  static LaurentPoly constant(const FieldElement& c) { return monomial(c, 0); }
  static LaurentPoly zero(const FieldSpec& F) { return LaurentPoly(F); }
  static LaurentPoly one(const FieldSpec& F) { return monomial(F.one(), 0); }
  /// v^k.
  static LaurentPoly v_pow(const FieldSpec& F, int k) { return monomial(F.one(), k); }

  const FieldSpec& field() const;
  const FieldSpec* field_ptr() const { return f_; }
  bool is_zero() const { return terms_.empty(); }
  /// Sorted (exponent, coefficient index) pairs with nonzero coefficients.
  const std::vector<std::pair<int, std::uint32_t>>& terms() const { return terms_; }
  FieldElement coeff(int k) const;
  int min_exponent() const;
  int max_exponent() const;
  /// True when every exponent is nonnegative.
  bool is_polynomial() const { return is_zero() || min_exponent() >= 0; }
  /// True when this is c*v^k with c nonzero.
  bool is_monomial() const { return terms_.size() == 1; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const FieldElement& c) const;
  /// Multiply by v^k.
  LaurentPoly shift(int k) const;
  FieldElement evaluate(const FieldElement& v) const;

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_ && (is_zero() || f_ == o.f_); }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void check_same(const LaurentPoly& o) const;
  const FieldSpec* f_ = nullptr;
  std::vector<std::pair<int, std::uint32_t>> terms_;
};

/// Minimum exponent of a nonzero Laurent polynomial.
int v_valuation(const LaurentPoly& p);

/// 2x2 matrix [[a, b], [c, d]] over Laurent polynomials.
struct Mat2Laurent {
  LaurentPoly a, b, c, d;

  static Mat2Laurent identity(const FieldSpec& F);
  static Mat2Laurent diag(const LaurentPoly& x, const LaurentPoly& y);
  static Mat2Laurent from_constants(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                                    const FieldElement& d);
  /// [[0, 1], [v, 0]].
  static Mat2Laurent w0_t_eta(const FieldSpec& F);
  /// diag(1, v).
  static Mat2Laurent t_w0_eta(const FieldSpec& F);
  /// The antidiagonal Weyl element [[0, 1], [1, 0]].
  static Mat2Laurent w0(const FieldSpec& F);

  Mat2Laurent operator*(const Mat2Laurent& o) const;
  Mat2Laurent operator*(const FieldElement& s) const;
  LaurentPoly det() const;
  /// Inverse; requires det to be a monomial.
  Mat2Laurent inverse() const;
  bool operator==(const Mat2Laurent& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator!=(const Mat2Laurent& o) const { return !(*this == o); }
  /// True when all entries are constants.
  bool is_constant() const;
  std::string str() const;
};

/// Ad(v^nu)(m) for the diagonal cocharacter nu = (nu0, nu1).
Mat2Laurent ad_diag_conj(const Mat2Laurent& m, std::pair<int, int> nu);

/// Membership in the set of matrices over F[[v]] that are upper triangular mod v with det of valuation 1.
bool is_in_A_eta(const Mat2Laurent& m);

/// Point of P^1 stored as [x:1] or [1:0].
class ProjPoint {
 public:
  ProjPoint(const FieldElement& x, const FieldElement& y);
  const FieldElement& x() const { return x_; }
  const FieldElement& y() const { return y_; }
  bool operator==(const ProjPoint& o) const { return x_ == o.x_ && y_ == o.y_; }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  std::string str() const;

 private:
  FieldElement x_, y_;
};

}  // namespace gl2sing
