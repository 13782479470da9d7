#pragma once

#include <map>
#include <string>
#include <vector>

#include "gl2sing/field.hpp"

namespace gl2sing {

/// Sparse multivariate polynomial over a finite field in a fixed number of variables.
class MPoly {
 public:
  using Exponent = std::vector<int>;

  MPoly() = default;
  MPoly(const FieldSpec& F, int nvars) : f_(&F), nvars_(nvars) {}
  static MPoly variable(const FieldSpec& F, int nvars, int i);
  static MPoly constant(const FieldSpec& F, int nvars, const FieldElement& c);

  int nvars() const { return nvars_; }
  const FieldSpec& field() const { return *f_; }
  const std::map<Exponent, std::uint32_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const FieldElement& c) const;

  FieldElement evaluate(const std::vector<FieldElement>& point) const;
  MPoly derivative(int i) const;

 private:
  void add_term(const Exponent& e, std::uint32_t c);
  const FieldSpec* f_ = nullptr;
  int nvars_ = 0;
  std::map<Exponent, std::uint32_t> terms_;
};

/// A list of generators in named variables.
struct IdealSpec {
  std::vector<std::string> variables;
  std::vector<MPoly> generators;

  /// True when every generator vanishes at the point.
  bool vanishes_at(const std::vector<FieldElement>& point) const;
};

/// Rank of the Jacobian of the generators at a point of their common zero locus.
int jacobian_rank(const IdealSpec& ideal, const std::vector<FieldElement>& point);

}  // namespace gl2sing
