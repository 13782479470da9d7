#include "gl2sing/mpoly.hpp"

#include "gl2sing/matrix.hpp"

namespace gl2sing {

MPoly MPoly::variable(const FieldSpec& F, int nvars, int i) {
  if (i < 0 || i >= nvars) throw Error("variable index out of range");
  MPoly p(F, nvars);
  Exponent e(nvars, 0);
  e[i] = 1;
  p.terms_[e] = 1;
  return p;
}

MPoly MPoly::constant(const FieldSpec& F, int nvars, const FieldElement& c) {
  MPoly p(F, nvars);
  if (!c.is_zero()) p.terms_[Exponent(nvars, 0)] = c.index();
  return p;
}

void MPoly::add_term(const Exponent& e, std::uint32_t c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c) terms_.emplace(e, c);
    return;
  }
  it->second = f_->add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

MPoly MPoly::operator+(const MPoly& o) const {
  if (f_ != o.f_ || nvars_ != o.nvars_) throw Error("polynomial ring mismatch");
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(*f_, nvars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = f_->neg(c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  if (f_ != o.f_ || nvars_ != o.nvars_) throw Error("polynomial ring mismatch");
  MPoly r(*f_, nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponent e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, f_->mul(c1, c2));
    }
  return r;
}

MPoly MPoly::operator*(const FieldElement& c) const {
  return *this * MPoly::constant(*f_, nvars_, c);
}

FieldElement MPoly::evaluate(const std::vector<FieldElement>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw Error("point has wrong dimension");
  FieldElement acc = f_->zero();
  for (const auto& [e, c] : terms_) {
    FieldElement t(f_, c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i]) t *= point[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

MPoly MPoly::derivative(int i) const {
  MPoly r(*f_, nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent d = e;
    d[i] -= 1;
    r.add_term(d, f_->mul(c, f_->from_int(e[i]).index()));
  }
  return r;
}

bool IdealSpec::vanishes_at(const std::vector<FieldElement>& point) const {
  for (const auto& g : generators)
    if (!g.evaluate(point).is_zero()) return false;
  return true;
}

int jacobian_rank(const IdealSpec& ideal, const std::vector<FieldElement>& point) {
  if (ideal.generators.empty()) return 0;
  if (!ideal.vanishes_at(point)) throw Error("point is not on the locus");
  const FieldSpec& F = ideal.generators.front().field();
  int n = ideal.generators.front().nvars();
  GFMatrix J(F, ideal.generators.size(), n);
  for (std::size_t r = 0; r < ideal.generators.size(); ++r)
    for (int c = 0; c < n; ++c) J.set(r, c, ideal.generators[r].derivative(c).evaluate(point));
  return static_cast<int>(matrix_rank(J));
}

}  // namespace gl2sing
