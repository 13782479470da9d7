#include "gl2sing/laurent.hpp"

#include <map>
#include <sstream>

namespace gl2sing {

LaurentPoly LaurentPoly::monomial(const FieldElement& c, int k) {
  LaurentPoly p(c.field());
  if (!c.is_zero()) p.terms_.push_back({k, c.index()});
  return p;
}

const FieldSpec& LaurentPoly::field() const {
  if (!f_) throw Error("polynomial has no field");
  return *f_;
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
  if (!f_ || f_ != o.f_) throw Error("field mismatch");
}

FieldElement LaurentPoly::coeff(int k) const {
  for (const auto& [e, c] : terms_)
    if (e == k) return FieldElement(f_, c);
  return field().zero();
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw Error("valuation undefined");
  return terms_.front().first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw Error("degree undefined");
  return terms_.back().first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_same(o);
  LaurentPoly r(*f_);
  auto i = terms_.begin(), j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      r.terms_.push_back(*i++);
    } else if (i == terms_.end() || j->first < i->first) {
      r.terms_.push_back(*j++);
    } else {
      std::uint32_t s = f_->add(i->second, j->second);
      if (s) r.terms_.push_back({i->first, s});
      ++i;
      ++j;
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(field());
  for (const auto& [e, c] : terms_) r.terms_.push_back({e, f_->neg(c)});
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_same(o);
  std::map<int, std::uint32_t> acc;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      auto& slot = acc[e1 + e2];
      slot = f_->add(slot, f_->mul(c1, c2));
    }
  LaurentPoly r(*f_);
  for (const auto& [e, c] : acc)
    if (c) r.terms_.push_back({e, c});
  return r;
}

LaurentPoly LaurentPoly::operator*(const FieldElement& c) const {
  if (c.field_ptr() != f_) throw Error("field mismatch");
  LaurentPoly r(*f_);
  if (c.is_zero()) return r;
  for (const auto& [e, x] : terms_) r.terms_.push_back({e, f_->mul(x, c.index())});
  return r;
}

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

FieldElement LaurentPoly::evaluate(const FieldElement& v) const {
  FieldElement acc = field().zero();
  for (const auto& [e, c] : terms_) acc += FieldElement(f_, c) * v.pow(e);
  return acc;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = FieldElement(f_, c).str();
    if (e == 0) {
      os << cs;
      continue;
    }
    if (c != 1) os << cs << "*";
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

int v_valuation(const LaurentPoly& p) {
  if (p.is_zero()) throw Error("valuation undefined");
  return p.min_exponent();
}

Mat2Laurent Mat2Laurent::identity(const FieldSpec& F) {
  return {LaurentPoly::one(F), LaurentPoly::zero(F), LaurentPoly::zero(F), LaurentPoly::one(F)};
}

Mat2Laurent Mat2Laurent::diag(const LaurentPoly& x, const LaurentPoly& y) {
  return {x, LaurentPoly::zero(x.field()), LaurentPoly::zero(x.field()), y};
}

Mat2Laurent Mat2Laurent::from_constants(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                                        const FieldElement& d) {
  return {LaurentPoly::constant(a), LaurentPoly::constant(b), LaurentPoly::constant(c), LaurentPoly::constant(d)};
}

Mat2Laurent Mat2Laurent::w0_t_eta(const FieldSpec& F) {
  return {LaurentPoly::zero(F), LaurentPoly::one(F), LaurentPoly::v_pow(F, 1), LaurentPoly::zero(F)};
}

Mat2Laurent Mat2Laurent::t_w0_eta(const FieldSpec& F) {
  return diag(LaurentPoly::one(F), LaurentPoly::v_pow(F, 1));
}

Mat2Laurent Mat2Laurent::w0(const FieldSpec& F) {
  return {LaurentPoly::zero(F), LaurentPoly::one(F), LaurentPoly::one(F), LaurentPoly::zero(F)};
}

Mat2Laurent Mat2Laurent::operator*(const Mat2Laurent& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2Laurent Mat2Laurent::operator*(const FieldElement& s) const { return {a * s, b * s, c * s, d * s}; }

LaurentPoly Mat2Laurent::det() const { return a * d - b * c; }

Mat2Laurent Mat2Laurent::inverse() const {
  LaurentPoly dt = det();
  if (!dt.is_monomial()) throw Error("determinant is not a unit");
  auto [k, lead] = dt.terms().front();
  LaurentPoly dinv = LaurentPoly::monomial(FieldElement(&dt.field(), lead).inverse(), -k);
  return {d * dinv, -b * dinv, -c * dinv, a * dinv};
}

bool Mat2Laurent::is_constant() const {
  for (const LaurentPoly* e : {&a, &b, &c, &d})
    if (!e->is_zero() && (e->min_exponent() != 0 || e->max_exponent() != 0)) return false;
  return true;
}

std::string Mat2Laurent::str() const {
  return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
}

Mat2Laurent ad_diag_conj(const Mat2Laurent& m, std::pair<int, int> nu) {
  int k = nu.first - nu.second;
  return {m.a, m.b.shift(k), m.c.shift(-k), m.d};
}

bool is_in_A_eta(const Mat2Laurent& m) {
  for (const LaurentPoly* e : {&m.a, &m.b, &m.c, &m.d})
    if (!e->is_polynomial()) return false;
  if (!m.c.is_zero() && v_valuation(m.c) < 1) return false;
  LaurentPoly dt = m.det();
  return !dt.is_zero() && v_valuation(dt) == 1;
}

ProjPoint::ProjPoint(const FieldElement& x, const FieldElement& y) {
  if (x.is_zero() && y.is_zero()) throw Error("projective point with both coordinates zero");
  if (x.field_ptr() != y.field_ptr()) throw Error("field mismatch");
  if (!y.is_zero()) {
    x_ = x / y;
    y_ = y.field().one();
  } else {
    x_ = x.field().one();
    y_ = y;
  }
}

std::string ProjPoint::str() const { return "[" + x_.str() + ":" + y_.str() + "]"; }

}  // namespace gl2sing
