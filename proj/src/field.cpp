#include "gl2sing/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace gl2sing {

namespace {

struct ModulusRow {
  int p;
  int e;
  std::vector<int> coeffs;
};

const std::vector<ModulusRow>& shipped_moduli() {
  static const std::vector<ModulusRow> rows = {
#include "moduli_table.inc"
  };
  return rows;
}

using Poly = std::vector<long long>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long long inv_mod(long long a, long long p) {
  long long r = 1, b = ((a % p) + p) % p, k = p - 2;
  while (k) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return r;
}

Poly poly_mod(Poly a, const Poly& m, long long p) {
  for (auto& x : a) x = ((x % p) + p) % p;
  trim(a);
  long long lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    long long c = a.back() * lead_inv % p;
    std::size_t s = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[s + i] = ((a[s + i] - c * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, long long p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(r, m, p);
}

Poly poly_sub(const Poly& a, const Poly& b, long long p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    long long x = i < a.size() ? a[i] : 0;
    long long y = i < b.size() ? b[i] : 0;
    r[i] = ((x - y) % p + p) % p;
  }
  trim(r);
  return r;
}

Poly poly_gcd(Poly a, Poly b, long long p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// X^(p^d) mod m by repeated p-th powering.
Poly x_pow_p_pow(int d, const Poly& m, long long p) {
  Poly r = poly_mod({0, 1}, m, p);
  for (int i = 0; i < d; ++i) {
    Poly base = r, acc = {1};
    long long k = p;
    while (k) {
      if (k & 1) acc = poly_mulmod(acc, base, m, p);
      base = poly_mulmod(base, base, m, p);
      k >>= 1;
    }
    r = acc;
  }
  return r;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mutex registry_mutex;
std::map<std::pair<int, std::vector<int>>, std::unique_ptr<FieldSpec>>& registry() {
  static std::map<std::pair<int, std::vector<int>>, std::unique_ptr<FieldSpec>> r;
  return r;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index * 0xd1b54a32d192ed03ULL));
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(int p, const std::vector<int>& poly) {
  Poly f(poly.begin(), poly.end());
  for (auto& x : f) x = ((x % p) + p) % p;
  trim(f);
  if (f.size() < 2) return false;
  int e = static_cast<int>(f.size()) - 1;
  if (e == 1) return true;
  Poly x = {0, 1};
  if (!poly_sub(x_pow_p_pow(e, f, p), x, p).empty()) return false;
  for (long long r : prime_factors(e)) {
    Poly h = poly_sub(x_pow_p_pow(e / static_cast<int>(r), f, p), x, p);
    if (poly_gcd(f, h, p).size() > 1) return false;
  }
  return true;
}

const FieldSpec& FieldSpec::get(int p, int e) {
  if (!is_prime(p) || p <= 3 || p >= 100) throw Error("unsupported characteristic " + std::to_string(p));
  if (e < 1 || e > 4) throw Error("unsupported extension degree " + std::to_string(e));
  for (const auto& row : shipped_moduli())
    if (row.p == p && row.e == e) return with_modulus(p, row.coeffs);
  throw Error("no shipped modulus for p=" + std::to_string(p));
}

const FieldSpec& FieldSpec::with_modulus(int p, const std::vector<int>& modulus) {
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto key = std::make_pair(p, modulus);
  auto it = registry().find(key);
  if (it != registry().end()) return *it->second;
  std::unique_ptr<FieldSpec> spec(new FieldSpec(p, modulus));
  const FieldSpec& ref = *spec;
  registry().emplace(key, std::move(spec));
  return ref;
}

FieldSpec::FieldSpec(int p, std::vector<int> modulus) : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw Error("modulus characteristic is not prime");
  if (modulus_.size() < 2 || modulus_.back() != 1) throw Error("modulus must be monic of positive degree");
  for (int c : modulus_)
    if (c < 0 || c >= p) throw Error("modulus coefficient out of range");
  e_ = static_cast<int>(modulus_.size()) - 1;
  unsigned long long q = 1;
  for (int i = 0; i < e_; ++i) {
    pw_.push_back(static_cast<std::uint32_t>(q));
    q *= static_cast<unsigned long long>(p);
    if (q > (1ULL << 24)) throw Error("field too large");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (!is_irreducible_mod_p(p, modulus_)) throw Error("modulus is not irreducible");
  build_tables();
}

void FieldSpec::build_tables() {
  Poly m(modulus_.begin(), modulus_.end());
  auto to_poly = [&](std::uint32_t v) {
    Poly a(e_, 0);
    for (int i = 0; i < e_; ++i) {
      a[i] = v % p_;
      v /= p_;
    }
    trim(a);
    return a;
  };
  auto to_index = [&](const Poly& a) {
    std::uint32_t v = 0;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) v = v * p_ + static_cast<std::uint32_t>(a[i]);
    return v;
  };
  auto poly_pow = [&](Poly b, long long k) {
    Poly r = {1};
    while (k) {
      if (k & 1) r = poly_mulmod(r, b, m, p_);
      b = poly_mulmod(b, b, m, p_);
      k >>= 1;
    }
    return r;
  };
  long long order = static_cast<long long>(q_) - 1;
  auto factors = prime_factors(order);
  Poly g;
  for (std::uint32_t cand = 2; cand < q_; ++cand) {
    Poly c = to_poly(cand);
    bool primitive = true;
    for (long long r : factors) {
      Poly t = poly_pow(c, order / r);
      if (t.size() == 1 && t[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = c;
      break;
    }
  }
  if (q_ == 2) g = {1};
  exp_.assign(2 * order, 0);
  log_.assign(q_, 0);
  Poly cur = {1};
  for (long long i = 0; i < order; ++i) {
    std::uint32_t v = to_index(cur);
    exp_[i] = v;
    exp_[i + order] = v;
    log_[v] = static_cast<std::uint32_t>(i);
    cur = poly_mulmod(cur, g, m, p_);
  }
}

std::uint32_t FieldSpec::add(std::uint32_t a, std::uint32_t b) const {
  if (e_ == 1) {
    std::uint32_t s = a + b;
    return s >= static_cast<std::uint32_t>(p_) ? s - p_ : s;
  }
  std::uint32_t r = 0;
  for (int i = 0; i < e_; ++i) {
    std::uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    std::uint32_t s = da + db;
    if (s >= static_cast<std::uint32_t>(p_)) s -= p_;
    r += s * pw_[i];
  }
  return r;
}

std::uint32_t FieldSpec::neg(std::uint32_t a) const {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint32_t r = 0;
  for (int i = 0; i < e_; ++i) {
    std::uint32_t d = a % p_;
    a /= p_;
    r += (d == 0 ? 0 : p_ - d) * pw_[i];
  }
  return r;
}

std::uint32_t FieldSpec::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FieldSpec::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
  if (a == 0) throw Error("division by zero");
  std::uint32_t order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

std::uint32_t FieldSpec::pow(std::uint32_t a, long long k) const {
  if (a == 0) {
    if (k == 0) return 1;
    if (k < 0) throw Error("division by zero");
    return 0;
  }
  long long order = static_cast<long long>(q_) - 1;
  long long l = (static_cast<long long>(log_[a]) % order * (((k % order) + order) % order)) % order;
  return exp_[l];
}

FieldElement FieldSpec::zero() const { return FieldElement(this, 0); }
FieldElement FieldSpec::one() const { return FieldElement(this, 1); }

FieldElement FieldSpec::from_int(long long n) const {
  long long r = ((n % p_) + p_) % p_;
  return FieldElement(this, static_cast<std::uint32_t>(r));
}

FieldElement FieldSpec::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) > e_) throw Error("too many coefficients");
  std::uint32_t v = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * p_ + static_cast<std::uint32_t>(((c[i] % p_) + p_) % p_);
  return FieldElement(this, v);
}

FieldElement FieldSpec::from_index(std::uint32_t v) const {
  if (v >= q_) throw Error("field index out of range");
  return FieldElement(this, v);
}

FieldElement FieldSpec::generator() const { return FieldElement(this, exp_[1 % (q_ - 1)]); }

FieldElement FieldSpec::random(std::mt19937_64& rng) const {
  return FieldElement(this, static_cast<std::uint32_t>(uniform_below(rng, q_)));
}

FieldElement FieldSpec::random_nonzero(std::mt19937_64& rng) const {
  return FieldElement(this, static_cast<std::uint32_t>(1 + uniform_below(rng, q_ - 1)));
}

std::string FieldSpec::name() const {
  std::ostringstream os;
  os << "F_" << p_;
  if (e_ > 1) os << "^" << e_;
  return os.str();
}

const FieldSpec& FieldElement::field() const {
  if (!f_) throw Error("element has no field");
  return *f_;
}

void FieldElement::check_same(const FieldElement& o) const {
  if (f_ != o.f_ || !f_) throw Error("field mismatch");
}

std::vector<int> FieldElement::coeffs() const {
  std::vector<int> c(field().e());
  std::uint32_t v = v_;
  for (auto& x : c) {
    x = static_cast<int>(v % f_->p());
    v /= f_->p();
  }
  return c;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return FieldElement(f_, f_->add(v_, o.v_));
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return FieldElement(f_, f_->sub(v_, o.v_));
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return FieldElement(f_, f_->mul(v_, o.v_));
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return FieldElement(f_, f_->mul(v_, f_->inv(o.v_)));
}
FieldElement FieldElement::operator-() const { return FieldElement(f_, field().neg(v_)); }
FieldElement FieldElement::inverse() const { return FieldElement(f_, field().inv(v_)); }
FieldElement FieldElement::pow(long long k) const { return FieldElement(f_, field().pow(v_, k)); }

bool FieldElement::sqrt(FieldElement& out) const {
  const FieldSpec& F = field();
  if (v_ == 0) {
    out = *this;
    return true;
  }
  std::uint32_t l = F.log(v_);
  if (l % 2 != 0) return false;
  out = F.generator().pow(l / 2);
  return true;
}

std::string FieldElement::str() const {
  if (!f_) return "?";
  if (f_->e() == 1) return std::to_string(v_);
  auto c = coeffs();
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << "a";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace gl2sing
