#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gl2sing {

/// Error raised by every library precondition failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldElement;

/// A finite field F_{p^e} presented as F_p[X]/(g) for a stored irreducible g.
///
/// Instances are immutable and live for the whole process; obtain them via
/// FieldSpec::get or FieldSpec::with_modulus and pass them around by reference.
/// Elements are encoded as integers in [0, q) whose base-p digits are the
/// coefficients of the reduced polynomial representative.
class FieldSpec {
 public:
  /// Field with the shipped modulus for (p, e). Requires p prime, 3 < p < 100, 1 <= e <= 4.
  static const FieldSpec& get(int p, int e = 1);
  /// Field for an explicit monic modulus (coefficients low to high). Irreducibility is verified.
  static const FieldSpec& with_modulus(int p, const std::vector<int>& modulus);

  int p() const { return p_; }
  int e() const { return e_; }
  std::uint32_t q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long n) const;
  FieldElement from_coeffs(const std::vector<int>& c) const;
  FieldElement from_index(std::uint32_t v) const;
  /// Fixed generator of the multiplicative group.
  FieldElement generator() const;
  FieldElement random(std::mt19937_64& rng) const;
  FieldElement random_nonzero(std::mt19937_64& rng) const;

  // Raw arithmetic on encoded values.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, long long k) const;
  /// Discrete log base generator(); a must be nonzero.
  std::uint32_t log(std::uint32_t a) const { return log_[a]; }

  std::string name() const;

  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

 private:
  FieldSpec(int p, std::vector<int> modulus);
  void build_tables();

  int p_;
  int e_;
  std::uint32_t q_;
  std::vector<int> modulus_;
  std::vector<std::uint32_t> pw_;  // p^i
  std::vector<std::uint32_t> exp_;  // length 2(q-1)
  std::vector<std::uint32_t> log_;
};

/// Returns true when n is prime (trial division).
bool is_prime(long long n);

/// Rabin irreducibility test for a monic polynomial over F_p (coefficients low to high).
bool is_irreducible_mod_p(int p, const std::vector<int>& poly);

/// An element of a FieldSpec. Cheap value type; the spec pointer is never owning.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FieldSpec* f, std::uint32_t v) : f_(f), v_(v) {}

  const FieldSpec& field() const;
  const FieldSpec* field_ptr() const { return f_; }
  std::uint32_t index() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  /// Canonical coefficient vector of length e over F_p.
  std::vector<int> coeffs() const;
  /// True when the element lies in the prime subfield.
  bool in_prime_field() const { return f_ && v_ < static_cast<std::uint32_t>(f_->p()); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement inverse() const;
  FieldElement pow(long long k) const;
  /// Some square root, if one exists in this field.
  bool sqrt(FieldElement& out) const;

  bool operator==(const FieldElement& o) const { return f_ == o.f_ && v_ == o.v_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  bool operator<(const FieldElement& o) const { return v_ < o.v_; }

  std::string str() const;

 private:
  void check_same(const FieldElement& o) const;
  const FieldSpec* f_ = nullptr;
  std::uint32_t v_ = 0;
};

/// Uniform integer in [0, n) from a 64-bit engine; stable across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

/// Decorrelated seed for item `index` of a run seeded by `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace gl2sing
