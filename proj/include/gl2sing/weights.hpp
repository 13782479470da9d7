#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gl2sing/field.hpp"

namespace gl2sing {

enum class Weyl { Id, W0 };
enum class Side { L, R };

std::string to_string(Weyl s);
std::string to_string(Side s);

/// Serre weight data (m, n) for GL2 over an unramified extension of degree f.
struct SerreWeight {
  int p = 5;
  int f = 1;
  std::vector<int> m;
  std::vector<int> n;

  /// Validates ranges; m defaults to zeros when empty.
  static SerreWeight make(int p, std::vector<int> n, std::vector<int> m = {});
  bool is_steinberg() const;
  /// Relabels indices j -> j - shift on both m and n.
  SerreWeight rotated(int shift) const;
};

struct GammaProfile {
  int p = 5;
  int f = 1;
  std::vector<int> gamma;
  bool hypothesis_ok = false;

  /// Builds from explicit gamma values in [0, p-1].
  static GammaProfile make(int p, std::vector<int> gamma);
  /// (p-1)/2, the threshold used throughout the interval rules.
  int half() const { return (p - 1) / 2; }
};

/// Cyclic interval {start, start+1, ..., start+length-1} in Z/f.
struct CyclicInterval {
  int start = 0;
  int length = 1;
  int end(int f) const { return (start + length - 1) % f; }
  std::vector<int> indices(int f) const;
  bool contains(int j, int f) const;
  bool operator==(const CyclicInterval& o) const { return start == o.start && length == o.length; }
  bool operator<(const CyclicInterval& o) const { return std::pair(start, length) < std::pair(o.start, o.length); }
};

struct MaximalSubsetDecomposition {
  int f = 1;
  std::vector<CyclicInterval> intervals;

  std::vector<int> starts() const;
  std::vector<int> ends() const;
  /// Every index of an interval except its start.
  std::vector<int> non_starts() const;
};

struct TypeEntry {
  int k = 0;
  Weyl s = Weyl::Id;
  Weyl s_or = Weyl::Id;
  Side side = Side::R;
  int c = 0;
  std::pair<int, int> mu() const { return {k + c, c}; }
  bool operator==(const TypeEntry& o) const {
    return k == o.k && s == o.s && s_or == o.s_or && side == o.side;
  }
};

struct TypeProfile {
  int p = 5;
  std::vector<TypeEntry> entries;
  int f() const { return static_cast<int>(entries.size()); }
};

using DescentExponents = std::vector<std::pair<long long, long long>>;

GammaProfile gamma_from_weight(const SerreWeight& w);
/// Requires hypothesis_ok.
MaximalSubsetDecomposition compute_M(const GammaProfile& g);
/// Requires that 0 lies in no interval or gamma_0 < (p-1)/2.
TypeProfile type_profile(const GammaProfile& g, const MaximalSubsetDecomposition& M);
/// gamma'_j = gamma_{j+shift}: index j becomes j - shift.
GammaProfile rotate_origin(const GammaProfile& g, int shift);
/// Smallest shift after which type_profile is applicable, or nullopt.
std::optional<int> find_origin_shift(const GammaProfile& g);
/// Sets c_j = -m_j on each entry, with the index-one shift convention when requested.
void assign_central_shifts(TypeProfile& profile, const std::vector<int>& m, bool shifted_index_one);
DescentExponents descent_exponents(const TypeProfile& profile);
/// Checks a^(j+1) = p a^(j) componentwise mod p^f - 1 for all j.
bool descent_exponents_consistent(const TypeProfile& profile, const DescentExponents& a);

}  // namespace gl2sing
