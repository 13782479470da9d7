#include "gl2sing/weights.hpp"

#include <algorithm>

namespace gl2sing {

namespace {

int mod(int a, int f) { return ((a % f) + f) % f; }

long long mod_ll(long long a, long long n) { return ((a % n) + n) % n; }

}  // namespace

std::string to_string(Weyl s) { return s == Weyl::Id ? "id" : "w0"; }
std::string to_string(Side s) { return s == Side::L ? "L" : "R"; }

SerreWeight SerreWeight::make(int p, std::vector<int> n, std::vector<int> m) {
  if (!is_prime(p) || p <= 3) throw Error("p must be a prime greater than 3");
  if (n.empty()) throw Error("weight needs at least one embedding");
  for (int x : n)
    if (x < 0 || x > p - 1) throw Error("n entries must lie in [0, p-1]");
  if (m.empty()) m.assign(n.size(), 0);
  if (m.size() != n.size()) throw Error("m and n lengths differ");
  SerreWeight w;
  w.p = p;
  w.f = static_cast<int>(n.size());
  w.n = std::move(n);
  w.m = std::move(m);
  return w;
}

bool SerreWeight::is_steinberg() const {
  return std::all_of(n.begin(), n.end(), [&](int x) { return x == p - 1; });
}

SerreWeight SerreWeight::rotated(int shift) const {
  SerreWeight w = *this;
  for (int j = 0; j < f; ++j) {
    w.n[j] = n[mod(j + shift, f)];
    w.m[j] = m[mod(j + shift, f)];
  }
  return w;
}

GammaProfile GammaProfile::make(int p, std::vector<int> gamma) {
  if (gamma.empty()) throw Error("empty gamma profile");
  for (int x : gamma)
    if (x < 0 || x > p - 1) throw Error("gamma entries must lie in [0, p-1]");
  GammaProfile g;
  g.p = p;
  g.f = static_cast<int>(gamma.size());
  g.gamma = std::move(gamma);
  int h = g.half();
  bool all_le = std::all_of(g.gamma.begin(), g.gamma.end(), [&](int x) { return x <= h; });
  bool some_lt = std::any_of(g.gamma.begin(), g.gamma.end(), [&](int x) { return x < h; });
  g.hypothesis_ok = all_le || some_lt;
  return g;
}

std::vector<int> CyclicInterval::indices(int f) const {
  std::vector<int> out;
  for (int i = 0; i < length; ++i) out.push_back((start + i) % f);
  return out;
}

bool CyclicInterval::contains(int j, int f) const { return mod(j - start, f) < length; }

std::vector<int> MaximalSubsetDecomposition::starts() const {
  std::vector<int> out;
  for (const auto& I : intervals) out.push_back(I.start);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> MaximalSubsetDecomposition::ends() const {
  std::vector<int> out;
  for (const auto& I : intervals) out.push_back(I.end(f));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> MaximalSubsetDecomposition::non_starts() const {
  std::vector<int> out;
  for (const auto& I : intervals)
    for (int i = 1; i < I.length; ++i) out.push_back((I.start + i) % f);
  std::sort(out.begin(), out.end());
  return out;
}

GammaProfile gamma_from_weight(const SerreWeight& w) {
  std::vector<int> g(w.f);
  for (int j = 0; j < w.f; ++j) g[j] = w.p - 1 - w.n[j];
  return GammaProfile::make(w.p, std::move(g));
}

MaximalSubsetDecomposition compute_M(const GammaProfile& g) {
  if (!g.hypothesis_ok) throw Error("weight hypothesis fails");
  MaximalSubsetDecomposition M;
  M.f = g.f;
  int h = g.half();
  for (int s = 0; s < g.f; ++s) {
    if (g.gamma[s] >= h) continue;
    int last_big = -1;
    for (int step = 1; step < g.f; ++step) {
      int j = (s + step) % g.f;
      if (g.gamma[j] < h) break;
      if (g.gamma[j] > h) last_big = step;
    }
    if (last_big > 0) M.intervals.push_back({s, last_big + 1});
  }
  return M;
}

TypeProfile type_profile(const GammaProfile& g, const MaximalSubsetDecomposition& M) {
  int h = g.half();
  bool zero_covered = false;
  for (const auto& I : M.intervals)
    if (I.contains(0, g.f)) zero_covered = true;
  if (zero_covered && !(g.gamma[0] < h)) throw Error("rotate labels first");
  TypeProfile t;
  t.p = g.p;
  t.entries.resize(g.f);
  for (int j = 0; j < g.f; ++j) {
    int gj = g.gamma[j];
    TypeEntry e{gj, Weyl::Id, Weyl::Id, Side::R, 0};
    for (const auto& I : M.intervals) {
      if (!I.contains(j, g.f)) continue;
      if (j == I.start) {
        e = {gj + 1, Weyl::W0, Weyl::W0, Side::L, 0};
      } else if (j == I.end(g.f)) {
        e = {g.p - gj, Weyl::W0, Weyl::Id, Side::R, 0};
      } else {
        e = {g.p - 1 - gj, Weyl::Id, Weyl::W0, Side::L, 0};
      }
    }
    t.entries[j] = e;
  }
  return t;
}

GammaProfile rotate_origin(const GammaProfile& g, int shift) {
  std::vector<int> out(g.f);
  for (int j = 0; j < g.f; ++j) out[j] = g.gamma[mod(j + shift, g.f)];
  return GammaProfile::make(g.p, std::move(out));
}

std::optional<int> find_origin_shift(const GammaProfile& g) {
  if (!g.hypothesis_ok) return std::nullopt;
  MaximalSubsetDecomposition M = compute_M(g);
  int h = g.half();
  for (int shift = 0; shift < g.f; ++shift) {
    bool covered = false;
    for (const auto& I : M.intervals)
      if (I.contains(shift, g.f)) covered = true;
    if (!covered || g.gamma[shift] < h) return shift;
  }
  return std::nullopt;
}

void assign_central_shifts(TypeProfile& profile, const std::vector<int>& m, bool shifted_index_one) {
  if (static_cast<int>(m.size()) != profile.f()) throw Error("m length mismatch");
  for (int j = 0; j < profile.f(); ++j) {
    profile.entries[j].c = -m[j];
    if (shifted_index_one && j == 1 % profile.f()) profile.entries[j].c -= 1;
  }
}

DescentExponents descent_exponents(const TypeProfile& profile) {
  int f = profile.f();
  std::vector<std::pair<long long, long long>> alpha(f);
  for (int j = 0; j < f; ++j) {
    if (j == 0) {
      alpha[0] = profile.entries[0].mu();
      continue;
    }
    auto mu = profile.entries[f - j].mu();
    int flips = 0;
    for (int i = f - j; i <= f - 1; ++i)
      if (profile.entries[i].s == Weyl::W0) ++flips;
    alpha[j] = flips % 2 ? std::pair<long long, long long>{mu.second, mu.first}
                         : std::pair<long long, long long>{mu.first, mu.second};
  }
  DescentExponents a(f, {0, 0});
  for (int j = 0; j < f; ++j) {
    long long pw = 1;
    for (int i = 0; i < f; ++i) {
      const auto& al = alpha[mod(-j + i, f)];
      a[j].first += al.first * pw;
      a[j].second += al.second * pw;
      pw *= profile.p;
    }
  }
  return a;
}

bool descent_exponents_consistent(const TypeProfile& profile, const DescentExponents& a) {
  int f = profile.f();
  long long N = 1;
  for (int i = 0; i < f; ++i) N *= profile.p;
  N -= 1;
  for (int j = 0; j < f; ++j) {
    const auto& cur = a[j];
    const auto& nxt = a[(j + 1) % f];
    if (mod_ll(nxt.first - profile.p * cur.first, N) != 0) return false;
    if (mod_ll(nxt.second - profile.p * cur.second, N) != 0) return false;
  }
  return true;
}

}  // namespace gl2sing
