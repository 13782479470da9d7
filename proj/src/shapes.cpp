#include "gl2sing/shapes.hpp"

#include <algorithm>

namespace gl2sing {

std::string to_string(Shape s) { return s == Shape::W0TETA ? "w0t_eta" : "t_w0eta"; }

std::string to_string(ChartClass c) {
  if (c == ChartClass::EMPTY) return "empty";
  return std::to_string(static_cast<int>(c));
}

ShapeChoice shape_from_mask(int f, unsigned mask) {
  ShapeChoice s(f);
  for (int j = 0; j < f; ++j) s[j] = (mask >> j) & 1U ? Shape::TW0ETA : Shape::W0TETA;
  return s;
}

ChartClass class_of(Side side, Shape wtilde, int k, Weyl s) {
  if (k < 0) throw Error("negative pairing");
  if (k == 0 && s == Weyl::W0) throw Error("invalid (k, s): s must be id when k = 0");
  if (side == Side::L) {
    if (wtilde == Shape::W0TETA) return (k == 1 && s == Weyl::W0) ? ChartClass::C1 : ChartClass::C2;
    return k == 0 ? ChartClass::C2 : ChartClass::EMPTY;
  }
  if (k == 0) return ChartClass::C5;
  if (k > 1) return ChartClass::C4;
  if (wtilde == Shape::W0TETA) return s == Weyl::W0 ? ChartClass::C3 : ChartClass::C4;
  return s == Weyl::Id ? ChartClass::C3 : ChartClass::C4;
}

ClassTuple class_tuple(const TypeProfile& profile, const ShapeChoice& shape) {
  if (static_cast<int>(shape.size()) != profile.f()) throw Error("shape length mismatch");
  ClassTuple T(profile.f());
  for (int j = 0; j < profile.f(); ++j) {
    const auto& e = profile.entries[j];
    T[j] = class_of(e.side, shape[j], e.k, e.s);
  }
  return T;
}

TDecomposition build_t_decomposition(const ClassTuple& T) {
  TDecomposition d;
  d.f = static_cast<int>(T.size());
  if (std::find(T.begin(), T.end(), ChartClass::EMPTY) != T.end()) throw Error("chart empty");
  d.all_three = std::all_of(T.begin(), T.end(), [](ChartClass c) { return c == ChartClass::C3; });
  if (d.all_three) return d;
  for (int a = 0; a < d.f; ++a) {
    if (T[a] == ChartClass::C3) continue;
    int steps = 1;
    while (T[(a + steps) % d.f] == ChartClass::C3) ++steps;
    TSequence t{a, steps + 1};
    d.sequences.push_back(t);
    ChartClass first = T[a], last = T[t.end(d.f)];
    if ((first == ChartClass::C1 || first == ChartClass::C2) && (last == ChartClass::C1 || last == ChartClass::C5))
      d.star.push_back(t);
  }
  return d;
}

std::vector<CyclicInterval> heart_subsequences(const GammaProfile& g) {
  std::vector<CyclicInterval> out;
  for (int a = 0; a < g.f; ++a) {
    if (g.gamma[a] != g.p - 1) continue;
    for (int step = 1; step < g.f; ++step) {
      int j = (a + step) % g.f;
      if (g.gamma[j] == 0) {
        out.push_back({a, step + 1});
        break;
      }
      if (g.gamma[j] != 1) break;
    }
  }
  return out;
}

std::optional<int> min_star_length(const TypeProfile& profile) {
  int f = profile.f();
  if (f > kMaxShapeF) throw Error("too many embeddings for exhaustive shape enumeration");
  std::optional<int> best;
  for (unsigned mask = 0; mask < (1U << f); ++mask) {
    ClassTuple T = class_tuple(profile, shape_from_mask(f, mask));
    if (std::find(T.begin(), T.end(), ChartClass::EMPTY) != T.end()) continue;
    for (const auto& t : build_t_decomposition(T).star)
      if (!best || t.length - 1 < *best) best = t.length - 1;
  }
  return best;
}

}  // namespace gl2sing
