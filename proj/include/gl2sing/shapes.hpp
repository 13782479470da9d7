#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gl2sing/weights.hpp"

namespace gl2sing {

enum class Shape { W0TETA, TW0ETA };
enum class ChartClass { C1 = 1, C2 = 2, C3 = 3, C4 = 4, C5 = 5, EMPTY = 0 };

std::string to_string(Shape s);
std::string to_string(ChartClass c);

using ShapeChoice = std::vector<Shape>;
using ClassTuple = std::vector<ChartClass>;

/// Shape choice encoded by the bits of `mask` (bit j set means TW0ETA at j).
ShapeChoice shape_from_mask(int f, unsigned mask);

ChartClass class_of(Side side, Shape wtilde, int k, Weyl s);
ClassTuple class_tuple(const TypeProfile& profile, const ShapeChoice& shape);

/// Cyclic sequence (start, ..., start + length - 1) with non-3 endpoints and class-3 interior.
struct TSequence {
  int start = 0;
  int length = 2;
  int end(int f) const { return (start + length - 1) % f; }
  bool operator==(const TSequence& o) const { return start == o.start && length == o.length; }
};

struct TDecomposition {
  int f = 1;
  std::vector<TSequence> sequences;
  bool all_three = false;
  std::vector<TSequence> star;
};

TDecomposition build_t_decomposition(const ClassTuple& T);

/// Cyclic intervals (p-1, 1, ..., 1, 0) in gamma of length at most f.
std::vector<CyclicInterval> heart_subsequences(const GammaProfile& g);

/// Minimum of l - 1 over all shapes and all starred sequences, if any exist.
std::optional<int> min_star_length(const TypeProfile& profile);

/// Largest f accepted by exhaustive shape enumeration.
constexpr int kMaxShapeF = 12;

}  // namespace gl2sing
