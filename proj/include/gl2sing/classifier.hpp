#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gl2sing/shapes.hpp"
#include "gl2sing/weights.hpp"

namespace gl2sing {

enum class Verdict { SMOOTH, NON_NORMAL, NORMAL_SINGULAR };
std::string to_string(Verdict v);

struct ComponentDiagnosis {
  Verdict verdict = Verdict::SMOOTH;
  int nonnormal_codim = 0;
  bool complement_smooth = false;
  bool gorenstein = false;
  bool lci = false;
  int sing_codim = 0;
  /// Which rule fired: "steinberg", "a", "b", "generic", or "charts".
  std::string provenance;

  /// Compares the verdict and its invariants, ignoring provenance.
  bool same_result(const ComponentDiagnosis& o) const;
};

/// Rule-based classification from the pattern of n.
ComponentDiagnosis classify_weight(const SerreWeight& w);

/// Chart-level classification; nullopt when the interval hypothesis fails. Throws on Steinberg weights.
std::optional<ComponentDiagnosis> classify_via_charts(const SerreWeight& w);

/// Thrown when an enumeration would exceed its configured size.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

enum class Agreement { AGREE, DISAGREE, NOT_APPLICABLE };
std::string to_string(Agreement a);

struct EnumerationRow {
  SerreWeight weight;
  ComponentDiagnosis rule;
  std::optional<ComponentDiagnosis> charts;
  Agreement agreement = Agreement::NOT_APPLICABLE;
};

struct EnumerationOptions {
  std::uint64_t bound = 1000000;
  int jobs = 1;
  /// Keep only weights for which this returns true; empty keeps all.
  std::function<bool(const SerreWeight&)> filter;
};

/// All n in [0, p-1]^f with m = 0, in lexicographic order of n.
std::vector<EnumerationRow> enumerate_weights(int p, int f, const EnumerationOptions& opts = {});

}  // namespace gl2sing
