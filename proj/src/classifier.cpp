#include "gl2sing/classifier.hpp"

#include <algorithm>
#include <thread>

namespace gl2sing {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::SMOOTH:
      return "SMOOTH";
    case Verdict::NON_NORMAL:
      return "NON_NORMAL";
    case Verdict::NORMAL_SINGULAR:
      return "NORMAL_SINGULAR";
  }
  return "?";
}

std::string to_string(Agreement a) {
  switch (a) {
    case Agreement::AGREE:
      return "agree";
    case Agreement::DISAGREE:
      return "disagree";
    case Agreement::NOT_APPLICABLE:
      return "not_applicable";
  }
  return "?";
}

bool ComponentDiagnosis::same_result(const ComponentDiagnosis& o) const {
  return verdict == o.verdict && nonnormal_codim == o.nonnormal_codim && complement_smooth == o.complement_smooth &&
         gorenstein == o.gorenstein && lci == o.lci && sing_codim == o.sing_codim;
}

namespace {

ComponentDiagnosis non_normal(int f, std::string provenance) {
  ComponentDiagnosis d;
  d.verdict = Verdict::NON_NORMAL;
  d.nonnormal_codim = f;
  d.complement_smooth = true;
  d.provenance = std::move(provenance);
  return d;
}

ComponentDiagnosis normal_singular(bool gorenstein, int codim, std::string provenance) {
  ComponentDiagnosis d;
  d.verdict = Verdict::NORMAL_SINGULAR;
  d.gorenstein = gorenstein;
  d.lci = gorenstein;
  d.sing_codim = codim;
  d.provenance = std::move(provenance);
  return d;
}

ComponentDiagnosis smooth(std::string provenance) {
  ComponentDiagnosis d;
  d.provenance = std::move(provenance);
  return d;
}

// Cardinalities of cyclic runs (0, p-2, ..., p-2, p-1) in n.
std::vector<int> pattern_b_sizes(const SerreWeight& w) {
  std::vector<int> sizes;
  for (int a = 0; a < w.f; ++a) {
    if (w.n[a] != 0) continue;
    for (int step = 1; step < w.f; ++step) {
      int v = w.n[(a + step) % w.f];
      if (v == w.p - 1) {
        sizes.push_back(step + 1);
        break;
      }
      if (v != w.p - 2) break;
    }
  }
  return sizes;
}

}  // namespace

ComponentDiagnosis classify_weight(const SerreWeight& w) {
  for (int x : w.n)
    if (x < 0 || x > w.p - 1) throw Error("n entries must lie in [0, p-1]");
  if (w.is_steinberg()) return smooth("steinberg");
  bool case_a = std::all_of(w.n.begin(), w.n.end(), [&](int x) { return x == w.p - 2; });
  std::vector<int> sizes = pattern_b_sizes(w);
  if (case_a && !sizes.empty()) throw Error("internal: patterns (a) and (b) both matched");
  if (case_a) return non_normal(w.f, "a");
  if (!sizes.empty()) {
    bool all_two = std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 2; });
    return normal_singular(all_two, *std::min_element(sizes.begin(), sizes.end()), "b");
  }
  return smooth("generic");
}

std::optional<ComponentDiagnosis> classify_via_charts(const SerreWeight& w) {
  if (w.is_steinberg()) throw Error("chart classification excludes the Steinberg weight");
  if (w.f > kMaxShapeF) throw Error("too many embeddings for exhaustive shape enumeration");
  GammaProfile g = gamma_from_weight(w);
  auto shift = find_origin_shift(g);
  if (!shift) return std::nullopt;
  GammaProfile gr = rotate_origin(g, *shift);
  TypeProfile profile = type_profile(gr, compute_M(gr));
  int f = w.f;
  bool any_all_three = false;
  bool all_len_three = true;
  std::optional<int> codim;
  for (unsigned mask = 0; mask < (1U << f); ++mask) {
    ClassTuple T = class_tuple(profile, shape_from_mask(f, mask));
    if (std::find(T.begin(), T.end(), ChartClass::EMPTY) != T.end()) continue;
    TDecomposition d = build_t_decomposition(T);
    if (d.all_three) any_all_three = true;
    for (const auto& t : d.star) {
      if (t.length != 3) all_len_three = false;
      if (!codim || t.length - 1 < *codim) codim = t.length - 1;
    }
  }
  if (any_all_three) return non_normal(f, "charts");
  if (codim) return normal_singular(all_len_three, *codim, "charts");
  return smooth("charts");
}

std::vector<EnumerationRow> enumerate_weights(int p, int f, const EnumerationOptions& opts) {
  if (!is_prime(p) || p <= 3) throw Error("p must be a prime greater than 3");
  if (f < 1) throw Error("f must be positive");
  std::uint64_t total = 1;
  for (int i = 0; i < f; ++i) {
    total *= static_cast<std::uint64_t>(p);
    if (total > opts.bound) throw BoundExceeded("p^f exceeds the enumeration bound");
  }
  std::vector<std::optional<EnumerationRow>> slots(total);
  auto work = [&](std::uint64_t begin, std::uint64_t stride) {
    for (std::uint64_t idx = begin; idx < total; idx += stride) {
      std::vector<int> n(f);
      std::uint64_t r = idx;
      for (int j = f - 1; j >= 0; --j) {
        n[j] = static_cast<int>(r % p);
        r /= p;
      }
      SerreWeight w = SerreWeight::make(p, n);
      if (opts.filter && !opts.filter(w)) continue;
      EnumerationRow row;
      row.weight = w;
      row.rule = classify_weight(w);
      if (!w.is_steinberg()) row.charts = classify_via_charts(w);
      if (row.charts)
        row.agreement = row.charts->same_result(row.rule) ? Agreement::AGREE : Agreement::DISAGREE;
      slots[idx] = std::move(row);
    }
  };
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work, static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(jobs));
    for (auto& th : pool) th.join();
  }
  std::vector<EnumerationRow> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

}  // namespace gl2sing
