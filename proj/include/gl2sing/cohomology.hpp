#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gl2sing/matrix.hpp"

namespace gl2sing {

/// The monomial C^cdeg t^tdeg.
struct CechMonomial {
  int cdeg = 0;
  int tdeg = 0;
  bool operator==(const CechMonomial& o) const { return cdeg == o.cdeg && tdeg == o.tdeg; }
  std::string str() const;
};

/// One C-degree slice of a module in the two-term class-3 complex.
struct GradedPiece {
  std::string ambient;
  int cdeg = 0;
  int tmin = 0;
  int tmax = 0;
  std::vector<CechMonomial> basis;
};

struct GradedMap {
  GradedPiece domain;
  GradedPiece codomain;
  GFMatrix matrix;  // codomain.basis.size() x domain.basis.size()
};

/// Degree-m slice of t^s F[t, C t^-2] -> F[t^+-, C] / F[t^-1, C], window t <= tdeg_bound.
GradedMap class3_complex_piece(const FieldSpec& F, int s, int m, int tdeg_bound);

/// gamma * e_gen with gamma = coef * C^cdeg t^tdeg.
struct ModuleTerm {
  int gen = 0;
  int coef = 1;
  CechMonomial gamma;
};
using ModuleElement = std::vector<ModuleTerm>;

/// A presentation by monomial generators and Gamma-linear relations.
struct Class3Presentation {
  int s = 0;
  std::vector<CechMonomial> generators;
  std::vector<ModuleElement> relations;
  std::vector<std::string> relation_names;
};

/// The stated kernel presentation for s = delta + eps in [-2, 2].
Class3Presentation class3_stated_presentation(int s);

std::string format_module_element(const ModuleElement& r);

struct Class3Report {
  int s = 0;
  int cdeg_bound = 0;
  int tdeg_bound = 0;
  std::string field;
  std::vector<int> h0_dims;                  // per C-degree
  std::vector<int> h1_dims;                  // per C-degree
  std::vector<int> minimal_generators;       // per C-degree
  std::vector<int> relation_dims;            // per C-degree, for the stated generators
  std::vector<int> minimal_relations;        // per C-degree
  std::vector<int> stated_relation_span;     // per C-degree
  std::vector<CechMonomial> h1_basis;
  bool generators_in_kernel = false;
  bool generators_span = false;
  bool generators_minimal = false;
  bool stated_relations_hold = false;
  bool stated_relations_generate = false;
  bool h1_annihilated = false;  // B, C, D act by zero on H^1
  int total_minimal_generators = 0;
  int total_minimal_relations = 0;
  int h1_total = 0;
  /// Minimal relations not in the span of the stated ones (first failing degree).
  std::vector<std::string> unlisted_relations;

  /// H^0 generators and relations agree with the stated presentation.
  bool presentation_matches() const {
    return generators_in_kernel && generators_span && generators_minimal && stated_relations_hold &&
           stated_relations_generate;
  }
};

/// Kernel and cokernel of the truncated class-3 complex, degree by degree.
/// Throws "increase bounds" when a bound is below 4 or the truncation cannot be certified.
Class3Report cech_class3(const FieldSpec& F, int s, int cdeg_bound, int tdeg_bound);

/// All ranks agree on the common degree range.
bool same_ranks(const Class3Report& a, const Class3Report& b);

/// Rank of H^1 tensored down to the point (B, C, D) = (b, c, d).
int class3_h1_fiber_rank(const FieldSpec& F, int s, int cdeg_bound, int tdeg_bound, const FieldElement& b,
                         const FieldElement& c, const FieldElement& d);

/// Dimensions of H^0 and H^1 of O(degree) on P^1, Cech complex on a window of size `window`.
std::array<int, 2> p1_cohomology(const FieldSpec& F, int degree, int window = 6);
/// Same for O on A^1 with the single-chart complex (H^0 truncated to the window).
std::array<int, 2> a1_cohomology(const FieldSpec& F, int window = 6);

/// Nonvanishing of R^i Gamma for i = 0, 1, 2 on the chart class (1, 2, 4 or 5) with twist (delta, eps).
std::array<bool, 3> kunneth_vanishing_check(int cls, int delta, int eps);

/// Nonvanishing per degree for the class-3 factor with s = delta + eps in {0, 1, 2}.
std::array<bool, 3> class3_nonvanishing(int delta, int eps);

/// Nonvanishing of R^b Gamma of the a-th exterior power of the Koszul bundle for class tuple T.
bool koszul_vanishing_pattern(const std::vector<int>& T, int a, int b);

struct E1Report {
  int positions = 0;
  std::size_t domain_dim = 0;
  std::size_t codomain_dim = 0;
  std::size_t rank = 0;
  std::size_t cokernel_rank = 0;
  /// The named witness vectors stay independent modulo the image.
  bool witnesses_independent = false;
  std::size_t witness_count = 0;
};

/// Specialized E1 edge map for the all-class-3 chart with f factors (1 <= f <= 4).
E1Report e1_report_all3(const FieldSpec& F, int f);
int e1_cokernel_rank_all3(const FieldSpec& F, int f);

/// The E1 map mod N(t) for a sequence of length l >= 4, at a seeded random specialization.
/// seed 0 uses the identity frames.
E1Report e1_report_star(const FieldSpec& F, int length, std::uint64_t seed);
int e1_cokernel_rank_star(const FieldSpec& F, int length, std::uint64_t seed);

}  // namespace gl2sing
