#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gl2sing/laurent.hpp"
#include "gl2sing/matrix.hpp"
#include "gl2sing/mpoly.hpp"
#include "gl2sing/shapes.hpp"

namespace gl2sing {

/// One of the eight local chart types, indexed 1..8 by (k, s, wtilde).
struct LocalChartCase {
  int k = 1;
  Weyl s = Weyl::Id;
  Shape wtilde = Shape::W0TETA;

  /// Validates (k, s) and returns the chart type number.
  int number() const;
  /// Chart type `n` with pairing k.
  static LocalChartCase make(int n, int k);
  std::string str() const;
};

enum class ChartVar { B = 0, C = 1, Cp = 2, D = 3 };
std::string to_string(ChartVar v);

/// Values for the chart variables; absent entries are unused by the case.
using ChartParams = std::array<std::optional<FieldElement>, 4>;

std::vector<ChartVar> case_variables(const LocalChartCase& c);
Mat2Laurent x_template(const LocalChartCase& c, const ChartParams& params);

struct BaPointSample {
  ProjPoint l;
  GFMatrix kappa;
  ChartParams params;
  ProjPoint r;
};

/// Coordinates used by relation and ideal polynomials, in the order x, y, x', y', B, C, C', D.
enum CoordIndex { X_ = 0, Y_ = 1, XP = 2, YP = 3, VB = 4, VC = 5, VCP = 6, VD = 7, NCOORDS = 8 };
const std::vector<std::string>& coordinate_names();

/// (x, y) from a representative of l times kappa; unused variables are zero.
std::vector<FieldElement> chart_coordinates(const BaPointSample& s);

IdealSpec ba_relations(const FieldSpec& F, const LocalChartCase& c);
IdealSpec table_ideal(const FieldSpec& F, const LocalChartCase& c, Side side);
/// True when the table ideal is the unit ideal.
bool table_ideal_is_unit(const LocalChartCase& c, Side side);

/// Seeded samples of the chart; with a side, samples also satisfy that side's table ideal.
std::vector<BaPointSample> sample_ba_point(const FieldSpec& F, const LocalChartCase& c, std::optional<Side> side,
                                          std::uint64_t seed, std::size_t count);

/// W for the chart-wise standard lifts.
Mat2Laurent compute_w(const BaPointSample& s, const LocalChartCase& c);
/// W for explicit lifts: lkappa is a lift of l times kappa, rtilde a lift of r.
Mat2Laurent compute_w_lifts(const GFMatrix& lkappa, const ChartParams& params, const GFMatrix& rtilde,
                            const LocalChartCase& c);
/// The chart-wise standard lifts (lift of l times kappa, lift of r).
std::pair<GFMatrix, GFMatrix> standard_lifts(const BaPointSample& s);

/// v divides W11 (side L) or W22 (side R). Requires W in A(eta).
bool shape_condition_check(const Mat2Laurent& W, Side side);

struct TableRowReport {
  int case_number = 0;
  int k = 0;
  Side side = Side::L;
  std::string field;
  std::size_t trials = 0;
  std::size_t in_a_eta = 0;
  std::size_t matches = 0;
  std::size_t ideal_zero = 0;
  std::size_t condition_true = 0;
  bool ok() const { return in_a_eta == trials && matches == trials; }
};

TableRowReport verify_table_row(const FieldSpec& F, const LocalChartCase& c, Side side, std::size_t trials,
                                std::uint64_t seed, int jobs = 1);

/// Unconstrained points: W in A(eta) exactly when the chart relations hold.
struct AmbientReport {
  std::size_t trials = 0;
  std::size_t relations_hold = 0;
  std::size_t matches = 0;
  bool ok() const { return matches == trials; }
};
AmbientReport ambient_membership_check(const FieldSpec& F, const LocalChartCase& c, std::size_t trials,
                                       std::uint64_t seed);

/// The cone D^2 + BC in variables (B, C, D).
IdealSpec cone_ideal(const FieldSpec& F);
/// (B, t) -> (B, -B t^2, -B t).
std::array<FieldElement, 3> cone_parametrization(const FieldElement& B, const FieldElement& t);

struct SingularScanReport {
  std::string field;
  std::size_t cone_points = 0;
  std::size_t singular_points = 0;
  bool singular_only_at_origin = false;
  bool parametrization_covers_cone = false;
  int cone_dimension = 0;
  int singular_codim = 0;
  bool exhaustive = false;
};

/// Exhaustive Jacobian scan of the cone over F (requires q^3 <= 2^21).
SingularScanReport singular_locus_scan(const FieldSpec& F);
/// Sampled scan over the parametrized cone: rank drops exactly at the origin.
SingularScanReport singular_locus_sample(const FieldSpec& F, std::size_t samples, std::uint64_t seed);

struct NonNormalCountReport {
  int f = 1;
  std::uint32_t q = 0;
  std::uint64_t gl2_order = 0;
  std::uint64_t y_points = 0;
  std::uint64_t y_nonnormal_points = 0;
  std::uint64_t z_points = 0;
  std::uint64_t z_nonnormal_points = 0;
  int y_codim = 0;
  int z_codim = 0;
};

/// Point counts of the all-class-3 chart and the preimage and image of its non-normal locus.
NonNormalCountReport all3_nonnormal_count(const FieldSpec& F, int f);

}  // namespace gl2sing
