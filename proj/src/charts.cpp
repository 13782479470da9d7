#include "gl2sing/charts.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

namespace gl2sing {

namespace {

using Vec2 = std::pair<FieldElement, FieldElement>;

FieldElement param(const ChartParams& p, ChartVar v) {
  const auto& x = p[static_cast<int>(v)];
  if (!x) throw Error("missing chart variable " + to_string(v));
  return *x;
}

LaurentPoly mono(const FieldElement& c, int k) { return LaurentPoly::monomial(c, k); }

Vec2 random_point(const FieldSpec& F, std::mt19937_64& rng) {
  std::uint64_t idx = uniform_below(rng, F.q() + 1);
  if (idx == F.q()) return {F.one(), F.zero()};
  return {F.from_index(static_cast<std::uint32_t>(idx)), F.one()};
}

GFMatrix random_gl2(const FieldSpec& F, std::mt19937_64& rng) {
  for (;;) {
    GFMatrix m(F, 2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m.set(i, j, F.random(rng));
    if (!det(m).is_zero()) return m;
  }
}

Vec2 row_times(const Vec2& v, const GFMatrix& m) {
  return {v.first * m.at(0, 0) + v.second * m.at(1, 0), v.first * m.at(0, 1) + v.second * m.at(1, 1)};
}

Mat2Laurent to_laurent(const GFMatrix& m) {
  return Mat2Laurent::from_constants(m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1));
}

MPoly var(const FieldSpec& F, int i) { return MPoly::variable(F, NCOORDS, i); }

// Raw draw of a chart point: (x, y) for l*kappa, (x', y') for r, and parameters.
struct RawPoint {
  Vec2 P;
  Vec2 r;
  ChartParams params;
};

RawPoint draw_point(const FieldSpec& F, int n, std::optional<Side> side, std::mt19937_64& rng) {
  RawPoint pt{random_point(F, rng), random_point(F, rng), {}};
  auto set = [&](ChartVar v, const FieldElement& x) { pt.params[static_cast<int>(v)] = x; };
  const Vec2 origin_l{F.zero(), F.one()};
  bool pick_l = side ? *side == Side::L : uniform_below(rng, 2) == 0;
  switch (n) {
    case 1:
    case 3: {
      ChartVar V = n == 1 ? ChartVar::B : ChartVar::C;
      FieldElement cp = F.random(rng);
      set(ChartVar::Cp, cp);
      pt.r = {cp, F.one()};
      if (pick_l) {
        set(V, F.zero());
      } else {
        pt.P = origin_l;
        set(V, F.random(rng));
      }
      break;
    }
    case 2:
    case 4: {
      FieldElement cp = F.random(rng);
      set(ChartVar::Cp, cp);
      set(n == 2 ? ChartVar::C : ChartVar::B, F.random(rng));
      pt.r = {cp, F.one()};
      pt.P = origin_l;
      break;
    }
    case 5: {
      if (pick_l) {
        set(ChartVar::B, F.zero());
        set(ChartVar::C, F.zero());
        set(ChartVar::D, F.zero());
        if (side && uniform_below(rng, 2) == 0) pt.r = pt.P;
      } else {
        pt.r = pt.P;
        FieldElement lam = F.random(rng);
        const auto& [a, b] = pt.P;
        set(ChartVar::B, -(lam * b * b));
        set(ChartVar::C, lam * a * a);
        set(ChartVar::D, lam * a * b);
      }
      break;
    }
    case 6: {
      pt.r = pt.P;
      FieldElement lam = F.random(rng);
      const auto& [a, b] = pt.P;
      set(ChartVar::B, -(lam * b * b));
      set(ChartVar::C, lam * a * a);
      set(ChartVar::D, lam * a * b);
      break;
    }
    case 7: {
      FieldElement c = F.random(rng);
      set(ChartVar::C, c);
      if (pick_l) {
        pt.r = {c, F.one()};
      } else {
        pt.P = origin_l;
      }
      break;
    }
    case 8: {
      FieldElement b = F.random(rng);
      set(ChartVar::B, b);
      if (pick_l) {
        pt.r = {F.one(), b};
      } else {
        pt.P = origin_l;
      }
      break;
    }
    default:
      throw Error("unknown chart type");
  }
  return pt;
}

RawPoint draw_ambient(const FieldSpec& F, const LocalChartCase& c, std::mt19937_64& rng) {
  RawPoint pt{random_point(F, rng), random_point(F, rng), {}};
  for (ChartVar v : case_variables(c)) pt.params[static_cast<int>(v)] = F.random(rng);
  return pt;
}

BaPointSample to_sample(const FieldSpec& F, const RawPoint& pt, std::mt19937_64& rng) {
  GFMatrix kappa = random_gl2(F, rng);
  GFMatrix kinv = *inverse(kappa);
  Vec2 l = row_times(pt.P, kinv);
  return BaPointSample{ProjPoint(l.first, l.second), kappa, pt.params, ProjPoint(pt.r.first, pt.r.second)};
}

}  // namespace

std::string to_string(ChartVar v) {
  switch (v) {
    case ChartVar::B:
      return "B";
    case ChartVar::C:
      return "C";
    case ChartVar::Cp:
      return "C'";
    case ChartVar::D:
      return "D";
  }
  return "?";
}

int LocalChartCase::number() const {
  if (k < 0) throw Error("negative pairing");
  if (k == 0 && s == Weyl::W0) throw Error("invalid (k, s): s must be id when k = 0");
  bool w0t = wtilde == Shape::W0TETA;
  if (k == 0) return w0t ? 7 : 8;
  if (s == Weyl::W0) {
    if (!w0t) return 2;
    return k == 1 ? 5 : 1;
  }
  if (w0t) return 3;
  return k == 1 ? 6 : 4;
}

LocalChartCase LocalChartCase::make(int n, int k) {
  LocalChartCase c;
  c.k = k;
  switch (n) {
    case 1: c.s = Weyl::W0; c.wtilde = Shape::W0TETA; break;
    case 2: c.s = Weyl::W0; c.wtilde = Shape::TW0ETA; break;
    case 3: c.s = Weyl::Id; c.wtilde = Shape::W0TETA; break;
    case 4: c.s = Weyl::Id; c.wtilde = Shape::TW0ETA; break;
    case 5: c.s = Weyl::W0; c.wtilde = Shape::W0TETA; break;
    case 6: c.s = Weyl::Id; c.wtilde = Shape::TW0ETA; break;
    case 7: c.s = Weyl::Id; c.wtilde = Shape::W0TETA; break;
    case 8: c.s = Weyl::Id; c.wtilde = Shape::TW0ETA; break;
    default: throw Error("chart type must be in 1..8");
  }
  if (c.number() != n) throw Error("pairing k incompatible with chart type " + std::to_string(n));
  return c;
}

std::string LocalChartCase::str() const {
  return "type " + std::to_string(number()) + " (k=" + std::to_string(k) + ", s=" + to_string(s) + ", " +
         to_string(wtilde) + ")";
}

std::vector<ChartVar> case_variables(const LocalChartCase& c) {
  switch (c.number()) {
    case 1:
    case 4:
      return {ChartVar::B, ChartVar::Cp};
    case 2:
    case 3:
      return {ChartVar::C, ChartVar::Cp};
    case 5:
    case 6:
      return {ChartVar::B, ChartVar::C, ChartVar::D};
    case 7:
      return {ChartVar::C};
    default:
      return {ChartVar::B};
  }
}

Mat2Laurent x_template(const LocalChartCase& c, const ChartParams& params) {
  auto vars = case_variables(c);
  for (int i = 0; i < 4; ++i) {
    bool needed = std::find(vars.begin(), vars.end(), static_cast<ChartVar>(i)) != vars.end();
    if (needed != params[i].has_value())
      throw Error((needed ? "missing" : "unexpected") + std::string(" chart variable ") +
                  to_string(static_cast<ChartVar>(i)));
  }
  const FieldSpec& F = params[static_cast<int>(vars.front())]->field();
  LaurentPoly one = LaurentPoly::one(F), zero = LaurentPoly::zero(F);
  int k = c.k;
  switch (c.number()) {
    case 1:
    case 4: {
      FieldElement B = param(params, ChartVar::B), Cp = param(params, ChartVar::Cp);
      return {one + mono(B * Cp, -k), mono(B, -1), mono(Cp, -k + 1), one};
    }
    case 2:
    case 3: {
      FieldElement C = param(params, ChartVar::C), Cp = param(params, ChartVar::Cp);
      return {one, mono(C, -1) + mono(Cp, -k - 1), zero, one};
    }
    case 5:
    case 6: {
      FieldElement B = param(params, ChartVar::B), C = param(params, ChartVar::C), D = param(params, ChartVar::D);
      return {one - mono(D, -1), mono(B, -1), mono(C, -1), one + mono(D, -1)};
    }
    case 7:
      return {one, mono(param(params, ChartVar::C), -1), zero, one};
    default:
      return {one, mono(param(params, ChartVar::B), -1), zero, one};
  }
}

const std::vector<std::string>& coordinate_names() {
  static const std::vector<std::string> names = {"x", "y", "x'", "y'", "B", "C", "C'", "D"};
  return names;
}

std::vector<FieldElement> chart_coordinates(const BaPointSample& s) {
  const FieldSpec& F = s.kappa.field();
  Vec2 P = row_times({s.l.x(), s.l.y()}, s.kappa);
  std::vector<FieldElement> pt(NCOORDS, F.zero());
  pt[X_] = P.first;
  pt[Y_] = P.second;
  pt[XP] = s.r.x();
  pt[YP] = s.r.y();
  for (int i = 0; i < 4; ++i)
    if (s.params[i]) pt[VB + i] = *s.params[i];
  return pt;
}

IdealSpec ba_relations(const FieldSpec& F, const LocalChartCase& c) {
  MPoly x = var(F, X_), y = var(F, Y_), xp = var(F, XP), yp = var(F, YP);
  MPoly B = var(F, VB), C = var(F, VC), Cp = var(F, VCP), D = var(F, VD);
  IdealSpec I{coordinate_names(), {}};
  switch (c.number()) {
    case 1:
      I.generators = {xp - yp * Cp, x * B};
      break;
    case 2:
    case 4:
      I.generators = {xp - yp * Cp, x};
      break;
    case 3:
      I.generators = {xp - yp * Cp, x * C};
      break;
    case 5:
      I.generators = {xp * D - yp * C, xp * B + yp * D, x * D - y * C, x * B + y * D};
      break;
    case 6:
      I.generators = {xp * D - yp * C, xp * B + yp * D, x * yp - y * xp};
      break;
    case 7:
      I.generators = {x * (xp - yp * C)};
      break;
    default:
      I.generators = {x * (xp * B - yp)};
      break;
  }
  return I;
}

bool table_ideal_is_unit(const LocalChartCase& c, Side side) {
  int n = c.number();
  return side == Side::L && (n == 2 || n == 4 || n == 6);
}

IdealSpec table_ideal(const FieldSpec& F, const LocalChartCase& c, Side side) {
  MPoly x = var(F, X_), y = var(F, Y_), xp = var(F, XP), yp = var(F, YP);
  MPoly B = var(F, VB), C = var(F, VC), D = var(F, VD);
  IdealSpec I{coordinate_names(), {}};
  int n = c.number();
  if (table_ideal_is_unit(c, side)) {
    I.generators = {MPoly::constant(F, NCOORDS, F.one())};
    return I;
  }
  if (side == Side::R) {
    if (n == 2 || n == 4 || n == 6) return I;
    if (n == 5)
      I.generators = {x * yp - y * xp};
    else
      I.generators = {x};
    return I;
  }
  switch (n) {
    case 1:
      I.generators = {B};
      break;
    case 3:
      I.generators = {C};
      break;
    case 5:
      I.generators = {B, C, D};
      break;
    case 7:
      I.generators = {xp - yp * C};
      break;
    default:
      I.generators = {yp - xp * B};
      break;
  }
  return I;
}

std::vector<BaPointSample> sample_ba_point(const FieldSpec& F, const LocalChartCase& c, std::optional<Side> side,
                                          std::uint64_t seed, std::size_t count) {
  int n = c.number();
  if (side && table_ideal_is_unit(c, *side)) throw Error("cannot satisfy open conditions: side chart is empty");
  IdealSpec rel = ba_relations(F, c);
  std::optional<IdealSpec> ideal;
  if (side) ideal = table_ideal(F, c, *side);
  std::vector<BaPointSample> out;
  out.reserve(count);
  std::size_t cap = 10 * count;
  for (std::size_t attempt = 0; out.size() < count; ++attempt) {
    if (attempt >= cap) throw Error("cannot satisfy open conditions within the oversampling cap");
    std::mt19937_64 rng(derive_seed(seed, attempt));
    RawPoint pt = draw_point(F, n, side, rng);
    BaPointSample s = to_sample(F, pt, rng);
    auto coords = chart_coordinates(s);
    if (!rel.vanishes_at(coords)) continue;
    if (ideal && !ideal->vanishes_at(coords)) continue;
    out.push_back(std::move(s));
  }
  return out;
}

std::pair<GFMatrix, GFMatrix> standard_lifts(const BaPointSample& s) {
  const FieldSpec& F = s.kappa.field();
  auto pt = chart_coordinates(s);
  const FieldElement &x = pt[X_], &y = pt[Y_], &xp = pt[XP], &yp = pt[YP];
  FieldElement u, z, sv, t;
  FieldElement zero = F.zero(), one = F.one();
  if (!x.is_zero() && !xp.is_zero()) {
    u = zero, z = one, sv = one, t = zero;
  } else if (!y.is_zero() && !xp.is_zero()) {
    u = one, z = zero, sv = one, t = zero;
  } else if (!x.is_zero() && !yp.is_zero()) {
    u = zero, z = one, sv = zero, t = one;
  } else {
    u = one, z = zero, sv = zero, t = one;
  }
  GFMatrix lk = GFMatrix::from_elements(F, {{u, z}, {x, y}});
  GFMatrix rt = GFMatrix::from_elements(F, {{t, -sv}, {xp, yp}});
  return {lk, rt};
}

Mat2Laurent compute_w_lifts(const GFMatrix& lkappa, const ChartParams& params, const GFMatrix& rtilde,
                            const LocalChartCase& c) {
  const FieldSpec& F = lkappa.field();
  auto rinv = inverse(rtilde);
  if (!rinv) throw Error("r is not liftable: degenerate lift");
  if (det(lkappa).is_zero()) throw Error("l is not liftable: degenerate lift");
  Mat2Laurent wt = c.wtilde == Shape::W0TETA ? Mat2Laurent::w0_t_eta(F) : Mat2Laurent::t_w0_eta(F);
  Mat2Laurent A = ad_diag_conj(to_laurent(*rinv), {c.k, 0});
  if (c.s == Weyl::W0) {
    Mat2Laurent w = Mat2Laurent::w0(F);
    A = w * A * w;
  }
  return to_laurent(lkappa) * x_template(c, params) * wt * A;
}

Mat2Laurent compute_w(const BaPointSample& s, const LocalChartCase& c) {
  auto [lk, rt] = standard_lifts(s);
  return compute_w_lifts(lk, s.params, rt, c);
}

bool shape_condition_check(const Mat2Laurent& W, Side side) {
  if (!is_in_A_eta(W)) throw Error("shape condition needs a matrix in A(eta)");
  const LaurentPoly& e = side == Side::L ? W.a : W.d;
  return e.is_zero() || v_valuation(e) >= 1;
}

TableRowReport verify_table_row(const FieldSpec& F, const LocalChartCase& c, Side side, std::size_t trials,
                                std::uint64_t seed, int jobs) {
  TableRowReport rep;
  rep.case_number = c.number();
  rep.k = c.k;
  rep.side = side;
  rep.field = F.name();
  rep.trials = trials;
  IdealSpec ideal = table_ideal(F, c, side);
  IdealSpec rel = ba_relations(F, c);
  struct Partial {
    std::size_t in_a = 0, matches = 0, zero = 0, cond = 0;
  };
  jobs = std::max(1, jobs);
  std::vector<Partial> parts(jobs);
  auto work = [&](int t) {
    Partial& P = parts[t];
    for (std::size_t i = t; i < trials; i += jobs) {
      std::mt19937_64 rng(derive_seed(seed, i));
      BaPointSample s = to_sample(F, draw_point(F, c.number(), std::nullopt, rng), rng);
      auto coords = chart_coordinates(s);
      if (!rel.vanishes_at(coords)) continue;
      Mat2Laurent W = compute_w(s, c);
      if (!is_in_A_eta(W)) continue;
      ++P.in_a;
      bool cond = shape_condition_check(W, side);
      bool zero = ideal.vanishes_at(coords);
      P.cond += cond;
      P.zero += zero;
      P.matches += cond == zero;
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& P : parts) {
    rep.in_a_eta += P.in_a;
    rep.matches += P.matches;
    rep.ideal_zero += P.zero;
    rep.condition_true += P.cond;
  }
  return rep;
}

AmbientReport ambient_membership_check(const FieldSpec& F, const LocalChartCase& c, std::size_t trials,
                                       std::uint64_t seed) {
  AmbientReport rep;
  rep.trials = trials;
  IdealSpec rel = ba_relations(F, c);
  for (std::size_t i = 0; i < trials; ++i) {
    std::mt19937_64 rng(derive_seed(seed, i));
    RawPoint pt = i % 2 ? draw_ambient(F, c, rng) : draw_point(F, c.number(), std::nullopt, rng);
    BaPointSample s = to_sample(F, pt, rng);
    bool holds = rel.vanishes_at(chart_coordinates(s));
    rep.relations_hold += holds;
    rep.matches += holds == is_in_A_eta(compute_w(s, c));
  }
  return rep;
}

IdealSpec cone_ideal(const FieldSpec& F) {
  MPoly B = MPoly::variable(F, 3, 0), C = MPoly::variable(F, 3, 1), D = MPoly::variable(F, 3, 2);
  return IdealSpec{{"B", "C", "D"}, {D * D + B * C}};
}

std::array<FieldElement, 3> cone_parametrization(const FieldElement& B, const FieldElement& t) {
  return {B, -(B * t * t), -(B * t)};
}

SingularScanReport singular_locus_scan(const FieldSpec& F) {
  std::uint64_t q = F.q();
  if (q * q * q > (1ULL << 21)) throw Error("field too large for an exhaustive scan");
  SingularScanReport rep;
  rep.field = F.name();
  rep.exhaustive = true;
  IdealSpec I = cone_ideal(F);
  std::set<std::array<std::uint32_t, 3>> cone;
  bool only_origin = true;
  for (std::uint32_t b = 0; b < q; ++b)
    for (std::uint32_t c = 0; c < q; ++c)
      for (std::uint32_t d = 0; d < q; ++d) {
        std::vector<FieldElement> pt = {F.from_index(b), F.from_index(c), F.from_index(d)};
        if (!I.vanishes_at(pt)) continue;
        cone.insert({b, c, d});
        if (jacobian_rank(I, pt) == 0) {
          ++rep.singular_points;
          if (b || c || d) only_origin = false;
        }
      }
  rep.cone_points = cone.size();
  rep.singular_only_at_origin = only_origin && rep.singular_points == 1;
  std::set<std::array<std::uint32_t, 3>> image;
  for (std::uint32_t b = 0; b < q; ++b)
    for (std::uint32_t t = 0; t < q; ++t) {
      auto v = cone_parametrization(F.from_index(b), F.from_index(t));
      image.insert({v[0].index(), v[1].index(), v[2].index()});
    }
  for (std::uint32_t c = 0; c < q; ++c) image.insert({0, c, 0});
  rep.parametrization_covers_cone = image == cone;
  double lq = std::log(static_cast<double>(q));
  rep.cone_dimension = static_cast<int>(std::lround(std::log(static_cast<double>(rep.cone_points)) / lq));
  int sing_dim = static_cast<int>(std::lround(std::log(static_cast<double>(std::max<std::size_t>(1, rep.singular_points))) / lq));
  rep.singular_codim = rep.cone_dimension - sing_dim;
  return rep;
}

SingularScanReport singular_locus_sample(const FieldSpec& F, std::size_t samples, std::uint64_t seed) {
  SingularScanReport rep;
  rep.field = F.name();
  IdealSpec I = cone_ideal(F);
  bool consistent = true;
  for (std::size_t i = 0; i < samples; ++i) {
    std::mt19937_64 rng(derive_seed(seed, i));
    std::vector<FieldElement> pt;
    if (i == 0) {
      pt = {F.zero(), F.zero(), F.zero()};
    } else if (uniform_below(rng, 8) == 0) {
      pt = {F.zero(), F.random(rng), F.zero()};
    } else {
      auto v = cone_parametrization(F.random(rng), F.random(rng));
      pt = {v[0], v[1], v[2]};
    }
    ++rep.cone_points;
    bool origin = pt[0].is_zero() && pt[1].is_zero() && pt[2].is_zero();
    bool singular = jacobian_rank(I, pt) == 0;
    rep.singular_points += singular;
    if (singular != origin) consistent = false;
  }
  rep.singular_only_at_origin = consistent;
  rep.cone_dimension = 2;
  rep.singular_codim = 2;
  return rep;
}

NonNormalCountReport all3_nonnormal_count(const FieldSpec& F, int f) {
  if (f < 1 || f > 2) throw Error("point count supports f in {1, 2}");
  const std::uint32_t q = F.q();
  if (q > 9) throw Error("point count needs q <= 9");
  NonNormalCountReport rep;
  rep.f = f;
  rep.q = q;
  struct G {
    std::uint32_t e[4];
    std::uint32_t inv[4];
    std::uint32_t code;
  };
  std::vector<G> gl2;
  for (std::uint32_t code = 0; code < q * q * q * q; ++code) {
    std::uint32_t a = code % q, b = (code / q) % q, c = (code / (q * q)) % q, d = code / (q * q * q);
    std::uint32_t dt = F.sub(F.mul(a, d), F.mul(b, c));
    if (!dt) continue;
    std::uint32_t di = F.inv(dt);
    gl2.push_back({{a, b, c, d}, {F.mul(d, di), F.mul(F.neg(b), di), F.mul(F.neg(c), di), F.mul(a, di)}, code});
  }
  rep.gl2_order = gl2.size();
  // Normalized points of P^1 as (a, b): [x:1] or [1:0].
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pts;
  for (std::uint32_t x = 0; x < q; ++x) pts.push_back({x, 1});
  pts.push_back({1, 0});
  auto act = [&](std::pair<std::uint32_t, std::uint32_t> p, const std::uint32_t* m) {
    std::uint32_t nx = F.add(F.mul(p.first, m[0]), F.mul(p.second, m[2]));
    std::uint32_t ny = F.add(F.mul(p.first, m[1]), F.mul(p.second, m[3]));
    if (ny) return std::pair<std::uint32_t, std::uint32_t>{F.mul(nx, F.inv(ny)), 1};
    return std::pair<std::uint32_t, std::uint32_t>{1, 0};
  };
  std::vector<std::uint64_t> image;
  std::uint64_t gl = gl2.size();
  std::vector<std::size_t> idx(f, 0);
  std::uint64_t combos = 1;
  for (int j = 0; j < f; ++j) combos *= gl;
  std::uint64_t qf = 1;
  for (int j = 0; j < f; ++j) qf *= q;
  const std::uint64_t q3 = static_cast<std::uint64_t>(q) * q * q;
  for (std::uint64_t combo = 0; combo < combos; ++combo) {
    std::uint64_t r = combo;
    for (int j = 0; j < f; ++j) {
      idx[j] = r % gl;
      r /= gl;
    }
    for (const auto& P0 : pts) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> P(f);
      P[0] = P0;
      for (int j = 1; j < f; ++j) P[j] = act(P[j - 1], gl2[idx[j - 1]].inv);
      if (act(P[f - 1], gl2[idx[f - 1]].inv) != P0) continue;
      ++rep.y_nonnormal_points;
      rep.y_points += qf;
      for (std::uint64_t lam = 0; lam < qf; ++lam) {
        std::uint64_t key = 0, lr = lam;
        for (int j = 0; j < f; ++j) {
          std::uint32_t l = static_cast<std::uint32_t>(lr % q);
          lr /= q;
          auto [a, b] = P[j];
          std::uint32_t B = F.neg(F.mul(l, F.mul(b, b)));
          std::uint32_t C = F.mul(l, F.mul(a, a));
          std::uint32_t D = F.mul(l, F.mul(a, b));
          std::uint64_t bcd = B + q * (C + static_cast<std::uint64_t>(q) * D);
          key = key * (static_cast<std::uint64_t>(q) * q * q * q) + gl2[idx[j]].code;
          key = key * q3 + bcd;
        }
        image.push_back(key);
      }
    }
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  rep.z_points = image.size();
  for (std::uint64_t key : image) {
    bool all_zero = true;
    std::uint64_t k = key;
    for (int j = 0; j < f; ++j) {
      if (k % q3 != 0) all_zero = false;
      k /= q3;
      k /= static_cast<std::uint64_t>(q) * q * q * q;
    }
    rep.z_nonnormal_points += all_zero;
  }
  double lq = std::log(static_cast<double>(q));
  rep.y_codim = static_cast<int>(std::lround(std::log(double(rep.y_points) / double(rep.y_nonnormal_points)) / lq));
  rep.z_codim = static_cast<int>(std::lround(std::log(double(rep.z_points) / double(rep.z_nonnormal_points)) / lq));
  return rep;
}

}  // namespace gl2sing
