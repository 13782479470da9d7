#include "gl2sing/cohomology.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace gl2sing {

std::string CechMonomial::str() const {
  std::ostringstream os;
  if (cdeg == 0 && tdeg == 0) return "1";
  if (cdeg) os << (cdeg == 1 ? "C" : "C^" + std::to_string(cdeg));
  if (tdeg) os << (cdeg ? "*" : "") << (tdeg == 1 ? "t" : "t^" + std::to_string(tdeg));
  return os.str();
}

namespace {

constexpr int kMinBound = 4;

// Gamma_1 monomials acting as B, C, D: (coefficient, t-shift).
struct Gamma1 {
  const char* name;
  int coef;
  int shift;
};
constexpr std::array<Gamma1, 3> kBCD{{{"B", -1, -2}, {"C", 1, 0}, {"D", 1, -1}}};

int domain_tmin(int s, int m) { return s - 2 * m; }

// Index in the degree-m domain piece, or -1 outside the window.
long domain_index(int s, int m, int T, int n) {
  int lo = domain_tmin(s, m);
  if (n < lo || n > T) return -1;
  return n - lo;
}

std::size_t domain_dim(int s, int m, int T) {
  int lo = domain_tmin(s, m);
  return lo > T ? 0 : static_cast<std::size_t>(T - lo + 1);
}

ModuleTerm term(int gen, int coef, int cdeg, int tdeg) { return ModuleTerm{gen, coef, CechMonomial{cdeg, tdeg}}; }

// Free module in degree m on monomial generators: basis (gen, c) with gamma = C^{m-a} t^c.
struct FreeBasis {
  std::vector<std::pair<int, int>> items;
  long find(int gen, int c) const {
    for (std::size_t i = 0; i < items.size(); ++i)
      if (items[i].first == gen && items[i].second == c) return static_cast<long>(i);
    return -1;
  }
};

FreeBasis free_basis(const std::vector<CechMonomial>& gens, int m) {
  FreeBasis b;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int k = m - gens[i].cdeg;
    if (k < 0) continue;
    for (int c = 0; c >= -2 * k; --c) b.items.emplace_back(static_cast<int>(i), c);
  }
  return b;
}

std::string coef_str(const FieldElement& x) {
  const FieldSpec& F = x.field();
  if (F.e() == 1) {
    long v = x.index();
    if (v > F.p() / 2) v -= F.p();
    return std::to_string(v);
  }
  return x.str();
}

std::string gamma_name(int k, int c, int& sign) {
  sign = 1;
  if (k == 1) {
    if (c == 0) return "C";
    if (c == -1) return "D";
    sign = -1;
    return "B";
  }
  return CechMonomial{k, c}.str();
}

std::string format_free_vector(const FieldVector& v, const FreeBasis& basis, const std::vector<CechMonomial>& gens,
                               int m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    auto [g, c] = basis.items[i];
    int sign = 1;
    std::string name = gamma_name(m - gens[g].cdeg, c, sign);
    FieldElement coef = sign < 0 ? -v[i] : v[i];
    std::string cs = coef_str(coef);
    if (!first) os << " + ";
    first = false;
    if (cs != "1") os << cs << "*";
    os << name << "*e" << (g + 1);
  }
  return first ? "0" : os.str();
}

std::size_t rank_of_columns(const FieldSpec& F, std::size_t dim, const std::vector<FieldVector>& cols) {
  return span_rank(F, cols, dim);
}

struct Degree {
  GradedMap complex;
  std::vector<FieldVector> kernel;  // domain coordinates
  std::size_t image_rank = 0;
  std::vector<int> h1_monomials;    // codomain t-degrees spanning the cokernel
};

Degree degree_data(const FieldSpec& F, int s, int m, int T) {
  Degree d;
  d.complex = class3_complex_piece(F, s, m, T);
  d.kernel = kernel_basis(d.complex.matrix);
  d.image_rank = matrix_rank(d.complex.matrix);
  std::size_t rows = d.complex.codomain.basis.size();
  std::vector<FieldVector> cols;
  for (std::size_t c = 0; c < d.complex.matrix.cols(); ++c) {
    FieldVector v(rows, F.zero());
    for (std::size_t r = 0; r < rows; ++r) v[r] = d.complex.matrix.at(r, c);
    cols.push_back(v);
  }
  std::size_t rank = rank_of_columns(F, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    FieldVector unit(rows, F.zero());
    unit[r] = F.one();
    cols.push_back(unit);
    std::size_t nr = rank_of_columns(F, rows, cols);
    if (nr > rank) {
      rank = nr;
      d.h1_monomials.push_back(d.complex.codomain.basis[r].tdeg);
    } else {
      cols.pop_back();
    }
  }
  return d;
}

// Multiplies a degree-(m-1) domain vector by C t^shift.
FieldVector shift_domain(const FieldSpec& F, const FieldVector& v, int s, int m, int T, int shift) {
  FieldVector out(domain_dim(s, m, T), F.zero());
  int lo = domain_tmin(s, m - 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    long j = domain_index(s, m, T, lo + static_cast<int>(i) + shift);
    if (j >= 0) out[j] += v[i];
  }
  return out;
}

// Multiplies a free-module vector by C^k t^tshift; `to` is the target degree's basis.
FieldVector shift_free(const FieldSpec& F, const FieldVector& v, const FreeBasis& from, const FreeBasis& to,
                       int tshift) {
  FieldVector out(to.items.size(), F.zero());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    long j = to.find(from.items[i].first, from.items[i].second + tshift);
    if (j < 0) throw Error("free module shift out of range");
    out[j] += v[i];
  }
  return out;
}

GFMatrix free_to_domain(const FieldSpec& F, const std::vector<CechMonomial>& gens, const FreeBasis& basis, int s,
                        int m, int T) {
  GFMatrix A(F, domain_dim(s, m, T), basis.items.size());
  for (std::size_t col = 0; col < basis.items.size(); ++col) {
    auto [g, c] = basis.items[col];
    long r = domain_index(s, m, T, gens[g].tdeg + c);
    if (r < 0) throw Error("increase bounds");
    A.set(r, col, F.one());
  }
  return A;
}

int relation_degree(const Class3Presentation& P, const ModuleElement& r) {
  if (r.empty()) throw Error("empty relation");
  int d = P.generators.at(r.front().gen).cdeg + r.front().gamma.cdeg;
  for (const auto& t : r)
    if (P.generators.at(t.gen).cdeg + t.gamma.cdeg != d) throw Error("relation is not homogeneous");
  return d;
}

FieldVector relation_vector(const FieldSpec& F, const ModuleElement& r,
                            const FreeBasis& basis) {
  FieldVector v(basis.items.size(), F.zero());
  for (const auto& t : r) {
    long j = basis.find(t.gen, t.gamma.tdeg);
    if (j < 0) throw Error("relation term outside the free module");
    v[j] += F.from_int(t.coef);
  }
  return v;
}

FieldVector column(const GFMatrix& m, std::size_t c) {
  FieldVector v;
  v.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v.push_back(m.at(r, c));
  return v;
}

bool is_zero_vector(const FieldVector& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

}  // namespace

GradedMap class3_complex_piece(const FieldSpec& F, int s, int m, int T) {
  GradedMap g;
  g.domain.ambient = "t^" + std::to_string(s) + " F[t, C t^-2]";
  g.domain.cdeg = m;
  g.domain.tmin = domain_tmin(s, m);
  g.domain.tmax = T;
  for (int n = g.domain.tmin; n <= T; ++n) g.domain.basis.push_back({m, n});
  g.codomain.ambient = "F[t^+-, C] / F[t^-1, C]";
  g.codomain.cdeg = m;
  g.codomain.tmin = 1;
  g.codomain.tmax = T;
  for (int n = 1; n <= T; ++n) g.codomain.basis.push_back({m, n});
  g.matrix = GFMatrix(F, g.codomain.basis.size(), g.domain.basis.size());
  for (std::size_t c = 0; c < g.domain.basis.size(); ++c) {
    int n = g.domain.basis[c].tdeg;
    if (n > 0) g.matrix.set(static_cast<std::size_t>(n - 1), c, F.one());
  }
  return g;
}

Class3Presentation class3_stated_presentation(int s) {
  Class3Presentation P;
  P.s = s;
  // B = -C t^-2, C = C, D = C t^-1.
  auto pair_relations = [&](int e1, int e2) {
    P.relations.push_back({term(e1, 1, 1, -1), term(e2, -1, 1, 0)});
    P.relation_names.push_back("D*e" + std::to_string(e1 + 1) + " - C*e" + std::to_string(e2 + 1));
    P.relations.push_back({term(e1, -1, 1, -2), term(e2, 1, 1, -1)});
    P.relation_names.push_back("B*e" + std::to_string(e1 + 1) + " + D*e" + std::to_string(e2 + 1));
  };
  switch (s) {
    case -2:
      P.generators = {{0, 0}, {0, -1}, {0, -2}};
      pair_relations(0, 1);
      P.relations.push_back({term(0, -1, 1, -2), term(2, 1, 1, 0)});
      P.relation_names.push_back("B*e1 + C*e3");
      break;
    case -1:
      P.generators = {{0, 0}, {0, -1}};
      pair_relations(0, 1);
      break;
    case 0:
      P.generators = {{0, 0}};
      break;
    case 1:
      P.generators = {{1, 0}, {1, -1}};
      pair_relations(0, 1);
      break;
    case 2:
      P.generators = {{1, 0}};
      break;
    default:
      throw Error("delta + eps must lie in [-2, 2]");
  }
  return P;
}

std::string format_module_element(const ModuleElement& r) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : r) {
    int sign = 1;
    std::string name = gamma_name(t.gamma.cdeg, t.gamma.tdeg, sign);
    int coef = t.coef * sign;
    os << (first ? (coef < 0 ? "-" : "") : (coef < 0 ? " - " : " + "));
    first = false;
    if (std::abs(coef) != 1) os << std::abs(coef) << "*";
    os << name << "*e" << (t.gen + 1);
  }
  return os.str();
}

Class3Report cech_class3(const FieldSpec& F, int s, int M, int T) {
  Class3Presentation P = class3_stated_presentation(s);
  if (M < kMinBound || T < kMinBound) throw Error("increase bounds");
  for (const auto& g : P.generators)
    if (g.cdeg > M || -g.tdeg > T) throw Error("increase bounds");

  Class3Report R;
  R.s = s;
  R.cdeg_bound = M;
  R.tdeg_bound = T;
  R.field = F.name();

  std::vector<Degree> deg;
  for (int m = 0; m <= M; ++m) deg.push_back(degree_data(F, s, m, T));
  for (int m = 0; m <= M; ++m)
    for (int n : deg[m].h1_monomials)
      if (n >= T || m == M) throw Error("increase bounds");

  R.generators_in_kernel = true;
  R.generators_span = true;
  R.generators_minimal = true;
  R.stated_relations_hold = true;
  R.stated_relations_generate = true;

  std::vector<FreeBasis> fb;
  std::vector<std::vector<FieldVector>> rel;
  for (int m = 0; m <= M; ++m) {
    const Degree& d = deg[m];
    int h0 = static_cast<int>(d.kernel.size());
    R.h0_dims.push_back(h0);
    R.h1_dims.push_back(static_cast<int>(d.h1_monomials.size()));
    for (int n : d.h1_monomials) R.h1_basis.push_back({m, n});

    // Minimal generators: K_m modulo Gamma_1 * K_{m-1}.
    std::size_t dd = domain_dim(s, m, T);
    std::vector<FieldVector> products;
    if (m > 0)
      for (const auto& v : deg[m - 1].kernel)
        for (const auto& g : kBCD) products.push_back(shift_domain(F, v, s, m, T, g.shift));
    int gens_here = h0 - static_cast<int>(span_rank(F, products, dd));
    R.minimal_generators.push_back(gens_here);
    int stated_here = static_cast<int>(
        std::count_if(P.generators.begin(), P.generators.end(), [&](const CechMonomial& g) { return g.cdeg == m; }));
    if (gens_here != stated_here) R.generators_minimal = false;

    // Stated generators map into and onto K_m.
    fb.push_back(free_basis(P.generators, m));
    GFMatrix A = free_to_domain(F, P.generators, fb[m], s, m, T);
    if (!(d.complex.matrix * A).is_zero()) R.generators_in_kernel = false;
    if (matrix_rank(A) != d.kernel.size()) R.generators_span = false;

    // Relations among the stated generators.
    rel.push_back(kernel_basis(A));
    int rdim = static_cast<int>(rel[m].size());
    R.relation_dims.push_back(rdim);
    std::vector<FieldVector> rprod;
    if (m > 0)
      for (const auto& v : rel[m - 1])
        for (const auto& g : kBCD) rprod.push_back(shift_free(F, v, fb[m - 1], fb[m], g.shift));
    R.minimal_relations.push_back(rdim - static_cast<int>(span_rank(F, rprod, fb[m].items.size())));

    std::vector<FieldVector> stated;
    for (const auto& r : P.relations) {
      int dr = relation_degree(P, r);
      if (dr > m) continue;
      FreeBasis rb = free_basis(P.generators, dr);
      FieldVector rv = relation_vector(F, r, rb);
      if (dr == m) {
        FieldVector img = A * rv;
        if (!is_zero_vector(img)) R.stated_relations_hold = false;
      }
      for (int c = 0; c >= -2 * (m - dr); --c) stated.push_back(shift_free(F, rv, rb, fb[m], c));
    }
    std::size_t srank = span_rank(F, stated, fb[m].items.size());
    R.stated_relation_span.push_back(static_cast<int>(srank));
    if (static_cast<int>(srank) != rdim) {
      if (R.stated_relations_generate) {
        std::size_t cur = srank;
        for (const auto& v : rel[m]) {
          stated.push_back(v);
          std::size_t nr = span_rank(F, stated, fb[m].items.size());
          if (nr > cur) {
            cur = nr;
            R.unlisted_relations.push_back(format_free_vector(v, fb[m], P.generators, m));
          } else {
            stated.pop_back();
          }
        }
      }
      R.stated_relations_generate = false;
    }
  }
  for (int g : R.minimal_generators) R.total_minimal_generators += g;
  for (int r : R.minimal_relations) R.total_minimal_relations += r;
  for (int h : R.h1_dims) R.h1_total += h;

  // B, C, D act by zero on H^1.
  R.h1_annihilated = true;
  for (const auto& mono : R.h1_basis) {
    int m = mono.cdeg;
    const Degree& up = deg[m + 1];
    for (const auto& g : kBCD) {
      int n = mono.tdeg + g.shift;
      if (n <= 0) continue;
      std::size_t rows = up.complex.codomain.basis.size();
      std::vector<FieldVector> cols;
      for (std::size_t c = 0; c < up.complex.matrix.cols(); ++c) cols.push_back(column(up.complex.matrix, c));
      FieldVector v(rows, F.zero());
      v[n - 1] = F.from_int(g.coef);
      cols.push_back(v);
      if (span_rank(F, cols, rows) > up.image_rank) R.h1_annihilated = false;
    }
  }
  return R;
}

bool same_ranks(const Class3Report& a, const Class3Report& b) {
  std::size_t n = std::min(a.h0_dims.size(), b.h0_dims.size());
  // H^0 slices grow with the t-window; compare the window-independent data.
  for (std::size_t m = 0; m < n; ++m) {
    if (a.h1_dims[m] != b.h1_dims[m]) return false;
    if (a.minimal_generators[m] != b.minimal_generators[m]) return false;
    if (a.minimal_relations[m] != b.minimal_relations[m]) return false;
    if (a.relation_dims[m] != b.relation_dims[m]) return false;
    if (a.stated_relation_span[m] != b.stated_relation_span[m]) return false;
  }
  return a.total_minimal_generators == b.total_minimal_generators &&
         a.total_minimal_relations == b.total_minimal_relations && a.h1_total == b.h1_total &&
         a.h1_annihilated == b.h1_annihilated && a.presentation_matches() == b.presentation_matches();
}

int class3_h1_fiber_rank(const FieldSpec& F, int s, int M, int T, const FieldElement& b, const FieldElement& c,
                         const FieldElement& d) {
  Class3Report R = cech_class3(F, s, M, T);
  const auto& basis = R.h1_basis;
  std::size_t n = basis.size();
  if (n == 0) return 0;
  std::array<FieldElement, 3> point{b, c, d};
  auto index_of = [&](int m, int t) -> long {
    for (std::size_t i = 0; i < n; ++i)
      if (basis[i].cdeg == m && basis[i].tdeg == t) return static_cast<long>(i);
    return -1;
  };
  GFMatrix op(F, n, 3 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      std::size_t col = 3 * i + k;
      op.set(i, col, -point[k]);
      int t = basis[i].tdeg + kBCD[k].shift;
      // Images outside the cokernel basis are zero in H^1 (certified by cech_class3).
      long j = t > 0 ? index_of(basis[i].cdeg + 1, t) : -1;
      if (j >= 0) op.set(j, col, op.at(j, col) + F.from_int(kBCD[k].coef));
    }
  return static_cast<int>(n - matrix_rank(op));
}

std::array<int, 2> p1_cohomology(const FieldSpec& F, int degree, int window) {
  if (window < 2 || degree >= window || degree < -window) throw Error("window too small for this degree");
  // Sections on the two charts: F[t] and t^degree F[t^-1]; the Cech map is their difference.
  std::vector<int> u0, u1;
  for (int k = 0; k <= window; ++k) u0.push_back(k);
  for (int k = -window; k <= degree; ++k) u1.push_back(k);
  std::size_t rows = 2 * window + 1;
  GFMatrix m(F, rows, u0.size() + u1.size());
  for (std::size_t i = 0; i < u0.size(); ++i) m.set(u0[i] + window, i, F.one());
  for (std::size_t i = 0; i < u1.size(); ++i) m.set(u1[i] + window, u0.size() + i, -F.one());
  std::size_t r = matrix_rank(m);
  return {static_cast<int>(m.cols() - r), static_cast<int>(rows - r)};
}

std::array<int, 2> a1_cohomology(const FieldSpec& F, int window) {
  GFMatrix m(F, 0, window + 1);
  std::size_t r = matrix_rank(m);
  return {static_cast<int>(m.cols() - r), 0};
}

namespace {

std::array<bool, 3> kunneth(const std::vector<std::array<int, 2>>& factors) {
  std::array<bool, 3> out{false, false, false};
  std::set<int> reach{0};
  for (const auto& f : factors) {
    std::set<int> next;
    for (int r : reach)
      for (int i = 0; i < 2; ++i)
        if (f[i] > 0) next.insert(r + i);
    reach = std::move(next);
  }
  for (int r : reach)
    if (r < 3) out[r] = true;
  return out;
}

void check_twist(int delta, int eps) {
  if (delta < 0 || delta > 1 || eps < 0 || eps > 1) throw Error("delta and eps must be 0 or 1");
}

}  // namespace

std::array<bool, 3> kunneth_vanishing_check(int cls, int delta, int eps) {
  check_twist(delta, eps);
  const FieldSpec& F = FieldSpec::get(5);
  auto p1 = [&](int twist) { return p1_cohomology(F, -twist); };
  auto a1 = [&]() { return a1_cohomology(F); };
  switch (cls) {
    case 1: return kunneth({p1(delta), p1(eps)});
    case 2: return kunneth({p1(delta), a1()});
    case 4: return kunneth({a1(), a1()});
    case 5: return kunneth({a1(), p1(eps)});
    default: throw Error("class must be 1, 2, 4 or 5");
  }
}

std::array<bool, 3> class3_nonvanishing(int delta, int eps) {
  check_twist(delta, eps);
  static const std::array<std::array<bool, 3>, 3> table = [] {
    std::array<std::array<bool, 3>, 3> t{};
    const FieldSpec& F = FieldSpec::get(5);
    for (int s = 0; s <= 2; ++s) {
      Class3Report R = cech_class3(F, s, kMinBound, kMinBound);
      bool h0 = std::any_of(R.h0_dims.begin(), R.h0_dims.end(), [](int x) { return x > 0; });
      t[s] = {h0, R.h1_total > 0, false};
    }
    return t;
  }();
  return table[delta + eps];
}

bool koszul_vanishing_pattern(const std::vector<int>& T, int a, int b) {
  int f = static_cast<int>(T.size());
  if (f < 1 || f > 20) throw Error("class tuple length out of range");
  if (a <= 0 || a > f || b < a) throw Error("need 0 < a <= f and b >= a");
  for (int t : T)
    if (t < 1 || t > 5) throw Error("class out of range");
  for (std::uint32_t mask = 0; mask < (1u << f); ++mask) {
    if (__builtin_popcount(mask) != a) continue;
    std::set<int> reach{0};
    for (int j = 0; j < f && !reach.empty(); ++j) {
      int eps = (mask >> j) & 1;
      int delta = (mask >> ((j + 1) % f)) & 1;
      std::array<bool, 3> nz = T[j] == 3 ? class3_nonvanishing(delta, eps) : kunneth_vanishing_check(T[j], delta, eps);
      std::set<int> next;
      for (int r : reach)
        for (int i = 0; i < 3; ++i)
          if (nz[i]) next.insert(r + i);
      reach = std::move(next);
    }
    if (reach.count(b)) return true;
  }
  return false;
}

namespace {

// Tensor product of homogeneous binary forms; factor i has basis x^{d-a} y^a, a = 0..d.
struct TensorSpace {
  std::vector<int> deg;
  std::size_t dim() const {
    std::size_t n = 1;
    for (int d : deg) n *= static_cast<std::size_t>(d + 1);
    return n;
  }
  std::size_t index(const std::vector<int>& a) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < deg.size(); ++i) idx = idx * (deg[i] + 1) + a[i];
    return idx;
  }
  std::vector<int> digits(std::size_t idx) const {
    std::vector<int> a(deg.size());
    for (std::size_t i = deg.size(); i-- > 0;) {
      a[i] = static_cast<int>(idx % (deg[i] + 1));
      idx /= (deg[i] + 1);
    }
    return a;
  }
};

using Bilinear = std::array<std::array<FieldElement, 2>, 2>;  // [u at pos_a][v at pos_b], 0 = x, 1 = y

// Columns for tensoring the domain space with a (1,1) form at positions (pa, pb).
void append_section_map(std::vector<FieldVector>& cols, const TensorSpace& dom, const TensorSpace& cod, int pa, int pb,
                        const Bilinear& M) {
  const FieldSpec& F = M[0][0].field();
  for (std::size_t i = 0; i < dom.dim(); ++i) {
    std::vector<int> a = dom.digits(i);
    FieldVector col(cod.dim(), F.zero());
    for (int u = 0; u < 2; ++u)
      for (int v = 0; v < 2; ++v) {
        if (M[u][v].is_zero()) continue;
        std::vector<int> b = a;
        b[pa] += u;
        b[pb] += v;
        col[cod.index(b)] += M[u][v];
      }
    cols.push_back(std::move(col));
  }
}

FieldVector linear_power(const FieldElement& alpha, const FieldElement& beta, int d) {
  const FieldSpec& F = alpha.field();
  FieldVector out;
  long long binom = 1;
  for (int a = 0; a <= d; ++a) {
    out.push_back(F.from_int(binom) * alpha.pow(d - a) * beta.pow(a));
    binom = binom * (d - a) / (a + 1);
  }
  return out;
}

FieldVector tensor(const std::vector<FieldVector>& parts) {
  FieldVector out{parts.front().front().field().one()};
  for (const auto& p : parts) {
    FieldVector next;
    next.reserve(out.size() * p.size());
    for (const auto& x : out)
      for (const auto& y : p) next.push_back(x * y);
    out = std::move(next);
  }
  return out;
}

E1Report finish_report(const FieldSpec& F, int positions, std::size_t dom, std::size_t codim,
                       std::vector<FieldVector> cols, const std::vector<FieldVector>& witnesses) {
  E1Report r;
  r.positions = positions;
  r.domain_dim = dom;
  r.codomain_dim = codim;
  r.rank = span_rank(F, cols, codim);
  r.cokernel_rank = codim - r.rank;
  r.witness_count = witnesses.size();
  for (const auto& w : witnesses) cols.push_back(w);
  r.witnesses_independent = span_rank(F, cols, codim) == r.rank + witnesses.size();
  return r;
}

Bilinear standard_section(const FieldSpec& F) { return {{{F.zero(), F.one()}, {-F.one(), F.zero()}}}; }

}  // namespace

E1Report e1_report_all3(const FieldSpec& F, int f) {
  if (f < 1 || f > 4) throw Error("f out of range");
  TensorSpace cod{std::vector<int>(f, 2)};
  std::vector<FieldVector> witnesses;
  auto unit = [&](const std::vector<int>& a) {
    FieldVector v(cod.dim(), F.zero());
    v[cod.index(a)] = F.one();
    return v;
  };
  if (f == 1) {
    // The section restricts to x0 y0 - x0 y0 = 0.
    for (int a = 0; a <= 2; ++a) witnesses.push_back(unit({a}));
    return finish_report(F, 1, 1, cod.dim(), {FieldVector(cod.dim(), F.zero())}, witnesses);
  }
  std::vector<FieldVector> cols;
  std::size_t dom_total = 0;
  for (int j = 0; j < f; ++j) {
    int pa = (j + f - 1) % f;
    TensorSpace dom{std::vector<int>(f, 2)};
    dom.deg[pa] = 1;
    dom.deg[j] = 1;
    dom_total += dom.dim();
    append_section_map(cols, dom, cod, pa, j, standard_section(F));
  }
  std::vector<int> xs(f, 0), mixed(f, 0), ys(f, 2);
  mixed[1] = 2;
  witnesses = {unit(xs), unit(mixed), unit(ys)};
  return finish_report(F, f, dom_total, cod.dim(), std::move(cols), witnesses);
}

int e1_cokernel_rank_all3(const FieldSpec& F, int f) { return static_cast<int>(e1_report_all3(F, f).cokernel_rank); }

E1Report e1_report_star(const FieldSpec& F, int length, std::uint64_t seed) {
  if (length < 4) throw Error("sequence length must be at least 4");
  if (length > 10) throw Error("sequence length too large");
  int n = length - 2;
  TensorSpace cod{std::vector<int>(n, 2)};
  cod.deg.front() = 1;
  cod.deg.back() = 1;

  std::vector<GFMatrix> kappa;
  std::mt19937_64 rng(derive_seed(seed, 0));
  for (int j = 0; j + 1 < n; ++j) {
    if (seed == 0) {
      kappa.push_back(GFMatrix::identity(F, 2));
      continue;
    }
    for (;;) {
      GFMatrix k(F, 2, 2);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) k.set(r, c, F.random(rng));
      if (!det(k).is_zero()) {
        kappa.push_back(k);
        break;
      }
    }
  }

  std::vector<FieldVector> cols;
  std::size_t dom_total = 0;
  for (int l = 1; l < n; ++l) {
    TensorSpace dom = cod;
    dom.deg[l - 1] -= 1;
    dom.deg[l] -= 1;
    dom_total += dom.dim();
    // The section cutting out [x_{l-1} : y_{l-1}] kappa^-1 = [x_l : y_l].
    GFMatrix k = *inverse(kappa[l - 1]);
    Bilinear M{{{-k.at(0, 1), k.at(0, 0)}, {-k.at(1, 1), k.at(1, 0)}}};
    append_section_map(cols, dom, cod, l - 1, l, M);
  }

  // Witnesses in the adapted frames C_0 = id, C_j = kappa_{j-1} C_{j-1}.
  std::vector<FieldVector> xs, ys;
  GFMatrix C = GFMatrix::identity(F, 2);
  for (int j = 0; j < n; ++j) {
    if (j > 0) C = kappa[j - 1] * C;
    xs.push_back(linear_power(C.at(0, 0), C.at(1, 0), cod.deg[j]));
    ys.push_back(linear_power(C.at(0, 1), C.at(1, 1), cod.deg[j]));
  }
  return finish_report(F, n, dom_total, cod.dim(), std::move(cols), {tensor(xs), tensor(ys)});
}

int e1_cokernel_rank_star(const FieldSpec& F, int length, std::uint64_t seed) {
  return static_cast<int>(e1_report_star(F, length, seed).cokernel_rank);
}

}  // namespace gl2sing
