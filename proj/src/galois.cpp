#include "gl2sing/galois.hpp"

namespace gl2sing {

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

void check_pf(int p, int f) {
  if (!is_prime(p) || p <= 3) throw Error("p must be a prime greater than 3");
  if (f < 1 || ipow(p, f) > (1LL << 40)) throw Error("f out of range");
}

RankOneBK rank_one(int p, const std::vector<int>& m, const std::vector<FieldElement>& lambda, long long r,
                   int shift) {
  int f = static_cast<int>(m.size());
  check_pf(p, f);
  if (static_cast<int>(lambda.size()) != f) throw Error("lambda has wrong length");
  RankOneBK bk;
  bk.p = p;
  bk.f = f;
  bk.r.assign(f, r);
  bk.lambda = lambda;
  long long e = bk.modulus();
  for (int j = 0; j < f; ++j) {
    long long c = 0;
    for (int i = 0; i < f; ++i) c += ipow(p, i) * (m[mod(j - i, f)] + shift);
    bk.c.push_back(mod(c, e));
  }
  return bk;
}

}  // namespace

long long RankOneBK::modulus() const { return ipow(p, f) - 1; }

bool RankOneBK::descent_consistent() const {
  long long e = modulus();
  for (int j = 0; j < f; ++j)
    if (mod(c[(j + 1) % f] - p * (c[j] + r[j]), e) != 0) return false;
  return true;
}

RankOneBK nonnormal_sub(int p, const std::vector<int>& m, const std::vector<FieldElement>& lambda) {
  return rank_one(p, m, lambda, 0, -1);
}

RankOneBK nonnormal_quotient(int p, const std::vector<int>& m, const std::vector<FieldElement>& lambda) {
  return rank_one(p, m, lambda, ipow(p, static_cast<int>(m.size())) - 1, 0);
}

GFMatrix ext_matrix(int f, const FieldElement& lambda1_0, const FieldElement& lambda2_0) {
  if (f < 2) throw Error("ext_matrix needs f >= 2");
  const FieldSpec& F = lambda1_0.field();
  GFMatrix C(F, f, f);
  for (int r = 0; r + 1 < f; ++r) {
    C.set(r, r, -F.one());
    C.set(r, r + 1, F.one());
  }
  C.set(f - 1, 0, lambda2_0);
  C.set(f - 1, f - 1, -lambda1_0);
  return C;
}

std::string to_string(SplitOutcome o) { return o == SplitOutcome::SPLIT ? "split" : "nonsplit_1dim"; }

std::vector<FieldElement> extension_residuals(const ExtensionProblem& prob, const std::vector<FieldElement>& alpha) {
  int f = prob.f();
  std::vector<FieldElement> res;
  for (int j = 0; j < f; ++j) {
    int prev = (j + f - 1) % f;
    res.push_back(prob.x[j] - alpha[prev] * prob.lambda1[j] + alpha[j] * prob.lambda2[j]);
  }
  return res;
}

SplitResult split_extension(const ExtensionProblem& prob) {
  int f = prob.f();
  if (f < 1 || static_cast<int>(prob.lambda1.size()) != f || static_cast<int>(prob.lambda2.size()) != f)
    throw Error("extension data has inconsistent lengths");
  for (int j = 0; j < f; ++j)
    if (prob.lambda1[j].is_zero() || prob.lambda2[j].is_zero()) throw Error("lambda entries must be nonzero");
  const FieldSpec& F = prob.x.front().field();

  // Diagonal rescaling diag(a_j, b_j) makes lambda'_j = lambda''_j = 1 for j != 0.
  std::vector<FieldElement> a(f, F.one()), b(f, F.one());
  for (int j = 1; j < f; ++j) {
    a[j] = a[j - 1] / prob.lambda1[j];
    b[j] = b[j - 1] / prob.lambda2[j];
  }
  SplitResult out;
  out.lambda1_0 = prob.lambda1[0] * a[0] / a[f - 1];
  out.lambda2_0 = prob.lambda2[0] * b[0] / b[f - 1];
  std::vector<FieldElement> xn(f);
  for (int j = 0; j < f; ++j) xn[j] = a[j] * prob.x[j] / b[(j + f - 1) % f];

  std::optional<std::vector<FieldElement>> alpha_n;
  if (f == 1) {
    if (out.lambda1_0 != out.lambda2_0) {
      alpha_n = std::vector<FieldElement>{xn[0] / (out.lambda1_0 - out.lambda2_0)};
    } else {
      out.cokernel_functional = {F.one()};
      if (xn[0].is_zero()) alpha_n = std::vector<FieldElement>{F.zero()};
    }
  } else {
    GFMatrix C = ext_matrix(f, out.lambda1_0, out.lambda2_0);
    FieldVector rhs;
    for (int r = 0; r < f; ++r) rhs.push_back(-xn[(r + 1) % f]);
    alpha_n = solve_linear(C, rhs);
    if (out.lambda1_0 == out.lambda2_0) {
      auto left = kernel_basis(C.transpose());
      if (left.size() != 1) throw Error("unexpected cokernel dimension");
      out.cokernel_functional = left.front();
    }
  }
  if (!alpha_n) {
    out.outcome = SplitOutcome::NONSPLIT_1DIM;
    return out;
  }
  out.outcome = SplitOutcome::SPLIT;
  for (int j = 0; j < f; ++j) out.alpha.push_back((*alpha_n)[j] * b[j] / a[j]);
  return out;
}

FrobeniusData frobenius_exponents(int f, int p) {
  if (f < 2) throw Error("frobenius_exponents needs f >= 2");
  check_pf(p, f);
  FrobeniusData d;
  d.p = p;
  d.f = f;
  d.modulus = ipow(p, f) - 1;
  d.l0 = ipow(p, f - 1);
  for (int i = 0; i <= f - 2; ++i) d.l0 -= ipow(p, i);
  d.l1 = -1;
  for (int i = 1; i <= f - 1; ++i) d.l1 += ipow(p, i);
  if (d.l0 <= 0 || d.l0 >= d.modulus || d.l1 <= 0 || d.l1 >= d.modulus)
    throw Error("exponent outside (0, p^f - 1)");
  for (int j = 0; j < f; ++j) {
    long long r = j == 0 ? d.l0 : (j == 1 ? d.l1 : 0);
    d.r_sub.push_back(r);
    d.r_quot.push_back(d.modulus - r);
  }
  return d;
}

NoncmReduction noncm_basis_reduction(const GFMatrix& b0, const FieldElement& x1, int f) {
  if (f < 2) throw Error("basis reduction needs f >= 2");
  if (b0.rows() != 2 || b0.cols() != 2) throw Error("b0 must be 2x2");
  if (det(b0).is_zero()) throw Error("b0 must be invertible");
  if (b0.at(1, 0).is_zero()) throw Error("W must be nonzero");
  if (!b0.at(0, 1).is_zero()) throw Error("normalize V to zero first");

  const FieldSpec* F = &b0.field();
  FieldElement U = b0.at(0, 0), W = b0.at(1, 0), Z = b0.at(1, 1), x = x1;
  FieldElement beta = U - Z - W * x;
  FieldElement disc = beta * beta + F->from_int(4) * W * U * x;
  NoncmReduction out;
  FieldElement root;
  if (!disc.sqrt(root)) {
    if (F->e() != 1) throw Error("root requires a larger field");
    const FieldSpec& E = FieldSpec::get(F->p(), 2);
    auto lift = [&](const FieldElement& y) { return E.from_index(y.index()); };
    U = lift(U);
    W = lift(W);
    Z = lift(Z);
    x = lift(x);
    beta = lift(beta);
    disc = lift(disc);
    F = &E;
    out.root_in_extension = true;
    if (!disc.sqrt(root)) throw Error("no square root in the quadratic extension");
  }
  out.field = F->name();
  out.alpha0 = (-beta + root) / (F->from_int(2) * W);
  out.alpha.assign(f, out.alpha0 - x);
  out.alpha[0] = out.alpha0;

  auto unip = [&](const FieldElement& a) { return Mat2Laurent::from_constants(F->one(), a, F->zero(), F->one()); };
  Mat2Laurent w0 = Mat2Laurent::w0(*F);
  for (int j = 0; j < f; ++j) {
    Mat2Laurent A, wt;
    bool weyl = j <= 1;
    if (j == 0) {
      wt = Mat2Laurent::w0_t_eta(*F);
      A = Mat2Laurent::from_constants(U, F->zero(), W, Z) * wt;
    } else if (j == 1) {
      wt = Mat2Laurent::w0_t_eta(*F);
      A = unip(x) * wt;
    } else {
      wt = Mat2Laurent::t_w0_eta(*F);
      A = wt;
    }
    Mat2Laurent ginv = unip(-out.alpha[(j + f - 1) % f]);
    Mat2Laurent conj = ad_diag_conj(ginv, {1, 0});
    if (weyl) conj = w0 * conj * w0;
    out.b_prime.push_back(unip(out.alpha[j]) * A * conj * wt.inverse());
  }
  out.all_constant = true;
  out.top_right_zero = true;
  for (const auto& b : out.b_prime) {
    if (!b.is_constant()) out.all_constant = false;
    if (!b.b.is_zero()) out.top_right_zero = false;
  }
  return out;
}

bool base_change_split_check(const FieldElement& lambda, const FieldElement& x0, int p, int f) {
  if (lambda.is_zero()) throw Error("lambda must be nonzero");
  const FieldSpec& F = lambda.field();
  if (F.p() != p) throw Error("characteristic mismatch");
  if (f < 1) throw Error("f out of range");
  int n = p * f;
  auto frob = [&](int j) {
    if (j % f != 0) return GFMatrix::identity(F, 2);
    return GFMatrix::from_elements(F, {{lambda, x0}, {F.zero(), lambda}});
  };
  auto g = [&](int j) {
    int d = j / f;
    return GFMatrix::from_elements(F, {{F.one(), -(F.from_int(d) * x0 / lambda)}, {F.zero(), F.one()}});
  };
  for (int j = 0; j < n; ++j) {
    GFMatrix m = g(j) * frob(j) * *inverse(g((j + n - 1) % n));
    if (!m.at(0, 1).is_zero() || !m.at(1, 0).is_zero()) return false;
  }
  return true;
}

bool nonnormal_point_predicate(const FieldElement& lambda1_0, const FieldElement& lambda2_0, bool ext_present) {
  return !ext_present || lambda1_0 == lambda2_0;
}

}  // namespace gl2sing
