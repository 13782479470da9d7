#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gl2sing/laurent.hpp"
#include "gl2sing/matrix.hpp"

namespace gl2sing {

/// Rank-one Breuil-Kisin module data M(r, lambda, c).
struct RankOneBK {
  int p = 0;
  int f = 0;
  std::vector<long long> r;
  std::vector<FieldElement> lambda;
  std::vector<long long> c;  // mod p^f - 1

  long long modulus() const;
  /// c_{j+1} = p (c_j + r_j) mod (p^f - 1) for every j.
  bool descent_consistent() const;
};

/// Sub and quotient of the non-normal locus: r' = 0, c'_j = sum p^i (m_{j-i} - 1).
RankOneBK nonnormal_sub(int p, const std::vector<int>& m, const std::vector<FieldElement>& lambda);
/// r'' = p^f - 1, c''_j = sum p^i m_{j-i}.
RankOneBK nonnormal_quotient(int p, const std::vector<int>& m, const std::vector<FieldElement>& lambda);

/// Frobenius matrices [[lambda'_j, x_j v], [0, lambda''_j v]].
struct ExtensionProblem {
  std::vector<FieldElement> lambda1;  // lambda'
  std::vector<FieldElement> lambda2;  // lambda''
  std::vector<FieldElement> x;
  int f() const { return static_cast<int>(x.size()); }
};

/// The f x f system in alpha_0..alpha_{f-1} after normalizing lambda'_j = lambda''_j = 1 for j != 0.
GFMatrix ext_matrix(int f, const FieldElement& lambda1_0, const FieldElement& lambda2_0);

enum class SplitOutcome { SPLIT, NONSPLIT_1DIM };
std::string to_string(SplitOutcome o);

struct SplitResult {
  SplitOutcome outcome = SplitOutcome::SPLIT;
  /// Normalized lambda'_0 and lambda''_0 (the products over j).
  FieldElement lambda1_0, lambda2_0;
  /// Witness for the original system x_j - alpha_{j-1} lambda'_j + alpha_j lambda''_j = 0.
  std::vector<FieldElement> alpha;
  /// When lambda1_0 == lambda2_0: the right side y of C alpha = y is solvable iff phi . y = 0.
  std::vector<FieldElement> cokernel_functional;
};

SplitResult split_extension(const ExtensionProblem& prob);
/// x_j - alpha_{j-1} lambda'_j + alpha_j lambda''_j for each j.
std::vector<FieldElement> extension_residuals(const ExtensionProblem& prob, const std::vector<FieldElement>& alpha);

struct FrobeniusData {
  int p = 0;
  int f = 0;
  long long l0 = 0;
  long long l1 = 0;
  long long modulus = 0;  // p^f - 1
  /// Rank-one exponents of the sub and quotient: r'_j, r''_j.
  std::vector<long long> r_sub, r_quot;
};

FrobeniusData frobenius_exponents(int f, int p);

struct NoncmReduction {
  std::string field;
  bool root_in_extension = false;
  FieldElement alpha0;
  std::vector<FieldElement> alpha;
  std::vector<Mat2Laurent> b_prime;
  bool all_constant = false;
  bool top_right_zero = false;
};

/// Reduces b_0 = [[U, V], [W, Z]] (V = 0, W != 0) and b_1 = [[1, x_1], [0, 1]], b_j = 1 for j >= 2
/// by g_j = [[1, alpha_j], [0, 1]] with alpha_0 a root of W a^2 + (U - Z - W x_1) a - U x_1.
/// Prime-field inputs may produce a root in the quadratic extension.
NoncmReduction noncm_basis_reduction(const GFMatrix& b0, const FieldElement& x1, int f);

/// The pf-periodic Frobenius matrices become diagonal under g_j = [[1, -d_j x0 / lambda], [0, 1]].
bool base_change_split_check(const FieldElement& lambda, const FieldElement& x0, int p, int f);

/// True for split data or the surviving nonsplit class with lambda'_0 = lambda''_0.
bool nonnormal_point_predicate(const FieldElement& lambda1_0, const FieldElement& lambda2_0, bool ext_present);

}  // namespace gl2sing
