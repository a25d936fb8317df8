#ifndef TGRS_TWISTED_HPP
#define TGRS_TWISTED_HPP

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "tgrs/linear_code.hpp"

namespace tgrs {

// Parameters (q, k, alpha, v, eta) of one twisted evaluation code: the span
// of (v_j f(alpha_j))_j over twisted polynomials
//   f(x) = a_0 + a_1 x + ... + a_{k-1} x^{k-1} + eta a_0 x^k,
// i.e. hook 0, twist 1.  Evaluation points are pairwise distinct, the column
// multipliers v and the twist scalar eta are nonzero, and k < n <= q.
struct TgrsParams {
  FieldPtr field;
  std::uint32_t k = 0;
  std::vector<Gf> alpha;
  std::vector<Gf> v;
  Gf eta = 0;

  static TgrsParams make(FieldPtr field, std::uint32_t k, std::vector<Gf> alpha,
                         std::vector<Gf> v, Gf eta);

  std::size_t n() const noexcept { return alpha.size(); }
  /// Index of the zero evaluation point, if present.
  std::optional<std::size_t> zero_index() const;
  /// Product of all evaluation points.
  Gf point_product() const;
};

// f(x) = sum coeffs[i] x^i + eta * coeffs[0] * x^k with k = coeffs.size().
struct TwistedPolynomial {
  FieldPtr field;
  std::vector<Gf> coeffs;
  Gf eta = 0;
};

Gf twisted_eval(const TwistedPolynomial& f, Gf x);

/// Parity-check column multipliers u_j = -prod_{i != j} (alpha_j - alpha_i)^{-1}.
/// RepeatedEvaluationPoint if entries collide.
std::vector<Gf> dual_multipliers(const Field& f, std::span<const Gf> alpha);

/// k x n generator: first row v_j (1 + eta alpha_j^k), then v_j alpha_j^i for
/// i = 1..k-1.  Always rank k.
Matrix generator_matrix(const TgrsParams& p);

/// (n-k) x n parity check: rows (u_j / v_j) alpha_j^i for i = 0..n-k-2 and a
/// final row (u_j / v_j)(alpha_j^{n-k-1} + eta P_j), where P_j is (-1)^n times
/// the product of the other evaluation points.
Matrix parity_check_matrix(const TgrsParams& p);

/// Parameters of the dual code (dimension n-k, multipliers u_j/(v_j alpha_j),
/// twist (eta * point product)^{-1}).  ZeroEvaluationPoint when 0 is an
/// evaluation point: that dual is not a twisted evaluation code.
TgrsParams dual_params(const TgrsParams& p);

/// #{A subset of B : |A| = k, prod(A) = b}, exact, by dynamic programming
/// over (elements seen, subset size, running product).  B entries must be
/// distinct; BadSize if k > |B|.
BigInt subset_product_count(const Field& f, std::uint32_t k, Gf b, std::span<const Gf> B);

struct Classification {
  bool mds = false;       // exactly one of MDS / NMDS
  BigInt m_count;         // witness-subset count; 0 iff MDS
  std::size_t d = 0;      // n-k+1 for MDS, n-k for NMDS
};

/// MDS/NMDS dichotomy via the count of k-subsets of the evaluation set with
/// product (-1)^k eta^{-1}.  Refuses (OutOfTheoremRange) outside 3 <= k < n.
Classification classify(const TgrsParams& p);

/// Closed-form weight distributions of the code and its dual.  The dual
/// distribution instantiates the same recursion at dimension n-k, seeded
/// with A^perp_k = A_{n-k}.
std::pair<WeightDistribution, WeightDistribution> closed_weight_distribution(const TgrsParams& p);

struct FullSpace {
  std::size_t n = 0;
};

/// Schur square: the full space when k >= n/2, otherwise the twisted code
/// with dimension 2k, multipliers v_j^2, twist eta^2.  Needs k >= 3.
std::variant<FullSpace, TgrsParams> schur_square_params(const TgrsParams& p);

struct NonGrsCertificate {
  enum class Branch {
    SquareDim,      // dim C^2 vs 2k-1
    DualSquareDim,  // dim (C^perp)^2 vs 2(n-k)-1
    DualWeightOne,  // weight-1 word in (C^perp)^2, impossible for (E)GRS
  };
  Branch branch{};
  std::size_t observed_dim = 0;
  std::size_t grs_dim = 0;
  bool certified = false;
  std::vector<Gf> witness;  // DualWeightOne only
};

/// Certifies the code is neither GRS nor extended GRS.  Valid (and always
/// succeeding) for 3 <= k <= n-3; OutOfTheoremRange otherwise.
NonGrsCertificate non_grs_certificate(const TgrsParams& p);

/// L_A(m) = sum_{a in A} a^m prod_{b notin A} (a - b); 0 for m <= |A|-2 and
/// -1 at m = |A|-1.  SetTooSmall unless |A| > 2.
Gf l_sum(const Field& f, std::span<const Gf> A, std::uint64_t m);

/// Solves the exact linear system whose solvability characterises
/// self-orthogonality: interpolation g(alpha_j) = v_j^2 on nonzero points,
/// vanishing on the unused nonzero field elements, and the boundary
/// constraint g_0 + eta^2 g_D = (v at the zero point)^2 or 0, with
/// D = q-1-2k.  Returns the canonical solution (free variables zeroed) or
/// nullopt when infeasible.  Needs 3 <= k < (q+1)/2.
std::optional<std::vector<Gf>> self_orthogonal_witness(const TgrsParams& p);

struct LambdaSelfDual {
  enum class Kind { AlmostSelfDual, SelfDual, Fails };
  Kind kind{};
  Gf lambda = 0;
  std::string reason;  // Fails only
};

/// Scalar-witness test: n = 2k+1 with alpha_n = 0 checks the almost-self-dual
/// relations, n = 2k with nonzero points checks the self-dual relations.
/// WrongShape if neither shape matches; needs 3 <= k < q/2.
LambdaSelfDual lambda_self_dual_check(const TgrsParams& p);

}  // namespace tgrs

#endif
