#ifndef TGRS_LINEAR_CODE_HPP
#define TGRS_LINEAR_CODE_HPP

#include <cstdint>
#include <vector>

#include "tgrs/bigint.hpp"
#include "tgrs/matrix.hpp"

namespace tgrs {

// Default cap on brute-force enumerations (number of messages / subsets).
inline constexpr std::uint64_t kDefaultBudget = 1ull << 26;

// Exact weight counts A_0..A_n.
struct WeightDistribution {
  std::vector<BigInt> counts;

  std::size_t length() const { return counts.size() - 1; }
  std::size_t min_distance() const;  // smallest i > 0 with A_i != 0
  BigInt total() const;
};

// Monomial transform: (c_1..c_n) -> (scale_1 c_{perm(1)}, ..., scale_n c_{perm(n)}).
// perm is 0-based; every scale entry must be nonzero.
struct PermScale {
  std::vector<std::size_t> perm;
  std::vector<Gf> scale;

  static PermScale identity(std::size_t n);
};

struct OrthogonalityReport {
  bool self_orthogonal = false;
  bool self_dual = false;
  bool almost_self_dual = false;
  bool lcd = false;
  std::size_t hull_dim = 0;
};

// A length-n linear code held as a full-row-rank generator basis in reduced
// form, so equal codes compare equal.
class LinearCode {
 public:
  /// Reduces the rows of m to a basis (RREF, zero rows dropped).  ZeroCode if
  /// the rank is 0.
  static LinearCode from_generator(const Matrix& m);

  std::size_t n() const noexcept { return gen_.cols(); }
  std::size_t k() const noexcept { return gen_.rows(); }
  const Matrix& generator() const noexcept { return gen_; }
  const FieldPtr& field() const noexcept { return gen_.field(); }

 private:
  explicit LinearCode(Matrix gen) : gen_(std::move(gen)) {}
  Matrix gen_;
};

/// Dual code, generated by the nullspace of the generator.  FullSpace error
/// when k = n (the dual would be the zero code).
LinearCode dual(const LinearCode& c);

/// Columns restricted to I (0-based, strictly increasing), re-reduced.
LinearCode puncture(const LinearCode& c, const std::vector<std::size_t>& index_set);

/// Span of all pairwise coordinatewise products of basis rows.
LinearCode schur_product(const LinearCode& a, const LinearCode& b);

/// Exact weight counts by enumerating all q^k messages.  BudgetExceeded when
/// q^k > budget.
WeightDistribution brute_weights(const LinearCode& c, std::uint64_t budget = kDefaultBudget);

LinearCode apply_perm_scale(const LinearCode& c, const PermScale& t);

/// self_orthogonal <=> G G^T = 0; lcd <=> det(G G^T) != 0;
/// hull_dim = k - rank(G G^T).
OrthogonalityReport orthogonality_status(const LinearCode& c);

}  // namespace tgrs

#endif
