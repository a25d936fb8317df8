#include "tgrs/linear_code.hpp"

#include <algorithm>

namespace tgrs {

std::size_t WeightDistribution::min_distance() const {
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] != 0) return i;
  fail(Errc::ZeroCode, "no nonzero codeword");
}

BigInt WeightDistribution::total() const {
  BigInt t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

PermScale PermScale::identity(std::size_t n) {
  PermScale t;
  t.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.perm[i] = i;
  t.scale.assign(n, 1);
  return t;
}

LinearCode LinearCode::from_generator(const Matrix& m) {
  auto [red, rank, pivots] = rref(m);
  if (rank == 0) fail(Errc::ZeroCode, "generator has rank 0");
  Matrix basis(m.field(), rank, m.cols());
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) basis(i, j) = red(i, j);
  return LinearCode(std::move(basis));
}

LinearCode dual(const LinearCode& c) {
  if (c.k() == c.n())
    fail(Errc::FullSpace, "full-space code has a zero dual");
  return LinearCode::from_generator(nullspace(c.generator()));
}

LinearCode puncture(const LinearCode& c, const std::vector<std::size_t>& index_set) {
  if (index_set.empty()) fail(Errc::BadIndexSet, "empty index set");
  for (std::size_t i = 0; i < index_set.size(); ++i) {
    if (index_set[i] >= c.n()) fail(Errc::BadIndexSet, "index out of range");
    if (i > 0 && index_set[i] <= index_set[i - 1])
      fail(Errc::BadIndexSet, "indices must be strictly increasing");
  }
  Matrix m(c.field(), c.k(), index_set.size());
  for (std::size_t i = 0; i < c.k(); ++i)
    for (std::size_t j = 0; j < index_set.size(); ++j)
      m(i, j) = c.generator()(i, index_set[j]);
  return LinearCode::from_generator(m);
}

LinearCode schur_product(const LinearCode& a, const LinearCode& b) {
  require_same_field(*a.field(), *b.field());
  if (a.n() != b.n()) fail(Errc::DimensionMismatch, "codes have different lengths");
  const Field& f = *a.field();
  Matrix prods(a.field(), a.k() * b.k(), a.n());
  std::size_t r = 0;
  for (std::size_t i = 0; i < a.k(); ++i)
    for (std::size_t j = 0; j < b.k(); ++j, ++r)
      for (std::size_t col = 0; col < a.n(); ++col)
        prods(r, col) = f.mul(a.generator()(i, col), b.generator()(j, col));
  return LinearCode::from_generator(prods);
}

WeightDistribution brute_weights(const LinearCode& c, std::uint64_t budget) {
  const Field& f = *c.field();
  const std::size_t n = c.n(), k = c.k();
  const std::uint32_t q = f.q();

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > budget / q) fail(Errc::BudgetExceeded, "q^k exceeds the enumeration budget");
    total *= q;
  }
  if (total > budget) fail(Errc::BudgetExceeded, "q^k exceeds the enumeration budget");

  // Odometer walk over all messages: each step bumps one message digit by
  // one rep, so the codeword is updated by a precomputed delta row.
  // deltas[i][d] = (elem(d+1 mod q) - elem(d)) * row_i
  std::vector<std::vector<Gf>> deltas(k, std::vector<Gf>(std::size_t(q) * n));
  for (std::size_t i = 0; i < k; ++i)
    for (std::uint32_t d = 0; d < q; ++d) {
      Gf step = f.sub(d + 1 == q ? 0 : d + 1, d);
      for (std::size_t j = 0; j < n; ++j)
        deltas[i][std::size_t(d) * n + j] = f.mul(step, c.generator()(i, j));
    }

  std::vector<std::uint64_t> counts(n + 1, 0);
  std::vector<std::uint32_t> digits(k, 0);
  std::vector<Gf> word(n, 0);
  std::size_t weight = 0;
  counts[0] = 1;  // zero message
  for (std::uint64_t step = 1; step < total; ++step) {
    std::size_t i = 0;
    for (;;) {
      const Gf* delta = deltas[i].data() + std::size_t(digits[i]) * n;
      for (std::size_t j = 0; j < n; ++j) {
        if (delta[j] == 0) continue;
        Gf before = word[j];
        Gf after = f.add(before, delta[j]);
        word[j] = after;
        weight += (after != 0) - (before != 0);
      }
      if (++digits[i] < q) break;
      digits[i] = 0;  // delta for d = q-1 wrapped this digit back to 0
      ++i;
    }
    ++counts[weight];
  }

  WeightDistribution w;
  w.counts.assign(counts.begin(), counts.end());
  return w;
}

LinearCode apply_perm_scale(const LinearCode& c, const PermScale& t) {
  const std::size_t n = c.n();
  if (t.perm.size() != n || t.scale.size() != n)
    fail(Errc::BadTransform, "transform length mismatch");
  std::vector<bool> seen(n, false);
  for (auto p : t.perm) {
    if (p >= n || seen[p]) fail(Errc::BadTransform, "perm is not a bijection");
    seen[p] = true;
  }
  for (auto s : t.scale)
    if (s == 0) fail(Errc::BadTransform, "scale entries must be nonzero");
  const Field& f = *c.field();
  Matrix m(c.field(), c.k(), n);
  for (std::size_t i = 0; i < c.k(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = f.mul(t.scale[j], c.generator()(i, t.perm[j]));
  return LinearCode::from_generator(m);
}

OrthogonalityReport orthogonality_status(const LinearCode& c) {
  OrthogonalityReport r;
  Matrix gg = gram(c.generator());
  std::size_t k = c.k(), n = c.n();
  r.self_orthogonal = is_zero(gg);
  r.self_dual = r.self_orthogonal && n == 2 * k;
  r.almost_self_dual = r.self_orthogonal && n % 2 == 1 && 2 * k == n - 1;
  r.lcd = det(gg) != 0;
  r.hull_dim = k - rref(gg).rank;
  return r;
}

}  // namespace tgrs
