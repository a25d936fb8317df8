#include "tgrs/twisted.hpp"

#include <algorithm>
#include <numeric>

namespace tgrs {

TgrsParams TgrsParams::make(FieldPtr field, std::uint32_t k, std::vector<Gf> alpha,
                            std::vector<Gf> v, Gf eta) {
  const std::size_t n = alpha.size();
  if (k < 1 || k >= n) fail(Errc::InvalidParams, "need 1 <= k < n");
  if (n > field->q()) fail(Errc::InvalidParams, "more evaluation points than field elements");
  if (v.size() != n) fail(Errc::InvalidParams, "v must have length n");
  if (eta == 0) fail(Errc::InvalidParams, "eta must be nonzero");
  for (auto x : v)
    if (x == 0) fail(Errc::InvalidParams, "multipliers must be nonzero");
  for (auto x : alpha)
    if (x >= field->q()) fail(Errc::InvalidParams, "evaluation point outside the field");
  std::vector<Gf> sorted = alpha;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(Errc::RepeatedEvaluationPoint, "evaluation points must be distinct");
  return TgrsParams{std::move(field), k, std::move(alpha), std::move(v), eta};
}

std::optional<std::size_t> TgrsParams::zero_index() const {
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] == 0) return i;
  return std::nullopt;
}

Gf TgrsParams::point_product() const {
  Gf prod = 1;
  for (auto a : alpha) prod = field->mul(prod, a);
  return prod;
}

Gf twisted_eval(const TwistedPolynomial& f, Gf x) {
  const Field& fld = *f.field;
  const std::size_t k = f.coeffs.size();
  // degree-k coefficient vector: a_0..a_{k-1}, then eta * a_0
  Gf acc = k == 0 ? 0 : fld.mul(f.eta, f.coeffs[0]);
  for (std::size_t i = k; i-- > 0;) acc = fld.add(fld.mul(acc, x), f.coeffs[i]);
  return acc;
}

std::vector<Gf> dual_multipliers(const Field& f, std::span<const Gf> alpha) {
  const std::size_t n = alpha.size();
  std::vector<Gf> u(n);
  for (std::size_t j = 0; j < n; ++j) {
    Gf prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      Gf d = f.sub(alpha[j], alpha[i]);
      if (d == 0) fail(Errc::RepeatedEvaluationPoint, "evaluation points must be distinct");
      prod = f.mul(prod, d);
    }
    u[j] = f.neg(f.inv(prod));
  }
  return u;
}

namespace {

// P_j = (-1)^n * prod_{i != j} alpha_i, via prefix/suffix products so zero
// entries are handled exactly.
std::vector<Gf> co_products(const Field& f, std::span<const Gf> alpha) {
  const std::size_t n = alpha.size();
  std::vector<Gf> pre(n + 1, 1), suf(n + 1, 1), out(n);
  for (std::size_t i = 0; i < n; ++i) pre[i + 1] = f.mul(pre[i], alpha[i]);
  for (std::size_t i = n; i-- > 0;) suf[i] = f.mul(suf[i + 1], alpha[i]);
  const Gf sign = n % 2 == 0 ? 1 : f.neg(Gf(1));
  for (std::size_t j = 0; j < n; ++j) out[j] = f.mul(sign, f.mul(pre[j], suf[j + 1]));
  return out;
}

}  // namespace

Matrix generator_matrix(const TgrsParams& p) {
  const Field& f = *p.field;
  const std::size_t n = p.n();
  Matrix g(p.field, p.k, n);
  for (std::size_t j = 0; j < n; ++j) {
    g(0, j) = f.mul(p.v[j], f.add(1, f.mul(p.eta, f.pow(p.alpha[j], p.k))));
    Gf power = 1;
    for (std::size_t i = 1; i < p.k; ++i) {
      power = f.mul(power, p.alpha[j]);
      g(i, j) = f.mul(p.v[j], power);
    }
  }
  return g;
}

Matrix parity_check_matrix(const TgrsParams& p) {
  const Field& f = *p.field;
  const std::size_t n = p.n();
  const std::size_t r = n - p.k;
  auto u = dual_multipliers(f, p.alpha);
  auto co = co_products(f, p.alpha);
  Matrix h(p.field, r, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Gf base = f.mul(u[j], f.inv(p.v[j]));
    Gf power = 1;  // alpha_j^0 = 1 also at the zero point
    for (std::size_t i = 0; i + 1 < r; ++i) {
      h(i, j) = f.mul(base, power);
      power = f.mul(power, p.alpha[j]);
    }
    // the twist lives in the last row only
    h(r - 1, j) = f.mul(base, f.add(power, f.mul(p.eta, co[j])));
  }
  return h;
}

TgrsParams dual_params(const TgrsParams& p) {
  if (p.zero_index())
    fail(Errc::ZeroEvaluationPoint, "dual of a code with 0 among the points is not twisted");
  const Field& f = *p.field;
  auto u = dual_multipliers(f, p.alpha);
  std::vector<Gf> w(p.n());
  for (std::size_t j = 0; j < p.n(); ++j)
    w[j] = f.mul(u[j], f.inv(f.mul(p.v[j], p.alpha[j])));
  Gf eta_dual = f.inv(f.mul(p.eta, p.point_product()));
  return TgrsParams::make(p.field, std::uint32_t(p.n() - p.k), p.alpha, std::move(w), eta_dual);
}

BigInt subset_product_count(const Field& f, std::uint32_t k, Gf b, std::span<const Gf> B) {
  if (k > B.size()) fail(Errc::BadSize, "subset size exceeds the set");
  {
    std::vector<Gf> sorted(B.begin(), B.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(Errc::BadSize, "set elements must be distinct");
  }
  const std::uint32_t q = f.q();
  // dp[s][prod] = number of size-s subsets of the elements seen so far with
  // the given product; subsets containing 0 accumulate at prod = 0.
  std::vector<std::vector<BigInt>> dp(k + 1, std::vector<BigInt>(q, 0));
  dp[0][1] = 1;
  for (Gf x : B) {
    for (std::uint32_t s = k; s >= 1; --s) {  // descending: each element used once
      for (std::uint32_t prod = 0; prod < q; ++prod) {
        if (dp[s - 1][prod] == 0) continue;
        dp[s][f.mul(prod, x)] += dp[s - 1][prod];
      }
    }
  }
  BigInt count = dp[k][b];

  // Cross-check against the closed form when it applies: for b != 0,
  // gcd(k, q-1) = 1 and the set equal to the field or its units, the count
  // is binom(q-1, k)/(q-1).
  if (b != 0 && std::gcd<std::uint64_t>(k, q - 1) == 1 &&
      (B.size() == q || B.size() == q - 1)) {
    bool has_zero = false;
    for (Gf x : B)
      if (x == 0) has_zero = true;
    bool full = B.size() == q;                       // all of F_q
    bool units = B.size() == q - 1 && !has_zero;     // all of F_q^*
    if (full || units) {
      BigInt expected = binomial(q - 1, k) / (q - 1);
      if (count != expected)
        throw std::logic_error("subset count disagrees with the closed form");
    }
  }
  return count;
}

namespace {

void require_theorem_range(const TgrsParams& p) {
  if (p.k < 3 || p.k >= p.n())
    fail(Errc::OutOfTheoremRange, "the MDS/NMDS dichotomy needs 3 <= k < n");
}

}  // namespace

Classification classify(const TgrsParams& p) {
  require_theorem_range(p);
  const Field& f = *p.field;
  Gf target = f.inv(p.eta);
  if (p.k % 2 == 1) target = f.neg(target);  // (-1)^k eta^{-1}
  Classification c;
  c.m_count = subset_product_count(f, p.k, target, p.alpha);
  c.mds = c.m_count == 0;
  c.d = c.mds ? p.n() - p.k + 1 : p.n() - p.k;
  return c;
}

namespace {

// Weight counts of an [n, dim] code whose minimum-weight count at n-dim is
// seed: A_{n-dim+s} for s = 1..dim from the standard near-MDS recursion.
std::vector<BigInt> nmds_recursion(std::size_t n, std::size_t dim, std::uint32_t q,
                                   const BigInt& seed) {
  std::vector<BigInt> counts(n + 1, 0);
  counts[0] = 1;
  counts[n - dim] = seed;
  for (std::size_t s = 1; s <= dim; ++s) {
    BigInt sum = 0;
    for (std::size_t j = 0; j < s; ++j) {
      BigInt term = binomial(n - dim + s, j) * (bigint_pow(q, s - j) - 1);
      if (j % 2 == 0)
        sum += term;
      else
        sum -= term;
    }
    BigInt value = binomial(n, dim - s) * sum;
    BigInt corr = binomial(dim, s) * seed;
    if (s % 2 == 0)
      value += corr;
    else
      value -= corr;
    counts[n - dim + s] = value;
  }
  return counts;
}

}  // namespace

std::pair<WeightDistribution, WeightDistribution> closed_weight_distribution(
    const TgrsParams& p) {
  Classification cls = classify(p);
  const std::size_t n = p.n(), k = p.k;
  const std::uint32_t q = p.field->q();
  BigInt a_min = BigInt(q - 1) * cls.m_count;

  WeightDistribution primal, dual;
  primal.counts = nmds_recursion(n, k, q, a_min);
  // The dual side is the same recursion at dimension n-k, seeded with
  // A^perp_k = A_{n-k}.
  dual.counts = nmds_recursion(n, n - k, q, a_min);
  return {std::move(primal), std::move(dual)};
}

std::variant<FullSpace, TgrsParams> schur_square_params(const TgrsParams& p) {
  if (p.k < 3) fail(Errc::OutOfTheoremRange, "Schur square structure needs k >= 3");
  const std::size_t n = p.n();
  if (2 * std::size_t(p.k) >= n) return FullSpace{n};
  const Field& f = *p.field;
  std::vector<Gf> v2(n);
  for (std::size_t j = 0; j < n; ++j) v2[j] = f.mul(p.v[j], p.v[j]);
  return TgrsParams::make(p.field, 2 * p.k, p.alpha, std::move(v2), f.mul(p.eta, p.eta));
}

NonGrsCertificate non_grs_certificate(const TgrsParams& p) {
  const std::size_t n = p.n(), k = p.k;
  if (k < 3 || k + 3 > n)
    fail(Errc::OutOfTheoremRange, "non-GRS certificate needs 3 <= k <= n-3");
  const Field& f = *p.field;
  LinearCode code = LinearCode::from_generator(generator_matrix(p));
  NonGrsCertificate cert;

  if (2 * k - 1 < n) {
    // A GRS or extended-GRS code of these parameters has a square of
    // dimension 2k-1; the twisted square is min(2k, n) > 2k-1.
    cert.branch = NonGrsCertificate::Branch::SquareDim;
    cert.observed_dim = schur_product(code, code).k();
    cert.grs_dim = 2 * k - 1;
    cert.certified = cert.observed_dim != cert.grs_dim;
    return cert;
  }

  LinearCode dual_code = dual(code);
  LinearCode dual_square = schur_product(dual_code, dual_code);
  cert.observed_dim = dual_square.k();
  cert.grs_dim = 2 * (n - k) - 1;

  auto zero_at = p.zero_index();
  if (!zero_at) {
    cert.branch = NonGrsCertificate::Branch::DualSquareDim;
    cert.certified = cert.observed_dim != cert.grs_dim;
    return cert;
  }

  // 0 among the points and k >= n/2: the dual square contains a weight-one
  // word supported at the zero coordinate, while the dual square of any
  // (E)GRS code has minimum distance 2k-n+2 >= 2.
  cert.branch = NonGrsCertificate::Branch::DualWeightOne;
  auto u = dual_multipliers(f, p.alpha);
  std::vector<Gf> witness(n, 0);
  const std::size_t z = *zero_at;
  witness[z] = f.mul(p.eta, f.mul(u[z], f.inv(f.mul(p.v[z], p.v[z]))));
  cert.witness = witness;
  cert.certified = row_space_contains(dual_square.generator(), witness);
  return cert;
}

Gf l_sum(const Field& f, std::span<const Gf> A, std::uint64_t m) {
  if (A.size() <= 2) fail(Errc::SetTooSmall, "need |A| > 2");
  std::vector<bool> in_set(f.q(), false);
  for (Gf a : A) {
    if (in_set[a]) fail(Errc::BadSize, "set elements must be distinct");
    in_set[a] = true;
  }
  Gf total = 0;
  for (Gf a : A) {
    Gf term = f.pow(a, (long long)m);
    for (Gf b = 0; b < f.q(); ++b)
      if (!in_set[b]) term = f.mul(term, f.sub(a, b));
    total = f.add(total, term);
  }
  return total;
}

std::optional<std::vector<Gf>> self_orthogonal_witness(const TgrsParams& p) {
  const Field& f = *p.field;
  const std::uint32_t q = f.q();
  const std::uint32_t k = p.k;
  if (k < 3 || 2 * k >= q + 1)
    fail(Errc::OutOfTheoremRange, "witness system needs 3 <= k < (q+1)/2");
  // Unknowns g_0..g_D.  D = -1 (possible only for even q at k = q/2) leaves
  // the zero polynomial, which cannot interpolate the nonzero v_j^2.
  const long long degree = (long long)q - 1 - 2 * (long long)k;
  if (degree < 0) return std::nullopt;
  const std::size_t unknowns = std::size_t(degree) + 1;

  auto zero_at = p.zero_index();
  std::vector<bool> used(q, false);
  for (Gf a : p.alpha) used[a] = true;

  std::vector<std::vector<Gf>> rows;  // augmented [coeffs | rhs]
  auto interpolation_row = [&](Gf point, Gf rhs) {
    std::vector<Gf> row(unknowns + 1, 0);
    Gf power = 1;
    for (std::size_t i = 0; i < unknowns; ++i) {
      row[i] = power;
      power = f.mul(power, point);
    }
    row[unknowns] = rhs;
    rows.push_back(std::move(row));
  };

  for (std::size_t j = 0; j < p.n(); ++j) {
    if (zero_at && *zero_at == j) continue;
    interpolation_row(p.alpha[j], f.mul(p.v[j], p.v[j]));
  }
  for (Gf b = 1; b < q; ++b)
    if (!used[b]) interpolation_row(b, 0);

  // boundary: g_0 + eta^2 g_D = v_z^2 (zero point present) or 0
  {
    std::vector<Gf> row(unknowns + 1, 0);
    row[0] = f.add(row[0], 1);
    Gf eta2 = f.mul(p.eta, p.eta);
    row[std::size_t(degree)] = f.add(row[std::size_t(degree)], eta2);
    row[unknowns] =
        zero_at ? f.mul(p.v[*zero_at], p.v[*zero_at]) : 0;
    rows.push_back(std::move(row));
  }

  Matrix system = Matrix::from_rows(p.field, rows);
  auto [red, rank, pivots] = rref(system);
  // inconsistent iff some pivot lands in the rhs column
  for (auto c : pivots)
    if (c == unknowns) return std::nullopt;

  std::vector<Gf> witness(unknowns, 0);
  for (std::size_t r = 0; r < rank; ++r) witness[pivots[r]] = red(r, unknowns);
  return witness;
}

LambdaSelfDual lambda_self_dual_check(const TgrsParams& p) {
  const Field& f = *p.field;
  const std::uint32_t q = f.q();
  const std::size_t n = p.n();
  const std::uint32_t k = p.k;
  if (k < 3 || 2 * k >= q)
    fail(Errc::OutOfTheoremRange, "scalar witness test needs 3 <= k < q/2");

  auto zero_at = p.zero_index();
  LambdaSelfDual out;

  if (n == 2 * std::size_t(k) + 1 && zero_at && *zero_at == n - 1) {
    // almost-self-dual shape: points alpha_1..alpha_2k nonzero, alpha_n = 0.
    // lambda * (-(prod alpha^{-1}) + eta^2) = v_n^2 and
    // -lambda alpha_j^{-1} prod_{i != j <= 2k} (alpha_j - alpha_i)^{-1} = v_j^2.
    auto denom = [&](std::size_t j) {
      Gf prod = f.inv(p.alpha[j]);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (i == j) continue;
        prod = f.mul(prod, f.inv(f.sub(p.alpha[j], p.alpha[i])));
      }
      return f.neg(prod);
    };
    Gf lambda = f.mul(f.mul(p.v[0], p.v[0]), f.inv(denom(0)));
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (f.mul(lambda, denom(j)) != f.mul(p.v[j], p.v[j])) {
        out.kind = LambdaSelfDual::Kind::Fails;
        out.reason = "no common scalar fits the nonzero-point relations";
        return out;
      }
    }
    Gf inv_prod = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) inv_prod = f.mul(inv_prod, f.inv(p.alpha[i]));
    Gf boundary = f.mul(lambda, f.add(f.neg(inv_prod), f.mul(p.eta, p.eta)));
    if (boundary != f.mul(p.v[n - 1], p.v[n - 1])) {
      out.kind = LambdaSelfDual::Kind::Fails;
      out.reason = "scalar fails the zero-point relation";
      return out;
    }
    out.kind = LambdaSelfDual::Kind::AlmostSelfDual;
    out.lambda = lambda;
    return out;
  }

  if (n == 2 * std::size_t(k) && !zero_at) {
    // self-dual shape: eta^2 = prod alpha^{-1} and a common lambda with
    // lambda alpha_j^{-1} prod_{i != j} (alpha_j - alpha_i)^{-1} = v_j^2.
    Gf inv_prod = 1;
    for (Gf a : p.alpha) inv_prod = f.mul(inv_prod, f.inv(a));
    if (f.mul(p.eta, p.eta) != inv_prod) {
      out.kind = LambdaSelfDual::Kind::Fails;
      out.reason = "eta^2 differs from the inverse point product";
      return out;
    }
    Gf lambda = 0;
    for (std::size_t j = 0; j < n; ++j) {
      Gf prod = p.alpha[j];
      for (std::size_t i = 0; i < n; ++i) {
        if (i == j) continue;
        prod = f.mul(prod, f.sub(p.alpha[j], p.alpha[i]));
      }
      Gf cand = f.mul(f.mul(p.v[j], p.v[j]), prod);
      if (j == 0) {
        lambda = cand;
      } else if (cand != lambda) {
        out.kind = LambdaSelfDual::Kind::Fails;
        out.reason = "multiplier relations give no common scalar";
        return out;
      }
    }
    out.kind = LambdaSelfDual::Kind::SelfDual;
    out.lambda = lambda;
    return out;
  }

  fail(Errc::WrongShape, "expected n = 2k+1 with trailing zero point or n = 2k without 0");
}

}  // namespace tgrs
