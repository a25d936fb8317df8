#include "tgrs/galois.hpp"

#include <algorithm>
#include <cstdlib>

#include "tgrs/bigint.hpp"

namespace tgrs {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::UnsupportedSize: return "UnsupportedSize";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::OddCharacteristic: return "OddCharacteristic";
    case Errc::NotASubfieldDegree: return "NotASubfieldDegree";
    case Errc::NotSquare: return "NotSquare";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ZeroCode: return "ZeroCode";
    case Errc::FullSpace: return "FullSpace";
    case Errc::BadIndexSet: return "BadIndexSet";
    case Errc::BadTransform: return "BadTransform";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::RepeatedEvaluationPoint: return "RepeatedEvaluationPoint";
    case Errc::ZeroEvaluationPoint: return "ZeroEvaluationPoint";
    case Errc::BadSize: return "BadSize";
    case Errc::OutOfTheoremRange: return "OutOfTheoremRange";
    case Errc::SetTooSmall: return "SetTooSmall";
    case Errc::WrongShape: return "WrongShape";
    case Errc::BadShape: return "BadShape";
    case Errc::ExcludedEta: return "ExcludedEta";
    case Errc::BadParameter: return "BadParameter";
    case Errc::BadModulus: return "BadModulus";
    case Errc::PointNotInSubfield: return "PointNotInSubfield";
    case Errc::BadBeta: return "BadBeta";
    case Errc::NotSelfOrthogonal: return "NotSelfOrthogonal";
    case Errc::ZeroNotLast: return "ZeroNotLast";
    case Errc::InvalidParams: return "InvalidParams";
  }
  return "Unknown";
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt bigint_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

namespace {

constexpr std::uint32_t kMaxQ = 1u << 16;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as coefficient vectors, constant term first.
using Poly = std::vector<std::uint32_t>;

Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  // b is monic
  while (a.size() >= b.size()) {
    std::uint32_t lead = a.back();
    if (lead != 0) {
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::uint64_t t = std::uint64_t(b[i]) * lead % p;
        a[shift + i] = std::uint32_t((a[shift + i] + p - t) % p);
      }
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.  Exhaustive
// and exact at the supported sizes.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  std::uint32_t deg = std::uint32_t(f.size()) - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    // enumerate monic divisors of degree d; low coefficients count in base p
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      Poly g(d + 1);
      std::uint64_t t = n;
      for (std::uint32_t i = 0; i < d; ++i) {
        g[i] = std::uint32_t(t % p);
        t /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly default_modulus(std::uint32_t p, std::uint32_t m) {
  if (m == 1) return {0, 1};  // x
  // Smallest non-leading coefficient vector, read as a base-p integer with
  // the constant term least significant, that makes x^m + ... irreducible.
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  for (std::uint64_t n = 0; n < count; ++n) {
    Poly f(m + 1);
    std::uint64_t t = n;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = std::uint32_t(t % p);
      t /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) return f;
  }
  fail(Errc::UnsupportedSize, "no irreducible modulus found");  // unreachable
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> fs;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

FieldPtr Field::make(std::uint32_t p, std::uint32_t m,
                     std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) fail(Errc::NonPrime, "p = " + std::to_string(p) + " is not prime");
  if (m < 1) fail(Errc::UnsupportedSize, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxQ) fail(Errc::UnsupportedSize, "q exceeds 2^16");
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->m_ = m;
  f->q_ = std::uint32_t(q);
  if (modulus) {
    Poly mod = *modulus;
    if (mod.size() != std::size_t(m) + 1 || mod.back() != 1)
      fail(Errc::ReducibleModulus, "modulus must be monic of degree m");
    for (auto c : mod)
      if (c >= p) fail(Errc::ReducibleModulus, "modulus coefficient out of range");
    if (!is_irreducible(mod, p)) fail(Errc::ReducibleModulus, "modulus is reducible");
    f->modulus_ = std::move(mod);
  } else {
    f->modulus_ = default_modulus(p, m);
  }
  f->build_tables();
  return f;
}

Gf Field::add(Gf a, Gf b) const {
  if (m_ == 1) {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  Gf r = 0;
  std::uint32_t shift = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint32_t da = a % p_, db = b % p_;
    std::uint32_t s = da + db;
    if (s >= p_) s -= p_;
    r += s * shift;
    a /= p_;
    b /= p_;
    shift *= p_;
  }
  return r;
}

Gf Field::neg(Gf a) const {
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  Gf r = 0;
  std::uint32_t shift = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint32_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * shift;
    a /= p_;
    shift *= p_;
  }
  return r;
}

Gf Field::sub(Gf a, Gf b) const { return add(a, neg(b)); }

Gf Field::mul_raw(Gf a, Gf b) const {
  // coefficient vectors of a and b
  std::vector<std::uint32_t> da(m_), db(m_), prod(2 * m_ - 1, 0);
  Gf t = a;
  for (std::uint32_t i = 0; i < m_; ++i) {
    da[i] = t % p_;
    t /= p_;
  }
  t = b;
  for (std::uint32_t i = 0; i < m_; ++i) {
    db[i] = t % p_;
    t /= p_;
  }
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j)
      prod[i + j] = std::uint32_t((prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_);
  }
  // reduce modulo the (monic) modulus: x^m = -(c_0 + ... + c_{m-1} x^{m-1})
  for (std::uint32_t d = 2 * m_ - 2; d >= m_; --d) {
    std::uint32_t lead = prod[d];
    if (lead != 0) {
      prod[d] = 0;
      for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint64_t sub = std::uint64_t(modulus_[i]) * lead % p_;
        prod[d - m_ + i] = std::uint32_t((prod[d - m_ + i] + p_ - sub) % p_);
      }
    }
    if (d == m_) break;
  }
  Gf r = 0;
  std::uint32_t shift = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += prod[i] * shift;
    shift *= p_;
  }
  return r;
}

Gf Field::pow_raw(Gf a, std::uint64_t e) const {
  Gf r = 1, b = a;
  while (e) {
    if (e & 1) r = mul_raw(r, b);
    b = mul_raw(b, b);
    e >>= 1;
  }
  return r;
}

void Field::build_tables() {
  // smallest-rep generator of the multiplicative group
  if (q_ == 2) {
    generator_ = 1;
  } else {
    auto factors = prime_factors(q_ - 1);
    for (Gf g = 2; g < q_; ++g) {
      bool ok = true;
      for (auto r : factors) {
        if (pow_raw(g, (q_ - 1) / r) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        generator_ = g;
        break;
      }
    }
  }

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  Gf x = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = mul_raw(x, generator_);
  }

  if (p_ != 2) {
    sqrt_.assign(q_, q_);  // q_ marks "no root"
    for (Gf y = 0; y < q_; ++y) {
      Gf s = mul_raw(y, y);
      if (sqrt_[s] == q_) sqrt_[s] = y;  // ascending y, first hit is smaller root
    }
  }
}

Gf Field::mul(Gf a, Gf b) const {
  if (a == 0 || b == 0) return 0;
  std::uint32_t s = log_[a] + log_[b];
  if (s >= q_ - 1) s -= q_ - 1;
  return exp_[s];
}

Gf Field::inv(Gf a) const {
  if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
  std::uint32_t l = log_[a];
  return l == 0 ? 1 : exp_[q_ - 1 - l];
}

Gf Field::pow(Gf a, long long e) const {
  if (e < 0) {
    a = inv(a);  // DivisionByZero for a = 0
    e = -e;
  }
  if (a == 0) return e == 0 ? 1 : 0;
  std::uint64_t r = std::uint64_t(log_[a]) * (std::uint64_t(e) % (q_ - 1)) % (q_ - 1);
  return exp_[r];
}

Gf Field::of_int(long long n) const {
  long long r = n % p_;
  if (r < 0) r += p_;
  return Gf(r);
}

int Field::quadratic_character(Gf a) const {
  if (p_ == 2) fail(Errc::EvenCharacteristic, "quadratic character needs odd q");
  if (a == 0) return 0;
  return pow(a, (q_ - 1) / 2) == 1 ? 1 : -1;
}

std::optional<Gf> Field::sqrt(Gf a) const {
  if (p_ == 2) return pow(a, q_ / 2);  // Frobenius inverse, always a root
  Gf r = sqrt_[a];
  if (r == q_) return std::nullopt;
  return r;
}

Gf Field::primitive_element() const { return generator_; }

std::vector<Gf> Field::subfield_elements(std::uint32_t sub_degree) const {
  if (sub_degree == 0 || m_ % sub_degree != 0)
    fail(Errc::NotASubfieldDegree, "degree " + std::to_string(sub_degree) +
                                       " does not divide " + std::to_string(m_));
  std::uint64_t ps = 1;
  for (std::uint32_t i = 0; i < sub_degree; ++i) ps *= p_;
  std::vector<Gf> out;
  out.reserve(std::size_t(ps));
  for (Gf x = 0; x < q_; ++x)
    if (pow(x, (long long)ps) == x) out.push_back(x);
  return out;
}

std::vector<Gf> Field::elements() const {
  std::vector<Gf> out(q_);
  for (Gf x = 0; x < q_; ++x) out[x] = x;
  return out;
}

FieldPtr Field::parse(const std::string& spec) {
  std::string qpart = spec;
  std::optional<std::vector<std::uint32_t>> poly;
  auto comma = spec.find(",poly=");
  if (comma != std::string::npos) {
    qpart = spec.substr(0, comma);
    std::vector<std::uint32_t> coeffs;
    std::string rest = spec.substr(comma + 6);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto next = rest.find(',', pos);
      std::string tok = rest.substr(pos, next == std::string::npos ? next : next - pos);
      if (tok.empty()) fail(Errc::BadModulus, "empty coefficient in poly list");
      coeffs.push_back(std::uint32_t(std::stoul(tok)));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    poly = std::move(coeffs);
  }
  if (qpart.rfind("q=", 0) != 0) fail(Errc::BadModulus, "field spec must start with q=");
  unsigned long qv = 0;
  try {
    qv = std::stoul(qpart.substr(2));
  } catch (const std::exception&) {
    fail(Errc::BadModulus, "bad q value in field spec");
  }
  if (qv < 2 || qv > kMaxQ) fail(Errc::UnsupportedSize, "q out of range");
  // factor q as p^m
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d * d <= qv; ++d) {
    if (qv % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = std::uint32_t(qv);  // q itself prime
  std::uint32_t mdeg = 0;
  unsigned long t = qv;
  while (t % p == 0) {
    t /= p;
    ++mdeg;
  }
  if (t != 1) fail(Errc::NonPrime, "q = " + std::to_string(qv) + " is not a prime power");
  return make(p, mdeg, std::move(poly));
}

}  // namespace tgrs
