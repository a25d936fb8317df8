#ifndef TGRS_GALOIS_HPP
#define TGRS_GALOIS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tgrs/errors.hpp"

namespace tgrs {

// A field element is its integer rep in [0, q).  The base-p digits of the
// rep, least significant first, are the polynomial-basis coordinates, so
// elements are totally ordered and every tie-break (primitive element,
// square roots) is deterministic.
using Gf = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in GF(p^m), q = p^m <= 2^16.  Immutable after
/// construction; safe to share across threads.
class Field {
 public:
  /// Builds GF(p^m).  When `modulus` is omitted the lexicographically least
  /// monic irreducible polynomial of degree m over GF(p) is used, so a given
  /// (p, m) always names the same field.  Coefficients are constant term
  /// first, length m+1, and the polynomial must be monic and irreducible.
  static FieldPtr make(std::uint32_t p, std::uint32_t m,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Parses the CLI field-spec format: "q=<q>" or "q=<q>,poly=<c0,...,cm>".
  static FieldPtr parse(const std::string& spec);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Gf add(Gf a, Gf b) const;
  Gf sub(Gf a, Gf b) const;
  Gf neg(Gf a) const;
  Gf mul(Gf a, Gf b) const;
  Gf inv(Gf a) const;  // DivisionByZero on 0

  /// Exponentiation by square-and-multiply; negative exponents route through
  /// inv.  pow(0,0) = 1, matching the convention that the exponent-0 vector
  /// is all-ones even when 0 is an evaluation point.
  Gf pow(Gf a, long long e) const;

  /// The integer n mod p as a field element (lives in the prime subfield).
  Gf of_int(long long n) const;

  /// +1 for nonzero squares, -1 for non-squares, 0 at 0.  Odd q only.
  int quadratic_character(Gf a) const;

  /// Even q: x^(q/2), the unique root.  Odd q: the smaller-rep root when one
  /// exists, nullopt otherwise.  sqrt(0) = 0.
  std::optional<Gf> sqrt(Gf a) const;

  /// Generator of the multiplicative group with the smallest rep.
  Gf primitive_element() const;

  /// The p^d fixed points of x -> x^(p^d), ascending.  d must divide m.
  std::vector<Gf> subfield_elements(std::uint32_t sub_degree) const;

  std::vector<Gf> elements() const;  // 0 .. q-1

  bool operator==(const Field& o) const noexcept {
    return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
  }

 private:
  Field() = default;
  void build_tables();
  Gf mul_raw(Gf a, Gf b) const;  // polynomial multiply + reduction, no tables
  Gf pow_raw(Gf a, std::uint64_t e) const;

  std::uint32_t p_ = 0, m_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Gf generator_ = 0;
  std::vector<Gf> exp_;   // exp_[i] = generator^i, i in [0, q-1)
  std::vector<Gf> log_;   // inverse of exp_ on nonzero reps
  std::vector<Gf> sqrt_;  // odd q: smaller square root, q = "none"
};

inline void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) fail(Errc::FieldMismatch, "operands belong to different fields");
}

}  // namespace tgrs

#endif
