#ifndef TGRS_CONSTRUCTIONS_HPP
#define TGRS_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <variant>

#include "tgrs/twisted.hpp"

namespace tgrs {

// Family tags match the CLI's --family values.
enum class Family { Cda, Cda1, Q1, Q2, Q12, Q13, Pcd1, Pcd2, LcdScale };
enum class Claim { SelfDual, AlmostSelfDual, Lcd };

const char* family_name(Family f) noexcept;
const char* claim_name(Claim c) noexcept;

struct ConstructionReport {
  TgrsParams params;
  Family family{};
  Claim claimed{};
  Classification classification;
  std::string note;  // family-specific remarks (parameter choices, caveats)
};

enum class Variant { Almost, SelfDual };

/// Even q.  Almost variant: n = 2k+1 with the zero point last, eta free but
/// excluding the single value that would zero the last multiplier.  Self-dual
/// variant: n = 2k over nonzero points, eta computed from the point product.
/// Multipliers are built with x^(q/2) as the square root.  When alpha is
/// omitted the first 2k nonzero elements (ascending) are used.
ConstructionReport even_q_family(FieldPtr field, std::uint32_t k,
                                 std::optional<std::vector<Gf>> alpha,
                                 std::optional<Gf> eta, Variant variant);

/// Odd q >= 7, full support (all of F_q, zero last), k = (q-1)/2,
/// v = (1,...,1,a), eta = sqrt(a^2-1).  When a is omitted, reps 2,3,... are
/// scanned for the first with a^2-1 a nonzero square.
ConstructionReport odd_q_full_support(FieldPtr field, std::optional<Gf> a);

struct NonExistence {
  std::string obstruction;
};

/// Odd q >= 7 over all units, k = (q-1)/2, v = 1, eta = sqrt(-1).  Self-dual
/// for q = 1 mod 4; NonExistence (no self-dual code of this shape at any
/// eta, v) for q = 3 mod 4.
std::variant<ConstructionReport, NonExistence> odd_q_units(FieldPtr field);

/// q = 1 mod 4, k = (q-1)/4, support the non-squares (plus 0 last for the
/// almost variant with v = (1,..,1,a), eta = sqrt(-2a^2+1); the self-dual
/// variant uses v = 1, eta = 1).
ConstructionReport nonsquare_support(FieldPtr field, std::optional<Gf> a, Variant variant);

/// q = p^(2m) with p odd; evaluation points drawn from the p^m-subfield, so
/// every multiplier square root exists in the big field.  Almost variant:
/// n = 2k+1 with zero last and eta a subfield unit away from the excluded
/// square roots; self-dual variant: n = 2k, eta = sqrt of the inverse point
/// product.  Omitted alpha defaults to the smallest subfield points.
ConstructionReport subfield_family(FieldPtr field, std::uint32_t k,
                                   std::optional<std::vector<Gf>> alpha,
                                   std::optional<Gf> eta, Variant variant);

/// Scales a self-orthogonal code (zero point last) by w = (beta,..,beta,1,..,1)
/// with n-k betas: the result is LCD.  beta outside {0, 1, -1}.
ConstructionReport lcd_scale(const TgrsParams& p, Gf beta);

/// The generic route: any self-orthogonal code becomes LCD after scaling the
/// complement of an information set (the pivot columns) by beta.
LinearCode lcd_from_self_orthogonal(const LinearCode& c, Gf beta);

}  // namespace tgrs

#endif
