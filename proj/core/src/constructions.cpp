#include "tgrs/constructions.hpp"

#include <algorithm>

namespace tgrs {

const char* family_name(Family f) noexcept {
  switch (f) {
    case Family::Cda: return "cda";
    case Family::Cda1: return "cda1";
    case Family::Q1: return "q1";
    case Family::Q2: return "q2";
    case Family::Q12: return "q12";
    case Family::Q13: return "q13";
    case Family::Pcd1: return "pcd1";
    case Family::Pcd2: return "pcd2";
    case Family::LcdScale: return "lcd_scale";
  }
  return "?";
}

const char* claim_name(Claim c) noexcept {
  switch (c) {
    case Claim::SelfDual: return "self-dual";
    case Claim::AlmostSelfDual: return "almost-self-dual";
    case Claim::Lcd: return "lcd";
  }
  return "?";
}

namespace {

// Every factory re-verifies its claim on the finished parameters; a miss is
// a defect in this module, not a caller error.
void verify_claim(const TgrsParams& p, Claim claimed) {
  auto status = orthogonality_status(LinearCode::from_generator(generator_matrix(p)));
  bool ok = false;
  switch (claimed) {
    case Claim::SelfDual: ok = status.self_dual; break;
    case Claim::AlmostSelfDual: ok = status.almost_self_dual; break;
    case Claim::Lcd: ok = status.lcd; break;
  }
  if (!ok) throw std::logic_error("construction failed its claimed property check");
}

ConstructionReport finish(TgrsParams p, Family family, Claim claimed, std::string note = {}) {
  verify_claim(p, claimed);
  Classification cls = classify(p);
  return ConstructionReport{std::move(p), family, claimed, std::move(cls), std::move(note)};
}

std::vector<Gf> default_unit_points(const Field& f, std::size_t count, bool append_zero) {
  std::vector<Gf> pts;
  pts.reserve(count + (append_zero ? 1 : 0));
  for (Gf x = 1; x < f.q() && pts.size() < count; ++x) pts.push_back(x);
  if (pts.size() < count) fail(Errc::BadShape, "field too small for the requested points");
  if (append_zero) pts.push_back(0);
  return pts;
}

void require_distinct(const std::vector<Gf>& pts) {
  auto sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(Errc::RepeatedEvaluationPoint, "evaluation points must be distinct");
}

void require_trailing_zero_only(const std::vector<Gf>& pts) {
  if (pts.empty() || pts.back() != 0) fail(Errc::BadShape, "the zero point must come last");
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    if (pts[i] == 0) fail(Errc::BadShape, "the zero point must come last");
}

void require_no_zero(const std::vector<Gf>& pts) {
  for (auto x : pts)
    if (x == 0) fail(Errc::BadShape, "points must be nonzero for this variant");
}

}  // namespace

ConstructionReport even_q_family(FieldPtr field, std::uint32_t k,
                                 std::optional<std::vector<Gf>> alpha,
                                 std::optional<Gf> eta, Variant variant) {
  const Field& f = *field;
  const std::uint32_t q = f.q();
  if (f.p() != 2) fail(Errc::OddCharacteristic, "this family needs even q");
  if (k < 3 || k > q / 2 - 1) fail(Errc::BadShape, "need 3 <= k <= q/2 - 1");
  const std::uint32_t half = q / 2;  // x^(q/2) squares to x in characteristic 2

  if (variant == Variant::Almost) {
    std::vector<Gf> pts =
        alpha ? *alpha : default_unit_points(f, 2 * std::size_t(k), /*append_zero=*/true);
    if (pts.size() != 2 * std::size_t(k) + 1)
      fail(Errc::BadShape, "almost variant needs n = 2k+1 points");
    require_distinct(pts);
    require_trailing_zero_only(pts);

    Gf inv_prod = 1;  // prod of alpha^{-1} over the nonzero points
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) inv_prod = f.mul(inv_prod, f.inv(pts[i]));
    const Gf forbidden = f.pow(inv_prod, half);

    Gf eta_v;
    if (eta) {
      eta_v = *eta;
      if (eta_v == 0 || eta_v == forbidden)
        fail(Errc::ExcludedEta, "eta would zero the last multiplier");
    } else {
      eta_v = 0;
      for (Gf cand = 1; cand < q; ++cand)
        if (cand != forbidden) {
          eta_v = cand;
          break;
        }
      if (eta_v == 0) fail(Errc::ExcludedEta, "no admissible eta");
    }

    std::vector<Gf> v(pts.size());
    for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
      Gf base = f.inv(pts[j]);
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (i == j) continue;
        base = f.mul(base, f.inv(f.sub(pts[j], pts[i])));
      }
      v[j] = f.pow(base, half);
    }
    v.back() = f.pow(f.add(inv_prod, f.mul(eta_v, eta_v)), half);

    auto p = TgrsParams::make(field, k, std::move(pts), std::move(v), eta_v);
    return finish(std::move(p), Family::Cda, Claim::AlmostSelfDual);
  }

  // self-dual variant: n = 2k over nonzero points, eta computed
  if (eta) fail(Errc::BadShape, "eta is determined by the points for the self-dual variant");
  std::vector<Gf> pts =
      alpha ? *alpha : default_unit_points(f, 2 * std::size_t(k), /*append_zero=*/false);
  if (pts.size() != 2 * std::size_t(k)) fail(Errc::BadShape, "self-dual variant needs n = 2k points");
  require_distinct(pts);
  require_no_zero(pts);

  Gf inv_prod = 1;
  for (auto x : pts) inv_prod = f.mul(inv_prod, f.inv(x));
  Gf eta_v = f.pow(inv_prod, half);

  std::vector<Gf> v(pts.size());
  for (std::size_t j = 0; j < pts.size(); ++j) {
    Gf base = f.inv(pts[j]);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i == j) continue;
      base = f.mul(base, f.inv(f.sub(pts[j], pts[i])));
    }
    v[j] = f.pow(base, half);
  }
  auto p = TgrsParams::make(field, k, std::move(pts), std::move(v), eta_v);
  return finish(std::move(p), Family::Cda1, Claim::SelfDual);
}

ConstructionReport odd_q_full_support(FieldPtr field, std::optional<Gf> a) {
  const Field& f = *field;
  const std::uint32_t q = f.q();
  if (f.p() == 2) fail(Errc::EvenCharacteristic, "this family needs odd q");
  if (q < 7) fail(Errc::BadShape, "need q >= 7 so that k = (q-1)/2 >= 3");

  auto admissible = [&](Gf cand) {
    if (cand == 0) return false;
    Gf t = f.sub(f.mul(cand, cand), 1);
    return t != 0 && f.quadratic_character(t) == 1;
  };

  Gf a_v;
  std::string note;
  if (a) {
    a_v = *a;
    if (!admissible(a_v)) fail(Errc::BadParameter, "a^2 - 1 must be a nonzero square");
  } else {
    a_v = 0;
    for (Gf cand = 2; cand < q; ++cand)
      if (admissible(cand)) {
        a_v = cand;
        break;
      }
    if (a_v == 0) fail(Errc::BadParameter, "no admissible a found");
    note = "a auto-selected by ascending scan";
  }
  Gf eta = *f.sqrt(f.sub(f.mul(a_v, a_v), 1));

  std::vector<Gf> pts;
  pts.reserve(q);
  for (Gf x = 1; x < q; ++x) pts.push_back(x);
  pts.push_back(0);
  std::vector<Gf> v(q, 1);
  v.back() = a_v;

  auto p = TgrsParams::make(field, (q - 1) / 2, std::move(pts), std::move(v), eta);
  return finish(std::move(p), Family::Q1, Claim::AlmostSelfDual, std::move(note));
}

std::variant<ConstructionReport, NonExistence> odd_q_units(FieldPtr field) {
  const Field& f = *field;
  const std::uint32_t q = f.q();
  if (f.p() == 2) fail(Errc::EvenCharacteristic, "this family needs odd q");
  if (q < 7) fail(Errc::BadShape, "need q >= 7 so that k = (q-1)/2 >= 3");

  if (q % 4 == 3)
    return NonExistence{"-1 is a non-square (q = 3 mod 4): eta^2 = -1 has no solution"};

  Gf eta = *f.sqrt(f.neg(Gf(1)));
  std::vector<Gf> pts;
  pts.reserve(q - 1);
  for (Gf x = 1; x < q; ++x) pts.push_back(x);
  std::vector<Gf> v(q - 1, 1);

  auto p = TgrsParams::make(field, (q - 1) / 2, std::move(pts), std::move(v), eta);
  return finish(std::move(p), Family::Q2, Claim::SelfDual);
}

ConstructionReport nonsquare_support(FieldPtr field, std::optional<Gf> a, Variant variant) {
  const Field& f = *field;
  const std::uint32_t q = f.q();
  if (f.p() == 2) fail(Errc::BadModulus, "this family needs odd q");
  if ((q - 1) % 4 != 0) fail(Errc::BadModulus, "need q = 1 mod 4 so k = (q-1)/4 is integral");
  const std::uint32_t k = (q - 1) / 4;
  if (k < 3) fail(Errc::BadShape, "need q >= 13 so that k = (q-1)/4 >= 3");

  std::vector<Gf> pts;  // non-squares, ascending
  for (Gf x = 1; x < q; ++x)
    if (f.quadratic_character(x) == -1) pts.push_back(x);

  if (variant == Variant::Almost) {
    auto admissible = [&](Gf cand) {
      if (cand == 0) return false;
      Gf t = f.add(f.neg(f.mul(f.of_int(2), f.mul(cand, cand))), 1);  // -2a^2 + 1
      return t != 0 && f.quadratic_character(t) == 1;
    };
    Gf a_v;
    std::string note;
    if (a) {
      a_v = *a;
      if (!admissible(a_v)) fail(Errc::BadParameter, "-2a^2 + 1 must be a nonzero square");
    } else {
      a_v = 0;
      for (Gf cand = 1; cand < q; ++cand)
        if (admissible(cand)) {
          a_v = cand;
          break;
        }
      if (a_v == 0) fail(Errc::BadParameter, "no admissible a found");
      note = "a auto-selected by ascending scan";
    }
    Gf eta = *f.sqrt(f.add(f.neg(f.mul(f.of_int(2), f.mul(a_v, a_v))), 1));
    pts.push_back(0);
    std::vector<Gf> v(pts.size(), 1);
    v.back() = a_v;
    auto p = TgrsParams::make(field, k, std::move(pts), std::move(v), eta);
    return finish(std::move(p), Family::Q12, Claim::AlmostSelfDual, std::move(note));
  }

  if (a) fail(Errc::BadParameter, "the self-dual variant takes no free parameter");
  std::vector<Gf> v(pts.size(), 1);
  auto p = TgrsParams::make(field, k, std::move(pts), std::move(v), 1);
  return finish(std::move(p), Family::Q13, Claim::SelfDual,
                "eta fixed to 1; the MDS/NMDS split is evaluated at that value");
}

ConstructionReport subfield_family(FieldPtr field, std::uint32_t k,
                                   std::optional<std::vector<Gf>> alpha,
                                   std::optional<Gf> eta, Variant variant) {
  const Field& f = *field;
  if (f.p() == 2) fail(Errc::BadShape, "this family needs odd characteristic");
  if (f.m() % 2 != 0) fail(Errc::BadShape, "the field must be a quadratic extension p^(2m)");
  const std::uint32_t sub_deg = f.m() / 2;
  auto sub = f.subfield_elements(sub_deg);
  const std::size_t s = sub.size();  // p^m
  if (k < 3 || 2 * std::size_t(k) > s - 1)
    fail(Errc::BadShape, "need 3 <= k <= (p^m - 1)/2");

  std::vector<bool> in_sub(f.q(), false);
  for (auto x : sub) in_sub[x] = true;
  auto require_subfield = [&](std::span<const Gf> pts) {
    for (auto x : pts)
      if (x >= f.q() || !in_sub[x]) fail(Errc::PointNotInSubfield, "point outside the subfield");
  };
  auto default_points = [&](std::size_t count, bool append_zero) {
    std::vector<Gf> pts;
    for (auto x : sub)
      if (x != 0 && pts.size() < count) pts.push_back(x);
    if (pts.size() < count) fail(Errc::BadShape, "subfield too small for the requested points");
    if (append_zero) pts.push_back(0);
    return pts;
  };
  auto multiplier = [&](const std::vector<Gf>& pts, std::size_t j, std::size_t limit) {
    // square root of alpha_j^{-1} prod_{i != j, i < limit} (alpha_j - alpha_i)^{-1};
    // the argument lies in the subfield, hence is a square in the big field
    Gf base = f.inv(pts[j]);
    for (std::size_t i = 0; i < limit; ++i) {
      if (i == j) continue;
      base = f.mul(base, f.inv(f.sub(pts[j], pts[i])));
    }
    auto root = f.sqrt(base);
    if (!root) throw std::logic_error("subfield element has no square root");
    return *root;
  };

  if (variant == Variant::Almost) {
    std::vector<Gf> pts = alpha ? *alpha : default_points(2 * std::size_t(k), true);
    if (pts.size() != 2 * std::size_t(k) + 1)
      fail(Errc::BadShape, "almost variant needs n = 2k+1 points");
    require_distinct(pts);
    require_trailing_zero_only(pts);
    require_subfield(pts);

    Gf inv_prod = 1;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) inv_prod = f.mul(inv_prod, f.inv(pts[i]));

    auto excluded = [&](Gf cand) { return f.mul(cand, cand) == inv_prod; };
    Gf eta_v = 0;
    if (eta) {
      eta_v = *eta;
      if (eta_v == 0 || !in_sub[eta_v]) fail(Errc::PointNotInSubfield, "eta must be a subfield unit");
      if (excluded(eta_v)) fail(Errc::ExcludedEta, "eta^2 equals the inverse point product");
    } else {
      for (auto cand : sub)
        if (cand != 0 && !excluded(cand)) {
          eta_v = cand;
          break;
        }
      if (eta_v == 0) fail(Errc::ExcludedEta, "no admissible eta in the subfield");
    }

    std::vector<Gf> v(pts.size());
    for (std::size_t j = 0; j + 1 < pts.size(); ++j) v[j] = multiplier(pts, j, pts.size() - 1);
    Gf last = f.add(f.neg(inv_prod), f.mul(eta_v, eta_v));
    auto root = f.sqrt(last);
    if (!root) throw std::logic_error("subfield element has no square root");
    v.back() = *root;

    auto p = TgrsParams::make(field, k, std::move(pts), std::move(v), eta_v);
    return finish(std::move(p), Family::Pcd1, Claim::AlmostSelfDual);
  }

  if (eta) fail(Errc::BadShape, "eta is determined by the points for the self-dual variant");
  std::vector<Gf> pts = alpha ? *alpha : default_points(2 * std::size_t(k), false);
  if (pts.size() != 2 * std::size_t(k)) fail(Errc::BadShape, "self-dual variant needs n = 2k points");
  require_distinct(pts);
  require_no_zero(pts);
  require_subfield(pts);

  Gf inv_prod = 1;
  for (auto x : pts) inv_prod = f.mul(inv_prod, f.inv(x));
  auto eta_root = f.sqrt(inv_prod);
  if (!eta_root) throw std::logic_error("subfield element has no square root");

  std::vector<Gf> v(pts.size());
  for (std::size_t j = 0; j < pts.size(); ++j) v[j] = multiplier(pts, j, pts.size());
  auto p = TgrsParams::make(field, k, std::move(pts), std::move(v), *eta_root);
  return finish(std::move(p), Family::Pcd2, Claim::SelfDual);
}

ConstructionReport lcd_scale(const TgrsParams& p, Gf beta) {
  const Field& f = *p.field;
  if (f.q() <= 3) fail(Errc::BadShape, "need q > 3");
  if (beta == 0 || beta == 1 || beta == f.neg(Gf(1)))
    fail(Errc::BadBeta, "beta must avoid {0, 1, -1}");
  auto zero_at = p.zero_index();
  if (!zero_at || *zero_at != p.n() - 1)
    fail(Errc::ZeroNotLast, "the zero point must be the last coordinate");
  auto status = orthogonality_status(LinearCode::from_generator(generator_matrix(p)));
  if (!status.self_orthogonal) fail(Errc::NotSelfOrthogonal, "input code is not self-orthogonal");

  // With the zero point last, the last k generator columns are independent, so
  // scaling the first n-k coordinates by beta lands outside every hull.
  const std::size_t n = p.n();
  std::vector<Gf> w(p.v);
  for (std::size_t j = 0; j + p.k < n; ++j) w[j] = f.mul(w[j], beta);

  auto scaled = TgrsParams::make(p.field, p.k, p.alpha, std::move(w), p.eta);
  return finish(std::move(scaled), Family::LcdScale, Claim::Lcd);
}

LinearCode lcd_from_self_orthogonal(const LinearCode& c, Gf beta) {
  const Field& f = *c.field();
  if (f.q() <= 3) fail(Errc::BadShape, "need q > 3");
  if (beta == 0 || beta == 1 || beta == f.neg(Gf(1)))
    fail(Errc::BadBeta, "beta must avoid {0, 1, -1}");
  if (!orthogonality_status(c).self_orthogonal)
    fail(Errc::NotSelfOrthogonal, "input code is not self-orthogonal");

  // pivot columns of the reduced generator form an information set
  auto pivots = rref(c.generator()).pivots;
  std::vector<bool> info(c.n(), false);
  for (auto col : pivots) info[col] = true;

  PermScale t = PermScale::identity(c.n());
  for (std::size_t j = 0; j < c.n(); ++j)
    if (!info[j]) t.scale[j] = beta;
  LinearCode out = apply_perm_scale(c, t);
  if (!orthogonality_status(out).lcd)
    throw std::logic_error("scaled code failed the LCD check");
  return out;
}

}  // namespace tgrs
