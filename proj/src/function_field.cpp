#include "agdmm/function_field.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace agdmm {

std::string_view to_string(CurveKind kind) noexcept {
  switch (kind) {
    case CurveKind::Rational: return "rational";
    case CurveKind::Kummer: return "kummer";
    case CurveKind::Trace: return "trace";
  }
  return "?";
}

std::string_view to_string(PlaceClass c) noexcept {
  switch (c) {
    case PlaceClass::AffineRegular: return "affine";
    case PlaceClass::DenominatorRamified: return "denominator";
    case PlaceClass::Infinite: return "infinite";
  }
  return "?";
}

std::uint64_t CurveSpec::extension_degree() const noexcept {
  switch (kind) {
    case CurveKind::Rational: return 1;
    case CurveKind::Kummer: return m_or_u;
    case CurveKind::Trace: {
      std::uint64_t d = 1;
      for (std::uint32_t i = 1; i < m_or_u; ++i) d *= field.characteristic();
      return d;
    }
  }
  return 1;
}

std::optional<Element> CurveSpec::rhs(Element x0) const {
  Element num = field.one();
  for (Element a : num_roots) num = field.mul(num, field.sub(x0, a));
  Element den = field.one();
  for (Element b : den_roots) den = field.mul(den, field.sub(x0, b));
  if (den == field.zero()) return std::nullopt;
  return field.div(num, den);
}

namespace {

std::int64_t degree_gap(const CurveSpec& spec) {
  return static_cast<std::int64_t>(spec.num_roots.size()) - static_cast<std::int64_t>(spec.den_roots.size());
}

std::uint64_t abs_u(std::int64_t v) { return static_cast<std::uint64_t>(v < 0 ? -v : v); }

bool has_y(const CurveSpec& spec) { return spec.kind != CurveKind::Rational; }

// Number of simple poles of u(x) on the projective line.
std::uint64_t rhs_pole_count(const CurveSpec& spec) {
  return spec.den_roots.size() + (degree_gap(spec) > 0 ? 1 : 0);
}

// Fibre of the defining equation over a finite x0 with value c = u(x0).
std::vector<Element> fibre_exhaustive(const CurveSpec& spec, Element c) {
  if (spec.kind == CurveKind::Kummer) return spec.field.nth_roots(c, spec.m_or_u);
  return spec.field.trace_preimages(spec.m_or_u, c);
}

void sort_and_number(std::vector<Place>& places) {
  auto key = [](const Place& p) {
    return std::tuple(static_cast<int>(p.cls), p.x ? std::int64_t(p.x->code) : -1,
                      p.y ? std::int64_t(p.y->code) : -1);
  };
  std::sort(places.begin(), places.end(), [&](const Place& a, const Place& b) { return key(a) < key(b); });
  for (std::size_t i = 0; i < places.size(); ++i) places[i].id = i;
}

}  // namespace

const CurveSpec& validate_curve(const CurveSpec& spec) {
  const Field& f = spec.field;
  if (spec.kind == CurveKind::Rational) {
    if (!spec.num_roots.empty() || !spec.den_roots.empty())
      throw Error(ErrorCode::InvalidArgument, "the rational function field takes no roots");
    return spec;
  }

  std::set<std::uint32_t> seen;
  for (const auto* roots : {&spec.num_roots, &spec.den_roots})
    for (Element r : *roots) {
      if (!f.contains(r)) throw Error(ErrorCode::InvalidArgument, "root code " + std::to_string(r.code) + " outside the field");
      if (!seen.insert(r.code).second)
        throw Error(ErrorCode::DuplicateRoots, "root code " + std::to_string(r.code) + " appears more than once");
    }

  const std::uint64_t q = f.order();
  const std::uint64_t gap = abs_u(degree_gap(spec));
  if (spec.kind == CurveKind::Kummer) {
    const std::uint64_t m = spec.m_or_u;
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "Kummer degree m must be >= 1");
    if (std::gcd(m, q) != 1)
      throw Error(ErrorCode::GcdViolation, "gcd(m, q) = gcd(" + std::to_string(m) + ", " + std::to_string(q) + ") != 1");
    if (std::gcd(m, gap) != 1)
      throw Error(ErrorCode::GcdViolation, "gcd(m, deg num - deg den) != 1");
  } else {
    if (spec.m_or_u < 1) throw Error(ErrorCode::InvalidArgument, "trace height u must be >= 1");
    if (spec.m_or_u != f.degree())
      throw Error(ErrorCode::FieldNotMatchingU, "trace curves need q = p^u with u = " + std::to_string(f.degree()));
    if (std::gcd(q, gap) != 1) throw Error(ErrorCode::GcdViolation, "gcd(q, deg num - deg den) != 1");
  }
  if (gap != 1)
    throw Error(ErrorCode::UnsupportedDegreeGap,
                "numerator and denominator degrees differ by " + std::to_string(gap) + ", expected 1");
  return spec;
}

std::uint64_t genus(const CurveSpec& spec) {
  validate_curve(spec);
  const std::uint64_t m = spec.extension_degree();
  switch (spec.kind) {
    case CurveKind::Rational: return 0;
    case CurveKind::Kummer: {
      // Tame cover, d = 1: every root of u and the infinite place are
      // totally ramified.
      const std::uint64_t roots = spec.num_roots.size() + spec.den_roots.size();
      return (m - 1) * (roots - 1) / 2;
    }
    case CurveKind::Trace: {
      // Only the simple poles of u ramify, each with different exponent
      // 2(m - 1).
      const std::uint64_t poles = rhs_pole_count(spec);
      return poles == 0 ? 0 : (poles - 1) * (m - 1);
    }
  }
  return 0;
}

std::vector<Place> enumerate_places(const CurveSpec& spec, kernels::Exec exec) {
  validate_curve(spec);
  const Field& f = spec.field;
  const std::uint32_t q = f.order();
  std::vector<Place> places;

  if (spec.kind == CurveKind::Rational) {
    places.reserve(q + 1);
    for (Element x : f.elements()) places.push_back(Place{PlaceClass::AffineRegular, x, std::nullopt, 0});
    places.push_back(Place{PlaceClass::Infinite, std::nullopt, std::nullopt, 0});
    sort_and_number(places);
    return places;
  }

  // Affine fibres, one vector per x0 so the parallel loop needs no locking.
  std::vector<std::vector<Element>> fibres(q);
  if (exec == kernels::Exec::Serial) {
    for (std::uint32_t x = 0; x < q; ++x)
      if (auto c = spec.rhs(Element{x})) fibres[x] = fibre_exhaustive(spec, *c);
  } else {
    // Bucket y by the value of y^m (or Tr y) once.
    std::vector<std::vector<Element>> preimage(q);
    for (std::uint32_t y = 0; y < q; ++y) {
      const Element v = spec.kind == CurveKind::Kummer ? f.pow(Element{y}, spec.m_or_u) : f.trace(Element{y});
      preimage[v.code].push_back(Element{y});
    }
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t x = 0; x < static_cast<std::ptrdiff_t>(q); ++x)
      if (auto c = spec.rhs(Element{static_cast<std::uint32_t>(x)})) fibres[x] = preimage[c->code];
  }
  for (std::uint32_t x = 0; x < q; ++x)
    for (Element y : fibres[x]) places.push_back(Place{PlaceClass::AffineRegular, Element{x}, y, 0});

  for (Element b : spec.den_roots) places.push_back(Place{PlaceClass::DenominatorRamified, b, std::nullopt, 0});

  if (spec.kind == CurveKind::Trace && degree_gap(spec) < 0) {
    // u vanishes at infinity, the place is unramified and splits along
    // the solutions of Tr(y) = 0.
    for (Element y : f.trace_preimages(spec.m_or_u, f.zero()))
      places.push_back(Place{PlaceClass::Infinite, std::nullopt, y, 0});
  } else {
    places.push_back(Place{PlaceClass::Infinite, std::nullopt, std::nullopt, 0});
  }

  sort_and_number(places);
  return places;
}

std::vector<Place> usable_places(const std::vector<Place>& all) {
  std::vector<Place> out;
  for (const Place& p : all)
    if (p.cls == PlaceClass::AffineRegular) out.push_back(p);
  return out;
}

std::vector<Place> usable_places(const CurveSpec& spec, Scheme scheme) {
  if (is_ag(scheme) == (spec.kind == CurveKind::Rational))
    throw Error(ErrorCode::SchemeCurveMismatch,
                std::string(to_string(scheme)) + " cannot run on a " + std::string(to_string(spec.kind)) + " curve");
  return usable_places(enumerate_places(spec));
}

PoleData pole_data(const CurveSpec& spec) {
  validate_curve(spec);
  PoleData d;
  d.x_pole_degree = spec.extension_degree();
  if (!has_y(spec)) return d;
  d.has_y = true;
  d.y_poles_affine = spec.den_roots;
  std::sort(d.y_poles_affine.begin(), d.y_poles_affine.end());
  d.y_pole_at_infinity = degree_gap(spec) > 0;
  d.y_pole_degree = spec.den_roots.size() + (d.y_pole_at_infinity ? 1 : 0);
  return d;
}

FriendlyReport verify_friendly(const CurveSpec& spec, FriendlyMode mode) {
  const std::uint64_t g = genus(spec);
  const PoleData poles = pole_data(spec);
  const std::uint64_t m = mode.m;
  FriendlyReport report;
  auto add = [&](std::string name, bool pass) { report.conditions.push_back({std::move(name), pass}); };

  add("y defined", poles.has_y);
  if (mode.kind == FriendlyMode::Kind::MN) {
    add("m >= 2", m >= 2);
    const bool divides = m >= 2 && g % (m - 1) == 0;
    add("(m-1) | g", divides);
    add("deg (y)_inf = g/(m-1) + 1", divides && poles.has_y && poles.y_pole_degree == g / (m - 1) + 1);
    add("deg (x)_inf = m", poles.x_pole_degree == m);
  } else {
    add("g = m - 1", m >= 1 && g == m - 1);
    add("deg (y)_inf = 2", poles.has_y && poles.y_pole_degree == 2);
  }
  return report;
}

bool hasse_weil_holds(std::uint64_t q, std::uint64_t num_places, std::uint64_t genus) {
  __extension__ using u128 = unsigned __int128;
  const std::int64_t diff = static_cast<std::int64_t>(q + 1) - static_cast<std::int64_t>(num_places);
  const u128 lhs = static_cast<u128>(diff < 0 ? -diff : diff) * static_cast<u128>(diff < 0 ? -diff : diff);
  const u128 rhs = static_cast<u128>(4) * genus * genus * q;
  return lhs <= rhs;
}

bool hasse_weil_check(const CurveSpec& spec) {
  return hasse_weil_holds(spec.field.order(), enumerate_places(spec).size(), genus(spec));
}

Element evaluate_monomial(const CurveSpec& spec, const Place& place, std::uint32_t x_exp, std::uint32_t y_exp) {
  const Field& f = spec.field;
  if (place.cls != PlaceClass::AffineRegular || !place.x)
    throw Error(ErrorCode::PlaceNotEvaluable, "place " + std::to_string(place.id) + " is not affine");
  if (y_exp > 0 && !place.y)
    throw Error(ErrorCode::PlaceNotEvaluable, "place " + std::to_string(place.id) + " has no y coordinate");
  Element v = f.pow(*place.x, x_exp);
  if (y_exp > 0) v = f.mul(v, f.pow(*place.y, y_exp));
  return v;
}

bool on_curve(const CurveSpec& spec, const Place& place) {
  if (place.cls != PlaceClass::AffineRegular || !place.x) return false;
  if (spec.kind == CurveKind::Rational) return true;
  const auto c = spec.rhs(*place.x);
  if (!c || !place.y) return false;
  const Field& f = spec.field;
  const Element lhs = spec.kind == CurveKind::Kummer ? f.pow(*place.y, spec.m_or_u) : f.trace(*place.y);
  return lhs == *c;
}

namespace constructions {

namespace {

CurveSpec checked(CurveSpec spec) {
  validate_curve(spec);
  return spec;
}

}  // namespace

CurveSpec kummer_poly(const Field& field, std::uint32_t m, std::vector<Element> a, std::vector<Element> b) {
  if (a.size() != b.size() + 1) throw Error(ErrorCode::InvalidArgument, "need l numerator and l-1 denominator roots");
  return checked(CurveSpec::kummer(field, m, std::move(a), std::move(b)));
}

CurveSpec trace_poly(const Field& field, std::vector<Element> a, std::vector<Element> b) {
  if (a.size() != b.size() + 1) throw Error(ErrorCode::InvalidArgument, "need l numerator and l-1 denominator roots");
  return checked(CurveSpec::trace(field, field.degree(), std::move(a), std::move(b)));
}

CurveSpec kummer_matdot_pole(const Field& field, std::uint32_t m, Element a1, Element a2, Element a3) {
  return checked(CurveSpec::kummer(field, m, {a1, a2}, {a3}));
}

CurveSpec kummer_matdot_zero(const Field& field, std::uint32_t m, Element a1, Element a2, Element a3) {
  return checked(CurveSpec::kummer(field, m, {a3}, {a1, a2}));
}

CurveSpec trace_matdot_pole(const Field& field, Element a1, Element a2, Element a3) {
  return checked(CurveSpec::trace(field, field.degree(), {a1, a2}, {a3}));
}

CurveSpec trace_matdot_zero(const Field& field, Element a1, Element a2, Element a3) {
  return checked(CurveSpec::trace(field, field.degree(), {a3}, {a1, a2}));
}

}  // namespace constructions

}  // namespace agdmm
