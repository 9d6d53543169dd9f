#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agdmm/finite_field.hpp"
#include "agdmm/kernels.hpp"
#include "agdmm/scheme.hpp"

namespace agdmm {

enum class CurveKind { Rational, Kummer, Trace };

std::string_view to_string(CurveKind kind) noexcept;

/// Defining data of one of the supported function fields over GF(q):
///
///   Rational  GF(q)(x)
///   Kummer    y^m       = prod(x - a_i) / prod(x - b_j)
///   Trace     Tr_{q/p}(y) = prod(x - a_i) / prod(x - b_j),  q = p^u
///
/// The right-hand side is called u(x) below. Numerator and denominator
/// degrees must differ by exactly one.
struct CurveSpec {
  CurveKind kind = CurveKind::Rational;
  Field field;
  std::uint32_t m_or_u = 0;  // Kummer: m, Trace: u, Rational: unused
  std::vector<Element> num_roots;
  std::vector<Element> den_roots;

  static CurveSpec rational(Field field) { return CurveSpec{CurveKind::Rational, std::move(field), 0, {}, {}}; }
  static CurveSpec kummer(Field field, std::uint32_t m, std::vector<Element> num, std::vector<Element> den) {
    return CurveSpec{CurveKind::Kummer, std::move(field), m, std::move(num), std::move(den)};
  }
  static CurveSpec trace(Field field, std::uint32_t u, std::vector<Element> num, std::vector<Element> den) {
    return CurveSpec{CurveKind::Trace, std::move(field), u, std::move(num), std::move(den)};
  }

  /// [F : GF(q)(x)]: 1, m, or p^(u-1).
  std::uint64_t extension_degree() const noexcept;
  /// u(x0), or nullopt at a denominator root.
  std::optional<Element> rhs(Element x0) const;
};

enum class PlaceClass { AffineRegular, DenominatorRamified, Infinite };

std::string_view to_string(PlaceClass c) noexcept;

/// A rational place. Affine places carry (x, y); rational-field places have
/// no y. Denominator places carry the root b_j as x. Infinite places carry a
/// y only when several of them exist (trace curves with u(x) -> 0 at
/// infinity, where they are told apart by the solution of Tr(y) = 0).
struct Place {
  PlaceClass cls = PlaceClass::AffineRegular;
  std::optional<Element> x;
  std::optional<Element> y;
  std::size_t id = 0;

  friend bool operator==(const Place&, const Place&) = default;
};

struct PoleData {
  bool has_y = false;
  std::vector<Element> y_poles_affine;  // x-coordinates of the denominator places
  bool y_pole_at_infinity = false;
  std::uint64_t y_pole_degree = 0;
  std::uint64_t x_pole_degree = 1;
};

struct FriendlyMode {
  enum class Kind { MN, M } kind;
  std::uint32_t m;

  static FriendlyMode mn(std::uint32_t m) { return {Kind::MN, m}; }
  static FriendlyMode matdot(std::uint32_t m) { return {Kind::M, m}; }
};

struct FriendlyReport {
  struct Condition {
    std::string name;
    bool pass;
  };
  std::vector<Condition> conditions;

  bool pass() const noexcept {
    for (const auto& c : conditions)
      if (!c.pass) return false;
    return !conditions.empty();
  }
};

/// Throws DuplicateRoots, GcdViolation, UnsupportedDegreeGap,
/// FieldNotMatchingU or InvalidArgument.
const CurveSpec& validate_curve(const CurveSpec& spec);

std::uint64_t genus(const CurveSpec& spec);

/// All rational places sorted by (class, x code, y code); ids follow that
/// order. The serial form solves every fibre with nth_roots /
/// trace_preimages; the parallel form buckets the power (or trace) map once.
std::vector<Place> enumerate_places(const CurveSpec& spec, kernels::Exec exec = kernels::Exec::Parallel);

/// Affine places where every encoding function is finite.
/// Throws SchemeCurveMismatch for an AG scheme on GF(q)(x) or vice versa.
std::vector<Place> usable_places(const CurveSpec& spec, Scheme scheme);
std::vector<Place> usable_places(const std::vector<Place>& all);

PoleData pole_data(const CurveSpec& spec);

FriendlyReport verify_friendly(const CurveSpec& spec, FriendlyMode mode);

/// |q + 1 - N| <= 2 g sqrt(q), compared as (q + 1 - N)^2 <= 4 g^2 q.
bool hasse_weil_check(const CurveSpec& spec);
bool hasse_weil_holds(std::uint64_t q, std::uint64_t num_places, std::uint64_t genus);

/// x^x_exp * y^y_exp at an affine place. Throws PlaceNotEvaluable.
Element evaluate_monomial(const CurveSpec& spec, const Place& place, std::uint32_t x_exp, std::uint32_t y_exp);

/// True when an affine place satisfies the defining equation.
bool on_curve(const CurveSpec& spec, const Place& place);

/// The families that carry friendly fields. Every builder validates.
namespace constructions {

/// y^m = prod_{i<=l}(x - a_i) / prod_{i<l}(x - b_i): (m, n)-friendly.
CurveSpec kummer_poly(const Field& field, std::uint32_t m, std::vector<Element> a, std::vector<Element> b);
/// Tr(y) = same right-hand side with q = p^u: (p^(u-1), n)-friendly.
CurveSpec trace_poly(const Field& field, std::vector<Element> a, std::vector<Element> b);
/// y^m = (x - a1)(x - a2)/(x - a3): m-friendly.
CurveSpec kummer_matdot_pole(const Field& field, std::uint32_t m, Element a1, Element a2, Element a3);
/// y^m = (x - a3)/((x - a1)(x - a2)): m-friendly.
CurveSpec kummer_matdot_zero(const Field& field, std::uint32_t m, Element a1, Element a2, Element a3);
CurveSpec trace_matdot_pole(const Field& field, Element a1, Element a2, Element a3);
CurveSpec trace_matdot_zero(const Field& field, Element a1, Element a2, Element a3);

}  // namespace constructions

}  // namespace agdmm
