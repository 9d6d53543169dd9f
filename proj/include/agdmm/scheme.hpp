#pragma once

#include <optional>
#include <string_view>

namespace agdmm {

/// Polynomial / MatDot codes over the rational function field (baseline)
/// or over an algebraic function field (AG).
enum class Scheme { RationalPoly, PolyAG, RationalMatdot, MatdotAG };

inline constexpr bool is_polynomial(Scheme s) noexcept { return s == Scheme::RationalPoly || s == Scheme::PolyAG; }
inline constexpr bool is_ag(Scheme s) noexcept { return s == Scheme::PolyAG || s == Scheme::MatdotAG; }

inline std::string_view to_string(Scheme s) noexcept {
  switch (s) {
    case Scheme::RationalPoly: return "RationalPoly";
    case Scheme::PolyAG: return "PolyAG";
    case Scheme::RationalMatdot: return "RationalMatdot";
    case Scheme::MatdotAG: return "MatdotAG";
  }
  return "?";
}

inline std::optional<Scheme> parse_scheme(std::string_view name) noexcept {
  for (Scheme s : {Scheme::RationalPoly, Scheme::PolyAG, Scheme::RationalMatdot, Scheme::MatdotAG})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

}  // namespace agdmm
