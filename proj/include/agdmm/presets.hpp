#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "agdmm/function_field.hpp"

namespace agdmm::presets {

// Curve files shipped with the library, in the CurveSpec JSON format.
//
//   example1  y^8 = (x^2 - 3)/(x - 1)                     over GF(25)
//   example2  y^9 + y^3 + y = (x + t)(x - t)/(x - 1)      over GF(27), t primitive
//   matdot    y^3 = x/(x^2 - 3)                           over GF(25)
//
// GF(25) uses x^2 + 2 and GF(27) uses x^3 + 2x + 1, the default moduli; t is
// the class of x, which is primitive for that modulus.

std::vector<std::string_view> names();
/// Embedded JSON text; throws ConfigInvalid for an unknown name.
std::string_view curve_json(std::string_view name);
CurveSpec curve(std::string_view name);

}  // namespace agdmm::presets
