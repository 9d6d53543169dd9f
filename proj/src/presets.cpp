#include "agdmm/presets.hpp"

#include "agdmm/serialization.hpp"

namespace agdmm::presets {

namespace {

// GF(25) = GF(5)[t]/(t^2 + 2): sqrt(3) = +-t, codes 5 and 20.
constexpr std::string_view kExample1 = R"({
  "kind": "kummer",
  "field": {"p": 5, "e": 2, "modulus": [2, 0, 1]},
  "m_or_u": 8,
  "num_roots": [5, 20],
  "den_roots": [1]
})";

// GF(27) = GF(3)[t]/(t^3 + 2t + 1): theta = t (code 3), -theta = 2t (code 6).
constexpr std::string_view kExample2 = R"({
  "kind": "trace",
  "field": {"p": 3, "e": 3, "modulus": [1, 2, 0, 1]},
  "m_or_u": 3,
  "num_roots": [6, 3],
  "den_roots": [1]
})";

constexpr std::string_view kMatdot = R"({
  "kind": "kummer",
  "field": {"p": 5, "e": 2, "modulus": [2, 0, 1]},
  "m_or_u": 3,
  "num_roots": [0],
  "den_roots": [5, 20]
})";

constexpr std::string_view kRational25 = R"({
  "kind": "rational",
  "field": {"p": 5, "e": 2, "modulus": [2, 0, 1]}
})";

struct Entry {
  std::string_view name;
  std::string_view json;
};

constexpr Entry kEntries[] = {
    {"example1", kExample1},
    {"example2", kExample2},
    {"matdot", kMatdot},
    {"rational25", kRational25},
};

}  // namespace

std::vector<std::string_view> names() {
  std::vector<std::string_view> out;
  for (const auto& e : kEntries) out.push_back(e.name);
  return out;
}

std::string_view curve_json(std::string_view name) {
  for (const auto& e : kEntries)
    if (e.name == name) return e.json;
  throw Error(ErrorCode::ConfigInvalid, "unknown curve preset \"" + std::string(name) + "\"");
}

CurveSpec curve(std::string_view name) {
  return io::curve_from_json(io::parse(std::string(curve_json(name))));
}

}  // namespace agdmm::presets
