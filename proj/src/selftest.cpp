#include "agdmm/selftest.hpp"

#include <sstream>

#include "agdmm/dmm_codes.hpp"
#include "agdmm/presets.hpp"
#include "agdmm/simulator.hpp"

namespace agdmm::selftest {

namespace {

template <typename T>
Check expect_eq(std::string name, T got, T want) {
  std::ostringstream detail;
  detail << "got " << got << ", expected " << want;
  return Check{std::move(name), got == want, detail.str()};
}

void curve_checks(std::vector<Check>& out, const std::string& label, const CurveSpec& curve, std::uint64_t want_genus,
                  std::size_t want_places, FriendlyMode mode, Fault fault) {
  std::uint64_t g = genus(curve);
  if (fault == Fault::Genus) g += 1;
  out.push_back(expect_eq(label + " genus", g, want_genus));
  const auto places = enumerate_places(curve);
  out.push_back(expect_eq(label + " rational places", places.size(), want_places));
  out.push_back(Check{label + " friendly", verify_friendly(curve, mode).pass(), ""});
  out.push_back(Check{label + " Hasse-Weil", hasse_weil_holds(curve.field.order(), places.size(), g), ""});
}

void simulate(std::vector<Check>& out, Scheme scheme, std::uint32_t m, std::uint32_t n, const CurveSpec& curve,
              Dims dims) {
  const std::string name = "decode " + std::string(to_string(scheme));
  try {
    SchemeParams params{scheme, m, n, curve, dims};
    const std::size_t workers = usable_places(curve, scheme).size();
    SimConfig cfg{params, workers, DelayModel::shuffle(11), {}, 2024};
    const SimReport rep = run_simulation(cfg);
    std::ostringstream detail;
    detail << "R=" << rep.threshold << " N=" << rep.workers << " worker muls=" << rep.op_counts.worker_max;
    const bool counts_ok = rep.op_counts.worker_max == worker_mul_count(params);
    out.push_back(Check{name, rep.decode_success && counts_ok, detail.str()});
  } catch (const std::exception& e) {
    out.push_back(Check{name, false, e.what()});
  }
}

}  // namespace

std::vector<Check> run(Fault fault) {
  std::vector<Check> out;
  const CurveSpec ex1 = presets::curve("example1");
  const CurveSpec ex2 = presets::curve("example2");
  const CurveSpec ex5 = presets::curve("matdot");
  const CurveSpec rational = CurveSpec::rational(ex1.field);

  curve_checks(out, "Example 1", ex1, 7, 52, FriendlyMode::mn(8), fault);
  curve_checks(out, "Example 2", ex2, 8, 56, FriendlyMode::mn(9), fault);
  curve_checks(out, "MatDot example", ex5, 2, 46, FriendlyMode::matdot(3), fault);

  const auto p1 = pole_data(ex1);
  out.push_back(expect_eq("Example 1 deg (y)_inf", p1.y_pole_degree, std::uint64_t{2}));
  out.push_back(expect_eq("Example 1 deg (x)_inf", p1.x_pole_degree, std::uint64_t{8}));
  out.push_back(expect_eq("MatDot example usable places", usable_places(ex5, Scheme::MatdotAG).size(), std::size_t{43}));

  const std::uint64_t bump = fault == Fault::Threshold ? 1 : 0;
  auto threshold = [&](Scheme s, std::uint32_t m, std::uint32_t n, const CurveSpec& c, Dims d) {
    return recovery_threshold(SchemeParams{s, m, n, c, d}) + bump;
  };
  out.push_back(expect_eq("threshold PolyAG (8,5) on Example 1",
                          threshold(Scheme::PolyAG, 8, 5, ex1, {80, 60, 100}), std::uint64_t{47}));
  out.push_back(expect_eq("threshold RationalPoly (4,6) over GF(25)",
                          threshold(Scheme::RationalPoly, 4, 6, rational, {80, 60, 96}), std::uint64_t{24}));
  out.push_back(expect_eq("threshold MatdotAG m=3 on MatDot example",
                          threshold(Scheme::MatdotAG, 3, 1, ex5, {80, 60, 100}), std::uint64_t{9}));
  out.push_back(expect_eq("threshold RationalMatdot m=3 over GF(25)",
                          threshold(Scheme::RationalMatdot, 3, 1, rational, {80, 60, 100}), std::uint64_t{5}));

  simulate(out, Scheme::PolyAG, 8, 5, ex1, {80, 60, 100});
  simulate(out, Scheme::RationalPoly, 4, 6, rational, {80, 60, 96});
  simulate(out, Scheme::MatdotAG, 3, 1, ex5, {80, 60, 100});
  simulate(out, Scheme::RationalMatdot, 3, 1, rational, {80, 60, 100});
  return out;
}

}  // namespace agdmm::selftest
