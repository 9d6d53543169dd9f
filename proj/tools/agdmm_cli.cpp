// agdmm: curve inspection, self tests and straggler simulations.
//
// Exit codes: 0 success, 1 decode or self-test failure, 2 invalid input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "agdmm/dmm_codes.hpp"
#include "agdmm/presets.hpp"
#include "agdmm/selftest.hpp"
#include "agdmm/serialization.hpp"
#include "agdmm/simulator.hpp"

namespace {

using agdmm::io::Json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;

struct Options {
  std::string config;
  std::string out;
  std::string format = "pretty";
  std::optional<std::uint64_t> seed;
  std::string preset;
  std::string fault = "none";
  std::optional<std::size_t> k_min, k_max, trials;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out);
  if (!file) throw agdmm::Error(agdmm::ErrorCode::ConfigInvalid, "cannot write " + opt.out);
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

agdmm::CurveSpec load_curve(const Options& opt) {
  if (!opt.preset.empty()) return agdmm::presets::curve(opt.preset);
  if (opt.config.empty()) throw agdmm::Error(agdmm::ErrorCode::ConfigInvalid, "curve needs --config or --preset");
  const Json j = agdmm::io::read_file(opt.config);
  if (j.is_string()) return agdmm::presets::curve(j.get<std::string>());
  return agdmm::io::curve_from_json(j);
}

int cmd_curve(const Options& opt) {
  using namespace agdmm;
  const CurveSpec curve = load_curve(opt);
  validate_curve(curve);
  const auto places = enumerate_places(curve);
  if (opt.format == "csv") {
    emit(opt, io::places_to_csv(places));
    return kOk;
  }

  const std::uint64_t g = genus(curve);
  const PoleData poles = pole_data(curve);
  std::size_t counts[3] = {0, 0, 0};
  for (const Place& p : places) ++counts[static_cast<int>(p.cls)];
  const auto ext = static_cast<std::uint32_t>(curve.extension_degree());
  const bool mn = verify_friendly(curve, FriendlyMode::mn(ext)).pass();
  const bool md = verify_friendly(curve, FriendlyMode::matdot(static_cast<std::uint32_t>(g + 1))).pass();

  Json report{{"curve", io::to_json(curve)},
              {"genus", g},
              {"places", places.size()},
              {"place_classes", {{"affine", counts[0]}, {"denominator", counts[1]}, {"infinite", counts[2]}}},
              {"usable_places", counts[0]},
              {"poles",
               {{"y_pole_degree", poles.y_pole_degree},
                {"x_pole_degree", poles.x_pole_degree},
                {"y_pole_at_infinity", poles.y_pole_at_infinity}}},
              {"hasse_weil", hasse_weil_holds(curve.field.order(), places.size(), g)},
              {"friendly", {{"mn_m", ext}, {"mn", mn}, {"matdot_m", g + 1}, {"matdot", md}}}};
  if (opt.format == "json") {
    emit(opt, dump(report));
    return kOk;
  }
  std::ostringstream out;
  out << "curve        " << to_string(curve.kind) << " over GF(" << curve.field.order() << "), degree " << ext << "\n"
      << "genus        " << g << "\n"
      << "places       " << places.size() << " (affine " << counts[0] << ", denominator " << counts[1]
      << ", infinite " << counts[2] << ")\n"
      << "deg (y)_inf  " << poles.y_pole_degree << (poles.y_pole_at_infinity ? " (pole at infinity)" : "") << "\n"
      << "deg (x)_inf  " << poles.x_pole_degree << "\n"
      << "Hasse-Weil   " << (report["hasse_weil"].get<bool>() ? "ok" : "VIOLATED") << "\n"
      << "(" << ext << ",n)-friendly " << (mn ? "yes" : "no") << "\n"
      << (g + 1) << "-friendly   " << (md ? "yes" : "no") << "\n";
  emit(opt, out.str());
  return kOk;
}

int cmd_selftest(const Options& opt) {
  using agdmm::selftest::Fault;
  Fault fault = Fault::None;
  if (opt.fault == "genus") fault = Fault::Genus;
  else if (opt.fault == "threshold") fault = Fault::Threshold;
  else if (opt.fault != "none") throw agdmm::Error(agdmm::ErrorCode::ConfigInvalid, "unknown fault " + opt.fault);

  const auto checks = agdmm::selftest::run(fault);
  bool all = true;
  for (const auto& c : checks) all &= c.passed;

  if (opt.format == "json") {
    Json arr = Json::array();
    for (const auto& c : checks) arr.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    emit(opt, dump(Json{{"passed", all}, {"checks", arr}}));
  } else if (opt.format == "csv") {
    std::ostringstream out;
    out << "name,passed,detail\n";
    for (const auto& c : checks) out << '"' << c.name << "\"," << (c.passed ? 1 : 0) << ",\"" << c.detail << "\"\n";
    emit(opt, out.str());
  } else {
    std::ostringstream out;
    std::size_t passed = 0;
    for (const auto& c : checks) {
      passed += c.passed;
      out << (c.passed ? "PASS  " : "FAIL  ") << c.name;
      if (!c.detail.empty()) out << "  [" << c.detail << "]";
      out << "\n";
    }
    out << passed << "/" << checks.size() << " checks passed\n";
    emit(opt, out.str());
  }
  if (!all) {
    for (const auto& c : checks)
      if (!c.passed) std::cerr << "failed: " << c.name << "\n";
  }
  return all ? kOk : kFailed;
}

agdmm::io::ConfigFile load_config(const Options& opt) {
  if (opt.config.empty()) throw agdmm::Error(agdmm::ErrorCode::ConfigInvalid, "--config is required");
  Json j = agdmm::io::read_file(opt.config);
  if (opt.seed && j.is_object()) j["seed"] = *opt.seed;
  return agdmm::io::config_from_json(j);
}

int run_sweep(const Options& opt, const agdmm::io::ConfigFile& cfg, agdmm::io::SweepSpec sweep) {
  const auto rows = agdmm::straggler_sweep(cfg.sim, sweep.k_min, sweep.k_max, sweep.trials);
  if (opt.format == "json") emit(opt, dump(agdmm::io::to_json(rows)));
  else emit(opt, agdmm::io::sweep_to_csv(rows));
  return kOk;
}

int cmd_simulate(const Options& opt) {
  const auto cfg = load_config(opt);
  if (cfg.sweep) return run_sweep(opt, cfg, *cfg.sweep);
  const auto report = agdmm::run_simulation(cfg.sim);
  if (opt.format == "csv") {
    emit(opt, agdmm::io::sim_report_csv_header() + agdmm::io::sim_report_csv_row(report));
  } else if (opt.format == "json") {
    emit(opt, dump(agdmm::io::to_json(report)));
  } else {
    std::ostringstream out;
    out << to_string(report.scheme) << ": genus " << report.genus << ", R = " << report.threshold << ", N = "
        << report.workers << ", responses " << report.response_order.size() << "\n"
        << "decode " << (report.decode_success ? "succeeded" : "FAILED");
    if (report.failure) out << " (" << report.failure->message << ")";
    out << "\nstragglers tolerated " << report.max_stragglers_tolerated << "\n"
        << "multiplications: encode " << report.op_counts.encode << ", per worker " << report.op_counts.worker_max
        << ", decode " << report.op_counts.decode << "\n";
    emit(opt, out.str());
  }
  if (!report.decode_success && report.failure) std::cerr << report.failure->message << "\n";
  return report.decode_success ? kOk : kFailed;
}

int cmd_sweep(const Options& opt) {
  const auto cfg = load_config(opt);
  agdmm::io::SweepSpec sweep = cfg.sweep.value_or(agdmm::io::SweepSpec{});
  if (!cfg.sweep && !opt.k_max) {
    const auto r = agdmm::recovery_threshold(cfg.sim.params);
    sweep.k_max = std::min(cfg.sim.workers, cfg.sim.workers - r + 2);
  }
  if (opt.k_min) sweep.k_min = *opt.k_min;
  if (opt.k_max) sweep.k_max = *opt.k_max;
  if (opt.trials) sweep.trials = *opt.trials;
  return run_sweep(opt, cfg, sweep);
}

int cmd_compare(const Options& opt) {
  using namespace agdmm;
  if (opt.config.empty()) throw Error(ErrorCode::ConfigInvalid, "--config is required");
  const auto spec = io::compare_from_json(io::read_file(opt.config));
  const auto cmp = compare_rational_baseline(spec.curve, spec.polynomial, spec.m, spec.n, spec.rational_mn);
  if (opt.format == "json") {
    emit(opt, dump(io::to_json(cmp)));
    return kOk;
  }
  std::ostringstream out;
  if (opt.format == "csv") out << "label,scheme,m,n,genus,max_workers,threshold,headroom\n";
  for (const BaselineRow* r : {&cmp.rational, &cmp.curve}) {
    if (opt.format == "csv") {
      out << r->label << ',' << to_string(r->scheme) << ',' << r->m << ',' << r->n << ',' << r->genus << ','
          << r->max_workers << ',' << r->threshold << ',' << r->headroom << "\n";
    } else {
      out << r->label << ": " << to_string(r->scheme) << " (m=" << r->m << ", n=" << r->n << ") genus " << r->genus
          << ", N <= " << r->max_workers << ", R = " << r->threshold << ", headroom " << r->headroom << "\n";
    }
  }
  emit(opt, out.str());
  return kOk;
}

void print_error(const std::exception& e) {
  Json err{{"error", "Unknown"}, {"message", e.what()}};
  if (const auto* ae = dynamic_cast<const agdmm::Error*>(&e)) err["error"] = std::string(agdmm::to_string(ae->code()));
  std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coded distributed matrix multiplication over algebraic function fields"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--config", opt.config, "JSON input file")->check(CLI::ExistingFile);
  app.add_option("--out", opt.out, "Write output here instead of stdout");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--seed", opt.seed, "Override the matrix seed of a simulation config");

  auto* curve = app.add_subcommand("curve", "Genus, rational places, poles and friendliness of a curve");
  curve->add_option("--preset", opt.preset, "Built-in curve instead of --config")
      ->check(CLI::IsMember({"example1", "example2", "matdot", "rational25"}));
  auto* self = app.add_subcommand("selftest", "Run the built-in reproduction checks");
  self->add_option("--inject-fault", opt.fault, "Corrupt a computed value (none, genus, threshold)");
  auto* sim = app.add_subcommand("simulate", "Run one simulated straggler experiment (or its sweep section)");
  auto* sweep = app.add_subcommand("sweep", "Success rate against the number of stragglers");
  sweep->add_option("--k-min", opt.k_min);
  sweep->add_option("--k-max", opt.k_max);
  sweep->add_option("--trials", opt.trials);
  auto* cmp = app.add_subcommand("compare", "Rational baseline versus an algebraic function field");

  // Subcommands accept the global flags after their name as well.
  for (auto* sub : {curve, self, sim, sweep, cmp}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*curve) return cmd_curve(opt);
    if (*self) return cmd_selftest(opt);
    if (*sim) return cmd_simulate(opt);
    if (*sweep) return cmd_sweep(opt);
    if (*cmp) return cmd_compare(opt);
  } catch (const agdmm::Error& e) {
    print_error(e);
    return e.code() == agdmm::ErrorCode::DecodeFailed ? kFailed : kInvalid;
  } catch (const std::exception& e) {
    print_error(e);
    return kInvalid;
  }
  return kInvalid;
}
