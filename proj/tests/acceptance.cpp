// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "agdmm/dmm_codes.hpp"
#include "agdmm/linalg.hpp"
#include "agdmm/presets.hpp"
#include "agdmm/simulator.hpp"
#include "support.hpp"

using namespace agdmm;
using testing::Gen;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void curve_example(Outcome& out, const char* preset, std::uint64_t want_genus, std::size_t want_places) {
  const auto t0 = Clock::now();
  const CurveSpec c = presets::curve(preset);
  const std::uint64_t g = genus(c);
  const std::size_t n = enumerate_places(c).size();
  const double secs = seconds_since(t0);
  out.require(g == want_genus, "genus " + std::to_string(g));
  out.require(n == want_places, "places " + std::to_string(n));
  out.require(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  out.detail << "genus " << g << ", places " << n << ", " << secs * 1000 << " ms";
}

struct SchemeCase {
  const char* label;
  Scheme scheme;
  std::uint32_t m, n;
  CurveSpec curve;
};

std::vector<SchemeCase> scheme_cases() {
  const CurveSpec rat = CurveSpec::rational(Field::make(5, 2));
  return {{"PolyAG", Scheme::PolyAG, 8, 5, presets::curve("example1")},
          {"RationalPoly", Scheme::RationalPoly, 4, 6, rat},
          {"MatdotAG", Scheme::MatdotAG, 3, 1, presets::curve("matdot")},
          {"RationalMatdot", Scheme::RationalMatdot, 3, 1, rat}};
}

// Random desk-scale dimensions compatible with the partition.
Dims random_dims(Gen& gen, const SchemeCase& sc) {
  if (is_polynomial(sc.scheme))
    return {sc.m * (1 + gen.below(6)), 1 + gen.below(40), sc.n * (1 + gen.below(6))};
  return {1 + gen.below(40), sc.m * (1 + gen.below(10)), 1 + gen.below(40)};
}

void end_to_end(Outcome& out, Outcome& ops) {
  const auto t0 = Clock::now();
  Gen gen(5005);
  for (const SchemeCase& sc : scheme_cases()) {
    const auto all = enumerate_places(sc.curve);
    const auto usable = usable_places(all);
    std::size_t ok = 0;
    const int trials = 200;
    for (int t = 0; t < trials; ++t) {
      const SchemeParams params{sc.scheme, sc.m, sc.n, sc.curve, random_dims(gen, sc)};
      validate_params(params);
      const auto desc = basis_descriptor(params);
      const std::uint64_t R = recovery_threshold(params);
      const Matrix a = gen.matrix(sc.curve.field, params.dims.r, params.dims.s);
      const Matrix b = gen.matrix(sc.curve.field, params.dims.s, params.dims.t);

      std::vector<Place> subset;
      for (std::size_t k : gen.distinct(usable.size(), R)) subset.push_back(usable[k]);
      const auto tasks = encode(partition(a, b, params), desc, sc.curve, subset, R);
      std::vector<WorkerResult> results;
      for (const auto& task : tasks) {
        results.push_back(worker_multiply(task));
        ops.require(results.back().mul_count == worker_mul_count(params), std::string(sc.label) + " worker count");
      }
      const std::uint64_t closed_form = is_polynomial(sc.scheme)
                                            ? (params.dims.r / sc.m) * params.dims.s * (params.dims.t / sc.n)
                                            : params.dims.r * (params.dims.s / sc.m) * params.dims.t;
      ops.require(worker_mul_count(params) == closed_form, std::string(sc.label) + " closed form");

      const auto method = t % 2 ? DecodeMethod::RightInverse : DecodeMethod::Eliminate;
      try {
        if (decode(results, desc, params, all, method).product == testing::naive_matmul(a, b)) ++ok;
      } catch (const Error&) {
      }
    }
    out.require(ok == trials, std::string(sc.label) + " " + std::to_string(ok) + "/200");
    out.detail << sc.label << " " << ok << "/" << trials << "; ";
  }
  const double secs = seconds_since(t0);
  out.require(secs < 60.0, "runtime");
  out.detail << secs << " s";
  ops.detail << "every worker count equals (r/m)s(t/n) or r(s/m)t";
}

void rank_property(Outcome& out) {
  Gen gen(606);
  for (const SchemeCase& sc : scheme_cases()) {
    if (!is_ag(sc.scheme)) continue;
    const SchemeParams params{sc.scheme, sc.m, sc.n, sc.curve, {sc.m * 2, sc.m * 2, sc.n * 2}};
    const auto desc = basis_descriptor(params);
    const auto usable = usable_places(sc.curve, sc.scheme);
    const std::uint64_t R = recovery_threshold(params);
    std::size_t full = 0;
    for (int t = 0; t < 500; ++t) {
      std::vector<Place> subset;
      for (std::size_t k : gen.distinct(usable.size(), R)) subset.push_back(usable[k]);
      if (linalg::rank(evaluation_matrix(sc.curve, desc, subset)) == desc.product_monomials.size()) ++full;
    }
    out.require(full == 500, std::string(sc.label) + " " + std::to_string(full) + "/500");
    out.detail << sc.label << " " << full << "/500 full column rank; ";
  }
}

void straggler_boundary(Outcome& out) {
  for (const SchemeCase& sc : scheme_cases()) {
    const Dims dims = is_polynomial(sc.scheme) ? Dims{sc.m * 2, 3, sc.n * 2} : Dims{4, sc.m * 2, 4};
    const SchemeParams params{sc.scheme, sc.m, sc.n, sc.curve, dims};
    const std::size_t N = usable_places(sc.curve, sc.scheme).size();
    const std::size_t R = recovery_threshold(params);
    const SimConfig cfg{params, N, DelayModel::shuffle(1), {}, 77};
    const auto rows = straggler_sweep(cfg, 0, N, 5);
    bool exact = true;
    for (const auto& row : rows) exact = exact && row.success_rate() == (row.stragglers <= N - R ? 1.0 : 0.0);
    const auto again = straggler_sweep(cfg, 0, N, 5);
    bool same = again.size() == rows.size();
    for (std::size_t i = 0; same && i < rows.size(); ++i) same = rows[i].successes == again[i].successes;
    out.require(exact, std::string(sc.label) + " boundary");
    out.require(same, std::string(sc.label) + " determinism");
    out.detail << sc.label << " N=" << N << " R=" << R << " k=0.." << N << "; ";
  }
}

void hasse_weil_corpus(Outcome& out) {
  Gen gen(808);
  const Field fields[] = {Field::make(5, 1), Field::make(7, 1), Field::make(5, 2), Field::make(3, 3), Field::make(7, 2)};
  std::size_t checked = 0, held = 0;
  for (int t = 0; t < 150; ++t) {
    const CurveSpec c = testing::random_curve(gen, fields[t % 5]);
    validate_curve(c);
    const std::size_t n = enumerate_places(c).size();
    const std::uint64_t g = genus(c);
    const std::int64_t diff = static_cast<std::int64_t>(c.field.order() + 1) - static_cast<std::int64_t>(n);
    // Exact integer form of |q + 1 - N| <= 2 g sqrt(q).
    const bool bound = static_cast<std::uint64_t>(diff * diff) <= 4 * g * g * c.field.order();
    ++checked;
    if (bound && hasse_weil_check(c)) ++held;
  }
  out.require(held == checked && checked >= 100, std::to_string(held) + "/" + std::to_string(checked));
  out.detail << held << "/" << checked << " random curves over q in {5,7,25,27,49}";
}

// Builds every friendly family on random roots and hands each instance to
// `visit` with its friendliness mode and the partition it supports.
struct Instance {
  CurveSpec curve;
  FriendlyMode mode;
  Scheme scheme;
};

void construction_corpus(std::size_t rounds, const std::function<void(const Instance&)>& visit) {
  Gen gen(909);
  const Field fields[] = {Field::make(5, 2), Field::make(3, 3), Field::make(7, 2), Field::make(2, 4), Field::make(7, 1)};
  for (std::size_t t = 0; t < rounds; ++t) {
    const Field& f = fields[t % 5];
    const std::size_t l = 2 + gen.below(2);
    const auto idx = gen.distinct(f.order(), 2 * l - 1);
    std::vector<Element> a, b;
    for (std::size_t i = 0; i < idx.size(); ++i) (i < l ? a : b).push_back(Element{std::uint32_t(idx[i])});
    std::uint32_t m;
    do m = 2 + static_cast<std::uint32_t>(gen.below(8));
    while (std::gcd<std::uint32_t>(m, f.order()) != 1);

    visit({constructions::kummer_poly(f, m, a, b), FriendlyMode::mn(m), Scheme::PolyAG});
    const CurveSpec tr = constructions::trace_poly(f, a, b);
    const auto d = static_cast<std::uint32_t>(tr.extension_degree());
    if (d >= 2) visit({tr, FriendlyMode::mn(d), Scheme::PolyAG});
    visit({constructions::kummer_matdot_pole(f, m, a[0], a[1], b[0]), FriendlyMode::matdot(m), Scheme::MatdotAG});
    visit({constructions::kummer_matdot_zero(f, m, a[0], a[1], b[0]), FriendlyMode::matdot(m), Scheme::MatdotAG});
    if (d >= 2) {
      visit({constructions::trace_matdot_pole(f, a[0], a[1], b[0]), FriendlyMode::matdot(d), Scheme::MatdotAG});
      visit({constructions::trace_matdot_zero(f, a[0], a[1], b[0]), FriendlyMode::matdot(d), Scheme::MatdotAG});
    }
  }
}

void friendliness(Outcome& out) {
  std::size_t total = 0, passed = 0;
  construction_corpus(40, [&](const Instance& in) {
    ++total;
    if (verify_friendly(in.curve, in.mode).pass()) ++passed;
  });
  out.require(passed == total && total >= 100, std::to_string(passed) + "/" + std::to_string(total));
  out.detail << passed << "/" << total << " construction instances";
}

void lower_bound_equality(Outcome& out) {
  std::size_t total = 0, equal = 0;
  Gen gen(1010);
  construction_corpus(40, [&](const Instance& in) {
    const std::uint32_t m = in.mode.m;
    const std::uint32_t n = in.scheme == Scheme::PolyAG ? 1 + static_cast<std::uint32_t>(gen.below(6)) : 1;
    const SchemeParams params{in.scheme, m, n, in.curve, {m * 2, m * 2, n * 2}};
    validate_params(params);
    const std::uint64_t g = genus(in.curve);
    const std::uint64_t R = recovery_threshold(params);
    const std::uint64_t pole_bound = pole_degree_threshold(params, basis_descriptor(params));
    bool ok = R == pole_bound;
    if (in.scheme == Scheme::PolyAG) ok = ok && R == g + std::uint64_t(m) * n;
    else if (m >= g + 1) ok = ok && R == 2 * g + 2 * std::uint64_t(m) - 1;
    ++total;
    if (ok) ++equal;
  });
  out.require(equal == total, std::to_string(equal) + "/" + std::to_string(total));
  out.detail << equal << "/" << total << " thresholds equal deg((h)_inf) + 1 and g+mn or 2g+2m-1";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
  };
  Outcome ops;
  const std::vector<Criterion> criteria = {
      {"1 first Kummer example: genus 7, 52 places, < 1 s", [](Outcome& o) { curve_example(o, "example1", 7, 52); }},
      {"2 trace example: genus 8, 56 places, < 1 s", [](Outcome& o) { curve_example(o, "example2", 8, 56); }},
      {"3 MatDot example: genus 2, 46 places, < 1 s", [](Outcome& o) { curve_example(o, "matdot", 2, 46); }},
      {"4 thresholds 47 and 24",
       [](Outcome& o) {
         const auto cases = scheme_cases();
         const auto r1 = recovery_threshold({Scheme::PolyAG, 8, 5, cases[0].curve, {80, 60, 100}});
         const auto r2 = recovery_threshold({Scheme::RationalPoly, 4, 6, cases[1].curve, {80, 60, 96}});
         o.require(r1 == 47 && r2 == 24, "thresholds");
         o.detail << "PolyAG " << r1 << ", RationalPoly " << r2;
       }},
      {"5 end-to-end decode, 200 trials per scheme, < 60 s", [&](Outcome& o) { end_to_end(o, ops); }},
      {"6 rank of random R-subsets, 500 per curve", rank_property},
      {"7 straggler boundary at N - R", straggler_boundary},
      {"8 Hasse-Weil on random curves", hasse_weil_corpus},
      {"9 constructions are friendly", friendliness},
      {"10 thresholds meet the lower bounds", lower_bound_equality},
  };

  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%s  %s  [%s]\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.str().c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  std::printf("%s  op counts: per-worker multiplications match the closed forms  [%s]\n", ops.pass ? "PASS" : "FAIL",
              ops.detail.str().c_str());
  all = all && ops.pass;
  return all ? 0 : 1;
}
