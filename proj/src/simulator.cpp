#include "agdmm/simulator.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <string>

#include "agdmm/linalg.hpp"

namespace agdmm {

std::string_view to_string(DelayModel::Kind kind) noexcept {
  switch (kind) {
    case DelayModel::Kind::FixedOrder: return "fixed";
    case DelayModel::Kind::UniformShuffle: return "uniform_shuffle";
    case DelayModel::Kind::GeometricTail: return "geometric_tail";
  }
  return "?";
}

Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(field, rows, cols);
  for (Element& e : m.data()) e = Element{static_cast<std::uint32_t>(rng.below(field.order()))};
  return m;
}

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

// Everything that does not depend on the arrival order: matrices, shares and
// every worker's answer.
struct Session {
  const SimConfig& cfg;
  BasisDescriptor desc;
  std::uint64_t threshold = 0;
  std::uint64_t genus = 0;
  std::vector<Place> all_places;
  Matrix expected;
  std::vector<WorkerResult> results;  // indexed by worker id
  OpCounts counts;

  explicit Session(const SimConfig& config)
      : cfg(config),
        desc(basis_descriptor(config.params)),
        expected(config.params.curve.field, 0, 0) {
    const SchemeParams& params = cfg.params;
    threshold = recovery_threshold(params);
    genus = agdmm::genus(params.curve);
    all_places = enumerate_places(params.curve, cfg.exec);
    const auto usable = usable_places(all_places);

    if (cfg.workers < threshold || cfg.workers > usable.size())
      throw Error(ErrorCode::ConfigInvalid, "need R <= N <= usable places, got R = " + num(threshold) + ", N = " +
                                                num(cfg.workers) + ", usable = " + num(usable.size()));

    Rng rng(cfg.seed);
    const Field& field = params.curve.field;
    const Matrix a = random_matrix(field, params.dims.r, params.dims.s, rng);
    const Matrix b = random_matrix(field, params.dims.s, params.dims.t, rng);
    expected = linalg::matmul(a, b, cfg.exec).value;

    const Blocks blocks = partition(a, b, params);
    EncodeStats enc;
    const auto tasks = encode(blocks, desc, params.curve, std::span(usable).first(cfg.workers), threshold, &enc, cfg.exec);
    counts.encode = enc.mul_count;

    // Workers run independently; the result for each worker is the same
    // whatever the interleaving.
    results.resize(tasks.size(), WorkerResult{0, Matrix(field, 0, 0), 0, 0});
    if (cfg.exec == kernels::Exec::Serial) {
      for (std::size_t w = 0; w < tasks.size(); ++w) results[w] = worker_multiply(tasks[w]);
    } else {
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t w = 0; w < static_cast<std::ptrdiff_t>(tasks.size()); ++w)
        results[w] = worker_multiply(tasks[w]);
    }
  }

  SimReport attempt(const std::vector<std::size_t>& arrival) const {
    SimReport rep{};
    rep.scheme = cfg.params.scheme;
    rep.genus = genus;
    rep.threshold = threshold;
    rep.workers = cfg.workers;
    rep.max_stragglers_tolerated = static_cast<std::int64_t>(cfg.workers) - static_cast<std::int64_t>(threshold);
    rep.response_order = arrival;
    rep.op_counts.encode = counts.encode;

    std::vector<WorkerResult> arrived;
    arrived.reserve(arrival.size());
    for (std::size_t rank = 0; rank < arrival.size(); ++rank) {
      WorkerResult r = results[arrival[rank]];
      r.arrival_rank = rank;
      rep.op_counts.worker_max = std::max(rep.op_counts.worker_max, r.mul_count);
      arrived.push_back(std::move(r));
    }
    const std::size_t used = std::min<std::size_t>(arrival.size(), threshold);
    rep.workers_used.assign(arrival.begin(), arrival.begin() + static_cast<std::ptrdiff_t>(used));

    try {
      const auto decoded = decode(arrived, desc, cfg.params, all_places);
      rep.op_counts.decode = decoded.mul_count;
      rep.decode_success = decoded.product == expected;
      if (!rep.decode_success)
        rep.failure = Failure{ErrorCode::DecodeFailed, "decoded product differs from direct multiplication"};
    } catch (const Error& err) {
      rep.decode_success = false;
      rep.failure = Failure{err.code(), err.what()};
    }
    return rep;
  }
};

std::vector<std::size_t> arrival_order(const SimConfig& cfg, const std::vector<std::size_t>& stragglers,
                                       const DelayModel& delay) {
  const std::size_t n = cfg.workers;
  std::vector<bool> silent(n, false);
  for (std::size_t w : stragglers) silent[w] = true;

  std::vector<std::size_t> order;
  switch (delay.kind) {
    case DelayModel::Kind::FixedOrder: {
      std::vector<std::size_t> sorted = delay.order;
      std::sort(sorted.begin(), sorted.end());
      std::vector<std::size_t> ident(n);
      std::iota(ident.begin(), ident.end(), 0);
      if (sorted != ident) throw Error(ErrorCode::ConfigInvalid, "fixed order must be a permutation of 0..N-1");
      order = delay.order;
      break;
    }
    case DelayModel::Kind::UniformShuffle: {
      order.resize(n);
      std::iota(order.begin(), order.end(), 0);
      Rng rng(delay.seed);
      rng.shuffle(order);
      break;
    }
    case DelayModel::Kind::GeometricTail: {
      if (!(delay.prob >= 0.0 && delay.prob < 1.0))
        throw Error(ErrorCode::ConfigInvalid, "geometric tail probability must be in [0, 1)");
      // delay = U[0,1) + number of successes before the first failure
      Rng rng(delay.seed);
      std::vector<std::pair<double, std::size_t>> keyed(n);
      for (std::size_t w = 0; w < n; ++w) {
        double d = rng.unit();
        while (rng.unit() < delay.prob) d += 1.0;
        keyed[w] = {d, w};
      }
      std::sort(keyed.begin(), keyed.end());
      for (const auto& [d, w] : keyed) order.push_back(w);
      break;
    }
  }
  std::erase_if(order, [&](std::size_t w) { return silent[w]; });
  return order;
}

void check_stragglers(const SimConfig& cfg, const std::vector<std::size_t>& stragglers) {
  std::set<std::size_t> seen;
  for (std::size_t w : stragglers) {
    if (w >= cfg.workers) throw Error(ErrorCode::ConfigInvalid, "straggler id " + num(w) + " >= N");
    if (!seen.insert(w).second) throw Error(ErrorCode::ConfigInvalid, "straggler id " + num(w) + " listed twice");
  }
}

}  // namespace

SimReport run_simulation(const SimConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  check_stragglers(cfg, cfg.stragglers);
  const Session session(cfg);
  SimReport rep = session.attempt(arrival_order(cfg, cfg.stragglers, cfg.delay));
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

const SimReport& require_success(const SimReport& report) {
  if (!report.decode_success) {
    std::string why = report.failure ? report.failure->message : "unknown";
    throw Error(ErrorCode::DecodeFailed, why);
  }
  return report;
}

std::vector<SweepRow> straggler_sweep(const SimConfig& cfg, std::size_t k_min, std::size_t k_max, std::size_t trials) {
  if (k_min > k_max || k_max > cfg.workers)
    throw Error(ErrorCode::ConfigInvalid, "straggler range must lie within [0, N]");
  const Session session(cfg);
  std::vector<SweepRow> rows;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    SweepRow row{k, trials, 0};
    for (std::size_t trial = 0; trial < trials; ++trial) {
      Rng rng(mix_seed(mix_seed(cfg.seed, k), trial));
      std::vector<std::size_t> ids(cfg.workers);
      std::iota(ids.begin(), ids.end(), 0);
      rng.shuffle(ids);
      const std::vector<std::size_t> stragglers(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(k));
      const auto order = arrival_order(cfg, stragglers, DelayModel::shuffle(rng.next()));
      if (session.attempt(order).decode_success) ++row.successes;
    }
    rows.push_back(row);
  }
  return rows;
}

BaselineComparison compare_rational_baseline(const CurveSpec& curve, bool polynomial, std::uint32_t m,
                                             std::uint32_t n,
                                             std::optional<std::pair<std::uint32_t, std::uint32_t>> rational_mn) {
  validate_curve(curve);
  const auto [rm, rn] = rational_mn.value_or(std::pair{m, n});
  auto row = [&](std::string label, const CurveSpec& spec, std::uint32_t bm, std::uint32_t bn) {
    const bool rational = spec.kind == CurveKind::Rational;
    const Scheme scheme = polynomial ? (rational ? Scheme::RationalPoly : Scheme::PolyAG)
                                     : (rational ? Scheme::RationalMatdot : Scheme::MatdotAG);
    // Thresholds do not depend on r, s, t; any divisible shape will do.
    const SchemeParams params{scheme, bm, polynomial ? bn : 1u, spec, Dims{bm, bm, polynomial ? bn : 1u}};
    validate_params(params);
    BaselineRow out{std::move(label), scheme, bm, polynomial ? bn : 1u, genus(spec), 0, 0, 0};
    out.max_workers = usable_places(spec, scheme).size();
    out.threshold = recovery_threshold(params);
    out.headroom = static_cast<std::int64_t>(out.max_workers) - static_cast<std::int64_t>(out.threshold);
    return out;
  };
  return BaselineComparison{row("rational", CurveSpec::rational(curve.field), rm, rn), row("curve", curve, m, n)};
}

}  // namespace agdmm
