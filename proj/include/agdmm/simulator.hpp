#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agdmm/dmm_codes.hpp"
#include "agdmm/rng.hpp"

namespace agdmm {

/// Arrival order of worker responses. Only the order matters for decoding,
/// so delays are modelled as permutations rather than clocks.
struct DelayModel {
  enum class Kind { FixedOrder, UniformShuffle, GeometricTail };
  Kind kind = Kind::UniformShuffle;
  std::vector<std::size_t> order;  // FixedOrder: permutation of 0..N-1
  std::uint64_t seed = 0;
  double prob = 0.0;  // GeometricTail: chance of each extra delay unit

  static DelayModel fixed(std::vector<std::size_t> order) { return {Kind::FixedOrder, std::move(order), 0, 0.0}; }
  static DelayModel shuffle(std::uint64_t seed) { return {Kind::UniformShuffle, {}, seed, 0.0}; }
  static DelayModel geometric_tail(std::uint64_t seed, double prob) { return {Kind::GeometricTail, {}, seed, prob}; }
};

std::string_view to_string(DelayModel::Kind kind) noexcept;

struct SimConfig {
  SchemeParams params;
  std::size_t workers = 0;  // N; worker w evaluates the w-th usable place
  DelayModel delay;
  std::vector<std::size_t> stragglers;  // workers that never respond
  std::uint64_t seed = 0;               // matrix generation
  kernels::Exec exec = kernels::Exec::Parallel;
};

struct OpCounts {
  std::uint64_t encode = 0;
  std::uint64_t worker_max = 0;
  std::uint64_t decode = 0;
  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

struct Failure {
  ErrorCode code;
  std::string message;
};

struct SimReport {
  Scheme scheme = Scheme::PolyAG;
  std::uint64_t genus = 0;
  std::uint64_t threshold = 0;
  std::size_t workers = 0;
  std::vector<std::size_t> response_order;  // worker ids, arrival order
  std::vector<std::size_t> workers_used;    // first R responders
  bool decode_success = false;
  std::int64_t max_stragglers_tolerated = 0;  // N - R
  OpCounts op_counts;
  std::optional<Failure> failure;
  double elapsed_ms = 0.0;  // informational
};

/// Throws ConfigInvalid (or the parameter validation error) for a bad
/// configuration. Decoding problems are reported in the result, not thrown.
SimReport run_simulation(const SimConfig& cfg);

/// Throws DecodeFailed carrying the failure diagnostics.
const SimReport& require_success(const SimReport& report);

struct SweepRow {
  std::size_t stragglers = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double success_rate() const { return trials ? double(successes) / double(trials) : 0.0; }
};

/// For each k in [k_min, k_max], `trials` runs with k random stragglers
/// and a random arrival order. Matrices and shares are generated once.
std::vector<SweepRow> straggler_sweep(const SimConfig& cfg, std::size_t k_min, std::size_t k_max, std::size_t trials);

struct BaselineRow {
  std::string label;
  Scheme scheme = Scheme::PolyAG;
  std::uint32_t m = 1, n = 1;
  std::uint64_t genus = 0;
  std::size_t max_workers = 0;  // usable places
  std::uint64_t threshold = 0;
  std::int64_t headroom = 0;  // max_workers - threshold, negative when infeasible
};

struct BaselineComparison {
  BaselineRow rational;
  BaselineRow curve;
};

/// Compares the rational function field over the same GF(q) against `curve`.
/// `polynomial` selects polynomial or MatDot codes; the rational partition
/// defaults to the curve's.
BaselineComparison compare_rational_baseline(const CurveSpec& curve, bool polynomial, std::uint32_t m, std::uint32_t n,
                                             std::optional<std::pair<std::uint32_t, std::uint32_t>> rational_mn = {});

/// Uniform random matrix.
Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng);

}  // namespace agdmm
