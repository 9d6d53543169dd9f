#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "agdmm/function_field.hpp"
#include "agdmm/kernels.hpp"
#include "agdmm/matrix.hpp"
#include "agdmm/scheme.hpp"

namespace agdmm {

/// A is r x s, B is s x t.
struct Dims {
  std::size_t r = 0, s = 0, t = 0;
  friend bool operator==(const Dims&, const Dims&) = default;
};

struct SchemeParams {
  Scheme scheme;
  std::uint32_t m = 1;
  std::uint32_t n = 1;  // ignored by the MatDot schemes
  CurveSpec curve;
  Dims dims;
};

/// Throws IndivisibleDimensions, SchemeCurveMismatch or NotFriendly.
void validate_params(const SchemeParams& params);

struct Monomial {
  std::uint32_t x_exp = 0;
  std::uint32_t y_exp = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Encoding functions f_i, g_j as monomials in x and y, their pole orders at
/// the distinguished place, and the product monomials that index the columns
/// of the decoding system.
struct BasisDescriptor {
  Scheme scheme;
  std::vector<Monomial> f;
  std::vector<Monomial> g;
  /// Pole order of f_i g_j, row-major over (i, j).
  std::vector<std::int64_t> pole_orders;
  /// MatDot only: the order d whose coefficient is AB.
  std::optional<std::int64_t> target_order;
  /// Poly: f_i g_j for (i, j) row-major. MatDot: z^d for d = 0..2m-2.
  std::vector<Monomial> product_monomials;
  /// MatDot only: column of product_monomials holding AB.
  std::optional<std::size_t> target_column;

  std::int64_t pole_order(std::size_t i, std::size_t j) const { return pole_orders[i * g.size() + j]; }
};

BasisDescriptor basis_descriptor(const SchemeParams& params);

/// Descriptor for arbitrary monomials; pole order of x^a y^b is
/// a * x_weight + b * y_weight.
BasisDescriptor descriptor_from_monomials(Scheme scheme, std::vector<Monomial> f, std::vector<Monomial> g,
                                          std::int64_t x_weight, std::int64_t y_weight);

/// Poly: all pole orders pairwise distinct. MatDot: exactly m pairs reach the
/// target order and all of them are diagonal.
bool check_code_condition(const BasisDescriptor& desc, Scheme scheme);

/// mn, g + mn, 2m - 1, 2g + 2m - 1.
std::uint64_t recovery_threshold(const SchemeParams& params);

/// deg((h)_inf) + 1 with h bounded by the pole divisors of x and y.
std::uint64_t pole_degree_threshold(const SchemeParams& params, const BasisDescriptor& desc);

/// Field multiplications one worker performs: (r/m) s (t/n) or r (s/m) t.
std::uint64_t worker_mul_count(const SchemeParams& params);

struct Blocks {
  std::vector<Matrix> a;
  std::vector<Matrix> b;
};

/// Poly: A by rows into m blocks, B by columns into n blocks.
/// MatDot: A by columns, B by rows, m blocks each.
Blocks partition(const Matrix& a, const Matrix& b, const SchemeParams& params);

struct EncodedTask {
  std::size_t place = 0;
  Matrix f_share;
  Matrix g_share;
};

struct WorkerResult {
  std::size_t place = 0;
  Matrix h_value;
  std::size_t arrival_rank = 0;
  std::uint64_t mul_count = 0;
};

struct EncodeStats {
  std::uint64_t mul_count = 0;
};

/// One task per place. Places must be affine, at least `threshold` of them.
std::vector<EncodedTask> encode(const Blocks& blocks, const BasisDescriptor& desc, const CurveSpec& curve,
                                std::span<const Place> places, std::uint64_t threshold,
                                EncodeStats* stats = nullptr, kernels::Exec exec = kernels::Exec::Parallel);

WorkerResult worker_multiply(const EncodedTask& task);

enum class DecodeMethod {
  Eliminate,     // solve the evaluation system, checking consistency
  RightInverse,  // coefficients = h-values times a right inverse of G
};

struct DecodeReport {
  Matrix product;
  /// Every recovered coefficient block, in product_monomials order.
  std::vector<Matrix> coefficients;
  std::vector<std::size_t> places_used;
  std::uint64_t mul_count = 0;
};

/// Evaluation matrix M[k][c] = value of product monomial c at place k.
Matrix evaluation_matrix(const CurveSpec& curve, const BasisDescriptor& desc, std::span<const Place> places);

/// Recovers AB from the first R results. `all_places` is the full
/// enumeration, indexed by place id. Throws InsufficientResponses,
/// RankDeficient or Inconsistent.
DecodeReport decode(std::span<const WorkerResult> results, const BasisDescriptor& desc, const SchemeParams& params,
                    std::span<const Place> all_places, DecodeMethod method = DecodeMethod::Eliminate);

}  // namespace agdmm
