#pragma once

#include <cstdint>

#include "agdmm/kernels.hpp"
#include "agdmm/matrix.hpp"

namespace agdmm::linalg {

struct Product {
  Matrix value;
  std::uint64_t mul_count = 0;  // rows(A) * cols(A) * cols(B)
};

/// Exact product. Throws DimensionMismatch / FieldMismatch.
Product matmul(const Matrix& a, const Matrix& b, kernels::Exec exec = kernels::Exec::Parallel);

std::size_t rank(const Matrix& m);

struct SolveStats {
  std::uint64_t mul_count = 0;
};

/// Unique X with M X = B for an R x k matrix M of full column rank (R >= k).
/// Rows beyond the pivot rows are checked exactly: RankDeficient when
/// rank(M) < k, Inconsistent when no exact solution exists.
Matrix solve_exact(const Matrix& m, const Matrix& b, SolveStats* stats = nullptr,
                   kernels::Exec exec = kernels::Exec::Parallel);

/// N with M N = I for a k x R matrix M of full row rank. N is supported on
/// the first k independent columns of M.
Matrix right_inverse(const Matrix& m, SolveStats* stats = nullptr);

}  // namespace agdmm::linalg
