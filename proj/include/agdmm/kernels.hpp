#pragma once

#include <cstdint>
#include <vector>

#include "agdmm/matrix.hpp"

// Compute kernels. Each has a plain serial form that serves as the reference
// in tests and an OpenMP form used by the library. Both produce identical
// results and identical operation counts.
namespace agdmm::kernels {

enum class Exec { Serial, Parallel };

/// C = A * B with no dimension or field checks (done by linalg::matmul).
Matrix matmul(const Matrix& a, const Matrix& b, Exec exec);

/// dst += scale * src, entrywise, same shape.
void axpy(Matrix& dst, Element scale, const Matrix& src, Exec exec);

struct Reduction {
  std::vector<std::size_t> pivot_cols;  // one per pivot row, in order
  std::uint64_t mul_count = 0;
};

/// In-place reduced row echelon form using first-nonzero pivoting over
/// the leading `pivot_cols` columns. The remaining columns (an augmented
/// right-hand side) are carried along. Pivot rows end up at the top.
Reduction row_reduce(Matrix& m, std::size_t pivot_cols, Exec exec);

}  // namespace agdmm::kernels
