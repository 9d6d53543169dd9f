#include "agdmm/linalg.hpp"

#include <string>

namespace agdmm {

Matrix Matrix::from_codes(const Field& field, std::size_t rows, std::size_t cols,
                          std::span<const std::uint64_t> codes) {
  if (codes.size() != rows * cols)
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(rows * cols) + " entries");
  Matrix m(field, rows, cols);
  for (std::size_t k = 0; k < codes.size(); ++k) m.entries_[k] = field.from_code(codes[k]);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_)
    throw Error(ErrorCode::DimensionMismatch, "block exceeds matrix bounds");
  Matrix b(field_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  return b;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& src) {
  if (row0 + src.rows() > rows_ || col0 + src.cols() > cols_)
    throw Error(ErrorCode::DimensionMismatch, "block exceeds matrix bounds");
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j) (*this)(row0 + i, col0 + j) = src(i, j);
}

std::vector<std::uint32_t> Matrix::codes() const {
  std::vector<std::uint32_t> out(entries_.size());
  for (std::size_t k = 0; k < entries_.size(); ++k) out[k] = entries_[k].code;
  return out;
}

namespace linalg {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "operands live in different fields");
}

std::string dims(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

Product matmul(const Matrix& a, const Matrix& b, kernels::Exec exec) {
  require_same_field(a, b);
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "cannot multiply " + dims(a) + " by " + dims(b));
  return Product{kernels::matmul(a, b, exec), std::uint64_t(a.rows()) * a.cols() * b.cols()};
}

std::size_t rank(const Matrix& m) {
  Matrix work = m;
  return kernels::row_reduce(work, work.cols(), kernels::Exec::Parallel).pivot_cols.size();
}

Matrix solve_exact(const Matrix& m, const Matrix& b, SolveStats* stats, kernels::Exec exec) {
  require_same_field(m, b);
  const std::size_t R = m.rows(), k = m.cols(), w = b.cols();
  if (b.rows() != R) throw Error(ErrorCode::DimensionMismatch, "system " + dims(m) + " with rhs " + dims(b));
  if (R < k)
    throw Error(ErrorCode::RankDeficient,
                "underdetermined system: " + std::to_string(R) + " equations for " + std::to_string(k) + " unknowns");

  Matrix aug(m.field(), R, k + w);
  aug.set_block(0, 0, m);
  aug.set_block(0, k, b);
  const auto red = kernels::row_reduce(aug, k, exec);
  if (stats) stats->mul_count += red.mul_count;
  if (red.pivot_cols.size() < k)
    throw Error(ErrorCode::RankDeficient,
                "rank " + std::to_string(red.pivot_cols.size()) + " < " + std::to_string(k));

  // Pivots fill the leading k x k block with the identity; every other row
  // must have reduced to zero on the right-hand side.
  const Element zero = m.field().zero();
  for (std::size_t i = k; i < R; ++i)
    for (std::size_t j = 0; j < w; ++j)
      if (aug(i, k + j) != zero)
        throw Error(ErrorCode::Inconsistent, "equation " + std::to_string(i) + " is not satisfied by any solution");

  return aug.block(0, k, k, w);
}

Matrix right_inverse(const Matrix& m, SolveStats* stats) {
  const std::size_t k = m.rows(), R = m.cols();
  Matrix work = m;
  const auto red = kernels::row_reduce(work, R, kernels::Exec::Parallel);
  if (stats) stats->mul_count += red.mul_count;
  if (red.pivot_cols.size() < k)
    throw Error(ErrorCode::RankDeficient,
                "row rank " + std::to_string(red.pivot_cols.size()) + " < " + std::to_string(k));

  Matrix square(m.field(), k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < k; ++c) square(i, c) = m(i, red.pivot_cols[c]);
  const Matrix inv = solve_exact(square, Matrix::identity(m.field(), k), stats);

  Matrix n(m.field(), R, k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t j = 0; j < k; ++j) n(red.pivot_cols[c], j) = inv(c, j);
  return n;
}

}  // namespace linalg
}  // namespace agdmm
