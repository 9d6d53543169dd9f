#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "agdmm/finite_field.hpp"

namespace agdmm {

/// Dense row-major matrix over a finite field. The field handle travels with
/// the matrix so mixed-field operations are rejected with FieldMismatch.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Row-major codes; each is range checked against the field.
  static Matrix from_codes(const Field& field, std::size_t rows, std::size_t cols,
                           std::span<const std::uint64_t> codes);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Element& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * cols_ + j]; }
  Element operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * cols_ + j]; }

  std::span<Element> row(std::size_t i) noexcept { return {entries_.data() + i * cols_, cols_}; }
  std::span<const Element> row(std::size_t i) const noexcept { return {entries_.data() + i * cols_, cols_}; }
  std::span<Element> data() noexcept { return entries_; }
  std::span<const Element> data() const noexcept { return entries_; }

  Matrix transpose() const;
  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t row0, std::size_t col0, const Matrix& src);

  std::vector<std::uint32_t> codes() const;

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.entries_ == b.entries_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

}  // namespace agdmm
