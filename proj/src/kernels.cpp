#include "agdmm/kernels.hpp"

#include <algorithm>
#include <utility>

namespace agdmm::kernels {

namespace {

Matrix matmul_serial(const Matrix& a, const Matrix& b) {
  const Field& f = a.field();
  Matrix c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Element acc = f.zero();
      for (std::size_t k = 0; k < a.cols(); ++k) acc = f.add(acc, f.mul(a(i, k), b(k, j)));
      c(i, j) = acc;
    }
  return c;
}

// Prime field: accumulate integer products and reduce once per entry.
Matrix matmul_prime_parallel(const Matrix& a, const Matrix& b) {
  const Field& f = a.field();
  const std::uint64_t p = f.characteristic();
  const std::size_t rows = a.rows(), inner = a.cols(), cols = b.cols();
  Matrix c(f, rows, cols);
  const Element* A = a.data().data();
  const Element* B = b.data().data();
  Element* C = c.data().data();
#pragma omp parallel
  {
    std::vector<std::uint64_t> acc(cols);
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(rows); ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < inner; ++k) {
        const std::uint64_t aik = A[i * inner + k].code;
        if (aik == 0) continue;
        const Element* brow = B + k * cols;
        for (std::size_t j = 0; j < cols; ++j) acc[j] += aik * brow[j].code;
        // keep the accumulator far from overflow for very long rows
        if ((k & 0xffff) == 0xffff)
          for (auto& v : acc) v %= p;
      }
      for (std::size_t j = 0; j < cols; ++j) C[i * cols + j] = Element{static_cast<std::uint32_t>(acc[j] % p)};
    }
  }
  return c;
}

// Extension field: multiply in the log domain, add with Zech logarithms.
Matrix matmul_ext_parallel(const Matrix& a, const Matrix& b) {
  const Field& f = a.field();
  const auto t = f.tables();
  const std::size_t rows = a.rows(), inner = a.cols(), cols = b.cols();
  Matrix c(f, rows, cols);
  const Element* A = a.data().data();
  const Element* B = b.data().data();
  Element* C = c.data().data();
  // log(B) once, zero entries marked
  constexpr std::uint32_t kZero = 0xffffffffu;
  std::vector<std::uint32_t> logb(inner * cols);
  for (std::size_t k = 0; k < inner * cols; ++k) logb[k] = B[k].code ? t.log[B[k].code] : kZero;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(rows); ++i) {
    Element* crow = C + i * cols;
    for (std::size_t k = 0; k < inner; ++k) {
      const std::uint32_t aik = A[i * inner + k].code;
      if (aik == 0) continue;
      const std::uint32_t la = t.log[aik];
      const std::uint32_t* lrow = logb.data() + k * cols;
      for (std::size_t j = 0; j < cols; ++j) {
        if (lrow[j] == kZero) continue;
        crow[j] = f.add(crow[j], Element{t.exp[la + lrow[j]]});
      }
    }
  }
  return c;
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b, Exec exec) {
  if (exec == Exec::Serial) return matmul_serial(a, b);
  if (a.field().degree() == 1) return matmul_prime_parallel(a, b);
  return matmul_ext_parallel(a, b);
}

void axpy(Matrix& dst, Element scale, const Matrix& src, Exec exec) {
  const Field& f = dst.field();
  if (scale == f.zero()) return;
  auto out = dst.data();
  auto in = src.data();
  const auto n = static_cast<std::ptrdiff_t>(out.size());
  if (exec == Exec::Serial) {
    for (std::ptrdiff_t k = 0; k < n; ++k) out[k] = f.add(out[k], f.mul(scale, in[k]));
    return;
  }
#pragma omp parallel for schedule(static) if (n > 4096)
  for (std::ptrdiff_t k = 0; k < n; ++k) out[k] = f.add(out[k], f.mul(scale, in[k]));
}

Reduction row_reduce(Matrix& m, std::size_t pivot_cols, Exec exec) {
  const Field& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  Reduction red;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m(pr, c) == f.zero()) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pr, j));

    const Element inv = f.inv(m(r, c));
    for (std::size_t j = c; j < cols; ++j) m(r, j) = f.mul(m(r, j), inv);
    red.mul_count += cols - c;

    const auto width = cols - c;
    std::uint64_t step_muls = 0;
    auto eliminate = [&](std::size_t i) {
      const Element factor = m(i, c);
      if (i == r || factor == f.zero()) return std::uint64_t{0};
      for (std::size_t j = c; j < cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
      return std::uint64_t{width};
    };
    if (exec == Exec::Serial) {
      for (std::size_t i = 0; i < rows; ++i) step_muls += eliminate(i);
    } else {
#pragma omp parallel for schedule(static) reduction(+ : step_muls) if (rows * width > 2048)
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(rows); ++i)
        step_muls += eliminate(static_cast<std::size_t>(i));
    }
    red.mul_count += step_muls;
    red.pivot_cols.push_back(c);
    ++r;
  }
  return red;
}

}  // namespace agdmm::kernels
