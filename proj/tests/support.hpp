#pragma once

// Test-side generators and oracles. Nothing here calls the library's
// solvers, enumerators or polynomial helpers; oracles only use Field for
// single-element add/mul.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "agdmm/finite_field.hpp"
#include "agdmm/function_field.hpp"
#include "agdmm/matrix.hpp"

namespace testing {

// splitmix64 stream, independent of the library's Rng.
struct Gen {
  std::uint64_t state;
  explicit Gen(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  agdmm::Element element(const agdmm::Field& f) { return agdmm::Element{static_cast<std::uint32_t>(below(f.order()))}; }
  agdmm::Element nonzero(const agdmm::Field& f) {
    return agdmm::Element{static_cast<std::uint32_t>(1 + below(f.order() - 1))};
  }
  // k distinct values from [0, n), in random order.
  std::vector<std::size_t> distinct(std::size_t n, std::size_t k) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[i + below(n - i)]);
    all.resize(k);
    return all;
  }
  agdmm::Matrix matrix(const agdmm::Field& f, std::size_t rows, std::size_t cols) {
    agdmm::Matrix m(f, rows, cols);
    for (auto& e : m.data()) e = element(f);
    return m;
  }
};

inline agdmm::Matrix naive_matmul(const agdmm::Matrix& a, const agdmm::Matrix& b) {
  const agdmm::Field& f = a.field();
  agdmm::Matrix c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      agdmm::Element acc = f.zero();
      for (std::size_t k = 0; k < a.cols(); ++k) acc = f.add(acc, f.mul(a(i, k), b(k, j)));
      c(i, j) = acc;
    }
  return c;
}

inline agdmm::Element power_by_repetition(const agdmm::Field& f, agdmm::Element a, std::uint64_t n) {
  agdmm::Element r = f.one();
  for (std::uint64_t i = 0; i < n; ++i) r = f.mul(r, a);
  return r;
}

// y + y^p + ... + y^(p^(u-1)) by repeated multiplication.
inline agdmm::Element trace_by_repetition(const agdmm::Field& f, agdmm::Element y) {
  agdmm::Element sum = f.zero(), term = y;
  for (std::uint32_t i = 0; i < f.degree(); ++i) {
    sum = f.add(sum, term);
    term = power_by_repetition(f, term, f.characteristic());
  }
  return sum;
}

// Polynomials over GF(p) as coefficient vectors, lowest degree first.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

// Remainder of a modulo a monic polynomial.
inline Poly poly_mod(Poly a, const Poly& monic, std::uint32_t p) {
  trim(a);
  const std::size_t d = monic.size() - 1;
  while (a.size() > d) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) a[shift + i] = (a[shift + i] + (p - lead) * monic[i] % p) % p;
    trim(a);
  }
  return a;
}

// Every monic polynomial of the given degree.
inline std::vector<Poly> monic_polys(std::uint32_t p, std::uint32_t degree) {
  std::vector<Poly> out;
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < degree; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly poly(degree + 1, 0);
    std::uint64_t v = c;
    for (std::uint32_t i = 0; i < degree; ++i, v /= p) poly[i] = static_cast<std::uint32_t>(v % p);
    poly[degree] = 1;
    out.push_back(poly);
  }
  return out;
}

// Irreducible iff no monic factor of degree 1..deg/2 divides it.
inline bool brute_irreducible(const Poly& poly, std::uint32_t p) {
  const std::uint32_t d = static_cast<std::uint32_t>(poly.size() - 1);
  for (std::uint32_t k = 1; 2 * k <= d; ++k)
    for (const Poly& f : monic_polys(p, k))
      if (poly_mod(poly, f, p).empty()) return false;
  return true;
}

inline Poly code_to_poly(std::uint32_t code, std::uint32_t p, std::uint32_t e) {
  Poly out(e, 0);
  for (std::uint32_t i = 0; i < e; ++i, code /= p) out[i] = code % p;
  trim(out);
  return out;
}

inline std::uint32_t poly_to_code(const Poly& a, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

// Determinant by cofactor expansion; only for tiny matrices.
inline agdmm::Element det(const agdmm::Field& f, const std::vector<std::vector<agdmm::Element>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return f.one();
  if (n == 1) return m[0][0];
  agdmm::Element total = f.zero();
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<agdmm::Element>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<agdmm::Element> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    agdmm::Element term = f.mul(m[0][c], det(f, minor));
    total = c % 2 == 0 ? f.add(total, term) : f.sub(total, term);
  }
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k, const auto& visit) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Largest k with a nonzero k x k minor.
inline std::size_t rank_by_minors(const agdmm::Matrix& m) {
  const agdmm::Field& f = m.field();
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    bool found = false;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      if (found) return;
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        if (found) return;
        std::vector<std::vector<agdmm::Element>> sub(k, std::vector<agdmm::Element>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rows[i], cols[j]);
        if (det(f, sub) != f.zero()) found = true;
      });
    });
    if (found) return k;
  }
  return 0;
}

// Rational place count from a scan over every (x, y) pair plus the places
// above the poles of u and above x = infinity.
//   Kummer: zeros and poles of u and infinity are totally ramified.
//   Trace:  only poles of u ramify; zeros split like any other fibre, and
//           when u vanishes at infinity so does the infinite fibre.
inline std::size_t brute_place_count(const agdmm::CurveSpec& c) {
  const agdmm::Field& f = c.field;
  const std::size_t q = f.order();
  if (c.kind == agdmm::CurveKind::Rational) return q + 1;
  auto is_in = [](const std::vector<agdmm::Element>& v, agdmm::Element e) {
    return std::find(v.begin(), v.end(), e) != v.end();
  };
  std::size_t count = 0;
  for (std::uint32_t xc = 0; xc < q; ++xc) {
    const agdmm::Element x{xc};
    if (is_in(c.den_roots, x)) {
      ++count;
      continue;
    }
    agdmm::Element u = f.one();
    for (auto a : c.num_roots) u = f.mul(u, f.sub(x, a));
    for (auto b : c.den_roots) u = f.div(u, f.sub(x, b));
    for (std::uint32_t yc = 0; yc < q; ++yc) {
      const agdmm::Element y{yc};
      const agdmm::Element lhs =
          c.kind == agdmm::CurveKind::Kummer ? power_by_repetition(f, y, c.m_or_u) : trace_by_repetition(f, y);
      if (lhs == u) ++count;
    }
  }
  if (c.kind == agdmm::CurveKind::Kummer || c.num_roots.size() > c.den_roots.size()) {
    ++count;
  } else {
    for (std::uint32_t yc = 0; yc < q; ++yc)
      if (trace_by_repetition(f, agdmm::Element{yc}) == f.zero()) ++count;
  }
  return count;
}

// Random validated Kummer or trace curve over the given field.
inline agdmm::CurveSpec random_curve(Gen& gen, const agdmm::Field& f) {
  while (true) {
    const std::size_t l = 1 + gen.below(std::min<std::size_t>(4, f.order() / 2));
    const bool more_num = gen.below(2) == 0;
    const std::size_t nn = more_num ? l : l - 1, nd = more_num ? l - 1 : l;
    if (nn + nd == 0) continue;
    const auto idx = gen.distinct(f.order(), nn + nd);
    std::vector<agdmm::Element> num, den;
    for (std::size_t i = 0; i < idx.size(); ++i) (i < nn ? num : den).push_back(agdmm::Element{std::uint32_t(idx[i])});
    const bool trace = gen.below(3) == 0;
    if (trace) return agdmm::CurveSpec::trace(f, f.degree(), num, den);
    std::uint32_t m = 2 + static_cast<std::uint32_t>(gen.below(9));
    if (std::gcd<std::uint32_t>(m, f.order()) != 1) continue;
    return agdmm::CurveSpec::kummer(f, m, num, den);
  }
}

}  // namespace testing
