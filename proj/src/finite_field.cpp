#include "agdmm/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace agdmm {

namespace gfp_poly {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime: a^(p-2)
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t k = p - 2; k; k >>= 1) {
    if (k & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over GF(p); b nonzero after trimming.
Poly remainder(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = std::uint64_t(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t lower = 0; lower < count; ++lower) {
      Poly g(d + 1);
      std::uint64_t v = lower;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (remainder(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t e) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t lower = 0; lower < count; ++lower) {
    Poly f(e + 1);
    std::uint64_t v = lower;
    for (std::uint32_t i = 0; i < e; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[e] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorCode::ReducibleModulus, "no irreducible polynomial found");
}

std::vector<std::uint32_t> mulmod(std::span<const std::uint32_t> a,
                                  std::span<const std::uint32_t> b,
                                  std::span<const std::uint32_t> modulus, std::uint32_t p) {
  const std::size_t e = modulus.size() - 1;
  std::vector<std::uint64_t> wide(2 * e, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) wide[i + j] = (wide[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  // modulus is monic
  for (std::size_t k = wide.size(); k-- > e;) {
    const std::uint64_t c = wide[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= e; ++i)
      wide[k - e + i] = (wide[k - e + i] + p - c * modulus[i] % p) % p;
  }
  return std::vector<std::uint32_t>(wide.begin(), wide.begin() + static_cast<std::ptrdiff_t>(e));
}

}  // namespace gfp_poly

Field Field::make(std::uint32_t p, std::uint32_t e, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!gfp_poly::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t q64 = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q64 *= p;
    if (q64 > kMaxFieldOrder)
      throw Error(ErrorCode::FieldTooLarge, "field order exceeds " + std::to_string(kMaxFieldOrder));
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->e = e;
  impl->q = static_cast<std::uint32_t>(q64);

  if (modulus) {
    if (modulus->size() != e + 1 || modulus->back() != 1)
      throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree " + std::to_string(e));
    for (auto c : *modulus)
      if (c >= p) throw Error(ErrorCode::InvalidArgument, "modulus coefficient out of range");
    if (!gfp_poly::is_irreducible(*modulus, p))
      throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
    impl->modulus = *modulus;
  } else {
    impl->modulus = gfp_poly::smallest_irreducible(p, e);
  }

  const std::uint32_t q = impl->q;
  auto to_digits = [&](std::uint32_t code) {
    std::vector<std::uint32_t> d(e);
    for (std::uint32_t i = 0; i < e; ++i) {
      d[i] = code % p;
      code /= p;
    }
    return d;
  };
  auto to_code = [&](const std::vector<std::uint32_t>& d) {
    std::uint32_t code = 0;
    for (std::uint32_t i = e; i-- > 0;) code = code * p + d[i];
    return code;
  };

  impl->negation.resize(q);
  for (std::uint32_t c = 0; c < q; ++c) {
    auto d = to_digits(c);
    for (auto& x : d) x = (p - x) % p;
    impl->negation[c] = to_code(d);
  }

  // Smallest-code generator of the multiplicative group, found with the
  // plain polynomial product so the tables never depend on themselves.
  impl->log.assign(q, kNoLog);
  impl->exp.assign(2 * (q - 1), 0);
  if (q == 2) {
    impl->exp = {1, 1};
    impl->log[1] = 0;
  } else {
    for (std::uint32_t g = 2; g < q; ++g) {
      const auto gd = to_digits(g);
      std::vector<std::uint32_t> cur = to_digits(1);
      std::vector<std::uint32_t> powers;
      powers.reserve(q - 1);
      bool primitive = true;
      for (std::uint32_t k = 0; k < q - 1; ++k) {
        const std::uint32_t code = to_code(cur);
        if (k > 0 && code == 1) {
          primitive = false;
          break;
        }
        powers.push_back(code);
        cur = gfp_poly::mulmod(cur, gd, impl->modulus, p);
      }
      if (!primitive) continue;
      for (std::uint32_t k = 0; k < q - 1; ++k) {
        impl->exp[k] = powers[k];
        impl->exp[k + q - 1] = powers[k];
        impl->log[powers[k]] = k;
      }
      break;
    }
  }

  impl->zech.assign(q - 1, kNoLog);
  for (std::uint32_t k = 0; k < q - 1; ++k) {
    auto d = to_digits(impl->exp[k]);
    d[0] = (d[0] + 1) % p;
    const std::uint32_t code = to_code(d);
    impl->zech[k] = code == 0 ? kNoLog : impl->log[code];
  }

  return Field(std::move(impl));
}

Element Field::from_code(std::uint64_t code) const {
  if (code >= impl_->q)
    throw Error(ErrorCode::InvalidArgument,
                "element code " + std::to_string(code) + " out of range for GF(" + std::to_string(impl_->q) + ")");
  return Element{static_cast<std::uint32_t>(code)};
}

Element Field::from_int(std::int64_t value) const noexcept {
  const std::int64_t p = impl_->p;
  return Element{static_cast<std::uint32_t>(((value % p) + p) % p)};
}

std::vector<std::uint32_t> Field::digits(Element a) const {
  check(a);
  std::vector<std::uint32_t> d(impl_->e);
  std::uint32_t code = a.code;
  for (auto& x : d) {
    x = code % impl_->p;
    code /= impl_->p;
  }
  return d;
}

Element Field::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != impl_->e) throw Error(ErrorCode::InvalidArgument, "digit vector has wrong length");
  std::uint32_t code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= impl_->p) throw Error(ErrorCode::InvalidArgument, "digit out of range");
    code = code * impl_->p + digits[i];
  }
  return Element{code};
}

Element Field::inv(Element a) const {
  check(a);
  if (a.code == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const Impl& f = *impl_;
  const std::uint32_t l = f.log[a.code];
  return Element{f.exp[l == 0 ? 0 : (f.q - 1) - l]};
}

Element Field::pow(Element a, std::uint64_t k) const noexcept {
  check(a);
  if (k == 0) return one();
  if (a.code == 0) return zero();
  const Impl& f = *impl_;
  const std::uint64_t l = (std::uint64_t(f.log[a.code]) * (k % (f.q - 1))) % (f.q - 1);
  return Element{f.exp[l]};
}

Element Field::trace(Element y) const noexcept {
  Element sum = zero();
  Element frob = y;
  for (std::uint32_t i = 0; i < impl_->e; ++i) {
    sum = add(sum, frob);
    frob = pow(frob, impl_->p);
  }
  return sum;
}

std::vector<Element> Field::elements() const {
  std::vector<Element> out(impl_->q);
  for (std::uint32_t c = 0; c < impl_->q; ++c) out[c] = Element{c};
  return out;
}

std::vector<Element> Field::nth_roots(Element c, std::uint64_t n) const {
  check(c);
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "root degree must be >= 1");
  std::vector<Element> roots;
  for (std::uint32_t y = 0; y < impl_->q; ++y)
    if (pow(Element{y}, n) == c) roots.push_back(Element{y});
  return roots;
}

std::vector<Element> Field::trace_preimages(std::uint32_t u, Element target) const {
  check(target);
  if (u != impl_->e)
    throw Error(ErrorCode::FieldNotMatchingU,
                "trace Tr_{p^" + std::to_string(u) + "/p} needs q = p^" + std::to_string(u));
  std::vector<Element> out;
  for (std::uint32_t y = 0; y < impl_->q; ++y)
    if (trace(Element{y}) == target) out.push_back(Element{y});
  return out;
}

}  // namespace agdmm
