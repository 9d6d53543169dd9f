#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "agdmm/error.hpp"

namespace agdmm {

/// An element of GF(p^e) identified by its canonical integer code
/// sum(digits[i] * p^i), where digits are the coefficients in the
/// modulus basis. Elements carry no field; every operation goes through
/// the owning Field.
struct Element {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

/// Largest supported field order. All arithmetic is table driven.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

/// Immutable handle to GF(p^e). Copies share the same tables, so a Field is
/// cheap to pass by value and safe to read from any number of threads.
///
/// Multiplication goes through discrete log/exp tables and addition through
/// Zech logarithms, both built once from plain polynomial arithmetic modulo
/// the chosen irreducible polynomial.
class Field {
 public:
  /// Builds GF(p^e). Without an explicit modulus the monic irreducible with
  /// the smallest integer code (highest-degree coefficient compared first)
  /// is used. Coefficients are listed lowest degree first, e + 1 entries.
  static Field make(std::uint32_t p, std::uint32_t e,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t characteristic() const noexcept { return impl_->p; }
  std::uint32_t degree() const noexcept { return impl_->e; }
  std::uint32_t order() const noexcept { return impl_->q; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return impl_->modulus; }

  bool contains(Element a) const noexcept { return a.code < impl_->q; }

  Element zero() const noexcept { return Element{0}; }
  Element one() const noexcept { return Element{1}; }
  /// Checked conversion from a canonical code.
  Element from_code(std::uint64_t code) const;
  /// Image of an integer in the prime subfield.
  Element from_int(std::int64_t value) const noexcept;
  std::vector<std::uint32_t> digits(Element a) const;
  Element from_digits(std::span<const std::uint32_t> digits) const;

  Element add(Element a, Element b) const noexcept {
    check(a);
    check(b);
    const Impl& f = *impl_;
    if (f.e == 1) {
      std::uint32_t s = a.code + b.code;
      return Element{s >= f.p ? s - f.p : s};
    }
    if (a.code == 0) return b;
    if (b.code == 0) return a;
    std::uint32_t la = f.log[a.code];
    std::uint32_t lb = f.log[b.code];
    std::uint32_t k = lb >= la ? lb - la : lb + (f.q - 1) - la;
    std::uint32_t z = f.zech[k];
    if (z == kNoLog) return Element{0};
    return Element{f.exp[la + z]};
  }

  Element neg(Element a) const noexcept {
    check(a);
    return Element{impl_->negation[a.code]};
  }

  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

  Element mul(Element a, Element b) const noexcept {
    check(a);
    check(b);
    if (a.code == 0 || b.code == 0) return Element{0};
    const Impl& f = *impl_;
    return Element{f.exp[f.log[a.code] + f.log[b.code]]};
  }

  /// Throws DivisionByZero for a == 0.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t k) const noexcept;

  /// Absolute trace Tr_{p^e/p}(y) = y + y^p + ... + y^{p^(e-1)}.
  Element trace(Element y) const noexcept;

  /// All q elements in canonical code order.
  std::vector<Element> elements() const;

  /// All y with y^n == c, found by exhaustive scan. Sorted by code.
  std::vector<Element> nth_roots(Element c, std::uint64_t n) const;

  /// All y with Tr_{p^u/p}(y) == target, found by exhaustive scan.
  /// Requires q == p^u, otherwise FieldNotMatchingU.
  std::vector<Element> trace_preimages(std::uint32_t u, Element target) const;

  /// Smallest-code generator of the multiplicative group.
  Element primitive_element() const noexcept { return Element{impl_->exp[1]}; }

  /// True when `a` lies in GF(p).
  bool in_prime_subfield(Element a) const noexcept { return a.code < impl_->p; }

  /// Same characteristic, degree and modulus.
  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.impl_ == b.impl_ ||
           (a.impl_->p == b.impl_->p && a.impl_->e == b.impl_->e &&
            a.impl_->modulus == b.impl_->modulus);
  }

  /// Raw log/exp tables for the hot kernels in kernels.cpp.
  struct Tables {
    const std::uint32_t* log;
    const std::uint32_t* exp;  // length 2(q-1)
    std::uint32_t q;
    std::uint32_t p;
    std::uint32_t e;
  };
  Tables tables() const noexcept {
    return Tables{impl_->log.data(), impl_->exp.data(), impl_->q, impl_->p, impl_->e};
  }

 private:
  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  struct Impl {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> exp;
    std::vector<std::uint32_t> zech;
    std::vector<std::uint32_t> negation;
  };

  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  void check([[maybe_unused]] Element a) const noexcept { assert(a.code < impl_->q); }

  std::shared_ptr<const Impl> impl_;
};

/// Field construction helpers that work on plain coefficient vectors over
/// GF(p), lowest degree first. Exposed for tests and for modulus selection.
namespace gfp_poly {

bool is_prime(std::uint64_t n) noexcept;
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t e);
/// (a * b) mod modulus with a, b reduced digit vectors of length e.
std::vector<std::uint32_t> mulmod(std::span<const std::uint32_t> a,
                                  std::span<const std::uint32_t> b,
                                  std::span<const std::uint32_t> modulus, std::uint32_t p);

}  // namespace gfp_poly

}  // namespace agdmm
