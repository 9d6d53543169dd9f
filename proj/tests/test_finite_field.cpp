#include <doctest.h>

#include <numeric>
#include <set>

#include "agdmm/error.hpp"
#include "agdmm/finite_field.hpp"
#include "support.hpp"

using namespace agdmm;
using testing::Gen;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an agdmm::Error");
  return ErrorCode::InvalidArgument;
}

const std::uint32_t kFields[][2] = {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {5, 2}, {7, 2}, {3, 3}, {2, 4}};

}  // namespace

TEST_CASE("construction") {
  const Field gf5 = Field::make(5, 1);
  CHECK(gf5.order() == 5);
  CHECK(gf5.degree() == 1);

  const Field gf25 = Field::make(5, 2);
  CHECK(gf25.order() == 25);
  CHECK(gf25.modulus() == std::vector<std::uint32_t>{2, 0, 1});
  CHECK(testing::brute_irreducible(gf25.modulus(), 5));

  CHECK(code_of([] { Field::make(4, 1); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { Field::make(5, 2, std::vector<std::uint32_t>{2, 0, 2}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Field::make(5, 2, std::vector<std::uint32_t>{4, 0, 1}); }) == ErrorCode::ReducibleModulus);
  CHECK(code_of([] { Field::make(2, 17); }) == ErrorCode::FieldTooLarge);
}

TEST_CASE("default modulus is the smallest irreducible by code") {
  for (auto [p, e] : kFields) {
    if (e == 1) continue;
    const Field f = Field::make(p, e);
    // Scan monic polynomials in order of their integer code (highest
    // coefficient most significant) and take the first irreducible one.
    testing::Poly want;
    for (const auto& cand : testing::monic_polys(p, e))
      if (testing::brute_irreducible(cand, p)) {
        want = cand;
        break;
      }
    CHECK(f.modulus() == want);
  }
  CHECK(Field::make(3, 3).modulus() == std::vector<std::uint32_t>{1, 2, 0, 1});
}

TEST_CASE("irreducibility agrees with brute force") {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::uint32_t d : {2u, 3u, 4u}) {
      if (p == 5 && d == 4) continue;
      for (const auto& poly : testing::monic_polys(p, d))
        CHECK(gfp_poly::is_irreducible(poly, p) == testing::brute_irreducible(poly, p));
    }
}

TEST_CASE("small-field arithmetic") {
  const Field f = Field::make(5, 1);
  CHECK(f.add(Element{2}, Element{4}) == Element{1});
  CHECK(f.mul(Element{3}, Element{3}) == Element{4});
  CHECK(f.inv(Element{2}) == Element{3});
  CHECK(code_of([&] { f.inv(f.zero()); }) == ErrorCode::DivisionByZero);
  CHECK(f.from_int(-1) == Element{4});
  CHECK(code_of([&] { f.from_code(5); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("multiplication matches polynomial reduction") {
  for (auto [p, e] : kFields) {
    const Field f = Field::make(p, e);
    for (std::uint32_t a = 0; a < f.order(); ++a)
      for (std::uint32_t b = 0; b < f.order(); ++b) {
        const auto prod = testing::poly_mod(
            testing::poly_mul(testing::code_to_poly(a, p, e), testing::code_to_poly(b, p, e), p), f.modulus(), p);
        const auto sum_digits = [&] {
          testing::Poly s(e, 0);
          auto da = testing::code_to_poly(a, p, e), db = testing::code_to_poly(b, p, e);
          da.resize(e, 0);
          db.resize(e, 0);
          for (std::uint32_t i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
          testing::trim(s);
          return s;
        }();
        REQUIRE(f.mul(Element{a}, Element{b}).code == testing::poly_to_code(prod, p));
        REQUIRE(f.add(Element{a}, Element{b}).code == testing::poly_to_code(sum_digits, p));
      }
  }
  // theta^2 = -2 = 3 in GF(25) with modulus x^2 + 2.
  const Field gf25 = Field::make(5, 2);
  CHECK(gf25.mul(Element{5}, Element{5}) == Element{3});
}

TEST_CASE("field axioms on random triples") {
  Gen gen(11);
  for (auto [p, e] : kFields) {
    const Field f = Field::make(p, e);
    for (int t = 0; t < 300; ++t) {
      const Element a = gen.element(f), b = gen.element(f), c = gen.element(f);
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.add(a, f.neg(a)) == f.zero());
    }
  }
}

TEST_CASE("inverses, exhaustive for q <= 49") {
  for (auto [p, e] : {std::pair{5u, 2u}, {7u, 2u}, {3u, 3u}, {7u, 1u}}) {
    const Field f = Field::make(p, e);
    for (std::uint32_t a = 1; a < f.order(); ++a) CHECK(f.mul(Element{a}, f.inv(Element{a})) == f.one());
  }
}

TEST_CASE("pow and the primitive element") {
  const Field f = Field::make(3, 3);
  Gen gen(3);
  for (int t = 0; t < 50; ++t) {
    const Element a = gen.element(f);
    const std::uint64_t k = gen.below(100);
    CHECK(f.pow(a, k) == testing::power_by_repetition(f, a, k));
  }
  std::set<std::uint32_t> powers;
  Element g = f.primitive_element(), x = f.one();
  for (std::uint32_t i = 0; i < f.order() - 1; ++i, x = f.mul(x, g)) powers.insert(x.code);
  CHECK(powers.size() == f.order() - 1);
  CHECK(f.primitive_element() == Element{3});
}

TEST_CASE("nth roots") {
  const Field gf5 = Field::make(5, 1);
  CHECK(gf5.nth_roots(Element{2}, 3) == std::vector<Element>{Element{3}});
  CHECK(gf5.nth_roots(gf5.zero(), 4) == std::vector<Element>{Element{0}});
  const Field gf25 = Field::make(5, 2);
  CHECK(gf25.nth_roots(gf25.one(), 8).size() == 8);

  // Fibres of y -> y^n partition the field and have size 0 or gcd(n, q-1).
  for (auto [p, e] : kFields) {
    const Field f = Field::make(p, e);
    for (std::uint64_t n : {2u, 3u, 4u, 6u, 8u}) {
      const std::uint64_t d = std::gcd<std::uint64_t>(n, f.order() - 1);
      std::size_t total = 0;
      for (const Element c : f.elements()) {
        const auto roots = f.nth_roots(c, n);
        if (c != f.zero()) CHECK((roots.empty() || roots.size() == d));
        for (Element y : roots) CHECK(testing::power_by_repetition(f, y, n) == c);
        total += roots.size();
      }
      CHECK(total == f.order());
    }
  }
}

TEST_CASE("trace preimages") {
  const Field gf9 = Field::make(3, 2);
  CHECK(gf9.trace_preimages(2, gf9.zero()).size() == 3);
  CHECK(gf9.trace_preimages(2, Element{3}).empty());
  const Field gf27 = Field::make(3, 3);
  CHECK(gf27.trace_preimages(3, gf27.one()).size() == 9);
  CHECK(code_of([&] { gf27.trace_preimages(2, gf27.one()); }) == ErrorCode::FieldNotMatchingU);

  for (auto [p, e] : kFields) {
    const Field f = Field::make(p, e);
    std::size_t total = 0;
    for (std::uint32_t t = 0; t < p; ++t) {
      const auto pre = f.trace_preimages(e, Element{t});
      for (Element y : pre) CHECK(testing::trace_by_repetition(f, y) == Element{t});
      total += pre.size();
    }
    CHECK(total == f.order());
  }
}

TEST_CASE("elements and the digit codec") {
  CHECK(Field::make(5, 1).elements() == std::vector<Element>{{0}, {1}, {2}, {3}, {4}});
  for (auto [p, e] : kFields) {
    const Field f = Field::make(p, e);
    const auto all = f.elements();
    CHECK(all.size() == f.order());
    CHECK(std::set<Element>(all.begin(), all.end()).size() == f.order());
    for (Element a : all) {
      const auto d = f.digits(a);
      CHECK(d.size() == e);
      CHECK(f.from_digits(d) == a);
    }
  }
}
