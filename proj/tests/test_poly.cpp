#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <vector>

#include "qcat/errors.hpp"
#include "qcat/poly.hpp"

using qcat::Integer;
using qcat::Poly;

namespace {

// Independent schoolbook convolution on machine integers.
std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& a,
                                   const std::vector<std::int64_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly from_ints(const std::vector<std::int64_t>& v) {
  std::vector<Integer> c;
  for (auto x : v) c.emplace_back(static_cast<long>(x));
  return Poly(std::move(c));
}

Poly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 7);
  std::uniform_int_distribution<long> coeff(-20, 20);
  std::vector<Integer> c(static_cast<std::size_t>(len(rng)));
  for (auto& x : c) x = coeff(rng);
  return Poly(std::move(c));
}

const Poly kC2{1, 1};
const Poly kC3{1, 1, 2, 1};
const Poly kC4{1, 1, 2, 3, 3, 3, 1};

}  // namespace

TEST_CASE("add") {
  const Poly p{1, 1};
  CHECK(p + Poly{} == p);
  CHECK((p + Poly{-1, -1}).is_zero());
  CHECK(p + p == Poly{2, 2});
}

TEST_CASE("sub") {
  CHECK((Poly{1, 1} - Poly{1, 1}).is_zero());
  CHECK(Poly{1, 1, 2, 1} - shift(Poly{1, 2, 1}, 1) == Poly{1});

  const Poly gap = kC2 * kC4 - kC3 * kC3;
  const auto expected = convolve({1, 1}, {1, 1, 2, 3, 3, 3, 1});
  const auto square = convolve({1, 1, 2, 1}, {1, 1, 2, 1});
  std::vector<std::int64_t> diff(expected.size(), 0);
  for (std::size_t i = 0; i < expected.size(); ++i) diff[i] = expected[i] - (i < square.size() ? square[i] : 0);
  CHECK(gap == from_ints(diff));
  CHECK(gap[2] == -2);
}

TEST_CASE("mul") {
  CHECK(Poly{1, 1} * Poly{1, 1} == Poly{1, 2, 1});
  CHECK((Poly{3, 4} * Poly{}).is_zero());
  CHECK((Poly{} * Poly{3, 4}).is_zero());
  CHECK(kC2 * kC4 == Poly{1, 2, 3, 5, 6, 6, 4, 1});
}

TEST_CASE("mul does not overflow") {
  Poly p = Poly::monomial(Integer("9223372036854775807"), 0) + Poly{0, 1};
  const Poly sq = p * p;
  CHECK(sq[0] == Integer("85070591730234615847396907784232501249"));
  CHECK(sq[1] == Integer("18446744073709551614"));
  CHECK(sq[2] == 1);
}

TEST_CASE("shift") {
  CHECK(shift(Poly{1, 1}, 0) == Poly{1, 1});
  CHECK(shift(Poly{1, 1}, 2) == Poly{0, 0, 1, 1});
  CHECK(shift(kC3, 3) == Poly{0, 0, 0, 1, 1, 2, 1});
  CHECK(shift(Poly{}, 5).is_zero());
}

TEST_CASE("degree and canonical form") {
  CHECK_FALSE(Poly{}.degree().has_value());
  CHECK_FALSE(Poly{0, 0, 0}.degree().has_value());
  CHECK(Poly{0, 0, 0}.coeffs().empty());
  CHECK(*Poly{1, 2, 0, 0}.degree() == 1);
  CHECK(Poly{1, 2, 0} == Poly{1, 2});
  CHECK(Poly{5}[10] == 0);
}

TEST_CASE("nonnegativity") {
  CHECK(is_nonneg(Poly{1, 1}));
  CHECK(is_nonneg(Poly{}));
  CHECK_FALSE(first_negative(Poly{}).has_value());

  const auto v = first_negative(kC2 * kC4 - kC3 * kC3);
  REQUIRE(v.has_value());
  CHECK(v->degree == 2);
  CHECK(v->coeff == -2);
  CHECK_FALSE(is_nonneg(Poly{1, -1, -5}));
  CHECK(first_negative(Poly{1, -1, -5})->degree == 1);
}

TEST_CASE("eval_one") {
  CHECK(eval_one(kC4) == 14);
  CHECK(eval_one(kC3) == 5);
  CHECK(eval_one(Poly{}) == 0);
}

TEST_CASE("parse") {
  CHECK(qcat::parse_poly("1 + q + 2*q^2 + q^3") == kC3);
  CHECK(qcat::parse_poly("0").is_zero());
  CHECK(qcat::parse_poly("-1 - q^2") == Poly{-1, 0, -1});
  CHECK(qcat::parse_poly("q^2+q^2+3") == Poly{3, 0, 2});
  CHECK(qcat::parse_poly("2*q") == Poly{0, 2});
  CHECK(qcat::parse_poly("q - q").is_zero());
  CHECK(qcat::parse_poly("123456789012345678901234567890*q")[1] ==
        Integer("123456789012345678901234567890"));
}

TEST_CASE("parse errors carry positions") {
  const auto position_of = [](const char* text) -> std::size_t {
    try {
      qcat::parse_poly(text);
    } catch (const qcat::ParseError& e) {
      return e.position();
    }
    FAIL("no error for " << text);
    return 0;
  };
  CHECK(position_of("") == 0);
  CHECK(position_of("1 +") == 3);
  CHECK(position_of("1 + x") == 4);
  CHECK(position_of("2*") == 2);
  CHECK(position_of("q^") == 2);
  CHECK(position_of("1 2") == 2);
}

TEST_CASE("format") {
  CHECK(format_poly(kC3) == "1 + q + 2*q^2 + q^3");
  CHECK(format_poly(Poly{1, 0, 1}) == "1 + q^2");
  CHECK(format_poly(Poly{}) == "0");
  CHECK(format_poly(Poly{0, -1, 0, 3}) == "-q + 3*q^3");
  CHECK(format_poly(Poly{-2, 0, -1}) == "-2 - q^2");
}

TEST_CASE("json form") {
  const auto j = poly_to_json(Poly{1, 0, -3});
  CHECK(j.dump() == R"(["1","0","-3"])");
  CHECK(qcat::poly_from_json(j) == Poly{1, 0, -3});
  CHECK(qcat::poly_from_json(nlohmann::json::array()).is_zero());
  CHECK_THROWS_AS(qcat::poly_from_json(nlohmann::json::parse(R"([1])")), qcat::ParseError);
  CHECK_THROWS_AS(qcat::poly_from_json(nlohmann::json::parse(R"(["1x"])")), qcat::ParseError);
}

TEST_CASE("property: ring axioms and homomorphism at q = 1") {
  std::mt19937_64 rng(20240917);
  for (int trial = 0; trial < 300; ++trial) {
    const Poly a = random_poly(rng);
    const Poly b = random_poly(rng);
    const Poly c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * Poly{1} == a);
    CHECK(a + Poly{} == a);
    CHECK((a - a).is_zero());
    CHECK(eval_one(a * b) == eval_one(a) * eval_one(b));
    if (!a.is_zero() && !b.is_zero()) {
      CHECK(*(a * b).degree() == *a.degree() + *b.degree());
      CHECK((a * b).leading() == a.leading() * b.leading());
    }
  }
}

TEST_CASE("property: product agrees with machine-integer convolution") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(0, 9);
  std::uniform_int_distribution<std::int64_t> coeff(-1000, 1000);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(len(rng)));
    std::vector<std::int64_t> b(static_cast<std::size_t>(len(rng)));
    for (auto& x : a) x = coeff(rng);
    for (auto& x : b) x = coeff(rng);
    CHECK(from_ints(a) * from_ints(b) == from_ints(convolve(a, b)));
  }
}

TEST_CASE("property: format/parse round trip") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const Poly a = random_poly(rng);
    CHECK(qcat::parse_poly(format_poly(a)) == a);
    CHECK(qcat::poly_from_json(poly_to_json(a)) == a);
  }
}
