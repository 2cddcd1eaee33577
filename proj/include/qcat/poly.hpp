#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials in q with exact integer coefficients.
 *
 * coeffs()[d] is the coefficient of q^d. The stored sequence never ends in a
 * zero, so the zero polynomial is the empty sequence and degree() is empty
 * for it.
 */

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace qcat {

using Integer = mpz_class;

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Integer> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Integer& c);
  static Poly monomial(const Integer& c, std::size_t degree);

  std::span<const Integer> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }

  // Empty for the zero polynomial (degree minus infinity).
  std::optional<std::size_t> degree() const;

  // Coefficient of q^d; zero past the end.
  Integer operator[](std::size_t d) const;

  // Precondition: !is_zero().
  const Integer& leading() const { return coeffs_.back(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend bool operator==(const Poly& lhs, const Poly& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }

  // *this += q^offset * a * b without materializing the product.
  void add_shifted_product(const Poly& a, const Poly& b, std::size_t offset);

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

// q^m * a
Poly shift(const Poly& a, std::size_t m);

struct Violation {
  std::size_t degree;
  Integer coeff;

  friend bool operator==(const Violation&, const Violation&) = default;
};

bool is_nonneg(const Poly& a);

// Lowest-degree negative coefficient, if any.
std::optional<Violation> first_negative(const Poly& a);

Integer eval_one(const Poly& a);

/// Parses terms "c", "q", "c*q", "q^d", "c*q^d" joined by '+' or '-'.
/// Whitespace is ignored; repeated degrees accumulate. Throws ParseError.
Poly parse_poly(std::string_view text);

/// Ascending-degree text form, e.g. "1 + q + 2*q^2 + q^3". Zero is "0".
std::string format_poly(const Poly& a);

// Array of decimal coefficient strings, index = degree.
nlohmann::json poly_to_json(const Poly& a);
Poly poly_from_json(const nlohmann::json& j);

}  // namespace qcat
