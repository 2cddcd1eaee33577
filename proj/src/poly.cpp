#include "qcat/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qcat/errors.hpp"

namespace qcat {

Poly::Poly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Poly Poly::constant(const Integer& c) { return monomial(c, 0); }

Poly Poly::monomial(const Integer& c, std::size_t degree) {
  if (c == 0) return Poly{};
  std::vector<Integer> coeffs(degree + 1);
  coeffs[degree] = c;
  Poly p;
  p.coeffs_ = std::move(coeffs);
  return p;
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Integer Poly::operator[](std::size_t d) const {
  return d < coeffs_.size() ? coeffs_[d] : Integer(0);
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

void Poly::add_shifted_product(const Poly& a, const Poly& b, std::size_t offset) {
  if (a.is_zero() || b.is_zero()) return;
  const std::size_t top = offset + a.coeffs_.size() + b.coeffs_.size() - 1;
  if (coeffs_.size() < top) coeffs_.resize(top);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    Integer* row = coeffs_.data() + offset + i;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(row[j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  normalize();
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  Poly out;
  out.add_shifted_product(lhs, rhs, 0);
  return out;
}

Poly shift(const Poly& a, std::size_t m) {
  if (a.is_zero() || m == 0) return a;
  std::vector<Integer> coeffs(m + a.size());
  std::copy(a.coeffs().begin(), a.coeffs().end(), coeffs.begin() + static_cast<std::ptrdiff_t>(m));
  return Poly(std::move(coeffs));
}

bool is_nonneg(const Poly& a) { return !first_negative(a).has_value(); }

std::optional<Violation> first_negative(const Poly& a) {
  const auto coeffs = a.coeffs();
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d] < 0) return Violation{d, coeffs[d]};
  }
  return std::nullopt;
}

Integer eval_one(const Poly& a) {
  Integer sum = 0;
  for (const auto& c : a.coeffs()) sum += c;
  return sum;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse() {
    std::vector<Integer> coeffs;
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);

    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      auto [coeff, degree] = term();
      if (negative) coeff = -coeff;
      if (coeffs.size() <= degree) coeffs.resize(degree + 1);
      coeffs[degree] += coeff;

      skip_space();
      if (pos_ == text_.size()) break;
      if (peek() != '+' && peek() != '-') throw ParseError("expected '+' or '-'", pos_);
      negative = peek() == '-';
      ++pos_;
    }
    return Poly(std::move(coeffs));
  }

 private:
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t exponent() {
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 9) throw ParseError("exponent too large", at);
    return static_cast<std::size_t>(std::stoul(d));
  }

  // After 'q': optional "^d".
  std::size_t power_of_q() {
    skip_space();
    if (pos_ < text_.size() && peek() == '^') {
      ++pos_;
      return exponent();
    }
    return 1;
  }

  std::pair<Integer, std::size_t> term() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("expected term", pos_);
    if (peek() == 'q') {
      ++pos_;
      return {Integer(1), power_of_q()};
    }
    Integer coeff(digits());
    skip_space();
    if (pos_ < text_.size() && peek() == '*') {
      ++pos_;
      skip_space();
      if (pos_ == text_.size() || peek() != 'q') throw ParseError("expected 'q'", pos_);
      ++pos_;
      return {coeff, power_of_q()};
    }
    return {coeff, 0};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string format_poly(const Poly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto coeffs = a.coeffs();
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    const Integer& c = coeffs[d];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;

    if (d == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'q';
    if (d > 1) out << '^' << d;
  }
  return out.str();
}

nlohmann::json poly_to_json(const Poly& a) {
  auto arr = nlohmann::json::array();
  for (const auto& c : a.coeffs()) arr.push_back(c.get_str());
  return arr;
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array", 0);
  std::vector<Integer> coeffs;
  coeffs.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw ParseError("coefficient must be a decimal string", i);
    Integer c;
    if (c.set_str(j[i].get<std::string>(), 10) != 0) {
      throw ParseError("malformed coefficient", i);
    }
    coeffs.push_back(std::move(c));
  }
  return Poly(std::move(coeffs));
}

}  // namespace qcat
