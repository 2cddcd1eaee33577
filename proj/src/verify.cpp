#include "qcat/verify.hpp"

#include <algorithm>

#include "qcat/catalan.hpp"
#include "qcat/errors.hpp"
#include "qcat/inject.hpp"

namespace qcat {

GapReport theorem_gap(std::size_t k, std::size_t l) {
  if (k < 1 || k > l) {
    throw PreconditionError("theorem gap needs 1 <= k <= l (k=" + std::to_string(k) +
                            ", l=" + std::to_string(l) + ")");
  }
  return corollary_gap(k, l, 1);
}

GapReport corollary_gap(std::size_t k, std::size_t l, std::size_t r) {
  check_admissible(k, l, r);
  const Poly minuend = q_catalan(k - r) * q_catalan(l + r);
  const Poly product = q_catalan(k) * q_catalan(l);

  GapReport rep;
  rep.k = k;
  rep.l = l;
  rep.r = r;
  rep.degree_minuend = *minuend.degree();
  rep.degree_subtrahend = *product.degree() + shift_exponent(k, l, r);
  rep.gap = minuend - shift(product, shift_exponent(k, l, r));
  rep.first_violation = first_negative(rep.gap);
  rep.nonneg = !rep.first_violation.has_value();
  return rep;
}

SharpnessReport sharpness_check(std::size_t k, std::size_t l, std::size_t r) {
  check_admissible(k, l, r);
  const auto binom2 = [](std::size_t n) { return n == 0 ? std::size_t{0} : n * (n - 1) / 2; };

  SharpnessReport rep;
  rep.degree_equal =
      binom2(k - r) + binom2(l + r) == shift_exponent(k, l, r) + binom2(k) + binom2(l);

  const Poly bumped = q_catalan(k - r) * q_catalan(l + r) -
                      shift(q_catalan(k) * q_catalan(l), shift_exponent(k, l, r) + 1);
  // Both sides are monic, so bumping the exponent exposes the subtrahend's
  // leading term at the top.
  if (!bumped.is_zero() && bumped.leading() < 0) {
    rep.bumped_violation = Violation{*bumped.degree(), bumped.leading()};
  }
  rep.bumped_fails = rep.bumped_violation.has_value();
  return rep;
}

namespace {

SignCheck sign_check(std::string label, Poly p, bool expected_nonneg) {
  SignCheck c;
  c.label = std::move(label);
  c.expected_nonneg = expected_nonneg;
  c.first_violation = first_negative(p);
  c.nonneg = !c.first_violation.has_value();
  c.poly = std::move(p);
  return c;
}

}  // namespace

CounterexampleReport naive_counterexample(std::size_t k_max) {
  CounterexampleReport rep;
  rep.name = "naive";
  rep.checks.push_back(
      sign_check("C2*C4 - C3^2", q_catalan(2) * q_catalan(4) - q_catalan(3) * q_catalan(3),
                 false));
  for (std::size_t k = 1; k <= k_max; ++k) {
    const Poly& ck = q_catalan(k);
    rep.checks.push_back(sign_check(
        "C" + std::to_string(k - 1) + "*C" + std::to_string(k + 1) + " - q*C" +
            std::to_string(k) + "^2",
        q_catalan(k - 1) * q_catalan(k + 1) - shift(ck * ck, 1), true));
  }
  rep.expected_pattern = std::all_of(rep.checks.begin(), rep.checks.end(),
                                     [](const auto& c) { return c.nonneg == c.expected_nonneg; });
  return rep;
}

CounterexampleReport definition_critique() {
  const Poly p0{1, 1, 1, 0, 0, 1};
  const Poly p1{1, 0, 1, 1};
  const Poly p2{1, 1, 0, 1};
  const Poly p3{1, 2, 0, 0, 0, 0, 1};

  CounterexampleReport rep;
  rep.name = "definition";
  rep.checks.push_back(sign_check("P0*P2 - P1^2", p0 * p2 - p1 * p1, true));
  rep.checks.push_back(sign_check("P1*P3 - P2^2", p1 * p3 - p2 * p2, true));
  rep.checks.push_back(sign_check("P0*P3 - P1*P2", p0 * p3 - p1 * p2, false));
  rep.expected_pattern = std::all_of(rep.checks.begin(), rep.checks.end(),
                                     [](const auto& c) { return c.nonneg == c.expected_nonneg; });
  return rep;
}

bool cell_ok(const CellReport& cell) {
  return std::visit([](const auto& rep) { return rep.ok(); }, cell);
}

}  // namespace qcat
