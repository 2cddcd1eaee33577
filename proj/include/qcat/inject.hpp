#pragma once

/**
 * @file inject.hpp
 * @brief The statistic-shifting injection P_k x P_l -> P_{k-r} x P_{l+r}.
 *
 * For pi in P_k and sigma in P_l, scan t = 0, 1, ... and cut
 *
 *   pi    = pi_L pi_R        with |pi_L|    = t + 2r
 *   sigma = sigma_L sigma_R  with |sigma_L| = t
 *
 * at the smallest t for which pi_L has exactly r more 2s than sigma_L. The
 * image is (sigma_L pi_R, pi_L sigma_R), and the total inversion count rises
 * by exactly r(l - k + r). Admissible inputs satisfy 1 <= r <= k and
 * l > k - r. With r = 1 and k <= l this is the original log-convexity map.
 *
 * Geometrically, pi is a path from (0,0) and sigma a path from (r,r) inside
 * an (l+r) x (l+r) square; the cut is the first lattice point they share.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "qcat/lattice.hpp"

namespace qcat {

struct LatticePoint {
  std::size_t x = 0;
  std::size_t y = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct SplitCertificate {
  std::size_t split = 0;  // t
  std::size_t r = 0;
  std::string pi_left;
  std::string pi_right;
  std::string sigma_left;
  std::string sigma_right;
  PrefixCounts pi_left_counts;
  PrefixCounts sigma_left_counts;
  std::size_t pi_right_ones = 0;
  std::size_t sigma_right_ones = 0;
  LatticePoint meet_point;
};

struct InjectionResult {
  LatticeWord nu;     // in P_{k-r}
  LatticeWord omega;  // in P_{l+r}
  SplitCertificate certificate;
  std::size_t shift_exponent = 0;  // r(l - k + r)
};

// Throws PreconditionError unless 1 <= r <= k and l > k - r.
void check_admissible(std::size_t k, std::size_t l, std::size_t r);

inline std::size_t shift_exponent(std::size_t k, std::size_t l, std::size_t r) {
  return r * (l + r - k);
}

// Throws PreconditionError for inadmissible (k, l, r); InvariantBreach if no
// split exists, which cannot happen for valid lattice words.
SplitCertificate split_index(const LatticeWord& pi, const LatticeWord& sigma, std::size_t r);

InjectionResult inject(const LatticeWord& pi, const LatticeWord& sigma, std::size_t r);

struct StraddleDecomposition {
  std::size_t inv_left = 0;
  std::size_t inv_right = 0;
  std::size_t straddle = 0;  // m2(left) * m1(right)
  std::size_t total = 0;

  friend bool operator==(const StraddleDecomposition&, const StraddleDecomposition&) = default;
};

StraddleDecomposition straddle_decomposition(std::string_view left, std::string_view right);

// Intermediate quantities of the telescoping argument
//   inv(pi_L sigma_R) + inv(sigma_L pi_R) - inv(pi) - inv(sigma)
//     = (m2 pi_L - m2 sigma_L)(m1 sigma_R - m1 pi_R) = r(l - k + r).
struct ShiftLedger {
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t r = 0;
  StraddleDecomposition pi;
  StraddleDecomposition sigma;
  StraddleDecomposition pi_left_sigma_right;
  StraddleDecomposition sigma_left_pi_right;
  bool decompositions_hold = false;  // each total equals inversions() of the joined word
  long long difference = 0;          // from the four totals
  long long factored = 0;            // (m2 pi_L - m2 sigma_L)(m1 sigma_R - m1 pi_R)
  long long expected = 0;            // r(l - k + r)

  bool ok() const { return decompositions_hold && difference == factored && factored == expected; }
};

ShiftLedger shift_identity_audit(const LatticeWord& pi, const LatticeWord& sigma, std::size_t r);

// Points visited by the path of `w` starting at `origin`, origin included.
std::vector<LatticePoint> path_points(std::string_view w, LatticePoint origin);

struct GeometricScene {
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t r = 0;
  std::size_t big_side = 0;  // l + r
  LatticePoint pi_origin;     // (0, 0)
  LatticePoint sigma_origin;  // (r, r)
  std::size_t rectangle_width = 0;   // l + r - k
  std::size_t rectangle_height = 0;  // r
  std::size_t rectangle_area = 0;
  LatticePoint meet_point;
  std::size_t meet_index_pi = 0;     // position of meet_point on pi_path
  std::size_t meet_index_sigma = 0;  // position of meet_point on sigma_path
  std::string pi;
  std::string sigma;
  std::vector<LatticePoint> pi_path;
  std::vector<LatticePoint> sigma_path;
  std::vector<LatticePoint> nu_path;     // sigma up to the meet, then pi; (r,r) -> (k,k)
  std::vector<LatticePoint> omega_path;  // pi up to the meet, then sigma; (0,0) -> (l+r,l+r)
};

// Built directly from the two paths (first common lattice point), not from
// split_index, so the two can be cross-checked.
GeometricScene geometric_scene(const LatticeWord& pi, const LatticeWord& sigma, std::size_t r);

nlohmann::json to_json(const SplitCertificate& c);
nlohmann::json to_json(const InjectionResult& res);
nlohmann::json to_json(const ShiftLedger& ledger);
nlohmann::json to_json(const GeometricScene& scene);

}  // namespace qcat
