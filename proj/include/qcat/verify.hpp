#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qcat/lattice.hpp"
#include "qcat/poly.hpp"

namespace qcat {

inline constexpr std::size_t kDefaultAuditCap = 8;

struct SharpnessReport {
  bool degree_equal = false;
  bool bumped_fails = false;
  std::optional<Violation> bumped_violation;  // top-degree coefficient of the bumped gap

  bool ok() const { return degree_equal && bumped_fails; }
};

/// gap = C_{k-r} C_{l+r} - q^{r(l-k+r)} C_k C_l, with its sign verdict.
struct GapReport {
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t r = 0;
  Poly gap;
  bool nonneg = false;
  std::optional<Violation> first_violation;
  std::size_t degree_minuend = 0;
  std::size_t degree_subtrahend = 0;
  std::optional<SharpnessReport> sharpness;

  bool ok() const { return nonneg && (!sharpness || sharpness->ok()); }
};

struct AuditReport {
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t r = 0;
  std::size_t pairs_checked = 0;
  bool injective = false;
  bool outputs_valid = false;
  bool shift_ok = false;
  Poly complement_poly;
  bool matches_gap = false;
  std::vector<std::string> failures;  // first few offending pairs, for diagnostics

  bool ok() const { return injective && outputs_valid && shift_ok && matches_gap; }
};

// r = 1; requires 1 <= k <= l.
GapReport theorem_gap(std::size_t k, std::size_t l);

// Requires 1 <= r <= k and l > k - r.
GapReport corollary_gap(std::size_t k, std::size_t l, std::size_t r);

SharpnessReport sharpness_check(std::size_t k, std::size_t l, std::size_t r);

struct AuditOptions {
  std::size_t cap = kDefaultAuditCap;  // on k and l
  std::size_t enum_cap = kDefaultEnumCap;
  int jobs = 0;  // OpenMP threads; 0 = runtime default
};

// Exhaustive audit over P_k x P_l. Throws EnumerationBoundError past the caps.
AuditReport audit_injection(std::size_t k, std::size_t l, std::size_t r,
                            const AuditOptions& opts = {});

// Single-threaded reference for audit_injection.
AuditReport audit_injection_serial(std::size_t k, std::size_t l, std::size_t r,
                                   const AuditOptions& opts = {});

struct SignCheck {
  std::string label;
  Poly poly;
  bool expected_nonneg = true;
  bool nonneg = false;
  std::optional<Violation> first_violation;
};

struct CounterexampleReport {
  std::string name;
  std::vector<SignCheck> checks;
  bool expected_pattern = false;  // every check has the sign the claim predicts
};

// C_2 C_4 - C_3^2 fails; C_{k-1} C_{k+1} - q C_k^2 holds for 1 <= k <= k_max.
CounterexampleReport naive_counterexample(std::size_t k_max = 25);

// Adjacent checks pass for 1+q+q^2+q^5, 1+q^2+q^3, 1+q+q^3, 1+2q+q^6 while
// P_0 P_3 - P_1 P_2 fails.
CounterexampleReport definition_critique();

enum class SweepMode { kGap, kGapWithSharpness, kAudit };

struct SweepBounds {
  std::size_t k_max = 1;
  std::size_t l_max = 1;
  std::size_t r_max = 1;
  // Restrict to l >= k (the r = 1 theorem domain), instead of l > k - r.
  bool l_at_least_k = false;
};

struct SweepCell {
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t r = 0;
};

using CellReport = std::variant<GapReport, AuditReport>;

struct SweepSummary {
  std::vector<CellReport> cells;  // ordered lexicographically by (r, k, l)
  std::size_t failures = 0;
  bool all_ok() const { return failures == 0; }
};

// Admissible cells in the box, in output order.
std::vector<SweepCell> sweep_cells(const SweepBounds& bounds);

// Cells run concurrently with OpenMP; output order is fixed.
SweepSummary sweep(const SweepBounds& bounds, SweepMode mode, const AuditOptions& opts = {});

// Single-threaded reference for sweep.
SweepSummary sweep_serial(const SweepBounds& bounds, SweepMode mode,
                          const AuditOptions& opts = {});

bool cell_ok(const CellReport& cell);

}  // namespace qcat
