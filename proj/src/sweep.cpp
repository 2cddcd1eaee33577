#include <omp.h>

#include <algorithm>

#include "qcat/catalan.hpp"
#include "qcat/errors.hpp"
#include "qcat/verify.hpp"

namespace qcat {

std::vector<SweepCell> sweep_cells(const SweepBounds& bounds) {
  std::vector<SweepCell> cells;
  for (std::size_t r = 1; r <= bounds.r_max; ++r) {
    for (std::size_t k = r; k <= bounds.k_max; ++k) {
      const std::size_t l_min = bounds.l_at_least_k ? k : k - r + 1;
      for (std::size_t l = std::max<std::size_t>(l_min, 1); l <= bounds.l_max; ++l) {
        cells.push_back({k, l, r});
      }
    }
  }
  return cells;
}

namespace {

GapReport gap_cell(const SweepCell& c, bool with_sharpness) {
  GapReport rep = corollary_gap(c.k, c.l, c.r);
  if (with_sharpness) rep.sharpness = sharpness_check(c.k, c.l, c.r);
  return rep;
}

void prefill(const SweepBounds& bounds) { q_catalan(bounds.l_max + bounds.r_max); }

SweepSummary summarize(std::vector<CellReport> cells) {
  SweepSummary out;
  out.failures = static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const auto& c) { return !cell_ok(c); }));
  out.cells = std::move(cells);
  return out;
}

}  // namespace

SweepSummary sweep(const SweepBounds& bounds, SweepMode mode, const AuditOptions& opts) {
  const auto cells = sweep_cells(bounds);
  prefill(bounds);
  std::vector<CellReport> results(cells.size());
  const int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();

  if (mode == SweepMode::kAudit) {
    // Check caps up front so no exception escapes the parallel region.
    for (const auto& c : cells) {
      if (c.k > opts.cap || c.l > opts.cap) {
        throw EnumerationBoundError(std::max(c.k, c.l), opts.cap);
      }
      if (c.l + c.r > opts.enum_cap) throw EnumerationBoundError(c.l + c.r, opts.enum_cap);
    }
    AuditOptions inner = opts;
    inner.jobs = 1;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::size_t i = 0; i < cells.size(); ++i) {
      results[i] = audit_injection(cells[i].k, cells[i].l, cells[i].r, inner);
    }
  } else {
    const bool sharp = mode == SweepMode::kGapWithSharpness;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::size_t i = 0; i < cells.size(); ++i) results[i] = gap_cell(cells[i], sharp);
  }
  return summarize(std::move(results));
}

SweepSummary sweep_serial(const SweepBounds& bounds, SweepMode mode, const AuditOptions& opts) {
  std::vector<CellReport> results;
  for (const auto& c : sweep_cells(bounds)) {
    if (mode == SweepMode::kAudit) {
      results.emplace_back(audit_injection_serial(c.k, c.l, c.r, opts));
    } else {
      results.emplace_back(gap_cell(c, mode == SweepMode::kGapWithSharpness));
    }
  }
  return summarize(std::move(results));
}

}  // namespace qcat
