#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>

#include "qcat/catalan.hpp"
#include "qcat/errors.hpp"
#include "qcat/inject.hpp"
#include "qcat/verify.hpp"

namespace qcat {

namespace {

constexpr std::size_t kMaxRecordedFailures = 8;

void check_audit_caps(std::size_t k, std::size_t l, std::size_t r, const AuditOptions& opts) {
  check_admissible(k, l, r);
  if (k > opts.cap) throw EnumerationBoundError(k, opts.cap);
  if (l > opts.cap) throw EnumerationBoundError(l, opts.cap);
}

std::string describe(const LatticeWord& pi, const LatticeWord& sigma, const std::string& why) {
  return "(" + std::string(pi.str()) + ", " + std::string(sigma.str()) + "): " + why;
}

Poly from_counts(const std::vector<std::uint64_t>& counts) {
  std::vector<Integer> coeffs;
  coeffs.reserve(counts.size());
  for (auto c : counts) {
    Integer v;
    mpz_set_ui(v.get_mpz_t(), static_cast<unsigned long>(c));
    coeffs.push_back(std::move(v));
  }
  return Poly(std::move(coeffs));
}

std::size_t index_of(const std::vector<LatticeWord>& sorted, const LatticeWord& w) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
  return static_cast<std::size_t>(it - sorted.begin());
}

struct ImageRecord {
  std::uint64_t key = 0;  // nu_index * |P_{l+r}| + omega_index
  bool valid = true;
  bool shift_ok = true;
  std::string failure;
};

}  // namespace

AuditReport audit_injection(std::size_t k, std::size_t l, std::size_t r,
                            const AuditOptions& opts) {
  check_audit_caps(k, l, r, opts);
  const auto dom_pi = enumerate(k, opts.enum_cap);
  const auto dom_sigma = enumerate(l, opts.enum_cap);
  const auto cod_nu = enumerate(k - r, opts.enum_cap);
  const auto cod_omega = enumerate(l + r, opts.enum_cap);
  const std::size_t shift = shift_exponent(k, l, r);
  const std::size_t n_sigma = dom_sigma.size();
  const std::size_t n_omega = cod_omega.size();
  const int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();

  std::vector<ImageRecord> image(dom_pi.size() * n_sigma);

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::size_t i = 0; i < dom_pi.size(); ++i) {
    const LatticeWord& pi = dom_pi[i];
    const std::size_t inv_pi = inversions(pi);
    for (std::size_t j = 0; j < n_sigma; ++j) {
      const LatticeWord& sigma = dom_sigma[j];
      ImageRecord& rec = image[i * n_sigma + j];
      try {
        const InjectionResult res = inject(pi, sigma, r);
        rec.key = index_of(cod_nu, res.nu) * n_omega + index_of(cod_omega, res.omega);
        if (inversions(res.nu) + inversions(res.omega) != inv_pi + inversions(sigma) + shift) {
          rec.shift_ok = false;
          rec.failure = describe(pi, sigma, "statistic shift mismatch");
        }
      } catch (const InvariantBreach& e) {
        rec.valid = false;
        rec.failure = describe(pi, sigma, e.what());
      }
    }
  }

  AuditReport rep;
  rep.k = k;
  rep.l = l;
  rep.r = r;
  rep.pairs_checked = image.size();
  rep.injective = true;
  rep.outputs_valid = true;
  rep.shift_ok = true;

  std::vector<char> hit(cod_nu.size() * n_omega, 0);
  for (const auto& rec : image) {
    if (!rec.failure.empty() && rep.failures.size() < kMaxRecordedFailures) {
      rep.failures.push_back(rec.failure);
    }
    rep.shift_ok = rep.shift_ok && rec.shift_ok;
    if (!rec.valid) {
      rep.outputs_valid = false;
      continue;
    }
    if (hit[rec.key]) {
      rep.injective = false;
      if (rep.failures.size() < kMaxRecordedFailures) {
        rep.failures.push_back("image collision at codomain pair " + std::to_string(rec.key));
      }
    }
    hit[rec.key] = 1;
  }

  // Generating polynomial, by inversion sum, of codomain pairs outside the image.
  const std::size_t max_degree = (l + r) * (l + r) + (k - r) * (k - r);
  std::vector<std::uint64_t> counts(max_degree + 1, 0);
  std::vector<std::size_t> inv_omega(n_omega);
  for (std::size_t j = 0; j < n_omega; ++j) inv_omega[j] = inversions(cod_omega[j]);

#pragma omp parallel num_threads(threads)
  {
    std::vector<std::uint64_t> local(max_degree + 1, 0);
#pragma omp for schedule(static)
    for (std::size_t i = 0; i < cod_nu.size(); ++i) {
      const std::size_t inv_nu = inversions(cod_nu[i]);
      for (std::size_t j = 0; j < n_omega; ++j) {
        if (!hit[i * n_omega + j]) ++local[inv_nu + inv_omega[j]];
      }
    }
#pragma omp critical
    for (std::size_t d = 0; d <= max_degree; ++d) counts[d] += local[d];
  }
  rep.complement_poly = from_counts(counts);
  rep.matches_gap = rep.complement_poly == corollary_gap(k, l, r).gap;
  return rep;
}

AuditReport audit_injection_serial(std::size_t k, std::size_t l, std::size_t r,
                                   const AuditOptions& opts) {
  check_audit_caps(k, l, r, opts);
  const std::size_t shift = shift_exponent(k, l, r);

  AuditReport rep;
  rep.k = k;
  rep.l = l;
  rep.r = r;
  rep.injective = true;
  rep.outputs_valid = true;
  rep.shift_ok = true;

  std::set<std::pair<std::string, std::string>> image;
  const auto dom_sigma = enumerate(l, opts.enum_cap);
  for (const auto& pi : enumerate(k, opts.enum_cap)) {
    for (const auto& sigma : dom_sigma) {
      ++rep.pairs_checked;
      try {
        const InjectionResult res = inject(pi, sigma, r);
        if (!image.emplace(res.nu.str(), res.omega.str()).second) {
          rep.injective = false;
          rep.failures.push_back(describe(pi, sigma, "image collision"));
        }
        if (inversions(res.nu) + inversions(res.omega) !=
            inversions(pi) + inversions(sigma) + shift) {
          rep.shift_ok = false;
          rep.failures.push_back(describe(pi, sigma, "statistic shift mismatch"));
        }
      } catch (const InvariantBreach& e) {
        rep.outputs_valid = false;
        rep.failures.push_back(describe(pi, sigma, e.what()));
      }
    }
  }
  if (rep.failures.size() > kMaxRecordedFailures) rep.failures.resize(kMaxRecordedFailures);

  Poly complement;
  const auto cod_omega = enumerate(l + r, opts.enum_cap);
  for (const auto& nu : enumerate(k - r, opts.enum_cap)) {
    for (const auto& omega : cod_omega) {
      if (!image.contains({std::string(nu.str()), std::string(omega.str())})) {
        complement += Poly::monomial(1, inversions(nu) + inversions(omega));
      }
    }
  }
  rep.complement_poly = std::move(complement);
  rep.matches_gap = rep.complement_poly == corollary_gap(k, l, r).gap;
  return rep;
}

}  // namespace qcat
