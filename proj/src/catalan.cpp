#include "qcat/catalan.hpp"

#include <mutex>

namespace qcat {

QCatalanTable::QCatalanTable() { entries_.push_back(Poly{1}); }

std::size_t QCatalanTable::filled() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

const Poly& QCatalanTable::get(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < entries_.size()) return entries_[n];
  }
  std::unique_lock lock(mutex_);
  while (entries_.size() <= n) {
    // entries_.size() == m + 1; build C_{m+1}.
    const std::size_t m = entries_.size() - 1;
    Poly next;
    for (std::size_t k = 0; k <= m; ++k) {
      next.add_shifted_product(entries_[k], entries_[m - k], (k + 1) * (m - k));
    }
    entries_.push_back(std::move(next));
  }
  return entries_[n];
}

const Poly& q_catalan(std::size_t n) {
  static QCatalanTable table;
  return table.get(n);
}

Poly q_catalan_by_enumeration(std::size_t n, std::size_t cap) {
  const auto words = enumerate(n, cap);
  const std::size_t max_inv = n == 0 ? 0 : n * (n - 1) / 2;
  std::vector<Integer> coeffs(max_inv + 1);
  for (const auto& w : words) coeffs[inversions(w)] += 1;
  return Poly(std::move(coeffs));
}

Integer catalan_number(std::size_t n) {
  std::vector<Integer> c{Integer(1)};
  c.reserve(n + 1);
  for (std::size_t m = 0; m < n; ++m) {
    Integer next = 0;
    for (std::size_t k = 0; k <= m; ++k) next += c[k] * c[m - k];
    c.push_back(std::move(next));
  }
  return c[n];
}

Integer catalan_by_formula(std::size_t n) {
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * n, n);
  return binom / static_cast<unsigned long>(n + 1);
}

StructuralReport structural_check(std::size_t n) {
  const Poly& c = q_catalan(n);
  StructuralReport rep;
  rep.n = n;
  rep.degree = c.degree().value_or(0);
  rep.is_monic = !c.is_zero() && c.leading() == 1;
  rep.degree_ok = c.degree() == (n == 0 ? 0 : n * (n - 1) / 2);
  rep.coeffs_nonneg = is_nonneg(c);
  rep.matches_formula = eval_one(c) == catalan_by_formula(n);
  return rep;
}

}  // namespace qcat
