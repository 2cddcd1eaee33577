#pragma once

#include <cstddef>
#include <deque>
#include <shared_mutex>

#include "qcat/lattice.hpp"
#include "qcat/poly.hpp"

namespace qcat {

/**
 * Memoized table of Carlitz-Riordan q-Catalan polynomials, filled bottom-up
 * from C_0 = 1 and
 *
 *   C_{n+1}(q) = sum_{k=0}^{n} q^{(k+1)(n-k)} C_k(q) C_{n-k}(q).
 *
 * Each entry is computed once. References returned by get() stay valid for
 * the table's lifetime; concurrent callers always see the same value.
 */
class QCatalanTable {
 public:
  QCatalanTable();

  const Poly& get(std::size_t n);
  std::size_t filled() const;

 private:
  mutable std::shared_mutex mutex_;
  std::deque<Poly> entries_;
};

// Process-wide table.
const Poly& q_catalan(std::size_t n);

// Sum of q^inv(w) over enumerate(n).
Poly q_catalan_by_enumeration(std::size_t n, std::size_t cap = kDefaultEnumCap);

// Integer recursion C_{n+1} = sum_k C_k C_{n-k}; does not touch q_catalan.
Integer catalan_number(std::size_t n);

// binom(2n, n) / (n + 1)
Integer catalan_by_formula(std::size_t n);

struct StructuralReport {
  std::size_t n = 0;
  std::size_t degree = 0;
  bool is_monic = false;
  bool degree_ok = false;
  bool coeffs_nonneg = false;
  bool matches_formula = false;

  bool ok() const { return is_monic && degree_ok && coeffs_nonneg && matches_formula; }
};

StructuralReport structural_check(std::size_t n);

}  // namespace qcat
