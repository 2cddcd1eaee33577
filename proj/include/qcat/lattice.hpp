#pragma once

// Lattice permutations: words over {1,2} with equally many of each symbol in
// which no prefix has more 2s than 1s. Read as a path, '1' is a unit step in
// +x and '2' a unit step in +y.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace qcat {

inline constexpr std::size_t kDefaultEnumCap = 16;

class LatticeWord {
 public:
  LatticeWord() = default;  // the empty word, sole element of P_0

  // Throws PreconditionError if `symbols` is not a lattice permutation.
  explicit LatticeWord(std::string symbols);

  std::string_view str() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  std::size_t half_length() const { return symbols_.size() / 2; }
  char operator[](std::size_t i) const { return symbols_[i]; }

  friend bool operator==(const LatticeWord&, const LatticeWord&) = default;
  friend auto operator<=>(const LatticeWord&, const LatticeWord&) = default;

 private:
  std::string symbols_;
};

struct PrefixCounts {
  std::size_t ones = 0;
  std::size_t twos = 0;

  friend bool operator==(const PrefixCounts&, const PrefixCounts&) = default;
};

bool validate(std::string_view symbols);

// Symbol counts of an arbitrary fragment over {1,2}.
PrefixCounts counts(std::string_view fragment);

// Pairs i < j with w_i = '2', w_j = '1'. Defined for any fragment.
std::size_t inversions(std::string_view fragment);
inline std::size_t inversions(const LatticeWord& w) { return inversions(w.str()); }

// Unit cells of the n x n square lying under the path.
std::size_t area(const LatticeWord& w);

// Throws std::out_of_range if t > w.size().
PrefixCounts prefix_counts(std::string_view w, std::size_t t);

// All of P_n in lexicographic order ('1' < '2'). Throws
// EnumerationBoundError when n > cap.
std::vector<LatticeWord> enumerate(std::size_t n, std::size_t cap = kDefaultEnumCap);

// Plain concatenation; the result is not validated.
std::string concat(std::string_view a, std::string_view b);

inline nlohmann::json word_to_json(const LatticeWord& w) { return std::string(w.str()); }

}  // namespace qcat
