#include "qcat/lattice.hpp"

#include <stdexcept>

#include "qcat/errors.hpp"

namespace qcat {

LatticeWord::LatticeWord(std::string symbols) : symbols_(std::move(symbols)) {
  if (!validate(symbols_)) {
    throw PreconditionError("not a lattice permutation: \"" + symbols_ + "\"");
  }
}

bool validate(std::string_view symbols) {
  if (symbols.size() % 2 != 0) return false;
  std::size_t ones = 0;
  std::size_t twos = 0;
  for (char c : symbols) {
    if (c == '1') {
      ++ones;
    } else if (c == '2') {
      if (++twos > ones) return false;
    } else {
      return false;
    }
  }
  return ones == twos;
}

PrefixCounts counts(std::string_view fragment) {
  PrefixCounts pc;
  for (char c : fragment) {
    if (c == '1') ++pc.ones;
    else if (c == '2') ++pc.twos;
  }
  return pc;
}

std::size_t inversions(std::string_view fragment) {
  std::size_t twos_seen = 0;
  std::size_t inv = 0;
  for (char c : fragment) {
    if (c == '2') ++twos_seen;
    else if (c == '1') inv += twos_seen;
  }
  return inv;
}

std::size_t area(const LatticeWord& w) {
  const std::size_t n = w.half_length();
  // column_height[x]: height of the horizontal step from x to x+1.
  std::vector<std::size_t> column_height;
  column_height.reserve(n);
  std::size_t y = 0;
  for (char c : w.str()) {
    if (c == '1') column_height.push_back(y);
    else ++y;
  }
  std::size_t cells = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t row = 0; row < n; ++row) {
      if (row < column_height[x]) ++cells;
    }
  }
  return cells;
}

PrefixCounts prefix_counts(std::string_view w, std::size_t t) {
  if (t > w.size()) {
    throw std::out_of_range("prefix length " + std::to_string(t) + " exceeds word length " +
                            std::to_string(w.size()));
  }
  return counts(w.substr(0, t));
}

namespace {

void extend(std::string& prefix, std::size_t ones, std::size_t twos, std::size_t n,
            std::vector<LatticeWord>& out) {
  if (prefix.size() == 2 * n) {
    out.emplace_back(prefix);
    return;
  }
  if (ones < n) {
    prefix.push_back('1');
    extend(prefix, ones + 1, twos, n, out);
    prefix.pop_back();
  }
  if (twos < ones) {
    prefix.push_back('2');
    extend(prefix, ones, twos + 1, n, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<LatticeWord> enumerate(std::size_t n, std::size_t cap) {
  if (n > cap) throw EnumerationBoundError(n, cap);
  std::vector<LatticeWord> out;
  std::string prefix;
  prefix.reserve(2 * n);
  extend(prefix, 0, 0, n, out);
  return out;
}

std::string concat(std::string_view a, std::string_view b) {
  std::string out;
  out.reserve(a.size() + b.size());
  out.append(a);
  out.append(b);
  return out;
}

}  // namespace qcat
