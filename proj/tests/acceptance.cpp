// Acceptance driver: one [PASS]/[FAIL] line per criterion, exit 1 on any failure.

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "qcat/catalan.hpp"
#include "qcat/inject.hpp"
#include "qcat/lattice.hpp"
#include "qcat/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using Ints = std::vector<std::int64_t>;

// Wall-clock limits, seconds.
constexpr double kLimitListed = 1.0;
constexpr double kLimitOracle = 10.0;
constexpr double kLimitCrossCheck = 10.0;
constexpr double kLimitTheorem = 60.0;
constexpr double kLimitCorollary = 60.0;
constexpr double kLimitAudit = 120.0;
constexpr double kLimitSmall = 5.0;
constexpr double kLimitDeterminism = 120.0;

struct Criterion {
  int id;
  std::string label;
  double limit;
  std::function<bool(std::string&)> body;
};

Ints to_ints(const qcat::Poly& p) {
  Ints out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_si());
  return out;
}

Ints convolve(const Ints& a, const Ints& b) {
  Ints out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Ints minus(Ints a, const Ints& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

std::string capture(const std::string& args) {
  const std::string cmd = std::string(QCAT_BINARY) + " " + args + " 2>&1";
  std::string text;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return "<popen failed>";
  std::array<char, 4096> buf{};
  while (const std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) text.append(buf.data(), n);
  const int status = pclose(pipe);
  return text + "\n<status " + std::to_string(status) + ">";
}

bool listed_values(std::string& detail) {
  const std::vector<Ints> listed = {{1}, {1}, {1, 1}, {1, 1, 2, 1}, {1, 1, 2, 3, 3, 3, 1}};
  for (std::size_t n = 0; n < listed.size(); ++n) {
    if (to_ints(qcat::q_catalan(n)) != listed[n]) {
      detail = "mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "n=0..4";
  return true;
}

bool oracle_equivalence(std::string& detail) {
  for (std::size_t n = 0; n <= 10; ++n) {
    if (qcat::q_catalan(n) != qcat::q_catalan_by_enumeration(n)) {
      detail = "mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "n<=10";
  return true;
}

bool catalan_cross_check(std::string& detail) {
  for (std::size_t n = 0; n <= 30; ++n) {
    const auto c = qcat::catalan_number(n);
    if (qcat::eval_one(qcat::q_catalan(n)) != c || qcat::catalan_by_formula(n) != c) {
      detail = "mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "n<=30";
  return true;
}

bool sweep_passes(const qcat::SweepBounds& b, qcat::SweepMode mode, std::size_t expected_cells,
                  std::string& detail) {
  const auto s = qcat::sweep(b, mode);
  detail = std::to_string(s.cells.size()) + " cells, " + std::to_string(s.failures) + " failures";
  return s.all_ok() && s.cells.size() == expected_cells;
}

std::size_t count_cells(std::size_t kmax, std::size_t lmax, std::size_t rmax, bool l_ge_k) {
  std::size_t n = 0;
  for (std::size_t r = 1; r <= rmax; ++r)
    for (std::size_t k = r; k <= kmax; ++k)
      for (std::size_t l = 1; l <= lmax; ++l)
        if (l + r > k && (!l_ge_k || l >= k)) ++n;
  return n;
}

bool worked_example(std::string& detail) {
  const qcat::LatticeWord pi("112112221122");
  const qcat::LatticeWord sigma("12111212212212");
  const auto res = qcat::inject(pi, sigma, 2);
  const std::array<std::size_t, 4> inv = {qcat::inversions(pi), qcat::inversions(sigma),
                                          qcat::inversions(res.nu), qcat::inversions(res.omega)};
  detail = "nu=" + std::string(res.nu.str()) + " omega=" + std::string(res.omega.str());
  return res.nu.str() == "12121122" && res.omega.str() == "112112211212212212" &&
         inv == std::array<std::size_t, 4>{10, 15, 5, 26} && res.shift_exponent == 6;
}

bool counterexamples(std::string& detail) {
  // Independent machine-integer oracle for C2*C4 - C3^2.
  const Ints c2{1, 1}, c3{1, 1, 2, 1}, c4{1, 1, 2, 3, 3, 3, 1};
  const Ints diff = minus(convolve(c2, c4), convolve(c3, c3));
  std::size_t first = diff.size();
  for (std::size_t i = 0; i < diff.size(); ++i) {
    if (diff[i] < 0) {
      first = i;
      break;
    }
  }
  const bool oracle_ok = first == 2 && diff[2] == -2;

  const auto naive = qcat::naive_counterexample(25);
  const auto& bad = naive.checks.front();
  const bool lib_ok = bad.first_violation && bad.first_violation->degree == 2 &&
                      bad.first_violation->coeff == -2 &&
                      to_ints(bad.poly) == diff;

  const auto crit = qcat::definition_critique();
  const bool pattern_ok = crit.checks.size() == 3 && crit.checks[0].nonneg &&
                          crit.checks[1].nonneg && !crit.checks[2].nonneg;
  detail = "C2C4-C3^2 first negative at q^" + std::to_string(first) + " coeff " +
           std::to_string(first < diff.size() ? diff[first] : 0);
  return oracle_ok && lib_ok && naive.expected_pattern && pattern_ok && crit.expected_pattern;
}

bool monotonicity(std::string& detail) {
  for (std::size_t n = 0; n <= 30; ++n) {
    if (!qcat::is_nonneg(qcat::q_catalan(n + 1) - qcat::q_catalan(n))) {
      detail = "fails at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "n<=30";
  return true;
}

bool determinism(std::string& detail) {
  const std::vector<std::string> commands = {
      "poly 20",
      "poly 8 --json",
      "enumerate 5",
      "inject 112112221122 12111212212212 --r 2 --json --ledger",
      "verify theorem --kmax 12 --json",
      "verify corollary --kmax 6 --lmax 6 --rmax 6 --json",
      "verify audit --kmax 5 --lmax 5 --rmax 5 --json",
      "verify counterexamples --json",
      "render 112112221122 12111212212212 --r 2 --svg",
      "render 112112221122 12111212212212 --r 2 --svg --after",
      "render 112112221122 12111212212212 --r 2 --ascii",
      "render 112112221122 12111212212212 --r 2 --ascii --after",
  };
  for (const auto& cmd : commands) {
    const auto a = capture(cmd);
    const auto b = capture(cmd);
    if (a != b || a.find("<status 0>") == std::string::npos) {
      detail = "differs or failed: " + cmd;
      return false;
    }
  }
  detail = std::to_string(commands.size()) + " commands run twice";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "listed q-Catalan polynomials C_0..C_4", kLimitListed, listed_values},
      {2, "recursion equals enumeration oracle, n <= 10", kLimitOracle, oracle_equivalence},
      {3, "q = 1 value equals Catalan number and binomial formula, n <= 30", kLimitCrossCheck,
       catalan_cross_check},
      {4, "two-index gap nonnegative, 1 <= k <= l <= 25", kLimitTheorem,
       [](std::string& d) {
         return sweep_passes({25, 25, 1, true}, qcat::SweepMode::kGap,
                             count_cells(25, 25, 1, true), d);
       }},
      {5, "shifted gap nonnegative and exponent sharp, k, l <= 12", kLimitCorollary,
       [](std::string& d) {
         return sweep_passes({12, 12, 12, false}, qcat::SweepMode::kGapWithSharpness,
                             count_cells(12, 12, 12, false), d);
       }},
      {6, "exhaustive injection audit, 1 <= r <= k <= l <= 6", kLimitAudit,
       [](std::string& d) {
         return sweep_passes({6, 6, 6, true}, qcat::SweepMode::kAudit,
                             count_cells(6, 6, 6, true), d);
       }},
      {7, "worked example: words, inversions 10 15 5 26, shift 6", kLimitSmall, worked_example},
      {8, "counterexamples and sign pattern", kLimitSmall, counterexamples},
      {9, "C_{n+1} - C_n nonnegative, n <= 30", kLimitSmall, monotonicity},
      {10, "CLI output byte-identical across runs", kLimitDeterminism, determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    const auto start = Clock::now();
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = secs < c.limit;
    if (!in_time) detail += " (over time limit)";
    const bool pass = ok && in_time;
    if (!pass) ++failed;
    std::printf("[%s] %2d %s: %s [%.3f s, limit %.0f s]\n", pass ? "PASS" : "FAIL", c.id,
                c.label.c_str(), detail.c_str(), secs, c.limit);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
