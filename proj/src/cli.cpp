#include "qcat/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>

#include "CLI11.hpp"
#include "qcat/catalan.hpp"
#include "qcat/errors.hpp"
#include "qcat/inject.hpp"
#include "qcat/render.hpp"
#include "qcat/report.hpp"
#include "qcat/verify.hpp"

namespace qcat {

namespace {

constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

std::size_t enum_cap_from_env() {
  const char* v = std::getenv("QCAT_MAX_ENUM");
  if (v == nullptr || *v == '\0') return kDefaultEnumCap;
  char* end = nullptr;
  const unsigned long long cap = std::strtoull(v, &end, 10);
  if (*end != '\0') throw PreconditionError(std::string("QCAT_MAX_ENUM is not a number: ") + v);
  return static_cast<std::size_t>(cap);
}

void emit(std::ostream& out, const nlohmann::json& j, bool as_json) {
  if (as_json) out << j.dump(2) << '\n';
  else out << format_table(j);
}

struct Options {
  bool json = false;
  std::size_t n = 0;
  bool by_enumeration = false;
  bool allow_large = false;
  std::string word;
  std::string pi;
  std::string sigma;
  std::size_t r = 1;
  bool ledger = false;
  // CLI11 writes defaults on registration, so each subcommand owns its bounds.
  std::size_t theorem_k = 0;
  SweepBounds corollary;
  SweepBounds audit;
  std::size_t counter_k = 0;
  int jobs = 0;
  bool serial = false;
  bool all_admissible = false;
  bool svg = false;
  bool ascii = false;
  bool after = false;
  int cell = 40;
  std::string out_file;
};

int cmd_poly(const Options& o, std::ostream& out) {
  const Poly p = o.by_enumeration ? q_catalan_by_enumeration(o.n, enum_cap_from_env())
                                  : q_catalan(o.n);
  if (o.json) {
    out << nlohmann::json{{"n", o.n},
                          {"poly", poly_to_json(p)},
                          {"text", format_poly(p)},
                          {"value_at_one", eval_one(p).get_str()}}
               .dump(2)
        << '\n';
  } else {
    out << format_poly(p) << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto words = enumerate(o.n, o.allow_large ? kUnlimited : enum_cap_from_env());
  if (o.json) {
    auto arr = nlohmann::json::array();
    for (const auto& w : words) arr.push_back({{"word", word_to_json(w)}, {"inv", inversions(w)}});
    out << nlohmann::json{{"n", o.n}, {"count", words.size()}, {"words", arr}}.dump(2) << '\n';
  } else {
    for (const auto& w : words) out << (w.size() == 0 ? "(empty)" : w.str()) << ' ' << inversions(w) << '\n';
  }
  return kExitOk;
}

int cmd_inv(const Options& o, std::ostream& out) {
  const LatticeWord w(o.word);
  if (o.json) {
    out << nlohmann::json{{"word", word_to_json(w)}, {"inv", inversions(w)}, {"area", area(w)}}
               .dump(2)
        << '\n';
  } else {
    out << inversions(w) << '\n';
  }
  return kExitOk;
}

int cmd_inject(const Options& o, std::ostream& out) {
  const LatticeWord pi(o.pi);
  const LatticeWord sigma(o.sigma);
  const InjectionResult res = inject(pi, sigma, o.r);
  const ShiftLedger ledger = shift_identity_audit(pi, sigma, o.r);
  if (o.json) {
    nlohmann::json j = to_json(res);
    if (o.ledger) j["ledger"] = to_json(ledger);
    out << j.dump(2) << '\n';
  } else {
    out << "nu    = " << (res.nu.size() == 0 ? "(empty)" : res.nu.str()) << '\n'
        << "omega = " << res.omega.str() << '\n'
        << "split t=" << res.certificate.split << " meet=(" << res.certificate.meet_point.x << ","
        << res.certificate.meet_point.y << ")\n"
        << "inv " << inversions(pi) << " + " << inversions(sigma) << " + " << res.shift_exponent
        << " = " << inversions(res.nu) << " + " << inversions(res.omega) << '\n';
    if (o.ledger) out << to_json(ledger).dump(2) << '\n';
  }
  return ledger.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_verify_sweep(const Options& o, std::ostream& out, SweepMode mode, SweepBounds bounds,
                     const std::string& mode_name) {
  AuditOptions opts;
  opts.jobs = o.jobs;
  opts.enum_cap = o.allow_large ? kUnlimited : enum_cap_from_env();
  if (o.allow_large) opts.cap = kUnlimited;
  const SweepSummary summary =
      o.serial ? sweep_serial(bounds, mode, opts) : sweep(bounds, mode, opts);
  emit(out, to_json(summary, mode_name), o.json);
  return summary.all_ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_counterexamples(const Options& o, std::ostream& out) {
  const auto naive = to_json(naive_counterexample(o.counter_k));
  const auto critique = to_json(definition_critique());
  const bool ok = naive["verdict"].get<bool>() && critique["verdict"].get<bool>();
  if (o.json) {
    out << nlohmann::json{{"kind", "counterexamples"},
                          {"verdict", ok},
                          {"reports", {naive, critique}}}
               .dump(2)
        << '\n';
  } else {
    out << format_table(naive) << format_table(critique);
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_render(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.svg == o.ascii) {
    err << "render: exactly one of --svg or --ascii is required\n";
    return kExitUsage;
  }
  const GeometricScene scene = geometric_scene(LatticeWord(o.pi), LatticeWord(o.sigma), o.r);
  const View view = o.after ? View::kAfter : View::kBefore;
  std::string doc;
  if (o.svg) {
    Style style;
    style.cell_size = o.cell;
    doc = render_svg(scene, style, view);
  } else {
    doc = render_ascii(scene, view);
  }
  if (o.out_file.empty()) {
    out << doc;
    return kExitOk;
  }
  std::ofstream file(o.out_file, std::ios::binary);
  if (!file) {
    err << "render: cannot open " << o.out_file << " for writing\n";
    return kExitUsage;
  }
  file << doc;
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-Catalan polynomials, the log-convexity injection, and their verification",
               "qcat"};
  app.require_subcommand(1, 1);
  Options o;

  auto* poly = app.add_subcommand("poly", "Print C_N(q)");
  poly->add_option("N", o.n, "Index")->required();
  poly->add_flag("--by-enumeration", o.by_enumeration, "Sum q^inv over P_N instead of recursing");
  poly->add_flag("--json", o.json);

  auto* en = app.add_subcommand("enumerate", "List P_N with inversion numbers");
  en->add_option("N", o.n, "Half-length")->required();
  en->add_flag("--allow-large", o.allow_large, "Lift the enumeration safety cap");
  en->add_flag("--json", o.json);

  auto* inv = app.add_subcommand("inv", "Inversion number of a lattice word");
  inv->add_option("WORD", o.word)->required();
  inv->add_flag("--json", o.json);

  auto* inj = app.add_subcommand("inject", "Apply the injection to (PI, SIGMA)");
  inj->add_option("PI", o.pi)->required();
  inj->add_option("SIGMA", o.sigma)->required();
  inj->add_option("--r", o.r, "Step parameter")->check(CLI::PositiveNumber);
  inj->add_flag("--ledger", o.ledger, "Include the inversion bookkeeping");
  inj->add_flag("--json", o.json);

  auto* ver = app.add_subcommand("verify", "Verify identities and inequalities");
  ver->require_subcommand(1, 1);
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "Worker threads (0 = OpenMP default)")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--serial", o.serial, "Use the single-threaded reference path");
    sub->add_flag("--json", o.json);
  };
  auto* theorem = ver->add_subcommand("theorem", "All 1 <= k <= l <= KMAX with r = 1");
  theorem->add_option("--kmax", o.theorem_k)->default_val(25);
  add_common(theorem);
  auto* corollary = ver->add_subcommand("corollary", "1 <= r <= k, k - r < l, with sharpness");
  corollary->add_option("--kmax", o.corollary.k_max)->default_val(12);
  corollary->add_option("--lmax", o.corollary.l_max)->default_val(12);
  corollary->add_option("--rmax", o.corollary.r_max)->default_val(12);
  add_common(corollary);
  auto* audit = ver->add_subcommand("audit", "Exhaustive injection audit, 1 <= r <= k <= l");
  audit->add_option("--kmax", o.audit.k_max)->default_val(6);
  audit->add_option("--lmax", o.audit.l_max)->default_val(6);
  audit->add_option("--rmax", o.audit.r_max)->default_val(6);
  audit->add_flag("--all-admissible", o.all_admissible, "Also audit cells with k - r < l < k");
  audit->add_flag("--allow-large", o.allow_large, "Lift the audit and enumeration caps");
  add_common(audit);
  auto* counter = ver->add_subcommand("counterexamples", "C2C4 - C3^2 and the four-polynomial example");
  counter->add_option("--kmax", o.counter_k, "Range for C_{k-1}C_{k+1} - qC_k^2")->default_val(25);
  counter->add_flag("--json", o.json);

  auto* ren = app.add_subcommand("render", "Draw the scene for (PI, SIGMA)");
  ren->add_option("PI", o.pi)->required();
  ren->add_option("SIGMA", o.sigma)->required();
  ren->add_option("--r", o.r)->check(CLI::PositiveNumber);
  ren->add_flag("--svg", o.svg);
  ren->add_flag("--ascii", o.ascii);
  ren->add_flag("--after", o.after, "Show nu and omega instead of pi and sigma");
  ren->add_option("--cell", o.cell, "SVG cell size in pixels")->check(CLI::Range(4, 400));
  ren->add_option("--out", o.out_file, "Write to FILE instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (poly->parsed()) return cmd_poly(o, out);
    if (en->parsed()) return cmd_enumerate(o, out);
    if (inv->parsed()) return cmd_inv(o, out);
    if (inj->parsed()) return cmd_inject(o, out);
    if (ren->parsed()) return cmd_render(o, out, err);
    if (theorem->parsed()) {
      return cmd_verify_sweep(o, out, SweepMode::kGap, {o.theorem_k, o.theorem_k, 1, true},
                              "theorem");
    }
    if (corollary->parsed()) {
      return cmd_verify_sweep(o, out, SweepMode::kGapWithSharpness, o.corollary, "corollary");
    }
    if (audit->parsed()) {
      SweepBounds bounds = o.audit;
      bounds.l_at_least_k = !o.all_admissible;
      return cmd_verify_sweep(o, out, SweepMode::kAudit, bounds, "audit");
    }
    if (counter->parsed()) return cmd_counterexamples(o, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EnumerationBoundError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantBreach& e) {
    err << "invariant breach: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace qcat
