#include "qcat/report.hpp"

#include <iomanip>
#include <sstream>

namespace qcat {

using nlohmann::json;

json to_json(const Violation& v) { return {{"degree", v.degree}, {"coeff", v.coeff.get_str()}}; }

namespace {

json optional_violation(const std::optional<Violation>& v) {
  return v ? to_json(*v) : json(nullptr);
}

json params(std::size_t k, std::size_t l, std::size_t r) {
  return {{"k", k}, {"l", l}, {"r", r}};
}

std::string cell_label(const json& p) {
  std::ostringstream out;
  out << "r=" << std::setw(2) << p["r"].get<std::size_t>() << " k=" << std::setw(2)
      << p["k"].get<std::size_t>() << " l=" << std::setw(2) << p["l"].get<std::size_t>();
  return out.str();
}

std::string violation_text(const json& v) {
  if (v.is_null()) return "";
  return " first negative q^" + std::to_string(v["degree"].get<std::size_t>()) + " coeff " +
         v["coeff"].get<std::string>();
}

std::string row(const json& rep) {
  const std::string kind = rep["kind"].get<std::string>();
  std::ostringstream out;
  out << (rep["verdict"].get<bool>() ? "ok   " : "FAIL ");
  if (kind == "gap") {
    out << cell_label(rep["params"]) << "  deg " << rep["degrees"]["minuend"].get<std::size_t>()
        << (rep["nonneg"].get<bool>() ? "  nonnegative" : "  NEGATIVE");
    if (rep.contains("sharpness")) {
      const auto& s = rep["sharpness"];
      out << "  sharp " << (s["degree_equal"].get<bool>() && s["bumped_fails"].get<bool>() ? "yes" : "NO");
    }
    out << violation_text(rep["violation"]);
  } else if (kind == "audit") {
    out << cell_label(rep["params"]) << "  pairs " << rep["pairs_checked"].get<std::size_t>()
        << "  injective " << (rep["injective"].get<bool>() ? "yes" : "NO") << "  valid "
        << (rep["outputs_valid"].get<bool>() ? "yes" : "NO") << "  shift "
        << (rep["shift_ok"].get<bool>() ? "yes" : "NO") << "  complement=gap "
        << (rep["matches_gap"].get<bool>() ? "yes" : "NO");
  } else {
    out << rep["label"].get<std::string>() << "  expected "
        << (rep["expected_nonneg"].get<bool>() ? "nonnegative" : "a negative coefficient")
        << ", got " << (rep["nonneg"].get<bool>() ? "nonnegative" : "negative")
        << violation_text(rep["violation"]);
  }
  return out.str();
}

}  // namespace

json to_json(const GapReport& rep) {
  json j = {{"kind", "gap"},
            {"params", params(rep.k, rep.l, rep.r)},
            {"gap", poly_to_json(rep.gap)},
            {"verdict", rep.ok()},
            {"violation", optional_violation(rep.first_violation)},
            {"nonneg", rep.nonneg},
            {"degrees", {{"minuend", rep.degree_minuend}, {"subtrahend", rep.degree_subtrahend}}}};
  if (rep.sharpness) {
    j["sharpness"] = {{"degree_equal", rep.sharpness->degree_equal},
                      {"bumped_fails", rep.sharpness->bumped_fails},
                      {"bumped_violation", optional_violation(rep.sharpness->bumped_violation)}};
  }
  return j;
}

json to_json(const AuditReport& rep) {
  return {{"kind", "audit"},
          {"params", params(rep.k, rep.l, rep.r)},
          {"gap", poly_to_json(rep.complement_poly)},
          {"verdict", rep.ok()},
          {"violation", nullptr},
          {"pairs_checked", rep.pairs_checked},
          {"injective", rep.injective},
          {"outputs_valid", rep.outputs_valid},
          {"shift_ok", rep.shift_ok},
          {"matches_gap", rep.matches_gap},
          {"failures", rep.failures}};
}

json to_json(const CounterexampleReport& rep) {
  auto checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"kind", "counterexample"},
                      {"params", {{"name", rep.name}}},
                      {"label", c.label},
                      {"gap", poly_to_json(c.poly)},
                      {"verdict", c.nonneg == c.expected_nonneg},
                      {"violation", optional_violation(c.first_violation)},
                      {"nonneg", c.nonneg},
                      {"expected_nonneg", c.expected_nonneg}});
  }
  return {{"kind", "counterexample-set"},
          {"name", rep.name},
          {"verdict", rep.expected_pattern},
          {"checks", std::move(checks)}};
}

json to_json(const SweepSummary& summary, const std::string& mode) {
  auto cells = json::array();
  for (const auto& c : summary.cells) {
    cells.push_back(std::visit([](const auto& rep) { return to_json(rep); }, c));
  }
  return {{"kind", "sweep"},
          {"mode", mode},
          {"cells_checked", summary.cells.size()},
          {"failures", summary.failures},
          {"verdict", summary.all_ok()},
          {"cells", std::move(cells)}};
}

std::string format_table(const json& report) {
  std::ostringstream out;
  const std::string kind = report["kind"].get<std::string>();
  if (kind == "sweep") {
    for (const auto& cell : report["cells"]) out << row(cell) << '\n';
    const auto n = report["cells_checked"].get<std::size_t>();
    const auto failures = report["failures"].get<std::size_t>();
    const std::string mode = report["mode"].get<std::string>();
    if (failures == 0) {
      out << (mode == "audit" ? "all cells verified" : "all cells nonnegative") << " (" << n
          << " cells)\n";
    } else {
      out << failures << " of " << n << " cells FAILED\n";
    }
  } else if (kind == "counterexample-set") {
    out << "[" << report["name"].get<std::string>() << "]\n";
    for (const auto& c : report["checks"]) out << row(c) << '\n';
    out << (report["verdict"].get<bool>() ? "expected sign pattern confirmed"
                                          : "sign pattern NOT as expected")
        << '\n';
  } else {
    out << row(report) << '\n';
  }
  return out.str();
}

}  // namespace qcat
