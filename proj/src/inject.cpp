#include "qcat/inject.hpp"

#include <string>

#include "qcat/errors.hpp"

namespace qcat {

void check_admissible(std::size_t k, std::size_t l, std::size_t r) {
  if (r < 1 || r > k || l + r <= k) {
    throw PreconditionError("inadmissible parameters (k=" + std::to_string(k) +
                            ", l=" + std::to_string(l) + ", r=" + std::to_string(r) +
                            "): need 1 <= r <= k and l > k - r");
  }
}

SplitCertificate split_index(const LatticeWord& pi, const LatticeWord& sigma, std::size_t r) {
  const std::size_t k = pi.half_length();
  const std::size_t l = sigma.half_length();
  check_admissible(k, l, r);

  const std::string_view p = pi.str();
  const std::string_view s = sigma.str();

  // Running 2-counts of pi_1..pi_{t+2r} and sigma_1..sigma_t.
  std::size_t pi_twos = counts(p.substr(0, 2 * r)).twos;
  std::size_t sigma_twos = 0;
  const std::size_t last = 2 * (k - r);
  for (std::size_t t = 0;; ++t) {
    if (pi_twos == sigma_twos + r) {
      SplitCertificate cert;
      cert.split = t;
      cert.r = r;
      cert.pi_left = std::string(p.substr(0, t + 2 * r));
      cert.pi_right = std::string(p.substr(t + 2 * r));
      cert.sigma_left = std::string(s.substr(0, t));
      cert.sigma_right = std::string(s.substr(t));
      cert.pi_left_counts = counts(cert.pi_left);
      cert.sigma_left_counts = counts(cert.sigma_left);
      cert.pi_right_ones = counts(cert.pi_right).ones;
      cert.sigma_right_ones = counts(cert.sigma_right).ones;
      cert.meet_point = {cert.pi_left_counts.ones, cert.pi_left_counts.twos};
      return cert;
    }
    if (t == last) break;
    if (p[t + 2 * r] == '2') ++pi_twos;
    if (s[t] == '2') ++sigma_twos;
  }
  throw InvariantBreach("no split index for pi=" + std::string(p) + ", sigma=" + std::string(s) +
                        ", r=" + std::to_string(r));
}

InjectionResult inject(const LatticeWord& pi, const LatticeWord& sigma, std::size_t r) {
  SplitCertificate cert = split_index(pi, sigma, r);
  const std::size_t k = pi.half_length();
  const std::size_t l = sigma.half_length();

  std::string nu = concat(cert.sigma_left, cert.pi_right);
  std::string omega = concat(cert.pi_left, cert.sigma_right);
  if (!validate(nu) || nu.size() != 2 * (k - r) || !validate(omega) ||
      omega.size() != 2 * (l + r)) {
    throw InvariantBreach("injection produced invalid words nu=" + nu + ", omega=" + omega);
  }
  InjectionResult res{LatticeWord(std::move(nu)), LatticeWord(std::move(omega)), std::move(cert),
                      shift_exponent(k, l, r)};
  return res;
}

StraddleDecomposition straddle_decomposition(std::string_view left, std::string_view right) {
  StraddleDecomposition d;
  d.inv_left = inversions(left);
  d.inv_right = inversions(right);
  d.straddle = counts(left).twos * counts(right).ones;
  d.total = d.inv_left + d.inv_right + d.straddle;
  return d;
}

ShiftLedger shift_identity_audit(const LatticeWord& pi, const LatticeWord& sigma, std::size_t r) {
  const SplitCertificate cert = split_index(pi, sigma, r);
  ShiftLedger led;
  led.k = pi.half_length();
  led.l = sigma.half_length();
  led.r = r;
  led.pi = straddle_decomposition(cert.pi_left, cert.pi_right);
  led.sigma = straddle_decomposition(cert.sigma_left, cert.sigma_right);
  led.pi_left_sigma_right = straddle_decomposition(cert.pi_left, cert.sigma_right);
  led.sigma_left_pi_right = straddle_decomposition(cert.sigma_left, cert.pi_right);

  led.decompositions_hold =
      led.pi.total == inversions(pi) && led.sigma.total == inversions(sigma) &&
      led.pi_left_sigma_right.total == inversions(concat(cert.pi_left, cert.sigma_right)) &&
      led.sigma_left_pi_right.total == inversions(concat(cert.sigma_left, cert.pi_right));

  const auto s = [](std::size_t v) { return static_cast<long long>(v); };
  led.difference = s(led.pi_left_sigma_right.total) + s(led.sigma_left_pi_right.total) -
                   s(led.pi.total) - s(led.sigma.total);
  led.factored = (s(cert.pi_left_counts.twos) - s(cert.sigma_left_counts.twos)) *
                 (s(cert.sigma_right_ones) - s(cert.pi_right_ones));
  led.expected = s(shift_exponent(led.k, led.l, r));
  return led;
}

std::vector<LatticePoint> path_points(std::string_view w, LatticePoint origin) {
  std::vector<LatticePoint> pts;
  pts.reserve(w.size() + 1);
  pts.push_back(origin);
  for (char c : w) {
    if (c == '1') ++origin.x;
    else ++origin.y;
    pts.push_back(origin);
  }
  return pts;
}

GeometricScene geometric_scene(const LatticeWord& pi, const LatticeWord& sigma, std::size_t r) {
  GeometricScene sc;
  sc.k = pi.half_length();
  sc.l = sigma.half_length();
  sc.r = r;
  check_admissible(sc.k, sc.l, r);

  sc.big_side = sc.l + r;
  sc.pi_origin = {0, 0};
  sc.sigma_origin = {r, r};
  sc.rectangle_width = sc.l + r - sc.k;
  sc.rectangle_height = r;
  sc.rectangle_area = sc.rectangle_width * sc.rectangle_height;
  sc.pi = std::string(pi.str());
  sc.sigma = std::string(sigma.str());
  sc.pi_path = path_points(pi.str(), sc.pi_origin);
  sc.sigma_path = path_points(sigma.str(), sc.sigma_origin);

  bool found = false;
  for (std::size_t i = 0; i < sc.pi_path.size() && !found; ++i) {
    for (std::size_t j = 0; j < sc.sigma_path.size(); ++j) {
      if (sc.pi_path[i] == sc.sigma_path[j]) {
        sc.meet_point = sc.pi_path[i];
        sc.meet_index_pi = i;
        sc.meet_index_sigma = j;
        found = true;
        break;
      }
    }
  }
  if (!found) throw InvariantBreach("paths of pi and sigma never meet");

  // nu: sigma to the meet, then the rest of pi.
  sc.nu_path.assign(sc.sigma_path.begin(),
                    sc.sigma_path.begin() + static_cast<std::ptrdiff_t>(sc.meet_index_sigma) + 1);
  sc.nu_path.insert(sc.nu_path.end(),
                    sc.pi_path.begin() + static_cast<std::ptrdiff_t>(sc.meet_index_pi) + 1,
                    sc.pi_path.end());
  // omega: pi to the meet, then the rest of sigma.
  sc.omega_path.assign(sc.pi_path.begin(),
                       sc.pi_path.begin() + static_cast<std::ptrdiff_t>(sc.meet_index_pi) + 1);
  sc.omega_path.insert(sc.omega_path.end(),
                       sc.sigma_path.begin() + static_cast<std::ptrdiff_t>(sc.meet_index_sigma) + 1,
                       sc.sigma_path.end());
  return sc;
}

namespace {

nlohmann::json point_json(const LatticePoint& p) { return nlohmann::json::array({p.x, p.y}); }

nlohmann::json path_json(const std::vector<LatticePoint>& pts) {
  auto arr = nlohmann::json::array();
  for (const auto& p : pts) arr.push_back(point_json(p));
  return arr;
}

nlohmann::json decomposition_json(const StraddleDecomposition& d) {
  return {{"inv_left", d.inv_left},
          {"inv_right", d.inv_right},
          {"straddle", d.straddle},
          {"total", d.total}};
}

}  // namespace

nlohmann::json to_json(const SplitCertificate& c) {
  return {{"split", c.split},
          {"r", c.r},
          {"pi_left", c.pi_left},
          {"pi_right", c.pi_right},
          {"sigma_left", c.sigma_left},
          {"sigma_right", c.sigma_right},
          {"m1_pi_left", c.pi_left_counts.ones},
          {"m2_pi_left", c.pi_left_counts.twos},
          {"m1_sigma_left", c.sigma_left_counts.ones},
          {"m2_sigma_left", c.sigma_left_counts.twos},
          {"m1_pi_right", c.pi_right_ones},
          {"m1_sigma_right", c.sigma_right_ones},
          {"meet_point", point_json(c.meet_point)}};
}

nlohmann::json to_json(const InjectionResult& res) {
  const std::string pi = res.certificate.pi_left + res.certificate.pi_right;
  const std::string sigma = res.certificate.sigma_left + res.certificate.sigma_right;
  return {{"pi", pi},
          {"sigma", sigma},
          {"r", res.certificate.r},
          {"nu", std::string(res.nu.str())},
          {"omega", std::string(res.omega.str())},
          {"inv_pi", inversions(pi)},
          {"inv_sigma", inversions(sigma)},
          {"inv_nu", inversions(res.nu)},
          {"inv_omega", inversions(res.omega)},
          {"shift", res.shift_exponent},
          {"certificate", to_json(res.certificate)}};
}

nlohmann::json to_json(const ShiftLedger& led) {
  return {{"k", led.k},
          {"l", led.l},
          {"r", led.r},
          {"pi", decomposition_json(led.pi)},
          {"sigma", decomposition_json(led.sigma)},
          {"pi_left_sigma_right", decomposition_json(led.pi_left_sigma_right)},
          {"sigma_left_pi_right", decomposition_json(led.sigma_left_pi_right)},
          {"decompositions_hold", led.decompositions_hold},
          {"difference", led.difference},
          {"factored", led.factored},
          {"expected", led.expected},
          {"ok", led.ok()}};
}

nlohmann::json to_json(const GeometricScene& sc) {
  return {{"k", sc.k},
          {"l", sc.l},
          {"r", sc.r},
          {"big_side", sc.big_side},
          {"pi", sc.pi},
          {"sigma", sc.sigma},
          {"pi_origin", point_json(sc.pi_origin)},
          {"sigma_origin", point_json(sc.sigma_origin)},
          {"rectangle", {{"x", sc.k}, {"y", 0}, {"width", sc.rectangle_width},
                         {"height", sc.rectangle_height}, {"area", sc.rectangle_area}}},
          {"meet_point", point_json(sc.meet_point)},
          {"pi_path", path_json(sc.pi_path)},
          {"sigma_path", path_json(sc.sigma_path)},
          {"nu_path", path_json(sc.nu_path)},
          {"omega_path", path_json(sc.omega_path)}};
}

}  // namespace qcat
