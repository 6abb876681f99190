#include "dtomo/runner/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dtomo/errors.hpp"

namespace dtomo {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  fail(ErrorKind::Config, path + ": " + what);
}

void only_keys(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
  if (!obj.is_object()) bad(path.empty() ? "/" : path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) bad(path + "/" + key, "unknown key");
  }
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) bad(path, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) bad(path, "expected a finite number");
  return x;
}

std::int64_t integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) bad(path, "expected an integer");
  return v.get<std::int64_t>();
}

std::string string(const json& v, const std::string& path) {
  if (!v.is_string()) bad(path, "expected a string");
  return v.get<std::string>();
}

Range range(const json& v, const std::string& path) {
  only_keys(v, path, {"min", "max", "step"});
  for (const char* k : {"min", "max", "step"}) {
    if (!v.contains(k)) bad(path + "/" + k, "missing");
  }
  Range r{number(v["min"], path + "/min"), number(v["max"], path + "/max"), number(v["step"], path + "/step")};
  if (!(r.step > 0)) bad(path + "/step", "must be positive");
  if (r.max < r.min) bad(path + "/max", "must not be below min");
  return r;
}

std::vector<int> n_list(const json& v, const std::string& path) {
  std::vector<int> out;
  auto push = [&](const json& e, const std::string& p) {
    const auto n = integer(e, p);
    if (n < 1 || n > 100000) bad(p, "N must lie in 1..100000");
    out.push_back(int(n));
  };
  if (v.is_array()) {
    if (v.empty()) bad(path, "empty list");
    for (std::size_t k = 0; k < v.size(); ++k) push(v[k], path + "/" + std::to_string(k));
  } else if (v.is_object()) {
    only_keys(v, path, {"min", "max", "step"});
    const auto lo = integer(v.value("min", json()), path + "/min");
    const auto hi = integer(v.value("max", json()), path + "/max");
    const auto step = v.contains("step") ? integer(v["step"], path + "/step") : 1;
    if (step < 1) bad(path + "/step", "must be positive");
    if (hi < lo) bad(path + "/max", "must not be below min");
    for (auto n = lo; n <= hi; n += step) push(json(n), path);
  } else {
    push(v, path);
  }
  return out;
}

StateSpec state_spec(const json& v, const std::string& path) {
  only_keys(v, path, {"preset", "amplitudes"});
  StateSpec s;
  if (v.contains("preset") == v.contains("amplitudes")) bad(path, "give exactly one of preset, amplitudes");
  if (v.contains("preset")) {
    s.preset = string(v["preset"], path + "/preset");
  } else {
    const json& a = v["amplitudes"];
    if (!a.is_array()) bad(path + "/amplitudes", "expected a list of [re, im] pairs");
    for (std::size_t k = 0; k < a.size(); ++k) {
      const std::string p = path + "/amplitudes/" + std::to_string(k);
      if (!a[k].is_array() || a[k].size() != 2) bad(p, "expected [re, im]");
      s.amplitudes.emplace_back(number(a[k][0], p + "/0"), number(a[k][1], p + "/1"));
    }
  }
  try {
    (void)s.build();
  } catch (const Error& e) {
    bad(path, e.what());
  }
  return s;
}

}  // namespace

std::vector<double> Range::values() const {
  const auto count = static_cast<long>(std::floor((max - min) / step + 1e-9)) + 1;
  std::vector<double> v(static_cast<std::size_t>(count));
  for (long k = 0; k < count; ++k) v[static_cast<std::size_t>(k)] = min + double(k) * step;
  return v;
}

SystemState StateSpec::build() const {
  if (!preset.empty()) return preset_state(preset);
  return make_state(amplitudes);
}

std::vector<ComplexPhase> RunConfig::phase_points() const {
  std::vector<ComplexPhase> pts = phases;
  if (phi1_grid && phi2_grid) {
    for (double p2 : phi2_grid->values()) {
      for (double p1 : phi1_grid->values()) pts.push_back({p1, p2});
    }
  }
  return pts;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Config, std::string("malformed JSON: ") + e.what());
  }
  only_keys(doc, "", {"scheme", "state", "theta", "target_x", "pointer_axis", "N", "phases", "grid", "shots",
                      "repetitions", "mode", "tr_split", "gamma_abs", "phi1", "seed", "output",
                      "records_output"});
  RunConfig c;
  c.hash = fnv1a(doc.dump());
  if (!doc.contains("scheme")) bad("/scheme", "missing");
  try {
    c.scheme = parse_scheme(string(doc["scheme"], "/scheme"));
  } catch (const Error&) {
    bad("/scheme", "expected one of qubit, noon, dicke, tr");
  }
  if (doc.contains("state")) c.state = state_spec(doc["state"], "/state");
  if (doc.contains("theta")) {
    c.theta = number(doc["theta"], "/theta");
    if (!(c.theta > 0 && c.theta <= kPi)) bad("/theta", "must lie in (0, pi]");
  }
  if (doc.contains("target_x")) {
    const auto x = integer(doc["target_x"], "/target_x");
    if (x < 1) bad("/target_x", "must be at least 1");
    c.target_x = int(x);
  }
  if (c.state && c.target_x > c.state->build().dim()) bad("/target_x", "exceeds the state dimension");
  if (doc.contains("pointer_axis")) {
    const auto a = string(doc["pointer_axis"], "/pointer_axis");
    if (a == "z") {
      c.pointer_axis = Axis::z;
    } else if (a == "y") {
      c.pointer_axis = Axis::y;
    } else {
      bad("/pointer_axis", "expected \"z\" or \"y\"");
    }
  }
  if (doc.contains("N")) c.n_values = n_list(doc["N"], "/N");
  if (doc.contains("phases")) {
    const json& ps = doc["phases"];
    if (!ps.is_array()) bad("/phases", "expected a list of [phi1, phi2] pairs");
    for (std::size_t k = 0; k < ps.size(); ++k) {
      const std::string p = "/phases/" + std::to_string(k);
      if (!ps[k].is_array() || ps[k].size() != 2) bad(p, "expected [phi1, phi2]");
      c.phases.push_back({number(ps[k][0], p + "/0"), number(ps[k][1], p + "/1")});
    }
  }
  if (doc.contains("grid")) {
    only_keys(doc["grid"], "/grid", {"phi1", "phi2"});
    if (!doc["grid"].contains("phi1") || !doc["grid"].contains("phi2")) bad("/grid", "needs phi1 and phi2");
    c.phi1_grid = range(doc["grid"]["phi1"], "/grid/phi1");
    c.phi2_grid = range(doc["grid"]["phi2"], "/grid/phi2");
  }
  if (doc.contains("shots")) {
    c.shots = integer(doc["shots"], "/shots");
    if (c.shots < 1) bad("/shots", "must be positive");
  }
  if (doc.contains("repetitions")) {
    const auto r = integer(doc["repetitions"], "/repetitions");
    if (r < 2 || r > 1000000) bad("/repetitions", "must lie in 2..1000000");
    c.repetitions = int(r);
  }
  if (doc.contains("mode")) {
    const auto m = string(doc["mode"], "/mode");
    if (m != "exact" && m != "sampled") bad("/mode", "expected \"exact\" or \"sampled\"");
    c.sampled = m == "sampled";
  }
  if (doc.contains("tr_split")) {
    c.tr_split = number(doc["tr_split"], "/tr_split");
    if (!(c.tr_split > 0 && c.tr_split < 1)) bad("/tr_split", "must lie in (0, 1)");
  }
  if (doc.contains("gamma_abs")) {
    const json& g = doc["gamma_abs"];
    if (g.is_array()) {
      for (std::size_t k = 0; k < g.size(); ++k) c.gamma_abs.push_back(number(g[k], "/gamma_abs/" + std::to_string(k)));
    } else {
      c.gamma_abs.push_back(number(g, "/gamma_abs"));
    }
    for (double v : c.gamma_abs) {
      if (!(v > 0)) bad("/gamma_abs", "values must be positive");
    }
  }
  if (doc.contains("phi1")) c.fisher_phi1 = number(doc["phi1"], "/phi1");
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) bad("/seed", "expected a non-negative integer");
    c.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("output")) c.output = string(doc["output"], "/output");
  if (doc.contains("records_output")) c.records_output = string(doc["records_output"], "/records_output");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Config, "cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace dtomo
