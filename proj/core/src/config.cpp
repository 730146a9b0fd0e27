#include "spectra4/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace spectra4 {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> known,
                    const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : known) {
      if (it.key() == k) {
        ok = true;
        break;
      }
    }
    if (!ok) throw ConfigError("unknown field '" + it.key() + "' in " + where);
  }
}

PeriodicCoefficient parse_coefficient(const json& obj, const std::string& name) {
  if (obj.is_null()) return PeriodicCoefficient::zero();
  if (!obj.is_object()) throw ConfigError(name + " must be an object");
  reject_unknown(obj, {"constant", "harmonics"}, name);
  const double c = obj.value("constant", 0.0);
  std::vector<Harmonic> hs;
  if (obj.contains("harmonics")) {
    if (!obj.at("harmonics").is_array()) {
      throw ConfigError(name + ".harmonics must be an array");
    }
    for (const auto& h : obj.at("harmonics")) {
      reject_unknown(h, {"k", "a", "b"}, name + ".harmonics[]");
      if (!h.contains("k")) {
        throw ConfigError(name + ".harmonics entry lacks 'k'");
      }
      hs.push_back({h.at("k").get<int>(), h.value("a", 0.0), h.value("b", 0.0)});
    }
  }
  return PeriodicCoefficient(c, std::move(hs));
}

}  // namespace

ProblemConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config root must be an object");
  reject_unknown(doc,
                 {"p", "q", "n_range", "tolerances", "precision", "threads",
                  "output"},
                 "config");

  ProblemConfig cfg;
  if (doc.contains("p")) cfg.p = parse_coefficient(doc.at("p"), "p");
  if (doc.contains("q")) cfg.q = parse_coefficient(doc.at("q"), "q");

  if (doc.contains("n_range")) {
    const auto& r = doc.at("n_range");
    if (!r.is_array() || r.size() != 2) {
      throw ConfigError("n_range must be [lo, hi]");
    }
    cfg.n_lo = r[0].get<int>();
    cfg.n_hi = r[1].get<int>();
    if (cfg.n_lo < 0 || cfg.n_hi < cfg.n_lo) {
      throw ConfigError("n_range must satisfy 0 <= lo <= hi");
    }
  }

  if (doc.contains("tolerances")) {
    const auto& t = doc.at("tolerances");
    reject_unknown(t, {"ode_tol", "z_abs_tol"}, "tolerances");
    cfg.plan.ode_tol = t.value("ode_tol", cfg.plan.ode_tol);
    cfg.plan.z_abs_tol = t.value("z_abs_tol", cfg.plan.z_abs_tol);
    if (cfg.plan.ode_tol <= 0 || cfg.plan.z_abs_tol <= 0) {
      throw ConfigError("tolerances must be positive");
    }
  }

  if (doc.contains("precision")) {
    const std::string s = doc.at("precision").get<std::string>();
    if (s == "double") {
      cfg.plan.precision = Precision::kDouble;
    } else if (s == "extended") {
      cfg.plan.precision = Precision::kExtended;
      cfg.plan.ode_tol = std::min(cfg.plan.ode_tol, 1e-14);
    } else {
      throw ConfigError("precision must be 'double' or 'extended'");
    }
  }

  if (doc.contains("threads")) {
    cfg.plan.threads = doc.at("threads").get<int>();
    if (cfg.plan.threads < 1) throw ConfigError("threads must be >= 1");
  }

  if (doc.contains("output")) {
    const std::string s = doc.at("output").get<std::string>();
    if (s == "csv") {
      cfg.format = OutputFormat::kCsv;
    } else if (s == "json") {
      cfg.format = OutputFormat::kJson;
    } else {
      throw ConfigError("output must be 'csv' or 'json'");
    }
  }

  return cfg;
}

ProblemConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  ProblemConfig cfg = parse_config(buf.str());
  if (const char* env = std::getenv("SPECTRA4_THREADS")) {
    const int t = std::atoi(env);
    if (t >= 1) cfg.plan.threads = t;
  }
  return cfg;
}

}  // namespace spectra4
