#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spectra4/asymptotics.hpp"
#include "spectra4/birkhoff.hpp"
#include "spectra4/config.hpp"
#include "spectra4/spectrum.hpp"

namespace {

using nlohmann::json;
using namespace spectra4;

// Exit codes: 0 success, 1 identity failure (or internal error),
// 2 config error, 3 spectral-count mismatch.
constexpr int kOk = 0;
constexpr int kIdentityFailure = 1;
constexpr int kConfigError = 2;
constexpr int kCountMismatch = 3;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct CommonOpts {
  std::string config_path;
  std::string order = "p2";
  std::string precision;
  std::string format;
  int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_config = true) {
  auto* c = cmd->add_option("--config", opts.config_path,
                            "problem configuration file (JSON)");
  if (needs_config) c->required();
  cmd->add_option("--order", opts.order, "expansion order")
      ->check(CLI::IsMember({"rough", "L1", "p1", "p2", "p3_full"}));
  cmd->add_option("--precision", opts.precision, "floating precision")
      ->check(CLI::IsMember({"double", "extended"}));
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--threads", opts.threads, "worker thread count")
      ->check(CLI::PositiveNumber);
}

ProblemConfig load(const CommonOpts& opts) {
  ProblemConfig cfg = load_config_file(opts.config_path);
  if (opts.precision == "double") cfg.plan.precision = Precision::kDouble;
  if (opts.precision == "extended") {
    cfg.plan.precision = Precision::kExtended;
    cfg.plan.ode_tol = std::min(cfg.plan.ode_tol, 1e-14);
  }
  if (opts.format == "csv") cfg.format = OutputFormat::kCsv;
  if (opts.format == "json") cfg.format = OutputFormat::kJson;
  if (opts.threads > 0) cfg.plan.threads = opts.threads;
  return cfg;
}

void emit(const ProblemConfig& cfg, json& doc,
          const std::vector<std::string>& csv_header,
          const std::vector<std::vector<std::string>>& csv_rows) {
  if (cfg.format == OutputFormat::kJson) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < csv_header.size(); ++i) {
    std::cout << (i ? "," : "") << csv_header[i];
  }
  std::cout << "\n";
  for (const auto& row : csv_rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::cout << (i ? "," : "") << row[i];
    }
    std::cout << "\n";
  }
}

int cmd_solve(const CommonOpts& opts) {
  const ProblemConfig cfg = load(opts);
  const auto evs = solve_range(cfg.p, cfg.q, cfg.n_lo, cfg.n_hi, cfg.plan);
  json doc{{"command", "solve"}, {"status", "ok"}};
  auto& arr = doc["eigenvalues"] = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : evs) {
    arr.push_back({{"n", e.n},
                   {"z", e.z},
                   {"mu", e.mu},
                   {"residual", e.residual},
                   {"iterations", e.iterations},
                   {"low_region", e.low_region}});
    rows.push_back({std::to_string(e.n), fmt17(e.z), fmt17(e.mu),
                    fmt17(e.residual), std::to_string(e.iterations),
                    e.low_region ? "1" : "0"});
  }
  emit(cfg, doc, {"n", "z", "mu", "residual", "iterations", "low_region"},
       rows);
  return kOk;
}

int cmd_asymptote(const CommonOpts& opts) {
  const ProblemConfig cfg = load(opts);
  const ExpansionOrder order = expansion_order_from_string(opts.order);
  json doc{{"command", "asymptote"}, {"status", "ok"}};
  auto& arr = doc["asymptotics"] = json::array();
  std::vector<std::vector<std::string>> rows;
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    const auto a = mu_asymptotic(cfg.p, cfg.q, n, order);
    arr.push_back({{"n", a.n},
                   {"order", to_string(a.order)},
                   {"mu", a.mu},
                   {"mu0", a.mu0},
                   {"term_z2", a.term_z2},
                   {"term_z1", a.term_z1},
                   {"term_z0", a.term_z0},
                   {"term_zm1", a.term_zm1}});
    rows.push_back({std::to_string(a.n), to_string(a.order), fmt17(a.mu0),
                    fmt17(a.term_z2), fmt17(a.term_z1), fmt17(a.term_z0),
                    fmt17(a.term_zm1), fmt17(a.mu)});
  }
  emit(cfg, doc,
       {"n", "order", "mu0", "term_z2", "term_z1", "term_z0", "term_zm1",
        "mu"},
       rows);
  return kOk;
}

int cmd_compare(const CommonOpts& opts) {
  const ProblemConfig cfg = load(opts);
  const ExpansionOrder order = expansion_order_from_string(opts.order);
  const auto evs = solve_range(cfg.p, cfg.q, cfg.n_lo, cfg.n_hi, cfg.plan);
  json doc{{"command", "compare"}, {"status", "ok"}};
  auto& arr = doc["comparison"] = json::array();
  std::vector<std::vector<std::string>> rows;
  std::vector<int> idx;
  std::vector<double> resid, mus;
  for (const auto& e : evs) {
    const double mu_a = mu_asymptotic(cfg.p, cfg.q, e.n, order).mu;
    const double diff = e.mu - mu_a;
    arr.push_back({{"n", e.n},
                   {"mu_numeric", e.mu},
                   {"mu_asymptotic", mu_a},
                   {"difference", diff},
                   {"residual", e.residual}});
    rows.push_back({std::to_string(e.n), fmt17(e.mu), fmt17(mu_a), fmt17(diff),
                    fmt17(e.residual)});
    idx.push_back(e.n);
    resid.push_back(std::abs(diff));
    mus.push_back(e.mu);
  }
  const auto slope = fit_residual_order(idx, resid, mus);
  if (slope) {
    doc["fit_slope"] = *slope;
  } else {
    doc["fit_slope"] = nullptr;
  }
  emit(cfg, doc,
       {"n", "mu_numeric", "mu_asymptotic", "difference", "residual"}, rows);
  if (cfg.format == OutputFormat::kCsv && slope) {
    std::cout << "# fit_slope," << fmt17(*slope) << "\n";
  }
  return kOk;
}

int cmd_verify_algebra(const CommonOpts& opts, bool tamper) {
  OutputFormat format =
      opts.format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
  if (!opts.config_path.empty()) {
    const ProblemConfig cfg = load(opts);
    format = cfg.format;
  }
  json doc{{"command", "verify-algebra"}};
  auto& arr = doc["identities"] = json::array();
  std::vector<std::vector<std::string>> rows;
  bool all_ok = true;
  for (const auto& id : registered_identities()) {
    bool ok = id.run();
    if (tamper && id.name == "w1-first") {
      // Deliberately corrupted constant: flip one entry of W1 and recheck.
      ExactMatrix4 w1 = birkhoff::matrix_W1();
      w1.at(0, 3) = -w1.at(0, 3);
      const ExactMatrix4 T = birkhoff::matrix_T();
      const ExactMatrix4 lhs =
          birkhoff::matrix_P() +
          T.commutator(w1) * (GaussianRational::i() * GaussianRational(4));
      ok = (lhs + T * T * T * GaussianRational::i()).is_zero();
    }
    all_ok = all_ok && ok;
    arr.push_back(
        {{"name", id.name}, {"statement", id.statement}, {"passed", ok}});
    rows.push_back({id.name, ok ? "pass" : "fail"});
  }
  doc["status"] = all_ok ? "ok" : "failed";
  if (format == OutputFormat::kJson) {
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& row : rows) {
      std::cout << row[0] << "," << row[1] << "\n";
    }
  }
  return all_ok ? kOk : kIdentityFailure;
}

int cmd_localize(const CommonOpts& opts) {
  const ProblemConfig cfg = load(opts);
  json doc{{"command", "localize"}, {"status", "ok"}};
  auto& arr = doc["localization"] = json::array();
  std::vector<std::vector<std::string>> rows;
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    const double center = std::numbers::pi / 2 + std::numbers::pi * n;
    const int count = count_zeros_in_disk(cfg.p, cfg.q, n, cfg.plan);
    const double k4 = kappa(cfg.p, cfg.q, 4, n);
    const auto model =
        char_asymptotic(cfg.p, cfg.q, std::pow(center, 4) * 1.0001);
    if (count != 1) {
      throw CountMismatch("disk around index " + std::to_string(n) +
                              " does not hold exactly one eigenvalue",
                          1, count);
    }
    arr.push_back({{"n", n},
                   {"center_z", center},
                   {"disk_count", count},
                   {"kappa4", k4},
                   {"model_near_zero", model.near_zero}});
    rows.push_back({std::to_string(n), fmt17(center), std::to_string(count),
                    fmt17(k4), model.near_zero ? "1" : "0"});
  }
  emit(cfg, doc, {"n", "center_z", "disk_count", "kappa4", "model_near_zero"},
       rows);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral solver for a periodic fourth-order operator"};
  app.require_subcommand(1);

  CommonOpts solve_opts, asym_opts, cmp_opts, alg_opts, loc_opts;
  bool tamper = false;

  auto* solve = app.add_subcommand("solve", "compute eigenvalues numerically");
  add_common(solve, solve_opts);
  auto* asym = app.add_subcommand("asymptote", "evaluate eigenvalue expansions");
  add_common(asym, asym_opts);
  auto* cmp = app.add_subcommand(
      "compare", "numeric eigenvalues against the expansion, with decay fit");
  add_common(cmp, cmp_opts);
  auto* alg =
      app.add_subcommand("verify-algebra", "check the exact matrix identities");
  add_common(alg, alg_opts, /*needs_config=*/false);
  alg->add_flag("--tamper", tamper)->group("");  // hidden; test hook
  auto* loc = app.add_subcommand(
      "localize", "argument-principle localization of each eigenvalue");
  add_common(loc, loc_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(solve_opts);
    if (asym->parsed()) return cmd_asymptote(asym_opts);
    if (cmp->parsed()) return cmd_compare(cmp_opts);
    if (alg->parsed()) return cmd_verify_algebra(alg_opts, tamper);
    if (loc->parsed()) return cmd_localize(loc_opts);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const CountMismatch& e) {
    std::cerr << "count mismatch: " << e.what() << " (expected " << e.expected
              << ", found " << e.found << ")\n";
    return kCountMismatch;
  } catch (const ContourTooClose& e) {
    std::cerr << "count failed: " << e.what() << "\n";
    return kCountMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIdentityFailure;
  }
  return kOk;
}
