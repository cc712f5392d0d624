// Command-line front end: single-point evaluations, fixture verification,
// and deterministic parameter sweeps with machine-readable output.
//
// Exit codes: 0 = all checks pass, 1 = a numerical check failed,
// 2 = input/domain error.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bose2d/dyson.hpp"
#include "bose2d/filling_holes.hpp"
#include "bose2d/free_energy.hpp"
#include "bose2d/ideal_gas.hpp"
#include "bose2d/quantum_toy.hpp"
#include "bose2d/radial_potential.hpp"
#include "bose2d/scattering.hpp"
#include "bose2d/surgery.hpp"
#include "bose2d/torus.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitDomain = 2;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void print_kv(const std::string& key, double value) {
  std::cout << key << " = " << fmt17(value) << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

int worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("BOSE2D_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
  }
  return static_cast<int>(n);
}

std::vector<std::array<double, 2>> centers_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<std::array<double, 2>> centers;
  for (const auto& c : j) {
    if (!c.is_array() || c.size() != 2) {
      throw std::invalid_argument("centers: expected [[x,y],...]");
    }
    centers.push_back({c[0].get<double>(), c[1].get<double>()});
  }
  return centers;
}

// ------------------------------------------------------------------ ideal

int run_ideal(double beta, double rho, bool json) {
  bose2d::ThermoPoint point{beta, rho, std::nullopt};
  point.validate();
  const double mu = bose2d::mu0(point);
  const double f = bose2d::f0(point);
  if (json) {
    nlohmann::json out{{"beta", beta}, {"rho", rho}, {"mu0", mu},
                       {"f0", f}, {"f0_scaled", bose2d::f0_scaled(beta * rho)}};
    std::cout << out.dump(2) << "\n";
  } else {
    print_kv("mu0", mu);
    print_kv("f0", f);
    print_kv("f0_scaled", bose2d::f0_scaled(beta * rho));
  }
  return kExitPass;
}

// ---------------------------------------------------------------- scatter

int run_scatter(const std::string& potential_path, double R, bool json) {
  const auto v = bose2d::RadialPotential::from_json_text(read_file(potential_path));
  const auto res = bose2d::scattering_length(v, R);
  const double energy = res.degenerate ? 0.0 : bose2d::functional_energy(v, res);
  if (json) {
    nlohmann::json out{{"a", res.a}, {"R", res.R_used},
                       {"degenerate", res.degenerate},
                       {"functional_energy", energy}};
    std::cout << out.dump(2) << "\n";
  } else {
    print_kv("a", res.a);
    print_kv("functional_energy", energy);
    std::cout << "degenerate = " << (res.degenerate ? "true" : "false") << "\n";
  }
  return kExitPass;
}

// ---------------------------------------------------------------- surgery

nlohmann::json surgery_report_json(const bose2d::SurgeryReport& rep) {
  const char* names[] = {"range_cutoff", "cap_case1_tail", "cap_case2_shave",
                         "cap_noop"};
  nlohmann::json out{
      {"original_a", rep.original_a},
      {"modified_a", rep.modified_a},
      {"bound_lhs", rep.bound_lhs},
      {"bound_rhs", rep.bound_rhs},
      {"construction_case", names[static_cast<int>(rep.construction_case)]},
      {"phi", rep.phi},
      {"delta", rep.delta},
      {"s_or_t", rep.s_or_t},
      {"integral_2d", rep.integral_2d},
      {"R", rep.R},
      {"holds", rep.holds()}};
  if (rep.tau) out["tau"] = *rep.tau;
  return out;
}

int run_surgery_cap(const std::string& potential_path, double phi, double delta,
                    double R, const std::string& out_path) {
  const auto v = bose2d::RadialPotential::from_json_text(read_file(potential_path));
  const auto [vt, rep] = bose2d::cap_integral(v, phi, delta, R);
  const auto out = surgery_report_json(rep);
  if (out_path.empty()) {
    std::cout << out.dump(2) << "\n";
  } else {
    write_file(out_path, out.dump(2) + "\n");
  }
  return rep.holds(1e-12) ? kExitPass : kExitNumerical;
}

int run_surgery_cutoff(const std::string& potential_path, double R0_new,
                       double R, const std::string& out_path) {
  const auto v = bose2d::RadialPotential::from_json_text(read_file(potential_path));
  const auto [vt, rep] = bose2d::cutoff_range(v, R0_new, R);
  const auto out = surgery_report_json(rep);
  if (out_path.empty()) {
    std::cout << out.dump(2) << "\n";
  } else {
    write_file(out_path, out.dump(2) + "\n");
  }
  return rep.holds(1e-12) ? kExitPass : kExitNumerical;
}

// ------------------------------------------------------------ verify dyson

int run_verify_dyson(int grid_n, double L, double R, double s, double eps,
                     double kappa, double R0,
                     const std::string& potential_path,
                     const std::string& centers_path,
                     const std::string& out_path, bool use_Jj) {
  const auto v = bose2d::RadialPotential::from_json_text(read_file(potential_path));
  bose2d::TorusGrid grid{L, grid_n};
  grid.validate();

  bose2d::DysonParams params;
  params.R = R;
  params.s = s;
  params.epsilon = eps;
  params.kappa = kappa;
  params.R0 = R0 > 0.0 ? R0 : std::max(v.range_R0(), 0.05 * R);
  params.centers = centers_path.empty()
                       ? std::vector<std::array<double, 2>>{{0.0, 0.0}}
                       : centers_from_json(read_file(centers_path));
  params.validate(grid);

  // soft-potential scattering scale from the hard potential itself
  const auto scat = bose2d::scattering_length(v, R);
  const double a_tilde = std::max(1.05 * scat.a, params.R0);

  const auto res =
      bose2d::dyson_inequality_margin(grid, v, params, a_tilde, use_Jj);
  const bool pass = res.margin >= -1e-6 * res.op_norm &&
                    res.condition_integral <= 1.0 + 1e-12;
  nlohmann::json out{{"margin", res.margin},
                     {"op_norm", res.op_norm},
                     {"iterations", res.iterations},
                     {"condition_integral", res.condition_integral},
                     {"a_tilde", a_tilde},
                     {"pass", pass}};
  if (out_path.empty()) {
    std::cout << out.dump(2) << "\n";
  } else {
    write_file(out_path, out.dump(2) + "\n");
  }
  return pass ? kExitPass : kExitNumerical;
}

// ------------------------------------------------------------ verify holes

int run_verify_holes(double R0, double R, double ctilde, int grid_n, double L,
                     const std::string& centers_path,
                     const std::string& out_path) {
  bose2d::TorusGrid grid{L, grid_n};
  grid.validate();
  const auto centers = centers_path.empty()
                           ? std::vector<std::array<double, 2>>{{0.5 * L, 0.5 * L}}
                           : centers_from_json(read_file(centers_path));
  const auto res = bose2d::holes_inequality_margin(grid, centers, R0, R, ctilde);
  const bool pass = res.margin >= -1e-6 * res.op_norm;
  nlohmann::json out{{"margin", res.margin},
                     {"op_norm", res.op_norm},
                     {"iterations", res.iterations},
                     {"ctilde", ctilde},
                     {"pass", pass}};
  if (out_path.empty()) {
    std::cout << out.dump(2) << "\n";
  } else {
    write_file(out_path, out.dump(2) + "\n");
  }
  return pass ? kExitPass : kExitNumerical;
}

// ----------------------------------------------------------- bound / budget

nlohmann::json budget_json(const bose2d::ErrorBudget& b) {
  return nlohmann::json{
      {"regime", bose2d::regime_name(b.regime)},
      {"pc_sq_beta", b.pc_sq_beta},
      {"A1", b.A1},
      {"A2", b.A2},
      {"A3", b.A3},
      {"o1_bound", b.o1_bound},
      {"vacuous", b.vacuous},
      {"params",
       {{"R", b.params.R},
        {"s", b.params.s},
        {"kappa", b.params.kappa},
        {"b", b.params.b},
        {"phi", b.params.phi},
        {"C", b.params.C},
        {"epsilon", b.params.epsilon},
        {"D", b.params.D},
        {"tau", b.params.tau},
        {"tilde_tau", b.params.tilde_tau},
        {"d", b.params.d}}}};
}

int run_bound(double beta, double rho, double a, double sigma_flag, bool json) {
  double f_lower = 0.0;
  bose2d::ErrorBudget budget;
  double sigma = sigma_flag;
  if (sigma_flag > 0.0) {
    std::tie(f_lower, budget) = bose2d::lower_bound(beta, rho, sigma_flag);
  } else {
    bose2d::ThermoPoint point{beta, rho, a};
    point.validate();
    sigma = point.sigma();
    std::tie(f_lower, budget) = bose2d::lower_bound(point);
  }
  const double correction = bose2d::correction_term(beta, rho, sigma);
  const double ideal = rho * rho * bose2d::f0_scaled(beta * rho);
  if (json) {
    nlohmann::json out{{"beta", beta},   {"rho", rho},
                       {"sigma", sigma}, {"f0", ideal},
                       {"correction", correction}, {"f_lower", f_lower},
                       {"budget", budget_json(budget)}};
    std::cout << out.dump(2) << "\n";
  } else {
    print_kv("sigma", sigma);
    print_kv("f0", ideal);
    print_kv("correction", correction);
    print_kv("f_lower", f_lower);
    print_kv("o1_bound", budget.o1_bound);
    std::cout << "regime = " << bose2d::regime_name(budget.regime) << "\n";
  }
  return kExitPass;
}

int run_budget(double sigma, double beta_rho, bool json) {
  const auto budget = bose2d::error_budget(sigma, beta_rho);
  if (json) {
    nlohmann::json out = budget_json(budget);
    out["sigma"] = sigma;
    out["beta_rho"] = beta_rho;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "regime = " << bose2d::regime_name(budget.regime) << "\n";
    print_kv("pc_sq_beta", budget.pc_sq_beta);
    print_kv("A1", budget.A1);
    print_kv("A2", budget.A2);
    print_kv("A3", budget.A3);
    print_kv("o1_bound", budget.o1_bound);
    std::cout << "vacuous = " << (budget.vacuous ? "true" : "false") << "\n";
  }
  return kExitPass;
}

// -------------------------------------------------------------------- toy

int run_toy_berezin_lieb(double omega, double g, double beta, int nmax,
                         bool json) {
  bose2d::FockSpace space{1, nmax};
  const double margin = bose2d::berezin_lieb_margin(space, omega, g, beta);
  const bool pass = margin >= -1e-8;
  if (json) {
    nlohmann::json out{{"omega", omega}, {"g", g},       {"beta", beta},
                       {"nmax", nmax},   {"margin", margin}, {"pass", pass}};
    std::cout << out.dump(2) << "\n";
  } else {
    print_kv("margin", margin);
    std::cout << "pass = " << (pass ? "true" : "false") << "\n";
  }
  return pass ? kExitPass : kExitNumerical;
}

// ------------------------------------------------------------------- sweep

struct SweepConfig {
  std::vector<double> sigma;
  std::vector<double> beta_rho;
  std::map<std::string, double> constants;
  std::string out_path;  // empty: stdout
  long seed = 0;         // recorded for reproducibility bookkeeping
};

// value grammar: "a, b, c" (comma list) or "lo:hi:count" (log-spaced for
// sigma, linear for beta_rho)
std::vector<double> parse_range(const std::string& text, bool log_spaced) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    double lo = 0.0, hi = 0.0;
    long count = 0;
    char c1 = 0, c2 = 0;
    std::istringstream ss(text);
    if (!(ss >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' ||
        count < 1) {
      throw std::invalid_argument("sweep: bad range '" + text +
                                  "' (want lo:hi:count)");
    }
    for (long i = 0; i < count; ++i) {
      const double t = count == 1 ? 0.0 : double(i) / double(count - 1);
      out.push_back(log_spaced ? lo * std::pow(hi / lo, t)
                               : lo + (hi - lo) * t);
    }
    return out;
  }
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(std::stod(item));
  }
  return out;
}

// Flat key = value format with [sweep] / [constants] sections; '#' comments.
SweepConfig parse_config_flat(const std::string& text) {
  SweepConfig cfg;
  std::istringstream in(text);
  std::string line, section = "sweep";
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw std::invalid_argument("config line " + std::to_string(lineno) +
                                    ": unterminated section header");
      }
      section = line.substr(1, line.size() - 2);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    }
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    key.erase(key.find_last_not_of(" \t") + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    if (section == "constants") {
      cfg.constants[key] = std::stod(value);
    } else if (section == "sweep") {
      if (key == "sigma") {
        cfg.sigma = parse_range(value, true);
      } else if (key == "beta_rho") {
        cfg.beta_rho = parse_range(value, false);
      } else if (key == "out") {
        cfg.out_path = value;
      } else if (key == "seed") {
        cfg.seed = std::stol(value);
      } else {
        throw std::invalid_argument("config line " + std::to_string(lineno) +
                                    ": unknown key '" + key + "'");
      }
    } else {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": unknown section '" + section + "'");
    }
  }
  return cfg;
}

SweepConfig parse_config_json(const std::string& text) {
  SweepConfig cfg;
  const auto j = nlohmann::json::parse(text);
  const auto& sweep = j.at("sweep");
  if (sweep.contains("sigma")) {
    if (sweep["sigma"].is_string()) {
      cfg.sigma = parse_range(sweep["sigma"].get<std::string>(), true);
    } else {
      cfg.sigma = sweep["sigma"].get<std::vector<double>>();
    }
  }
  if (sweep.contains("beta_rho")) {
    if (sweep["beta_rho"].is_string()) {
      cfg.beta_rho = parse_range(sweep["beta_rho"].get<std::string>(), false);
    } else {
      cfg.beta_rho = sweep["beta_rho"].get<std::vector<double>>();
    }
  }
  if (sweep.contains("out")) cfg.out_path = sweep["out"].get<std::string>();
  if (sweep.contains("seed")) cfg.seed = sweep["seed"].get<long>();
  if (j.contains("constants")) {
    for (const auto& [key, val] : j["constants"].items()) {
      cfg.constants[key] = val.get<double>();
    }
  }
  return cfg;
}

struct SweepRow {
  double sigma = 0.0;
  double beta_rho = 0.0;
  bool domain_error = false;
  std::string message;
  bose2d::ErrorBudget budget;
  double f0 = 0.0;
  double correction = 0.0;
  double f_lower = 0.0;
};

// Sweep rows at density 1: f0 = f0_scaled(beta rho), correction and f_lower
// at (beta = beta_rho, rho = 1, sigma).
int run_sweep(const std::string& config_path) {
  const std::string text = read_file(config_path);
  const auto first = text.find_first_not_of(" \t\r\n");
  const SweepConfig cfg = (first != std::string::npos && text[first] == '{')
                              ? parse_config_json(text)
                              : parse_config_flat(text);

  std::vector<std::pair<double, double>> points;
  for (const double sigma : cfg.sigma) {
    for (const double br : cfg.beta_rho) points.emplace_back(sigma, br);
  }

  std::vector<SweepRow> rows(points.size());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t i = next.fetch_add(1); i < points.size();
         i = next.fetch_add(1)) {
      SweepRow& row = rows[i];
      row.sigma = points[i].first;
      row.beta_rho = points[i].second;
      try {
        auto [f_lower, budget] =
            bose2d::lower_bound(row.beta_rho, 1.0, row.sigma, cfg.constants);
        row.budget = budget;
        row.f_lower = f_lower;
        row.f0 = bose2d::f0_scaled(row.beta_rho);
        row.correction = bose2d::correction_term(row.beta_rho, 1.0, row.sigma);
      } catch (const std::domain_error& e) {
        row.domain_error = true;
        row.message = e.what();
      }
    }
  };
  const int n_workers =
      std::min<int>(worker_count(), std::max<size_t>(points.size(), 1));
  std::vector<std::thread> workers;
  for (int w = 1; w < n_workers; ++w) workers.emplace_back(work);
  work();
  for (auto& t : workers) t.join();

  // single collector: rows emitted in input order
  std::ostringstream csv;
  csv << "sigma,beta_rho,regime,pc_sq_beta,A1,A2,A3,o1_bound,f0,correction,"
         "f_lower\n";
  bool any_domain_error = false;
  for (const auto& row : rows) {
    csv << fmt17(row.sigma) << ',' << fmt17(row.beta_rho) << ',';
    if (row.domain_error) {
      any_domain_error = true;
      csv << "domain_error,,,,,,,,\n";
      continue;
    }
    csv << bose2d::regime_name(row.budget.regime) << ','
        << fmt17(row.budget.pc_sq_beta) << ',' << fmt17(row.budget.A1) << ','
        << fmt17(row.budget.A2) << ',' << fmt17(row.budget.A3) << ','
        << fmt17(row.budget.o1_bound) << ',' << fmt17(row.f0) << ','
        << fmt17(row.correction) << ',' << fmt17(row.f_lower) << '\n';
  }
  if (cfg.out_path.empty()) {
    std::cout << csv.str();
  } else {
    write_file(cfg.out_path, csv.str());
  }
  return any_domain_error ? kExitDomain : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bose2d: dilute 2D Bose gas free-energy toolkit"};
  app.require_subcommand(1);

  // ideal
  double i_beta = 1.0, i_rho = 1.0;
  bool i_json = false;
  auto* ideal = app.add_subcommand("ideal", "ideal-gas thermodynamics");
  ideal->add_option("--beta", i_beta, "inverse temperature")->required();
  ideal->add_option("--rho", i_rho, "density")->required();
  ideal->add_flag("--json", i_json, "JSON output");

  // scatter
  std::string sc_potential;
  double sc_R = 10.0;
  bool sc_json = false;
  auto* scatter = app.add_subcommand("scatter", "2D scattering length");
  scatter->add_option("--potential", sc_potential, "potential JSON file")
      ->required();
  scatter->add_option("--R", sc_R, "outer solve radius");
  scatter->add_flag("--json", sc_json, "JSON output");

  // surgery cap / cutoff
  auto* surgery = app.add_subcommand("surgery", "potential modification");
  surgery->require_subcommand(1);
  std::string su_potential, su_out;
  double su_phi = 1.0, su_delta = 0.5, su_R = 100.0, su_R0 = 1.0;
  auto* cap = surgery->add_subcommand("cap", "integral capping");
  cap->add_option("--potential", su_potential)->required();
  cap->add_option("--phi", su_phi, "integral budget / 4 pi")->required();
  cap->add_option("--delta", su_delta, "shaving parameter");
  cap->add_option("--R", su_R, "reference radius");
  cap->add_option("--out", su_out, "report JSON path");
  auto* cutoff = surgery->add_subcommand("cutoff", "range truncation");
  cutoff->add_option("--potential", su_potential)->required();
  cutoff->add_option("--R0", su_R0, "new range")->required();
  cutoff->add_option("--R", su_R, "reference radius");
  cutoff->add_option("--out", su_out, "report JSON path");

  // verify dyson / holes
  auto* verify = app.add_subcommand("verify", "certified operator inequalities");
  verify->require_subcommand(1);
  int vd_grid = 64;
  double vd_L = 20.0, vd_R = 2.0, vd_s = 4.0, vd_eps = 0.3, vd_kappa = 0.5,
         vd_R0 = 0.0;
  std::string vd_potential, vd_centers, vd_out;
  bool vd_jj = false;
  auto* vdyson = verify->add_subcommand("dyson", "soft-potential inequality");
  vdyson->add_option("--grid", vd_grid, "grid points per side");
  vdyson->add_option("--L", vd_L, "torus side");
  vdyson->add_option("--R", vd_R, "soft-potential range");
  vdyson->add_option("--s", vd_s, "momentum cutoff scale");
  vdyson->add_option("--eps", vd_eps, "epsilon");
  vdyson->add_option("--kappa", vd_kappa, "kappa");
  vdyson->add_option("--R0", vd_R0, "hole radius (default: potential range)");
  vdyson->add_option("--potential", vd_potential, "potential JSON file")
      ->required();
  vdyson->add_option("--centers", vd_centers, "centers JSON [[x,y],...]");
  vdyson->add_option("--out", vd_out, "margin JSON path");
  vdyson->add_flag("--use-jj", vd_jj, "restrict to the separated subset");

  double vh_R0 = 0.05, vh_R = 1.0, vh_ctilde = 400.0, vh_L = 2.0;
  int vh_grid = 128;
  std::string vh_centers, vh_out;
  auto* vholes = verify->add_subcommand("holes", "well-refilling inequality");
  vholes->add_option("--R0", vh_R0, "well radius")->required();
  vholes->add_option("--R", vh_R, "hole scale")->required();
  vholes->add_option("--ctilde", vh_ctilde, "compensation constant");
  vholes->add_option("--grid", vh_grid, "grid points per side");
  vholes->add_option("--L", vh_L, "torus side");
  vholes->add_option("--centers", vh_centers, "centers JSON [[x,y],...]");
  vholes->add_option("--out", vh_out, "margin JSON path");

  // bound / budget
  double b_beta = 1.0, b_rho = 1.0, b_a = 0.0, b_sigma = 0.0;
  bool b_json = false;
  auto* bound = app.add_subcommand("bound", "two-term free-energy lower bound");
  bound->add_option("--beta", b_beta)->required();
  bound->add_option("--rho", b_rho)->required();
  bound->add_option("--a", b_a, "scattering length");
  bound->add_option("--sigma", b_sigma, "|ln a^2 rho| directly");
  bound->add_flag("--json", b_json, "JSON output");

  double bu_sigma = 0.0, bu_beta_rho = 0.0;
  bool bu_json = false;
  auto* budget = app.add_subcommand("budget", "error-rate budget");
  budget->add_option("--sigma", bu_sigma)->required();
  budget->add_option("--beta-rho", bu_beta_rho)->required();
  budget->add_flag("--json", bu_json, "JSON output");

  // toy
  auto* toy = app.add_subcommand("toy", "truncated Fock-space checks");
  toy->require_subcommand(1);
  double t_omega = 1.0, t_g = 0.5, t_beta = 1.0;
  int t_nmax = 12;
  bool t_json = false;
  auto* bl = toy->add_subcommand("berezin-lieb", "partition-function bound");
  bl->add_option("--omega", t_omega)->required();
  bl->add_option("--g", t_g)->required();
  bl->add_option("--beta", t_beta)->required();
  bl->add_option("--nmax", t_nmax, "occupation cutoff");
  bl->add_flag("--json", t_json, "JSON output");

  // sweep
  std::string sw_config;
  auto* sweep = app.add_subcommand("sweep", "deterministic parameter sweep");
  sweep->add_option("--config", sw_config, "flat key=value or JSON config")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitDomain;
  }

  try {
    if (*ideal) return run_ideal(i_beta, i_rho, i_json);
    if (*scatter) return run_scatter(sc_potential, sc_R, sc_json);
    if (*cap) return run_surgery_cap(su_potential, su_phi, su_delta, su_R, su_out);
    if (*cutoff) return run_surgery_cutoff(su_potential, su_R0, su_R, su_out);
    if (*vdyson) {
      return run_verify_dyson(vd_grid, vd_L, vd_R, vd_s, vd_eps, vd_kappa,
                              vd_R0, vd_potential, vd_centers, vd_out, vd_jj);
    }
    if (*vholes) {
      return run_verify_holes(vh_R0, vh_R, vh_ctilde, vh_grid, vh_L,
                              vh_centers, vh_out);
    }
    if (*bound) return run_bound(b_beta, b_rho, b_a, b_sigma, b_json);
    if (*budget) return run_budget(bu_sigma, bu_beta_rho, bu_json);
    if (*bl) return run_toy_berezin_lieb(t_omega, t_g, t_beta, t_nmax, t_json);
    if (*sweep) return run_sweep(sw_config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitDomain;
}
