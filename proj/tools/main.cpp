// Command-line front end: reproduces the figure datasets (CSV + JSON
// sidecars) and runs the oracle verification lattice.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "photonsub/channels.hpp"
#include "photonsub/io.hpp"
#include "photonsub/metrology.hpp"
#include "photonsub/oracle.hpp"
#include "photonsub/phasespace.hpp"
#include "photonsub/statistics.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace photonsub;

namespace {

struct CommonOpts {
  std::vector<int> ms{0, 1, 2, 3};
  double lambda = 0.01;
  double mu = 0.0;
  int j = 0;
  double gamma = 0.0;
  double eta = 0.98;
  int grid_points = 401;
  double q_max = 0.0; // 0 -> derived from the state
  double tol = 1e-12;
  double step = 0.0; // 0 -> automatic central-difference step
  std::string out = "out";
  std::string preset;
  bool verify = false;
};

GridSpec make_grid(const CommonOpts& opt, double nbar) {
  GridSpec grid = GridSpec::for_mean_photons(nbar, opt.grid_points);
  if (opt.q_max > 0.0) grid.q_max = opt.q_max;
  return grid;
}

std::vector<double> linspace(double lo, double hi, double step) {
  std::vector<double> v;
  for (double x = lo; x <= hi + 1e-12; x += step) v.push_back(x);
  return v;
}

json base_sidecar(const std::string& command, const CommonOpts& opt) {
  return json{{"command", command},
              {"preset", opt.preset},
              {"eta", opt.eta},
              {"grid_points", opt.grid_points},
              {"tol", opt.tol},
              {"out", opt.out}};
}

// Oracle agreement lattice: series route vs jet-derivative route vs
// two-mode-trace route, pointwise on a 21x21 subgrid.
bool run_verification(std::ostream& os) {
  const std::vector<int> ms{0, 1, 2, 3};
  const std::vector<double> lambdas{0.01, 0.1, 1.0};
  const std::vector<double> taus{0.2, 0.49, 0.5, 0.51, 0.98};
  GridSpec sub;
  sub.q_max = 4.0;
  sub.n_points = 21;
  const auto axis = sub.axis();
  bool ok = true;
  for (int m : ms)
    for (double lambda : lambdas)
      for (double tau : taus) {
        double worst = 0.0;
        for (double q : axis)
          for (double p : axis) {
            const double series = wigner_subtracted_lossy_value(m, lambda, tau, q, p);
            const double jet = oracle::derivative_route_wigner(m, lambda, tau, q, p);
            const double trace = oracle::two_mode_route_wigner(m, lambda, tau, q, p);
            worst = std::max({worst, std::abs(series - jet), std::abs(series - trace)});
          }
        const bool pass = worst < 1e-8;
        ok = ok && pass;
        char line[160];
        std::snprintf(line, sizeof(line),
                      "%s m=%d lambda=%.2f tau=%.2f  max route disagreement %.3e",
                      pass ? "ok  " : "FAIL", m, lambda, tau, worst);
        os << line << "\n";
      }
  return ok;
}

int cmd_wigner(const CommonOpts& opt) {
  std::vector<std::pair<int, double>> jobs;
  if (opt.preset == "fig2") {
    for (int m : {0, 1, 2, 3}) jobs.emplace_back(m, 0.0);
  } else if (opt.preset == "fig3") {
    jobs = {{0, 1.0}, {1, 0.5}, {2, 0.47}, {3, 0.44}};
  } else {
    for (int m : opt.ms) jobs.emplace_back(m, opt.gamma);
  }
  for (const auto& [m, gamma] : jobs) {
    const ChannelParams ch{gamma, opt.eta};
    ch.validate();
    const StateSpec state = StateSpec::subtracted_tbs(m, opt.lambda);
    const GridSpec grid = make_grid(opt, opt.eta * mean_photons(state));
    const WignerField field =
        wigner_subtracted_lossy(m, opt.lambda, ch.tau(), grid, opt.tol);

    char stem[64];
    std::snprintf(stem, sizeof(stem), "wigner_m%d_gamma%g", m, gamma);
    const fs::path base = fs::path(opt.out) / stem;
    io::write_wigner_csv(base.string() + ".csv", field);
    io::write_wigner_binary(base.string() + ".bin", field);
    json sidecar = base_sidecar("wigner", opt);
    sidecar["state"] = io::to_json(state);
    sidecar["channel"] = io::to_json(ch);
    sidecar["grid"] = io::to_json(grid);
    sidecar["files"] = {std::string(stem) + ".csv", std::string(stem) + ".bin"};
    io::write_sidecar(base.string() + ".json", sidecar);
    std::cout << "wrote " << base.string() << ".{csv,bin,json}\n";
  }
  return 0;
}

int cmd_negativity(const CommonOpts& opt, double gamma_step) {
  const std::vector<double> gammas = linspace(0.0, 1.0, gamma_step);
  std::vector<io::NegativityRow> rows;
  json crossings = json::object();
  for (int m : opt.ms) {
    const StateSpec state = StateSpec::subtracted_tbs(m, opt.lambda);
    const GridSpec grid = make_grid(opt, opt.eta * mean_photons(state));
    bool crossed = false;
    for (double gamma : gammas) {
      const double tau = opt.eta * (1.0 - gamma);
      const double delta =
          negativity_volume(wigner_subtracted_lossy(m, opt.lambda, tau, grid, opt.tol));
      rows.push_back({m, opt.lambda, gamma, opt.eta, delta});
      if (!crossed && delta < 1e-4) {
        crossings["m" + std::to_string(m)] = gamma;
        crossed = true;
      }
    }
    if (!crossed) crossings["m" + std::to_string(m)] = nullptr;
  }
  const fs::path base = fs::path(opt.out) / "negativity";
  io::write_negativity_csv(base.string() + ".csv", rows);

  // coherent baseline (mu = lambda): non-negative Gaussian, delta stays 0
  std::vector<io::NegativityRow> coh;
  {
    const StateSpec probe = StateSpec::coherent(opt.lambda);
    const GridSpec grid = make_grid(opt, opt.eta * mean_photons(probe));
    for (double gamma : gammas) {
      const double tau = opt.eta * (1.0 - gamma);
      coh.push_back({0, opt.lambda, gamma, opt.eta,
                     negativity_volume(wigner_field(probe, tau, grid, opt.tol))});
    }
  }
  io::write_negativity_csv(base.string() + "_coherent.csv", coh);

  json sidecar = base_sidecar("negativity", opt);
  sidecar["lambda"] = opt.lambda;
  sidecar["ms"] = opt.ms;
  sidecar["gamma_step"] = gamma_step;
  sidecar["classicality_crossings"] = crossings;
  sidecar["crossing_threshold"] = 1e-4;
  io::write_sidecar(base.string() + ".json", sidecar);
  std::cout << "wrote " << base.string() << ".csv (+ coherent baseline, sidecar)\n";
  return 0;
}

int cmd_fano(const CommonOpts& opt, double lambda_max, double lambda_step) {
  std::vector<double> lambdas = linspace(0.0, lambda_max, lambda_step);
  std::vector<FanoRow> rows;
  for (int m : opt.ms) {
    auto part = fano_vs_lambda(m, opt.eta, lambdas);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  const fs::path base = fs::path(opt.out) / "fano";
  io::write_fano_csv(base.string() + ".csv", rows);
  json sidecar = base_sidecar("fano", opt);
  sidecar["ms"] = opt.ms;
  sidecar["lambda_max"] = lambda_max;
  sidecar["lambda_step"] = lambda_step;
  io::write_sidecar(base.string() + ".json", sidecar);
  std::cout << "wrote " << base.string() << ".csv\n";
  return 0;
}

int cmd_fisher(const CommonOpts& opt) {
  FisherOptions fopts;
  fopts.step = opt.step;
  fopts.tol = opt.tol;

  json sidecar = base_sidecar("fisher", opt);
  sidecar["lambda"] = opt.lambda;
  sidecar["ms"] = opt.ms;
  sidecar["prob_floor"] = fopts.prob_floor;

  if (opt.preset == "fig7") {
    const std::vector<double> lambdas{0.01, 0.02, 0.05, 0.1, 0.2,
                                      0.5,  1.0,  1.5,  2.0, 3.0, 4.0, 5.0};
    const double gamma = 0.01;
    const auto rows = qfi_sweep_lambda(opt.ms, gamma, opt.eta, lambdas, fopts,
                                       opt.grid_points);
    const fs::path base = fs::path(opt.out) / "fisher_lambda";
    io::write_fisher_csv(base.string() + ".csv", rows);
    sidecar["gamma"] = gamma;
    sidecar["lambdas"] = lambdas;
    io::write_sidecar(base.string() + ".json", sidecar);
    std::cout << "wrote " << base.string() << ".csv\n";
    return 0;
  }

  // fig6 layout (default): gamma sweep for the subtracted states, Fock
  // baselines, and a coherent probe with mu = lambda.
  std::vector<StateSpec> states;
  for (int m : opt.ms) states.push_back(StateSpec::subtracted_tbs(m, opt.lambda));
  for (int m : opt.ms)
    if (m >= 1) states.push_back(StateSpec::fock(m));
  states.push_back(StateSpec::coherent(opt.mu > 0.0 ? opt.mu : opt.lambda));

  const std::vector<double> gammas = linspace(0.02, 0.95, 0.03);
  const auto rows = qfi_sweep_gamma(states, opt.eta, gammas, fopts, opt.grid_points);
  const fs::path base = fs::path(opt.out) / "fisher_gamma";
  io::write_fisher_csv(base.string() + ".csv", rows);
  sidecar["gammas"] = gammas;
  io::write_sidecar(base.string() + ".json", sidecar);
  std::cout << "wrote " << base.string() << ".csv\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lossy Wigner functions, photon statistics, and loss-estimation Fisher "
               "information for photon-subtracted twin-beam probes"};
  app.require_subcommand(1);

  CommonOpts opt;
  double gamma_step = 0.01;
  double lambda_max = 2.0;
  double lambda_step = 0.05;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--m", opt.ms, "subtracted-photon numbers");
    sub->add_option("--lambda", opt.lambda, "mean photons per mode before subtraction");
    sub->add_option("--mu", opt.mu, "coherent mean photon number");
    sub->add_option("--j", opt.j, "Fock photon number");
    sub->add_option("--gamma", opt.gamma, "sample absorption coefficient");
    sub->add_option("--eta", opt.eta, "detection efficiency");
    sub->add_option("--grid-points", opt.grid_points, "grid points per axis (odd)");
    sub->add_option("--q-max", opt.q_max, "grid half-width override");
    sub->add_option("--tol", opt.tol, "series truncation tolerance");
    sub->add_option("--step", opt.step, "central-difference step in gamma");
    sub->add_option("--out", opt.out, "output directory");
    sub->add_option("--preset", opt.preset, "figure preset fig2..fig7");
    sub->add_flag("--verify", opt.verify, "run oracle agreement checks first");
  };

  CLI::App* wigner = app.add_subcommand("wigner", "Wigner field datasets (fig2, fig3)");
  add_common(wigner);
  CLI::App* negativity =
      app.add_subcommand("negativity", "negative-volume sweep over gamma (fig4)");
  add_common(negativity);
  negativity->add_option("--gamma-step", gamma_step, "sweep step in gamma");
  CLI::App* fano = app.add_subcommand("fano", "Fano factor sweep over lambda (fig5)");
  add_common(fano);
  fano->add_option("--lambda-max", lambda_max, "sweep end");
  fano->add_option("--lambda-step", lambda_step, "sweep step");
  CLI::App* fisher =
      app.add_subcommand("fisher", "Fisher-information sweeps (fig6, fig7)");
  add_common(fisher);
  CLI::App* verify = app.add_subcommand("verify", "oracle agreement lattice");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verification(std::cout) ? 0 : 1;
    if (opt.verify && !run_verification(std::cerr)) {
      std::cerr << "verification failed; not writing output\n";
      return 1;
    }
    if (wigner->parsed()) return cmd_wigner(opt);
    if (negativity->parsed()) return cmd_negativity(opt, gamma_step);
    if (fano->parsed()) return cmd_fano(opt, lambda_max, lambda_step);
    if (fisher->parsed()) return cmd_fisher(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
