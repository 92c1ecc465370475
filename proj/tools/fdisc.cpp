// Command-line front end: compares measures, tabulates the Dirac-shift
// curve, reports tight bounds, scans the antipodal conjecture, decomposes
// null-sum measures into dipoles, fits measures by projected gradient
// descent, and runs the frequency-noise estimation demo.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fdisc/fdisc.hpp"

namespace {

using fdisc::Index;
using json = nlohmann::ordered_json;

json measure_to_json(const fdisc::Vector& v) {
  json arr = json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

// Empty path means stdout.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    fdisc::write_text_file(out_path, text);
  }
}

struct CompareArgs {
  std::string a;
  std::string b;
  std::string out;
};

struct CurveArgs {
  Index n = 0;
  bool scaled = false;
  std::string out;
};

struct BoundsArgs {
  Index n = 0;
  double theta = 1.0;
  std::string out;
};

struct ConjectureArgs {
  Index n_max = 0;
  std::string out;
};

struct DecomposeArgs {
  std::string delta;
  std::string out;
};

struct FitArgs {
  std::string target;
  Index n = 0;
  int steps = 500;
  double step_size = 0.0;  // 0 means the safe default 1/N
  std::string init = "uniform";
  std::string trace;
};

struct NoiseArgs {
  Index n = 0;
  double sigma = 0.1;
  int samples = 50;
  std::uint64_t seed = 1;
  std::string out;
};

int run_compare(const CompareArgs& args) {
  const fdisc::ProbabilityMeasure a = fdisc::read_probability(args.a);
  const fdisc::ProbabilityMeasure b = fdisc::read_probability(args.b);
  const fdisc::DiscrepancyReport report = fdisc::compare_all(a, b);
  json out;
  out["fourier"] = report.fourier;
  out["tv"] = report.tv;
  if (std::isfinite(report.kl)) {
    out["kl"] = report.kl;
  } else {
    out["kl"] = "inf";
  }
  out["w1"] = report.w1;
  emit(out.dump() + "\n", args.out);
  return 0;
}

int run_curve(const CurveArgs& args) {
  const std::vector<fdisc::DeltaCurveRow> rows = fdisc::delta_curve(fdisc::GridSize(args.n));
  double max_f = 0.0;
  double max_tv = 0.0;
  double max_w = 0.0;
  for (const auto& row : rows) {
    max_f = std::max(max_f, row.fourier);
    max_tv = std::max(max_tv, row.tv);
    max_w = std::max(max_w, row.w1);
  }
  std::string csv = "d,fourier,tv,w1\n";
  for (const auto& row : rows) {
    double f = row.fourier;
    double tv = row.tv;
    double w = row.w1;
    if (args.scaled) {
      if (max_f > 0.0) f /= max_f;
      if (max_tv > 0.0) tv /= max_tv;
      if (max_w > 0.0) w /= max_w;
    }
    csv += std::to_string(row.d) + "," + fdisc::format_double(f) + "," +
           fdisc::format_double(tv) + "," + fdisc::format_double(w) + "\n";
  }
  fdisc::write_text_file(args.out, csv);
  return 0;
}

int run_bounds(const BoundsArgs& args) {
  const fdisc::TightBoundReport report =
      fdisc::tight_bound_report(fdisc::GridSize(args.n), args.theta);
  json out;
  out["theta"] = report.theta;
  out["c_lower"] = report.c_lower;
  out["lower_mu"] = measure_to_json(report.lower_mu.weights());
  out["lower_nu"] = measure_to_json(report.lower_nu.weights());
  out["c_upper"] = report.c_upper;
  out["d_star"] = report.d_star;
  out["conjecture_holds_at_n"] = report.conjecture_holds_at_n;
  emit(out.dump() + "\n", args.out);
  return 0;
}

int run_conjecture(const ConjectureArgs& args) {
  const std::vector<fdisc::ConjectureRow> rows = fdisc::conjecture_scan(args.n_max);
  std::string csv = "N,d_star,g_min,conjecture_holds\n";
  int failures = 0;
  for (const auto& row : rows) {
    csv += std::to_string(row.n) + "," + std::to_string(row.argmin_d) + "," +
           fdisc::format_double(row.g_min) + "," + (row.holds ? "true" : "false") + "\n";
    if (!row.holds) ++failures;
  }
  fdisc::write_text_file(args.out, csv);
  if (failures > 0) {
    std::cout << failures << " grid sizes violate the antipodal conjecture, see " << args.out
              << "\n";
  } else {
    std::cout << "conjecture holds for all scanned grid sizes up to " << args.n_max << "\n";
  }
  return 0;
}

int run_decompose(const DecomposeArgs& args) {
  const fdisc::NullSumMeasure delta = fdisc::read_null_sum(args.delta);
  const fdisc::DipoleDecomposition dec = fdisc::decompose_null_sum(delta);
  json out;
  out["tv"] = dec.tv;
  json terms = json::array();
  for (const auto& term : dec.terms) {
    json t;
    t["i"] = term.i;
    t["j"] = term.j;
    t["lambda"] = term.lambda;
    terms.push_back(t);
  }
  out["terms"] = terms;
  emit(out.dump() + "\n", args.out);
  return 0;
}

int run_fit(const FitArgs& args) {
  const fdisc::ProbabilityMeasure target = fdisc::read_probability(args.target);
  if (args.n != 0 && args.n != target.size()) {
    throw fdisc::Error(fdisc::Errc::SizeMismatch,
                       "size mismatch: --n " + std::to_string(args.n) + " but the target has " +
                           std::to_string(target.size()) + " entries");
  }
  const fdisc::GridSize n = target.grid();
  const fdisc::ProbabilityMeasure init =
      args.init == "uniform" ? fdisc::uniform(n) : fdisc::read_probability(args.init);
  if (init.size() != target.size()) {
    throw fdisc::Error(fdisc::Errc::SizeMismatch, "size mismatch: init vs target");
  }
  const double step = args.step_size > 0.0 ? args.step_size : fdisc::default_step_size(n);
  const fdisc::FitTrace trace = fdisc::fit(target, init, args.steps, step);
  std::string csv = "step,loss\n";
  for (const auto& [s, loss] : trace.iterates) {
    csv += std::to_string(s) + "," + fdisc::format_double(loss) + "\n";
  }
  fdisc::write_text_file(args.trace, csv);
  if (trace.step_increased) {
    std::cerr << "error: step size " << fdisc::format_double(step)
              << " is too large: the loss would increase after step "
              << trace.iterates.back().first << "\n";
    return 2;
  }
  std::cout << "final loss " << fdisc::format_double(trace.iterates.back().second) << " after "
            << trace.iterates.back().first << " steps ("
            << (trace.converged ? "converged" : "not converged") << ")\n";
  return 0;
}

int run_noise(const NoiseArgs& args) {
  const fdisc::GridSize n(args.n);
  const fdisc::NoiseModel model = fdisc::make_noise_model(n, args.sigma);
  const auto family = fdisc::translated_bump_family(n);
  std::vector<double> grid(101);
  for (int t = 0; t < 101; ++t) grid[static_cast<std::size_t>(t)] = t / 101.0;
  const double theta_true = grid[50];
  std::mt19937_64 rng(args.seed);
  const std::vector<fdisc::Vector> observations =
      fdisc::sample_observations(family(theta_true), model, args.samples, rng);
  const fdisc::MleResult result = fdisc::mle_demo(family, grid, observations, args.sigma);
  std::string csv = "theta,neg_loglik,fourier_loss\n";
  for (std::size_t t = 0; t < grid.size(); ++t) {
    csv += fdisc::format_double(result.thetas[t]) + "," +
           fdisc::format_double(result.neg_loglik[t]) + "," +
           fdisc::format_double(result.fourier_loss[t]) + "\n";
  }
  fdisc::write_text_file(args.out, csv);
  std::cout << "true theta " << fdisc::format_double(theta_true) << ", likelihood argmin "
            << fdisc::format_double(grid[result.argmin_likelihood]) << ", discrepancy argmin "
            << fdisc::format_double(grid[result.argmin_fourier]) << " (match: "
            << (result.argmin_likelihood == result.argmin_fourier ? "yes" : "no") << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier discrepancy toolkit for discrete measures on a uniform grid"};
  app.require_subcommand(1);

  CompareArgs compare_args;
  CLI::App* compare =
      app.add_subcommand("compare", "All four discrepancies between two measure files, as JSON");
  compare->add_option("A", compare_args.a, "first measure file")->required();
  compare->add_option("B", compare_args.b, "second measure file")->required();
  compare->add_option("--out", compare_args.out, "write the report here instead of stdout");

  CurveArgs curve_args;
  CLI::App* curve = app.add_subcommand(
      "delta-curve", "Distances between delta_0 and delta_d for every shift d, as CSV");
  curve->add_option("--n", curve_args.n, "grid size (even)")->required();
  curve->add_flag("--scaled", curve_args.scaled, "normalize each column by its maximum");
  curve->add_option("--out", curve_args.out, "output CSV path")->required();

  BoundsArgs bounds_args;
  CLI::App* bounds =
      app.add_subcommand("bounds", "Tight lower and upper bounds on F at fixed TV, as JSON");
  bounds->add_option("--n", bounds_args.n, "grid size (even)")->required();
  bounds->add_option("--theta", bounds_args.theta, "total variation level in (0, 1]")->required();
  bounds->add_option("--out", bounds_args.out, "write the report here instead of stdout");

  ConjectureArgs conjecture_args;
  CLI::App* conjecture = app.add_subcommand(
      "conjecture", "Scan even grid sizes for the antipodal-separation conjecture, as CSV");
  conjecture->add_option("--n-max", conjecture_args.n_max, "largest grid size to scan (even)")
      ->required();
  conjecture->add_option("--out", conjecture_args.out, "output CSV path")->required();

  DecomposeArgs decompose_args;
  CLI::App* decompose = app.add_subcommand(
      "decompose", "Convex dipole decomposition of a null-sum measure file, as JSON");
  decompose->add_option("D", decompose_args.delta, "null-sum measure file")->required();
  decompose->add_option("--out", decompose_args.out, "write the report here instead of stdout");

  FitArgs fit_args;
  CLI::App* fit = app.add_subcommand(
      "fit", "Projected gradient descent towards a target measure, tracing the loss");
  fit->add_option("T", fit_args.target, "target measure file")->required();
  fit->add_option("--n", fit_args.n, "expected grid size (checked against the target)");
  fit->add_option("--steps", fit_args.steps, "maximum number of steps");
  fit->add_option("--step-size", fit_args.step_size, "step size (default 1/N)");
  fit->add_option("--init", fit_args.init, "'uniform' or a measure file");
  fit->add_option("--trace", fit_args.trace, "output CSV path for the loss trace")->required();

  NoiseArgs noise_args;
  CLI::App* noise = app.add_subcommand(
      "noise-demo", "Maximum likelihood under frequency noise versus discrepancy minimization");
  noise->add_option("--n", noise_args.n, "grid size (even)")->required();
  noise->add_option("--sigma", noise_args.sigma, "noise level (positive)")->required();
  noise->add_option("--samples", noise_args.samples, "number of observations")->required();
  noise->add_option("--seed", noise_args.seed, "random seed")->required();
  noise->add_option("--out", noise_args.out, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compare->parsed()) return run_compare(compare_args);
    if (curve->parsed()) return run_curve(curve_args);
    if (bounds->parsed()) return run_bounds(bounds_args);
    if (conjecture->parsed()) return run_conjecture(conjecture_args);
    if (decompose->parsed()) return run_decompose(decompose_args);
    if (fit->parsed()) return run_fit(fit_args);
    if (noise->parsed()) return run_noise(noise_args);
  } catch (const fdisc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == fdisc::Errc::IoError ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
