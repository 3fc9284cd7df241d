// tools/gabfilt_main.cpp
//
// Command-line front end: experiment reproduction, representability checks,
// closed-form verification, data generation. All outputs are machine-readable
// CSV/JSON and byte-identical across runs for a fixed configuration.

// Copyright 2026  gabfilt contributors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gabfilt/equivalence.hpp"
#include "gabfilt/fourier.hpp"
#include "gabfilt/gauss.hpp"
#include "gabfilt/io.hpp"
#include "gabfilt/operators.hpp"
#include "gabfilt/tf.hpp"

namespace {

using nlohmann::json;
using namespace gabfilt;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct Config {
  int n = 480;
  int alpha = 1;
  int beta = 1;
  std::string window = "gaussian:1";
  std::string window2;  // empty: same as window
  std::string mask = "lowpass:80";
  std::uint64_t seed = 1;
  std::string outdir = "out";
  double tol = 1e-9;
};

// gaussian[:width] | ones | delta | file:path
Signal make_window(const std::string& spec, int n) {
  if (spec == "ones") return ones(n);
  if (spec == "delta") return delta(n);
  if (spec.rfind("file:", 0) == 0) {
    Signal f = read_signal_csv(spec.substr(5));
    if (f.size() != n)
      throw CLI::ValidationError("window file has length " + std::to_string(f.size()) +
                                 ", expected " + std::to_string(n));
    return f;
  }
  if (spec.rfind("gaussian", 0) == 0) {
    double width = 1.0;
    if (spec.size() > 8 && spec[8] == ':') width = std::stod(spec.substr(9));
    return discrete_gaussian(n, width);
  }
  throw CLI::ValidationError("unknown window spec: " + spec);
}

Signal lowpass_frequency_response(int n, int R) {
  Signal hhat(n);
  for (int v = 0; v < n; ++v) hhat[v] = (std::min(v, n - v) <= R) ? 1.0 : 0.0;
  return hhat;
}

// lowpass:R (impulse response of the ideal low-pass) | file:path
Signal make_impulse_response(const std::string& spec, int n) {
  if (spec.rfind("lowpass:", 0) == 0) {
    const int R = std::stoi(spec.substr(8));
    if (R <= 0 || R >= (n + 1) / 2)
      throw CLI::ValidationError("lowpass cutoff must satisfy 0 < R < N/2");
    return idft(lowpass_frequency_response(n, R));
  }
  if (spec.rfind("file:", 0) == 0) {
    Signal f = read_signal_csv(spec.substr(5));
    if (f.size() != n)
      throw CLI::ValidationError("impulse-response file has length " +
                                 std::to_string(f.size()) + ", expected " + std::to_string(n));
    return f;
  }
  throw CLI::ValidationError("unknown mask/filter spec: " + spec);
}

// JSON config file seeds the defaults; command-line flags override.
void apply_config_file(const std::string& path, Config& cfg) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot read config file: " + path);
  json j;
  in >> j;
  if (j.contains("n")) cfg.n = j["n"].get<int>();
  if (j.contains("alpha")) cfg.alpha = j["alpha"].get<int>();
  if (j.contains("beta")) cfg.beta = j["beta"].get<int>();
  if (j.contains("window")) cfg.window = j["window"].get<std::string>();
  if (j.contains("window2")) cfg.window2 = j["window2"].get<std::string>();
  if (j.contains("mask")) cfg.mask = j["mask"].get<std::string>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("outdir")) cfg.outdir = j["outdir"].get<std::string>();
  if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
}

void add_config_options(CLI::App* cmd, Config& cfg, std::string& config_path) {
  cmd->add_option("--config", config_path, "JSON config file (flags override)");
  cmd->add_option("--n", cfg.n, "signal length N");
  cmd->add_option("--alpha", cfg.alpha, "time lattice step (must divide N)");
  cmd->add_option("--beta", cfg.beta, "frequency lattice step (must divide N)");
  cmd->add_option("--window", cfg.window, "analysis window: gaussian[:w] | ones | delta | file:p");
  cmd->add_option("--window2", cfg.window2, "synthesis window (default: same as --window)");
  cmd->add_option("--mask", cfg.mask, "filter spec: lowpass:R | file:p");
  cmd->add_option("--seed", cfg.seed, "random seed");
  cmd->add_option("--outdir", cfg.outdir, "output directory");
  cmd->add_option("--tol", cfg.tol, "zero tolerance for the window conditions");
}

// flags win over file values: re-parse file first, then reapply given flags
void resolve_config(const CLI::App* cmd, const std::string& config_path, Config& cfg) {
  if (config_path.empty()) return;
  Config file_cfg = cfg;
  apply_config_file(config_path, file_cfg);
  auto keep = [&](const char* flag, auto member) {
    if (cmd->count(flag) == 0) cfg.*member = file_cfg.*member;
  };
  keep("--n", &Config::n);
  keep("--alpha", &Config::alpha);
  keep("--beta", &Config::beta);
  keep("--window", &Config::window);
  keep("--window2", &Config::window2);
  keep("--mask", &Config::mask);
  keep("--seed", &Config::seed);
  keep("--outdir", &Config::outdir);
  keep("--tol", &Config::tol);
}

std::string default_outdir() {
  const char* env = std::getenv("GABFILT_OUTDIR");
  return env ? std::string(env) : std::string("out");
}

struct VerifyRow {
  std::string name;
  std::string params;
  double observed;
  double tolerance;
  bool pass() const { return observed <= tolerance; }
};

void print_rows(const std::vector<VerifyRow>& rows) {
  std::printf("%-34s %-18s %-14s %-10s %s\n", "check", "params", "observed", "tolerance",
              "status");
  for (const VerifyRow& r : rows)
    std::printf("%-34s %-18s %-14.3e %-10.1e %s\n", r.name.c_str(), r.params.c_str(),
                r.observed, r.tolerance, r.pass() ? "PASS" : "FAIL");
}

int cmd_figure_lowpass(const Config& cfg, int R) {
  const int n = cfg.n;
  std::filesystem::create_directories(cfg.outdir);

  // redundancy normalization: ||g||_2^2 = 1/N, so the full-lattice multiplier
  // with unit mask is the identity and the mask acts as a frequency response
  Signal g = normalized(make_window(cfg.window, n));
  for (auto& z : g.v) z /= std::sqrt(static_cast<double>(n));
  const Signal g2 = cfg.window2.empty()
                        ? g
                        : [&] {
                            Signal w = normalized(make_window(cfg.window2, n));
                            for (auto& z : w.v) z /= std::sqrt(static_cast<double>(n));
                            return w;
                          }();

  Rng rng(cfg.seed);
  const Signal f0 = rng.signal(n);
  const Signal hhat = lowpass_frequency_response(n, R);
  const LTIFilter filter(idft(hhat));
  const GaborMultiplier gm(g, g2, tensor(ones(n), hhat), Lattice(n, 1, 1));

  const Signal out_filter = lti_apply(filter, f0);
  const Signal out_gm = gm_apply(gm, f0);

  const Signal display_window = normalized(discrete_gaussian(n, 1.0));
  write_signal_csv(cfg.outdir + "/signal.csv", f0);
  write_spectrogram_csv(cfg.outdir + "/spectrogram_filter.csv",
                        spectrogram(out_filter, display_window));
  write_spectrogram_csv(cfg.outdir + "/spectrogram_multiplier.csv",
                        spectrogram(out_gm, display_window));

  const LinearOp K_h = lti_kernel(filter);
  const LinearOp K_g = gm_kernel(gm);
  const LinearOp diff{K_h.kernel - K_g.kernel};
  const std::vector<double> top = singular_spectrum(diff, std::min(20, n));
  {
    std::ofstream sv(cfg.outdir + "/singular_values.csv");
    sv.precision(17);
    sv << "k,sigma\n";
    for (std::size_t i = 0; i < top.size(); ++i) sv << i + 1 << ',' << top[i] << '\n';
  }
  {
    // leading left singular vector of the difference operator
    Eigen::MatrixXcd D(n, n);
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w) D(u, w) = diff.kernel(u, w);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(D, Eigen::ComputeThinU);
    Signal lead(n);
    for (int t = 0; t < n; ++t) lead[t] = svd.matrixU()(t, 0);
    write_signal_csv(cfg.outdir + "/singular_vector.csv", lead);
  }

  const LowpassGap gap = lowpass_gap(R, g, g2);
  json summary = {{"n", n},
                  {"cutoff", R},
                  {"seed", cfg.seed},
                  {"window", cfg.window},
                  {"spectral_distance", gap.spectral_distance},
                  {"gap_sup", gap.gap_sup},
                  {"top_singular_value", top.empty() ? 0.0 : top.front()}};
  std::ofstream(cfg.outdir + "/summary.json") << summary.dump(2) << '\n';
  std::cout << summary.dump(2) << '\n';
  return kExitOk;
}

int cmd_repr_check(const Config& cfg, const std::string& out_path) {
  const Lattice lat(cfg.n, cfg.alpha, cfg.beta);
  const Signal g1 = make_window(cfg.window, cfg.n);
  const Signal g2 = cfg.window2.empty() ? g1 : make_window(cfg.window2, cfg.n);
  const Signal h = make_impulse_response(cfg.mask, cfg.n);
  const RepresentabilityReport rep = check_representability(h, g1, g2, lat, cfg.tol);
  const std::string text = report_to_json(rep);
  if (!out_path.empty())
    std::ofstream(out_path) << text << '\n';
  std::cout << text << '\n';
  return rep.representable ? kExitOk : kExitVerifyFail;
}

int cmd_repr_construct(const Config& cfg, const std::string& out_path) {
  const Lattice lat(cfg.n, cfg.alpha, cfg.beta);
  const Signal g1 = make_window(cfg.window, cfg.n);
  const Signal g2 = cfg.window2.empty() ? g1 : make_window(cfg.window2, cfg.n);
  const Signal h = make_impulse_response(cfg.mask, cfg.n);
  try {
    const SymbolConstruction sc = construct_symbol(h, g1, g2, lat, cfg.tol);
    write_matrix_csv(out_path, sc.mask, "mask");
    const GaborMultiplier gm(g1, g2, sc.mask, lat);
    const double gap = (gm_kernel(gm).kernel - lti_kernel(LTIFilter(h)).kernel).frobenius() /
                       lti_kernel(LTIFilter(h)).kernel.frobenius();
    json out = {{"written", out_path}, {"reconstruction_gap", gap}};
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  } catch (const NotRepresentableError& e) {
    std::cout << report_to_json(e.report) << '\n';
    std::cerr << "refusing to construct: " << e.what() << '\n';
    return kExitVerifyFail;
  }
}

int cmd_gauss_verify(const std::vector<double>& lambdas) {
  using namespace gabfilt::gauss;
  const double L = 8.0, step = 1.0 / 64;
  std::vector<VerifyRow> rows;
  const auto gaussian_grid = [&](double amp, double width, double l = 8.0,
                                 double s = 1.0 / 64) {
    return GridFunction::sample(l, s, [&](double t) {
      return cplx(amp * std::exp(-M_PI * width * t * t));
    });
  };

  for (double lambda : lambdas) {
    const GridFunction m = gaussian_grid(1.0, lambda);
    const GridFunction out = fourier_multiplier_numeric(m, m);
    const GridFunction closed = GridFunction::sample(
        L, step, [&](double t) { return fourier_multiplier_gauss(lambda, 1).eval(t); });
    rows.push_back({"fourier-multiplier", "lambda=" + std::to_string(lambda).substr(0, 4),
                    rel_l2_error(out, closed), 1e-8});
  }

  const double amp = std::pow(2.0, 0.25);
  const GridFunction window = gaussian_grid(amp, 1.0);
  for (double lambda : lambdas) {
    const GridFunction m = gaussian_grid(1.0, lambda);
    const GridFunction out = stft_multiplier_numeric(m, window, window, m);
    const GridFunction closed = GridFunction::sample(
        L, step, [&](double t) { return antiwick_gauss(lambda, 1).eval(t); });
    rows.push_back({"stft-multiplier-gaussian", "lambda=" + std::to_string(lambda).substr(0, 4),
                    rel_l2_error(out, closed), 1e-6});
  }

  {
    const GridFunction corr = window_correlation_numeric(window, window);
    const GridFunction closed = gaussian_grid(1.0, 0.5);
    rows.push_back({"window-correlation", "gaussian", rel_l2_error(corr, closed), 1e-8});

    const GridFunction conv =
        convolve_numeric(gaussian_grid(1.3, 0.8), gaussian_grid(0.6, 2.5));
    const GaussianProfile cc =
        gauss_convolve(GaussianProfile(1.3, 0.8, 1), GaussianProfile(0.6, 2.5, 1));
    const GridFunction closed2 =
        GridFunction::sample(L, step, [&](double t) { return cc.eval(t); });
    rows.push_back({"gaussian-convolution", "-", rel_l2_error(conv, closed2), 1e-8});
  }

  for (double r : {1.0, 2.0, 4.0})
    for (double lambda : {0.25, 1.0, 4.0}) {
      const GridFunction g = gaussian_grid(1.0, lambda, 8.0, 1.0 / 512);
      const double numeric = weak_lr_norm_numeric(g, r);
      const double closed = weak_lr_norm_gauss(lambda, r, 1);
      char buf[32];
      std::snprintf(buf, sizeof buf, "r=%g,lambda=%g", r, lambda);
      rows.push_back({"weak-norm", buf, std::abs(numeric - closed) / closed, 1e-2});
    }

  {
    const double l1 = 0.4, l2 = 2.7, r = 3.0;
    const double ratio = weak_lr_norm_gauss(l1, r, 1) / weak_lr_norm_gauss(l2, r, 1);
    const double expect = std::pow(l1 / l2, -0.5 / r);
    rows.push_back({"weak-norm-scaling", "monomial", std::abs(ratio - expect) / expect, 1e-12});
  }

  {
    const GridFunction m = GridFunction::sample(L, step, [](double w) {
      const double x = w / 3.0;
      return std::abs(x) < 1.0 ? cplx(std::exp(-1.0 / (1.0 - x * x))) : cplx(0.0);
    });
    const GridFunction f = gaussian_grid(1.0, 1.0);
    const GridFunction lhs = stft_multiplier_numeric(m, window, window, f);
    const GridFunction rhs = fourier_multiplier_numeric(smoothed_multiplier(m, window, window), f);
    double num = 0.0;
    for (int i = 0; i < lhs.size(); ++i) num += std::norm(lhs[i] - rhs[i]);
    rows.push_back({"smoothing-identity", "bump", std::sqrt(step * num) / f.l2_norm(), 1e-6});
  }

  print_rows(rows);
  for (const VerifyRow& r : rows)
    if (!r.pass()) return kExitVerifyFail;
  return kExitOk;
}

int cmd_spectrogram(const std::string& signal_path, const std::string& window_spec,
                    const std::string& out_path) {
  const Signal f = read_signal_csv(signal_path);
  const Signal g = make_window(window_spec, f.size());
  const Matrix2D sp = spectrogram(f, g);
  write_spectrogram_csv(out_path, sp);
  double total = 0.0;
  for (const auto& z : sp.v) total += z.real();
  const double expect = f.size() * std::pow(f.norm2(), 2) * std::pow(g.norm2(), 2);
  json out = {{"written", out_path},
              {"energy", total},
              {"expected_energy", expect},
              {"relative_deviation",
               expect > 0.0 ? std::abs(total - expect) / expect : total}};
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Gabor multipliers, LTI filters, and their equivalences"};
  app.require_subcommand(1);

  Config cfg;
  cfg.outdir = default_outdir();
  std::string config_path;

  auto* figure = app.add_subcommand("figure-lowpass",
                                    "low-pass filter vs Gabor multiplier experiment");
  int cutoff = 80;
  add_config_options(figure, cfg, config_path);
  figure->add_option("--cutoff", cutoff, "low-pass cutoff R (frequency bins)");

  auto* check = app.add_subcommand("repr-check", "test the four window conditions");
  std::string check_out;
  add_config_options(check, cfg, config_path);
  check->add_option("--out", check_out, "also write the JSON report here");

  auto* construct = app.add_subcommand("repr-construct",
                                       "build the multiplier mask when the conditions hold");
  std::string construct_out = "mask.csv";
  add_config_options(construct, cfg, config_path);
  construct->add_option("--out", construct_out, "mask CSV path");

  auto* verify = app.add_subcommand("gauss-verify",
                                    "closed forms vs quadrature oracles, one row per check");
  std::vector<double> lambdas{0.5, 1.0, 2.0};
  verify->add_option("--lambdas", lambdas, "rescaling parameters to test");

  auto* spec_cmd = app.add_subcommand("spectrogram", "squared-magnitude STFT of a signal file");
  std::string spec_signal, spec_window = "gaussian:1", spec_out = "spectrogram.csv";
  spec_cmd->add_option("--signal", spec_signal, "input signal CSV")->required();
  spec_cmd->add_option("--window", spec_window, "window spec");
  spec_cmd->add_option("--out", spec_out, "output CSV");

  auto* gen_sig = app.add_subcommand("gen-signal", "seeded complex normal signal");
  int gen_n = 480;
  std::uint64_t gen_seed = 1;
  std::string gen_out = "signal.csv";
  gen_sig->add_option("--n", gen_n, "length");
  gen_sig->add_option("--seed", gen_seed, "seed");
  gen_sig->add_option("--out", gen_out, "output CSV");

  auto* gen_win = app.add_subcommand("gen-window", "window generator");
  int win_n = 480;
  std::string win_spec = "gaussian:1", win_out = "window.csv";
  bool win_normalize = false;
  gen_win->add_option("--n", win_n, "length");
  gen_win->add_option("--window", win_spec, "window spec");
  gen_win->add_flag("--normalize", win_normalize, "scale to unit l2 norm");
  gen_win->add_option("--out", win_out, "output CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (figure->parsed()) {
      resolve_config(figure, config_path, cfg);
      return cmd_figure_lowpass(cfg, cutoff);
    }
    if (check->parsed()) {
      resolve_config(check, config_path, cfg);
      return cmd_repr_check(cfg, check_out);
    }
    if (construct->parsed()) {
      resolve_config(construct, config_path, cfg);
      return cmd_repr_construct(cfg, construct_out);
    }
    if (verify->parsed()) return cmd_gauss_verify(lambdas);
    if (spec_cmd->parsed()) return cmd_spectrogram(spec_signal, spec_window, spec_out);
    if (gen_sig->parsed()) {
      Rng rng(gen_seed);
      write_signal_csv(gen_out, rng.signal(gen_n));
      std::cout << "{\"written\": \"" << gen_out << "\"}\n";
      return kExitOk;
    }
    if (gen_win->parsed()) {
      Signal w = make_window(win_spec, win_n);
      if (win_normalize) w = normalized(w);
      write_signal_csv(win_out, w);
      std::cout << "{\"written\": \"" << win_out << "\"}\n";
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFail;
  }
  return kExitUsage;
}
