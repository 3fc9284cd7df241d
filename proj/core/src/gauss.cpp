// core/gauss.cpp

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

#include "gabfilt/gauss.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace gabfilt::gauss {

namespace {

void require_common_grid(const GridFunction& a, const GridFunction& b, const char* who) {
  if (a.half_width != b.half_width || a.step != b.step || a.size() != b.size())
    throw std::invalid_argument(std::string(who) + ": grid mismatch");
}

// Shift alignment: translating by a grid point must land on the grid, which
// needs L/delta integral.
int aligned_origin_index(const GridFunction& g, const char* who) {
  const double ratio = g.half_width / g.step;
  const int n0 = static_cast<int>(std::llround(ratio));
  if (std::abs(ratio - n0) > 1e-9)
    throw std::invalid_argument(std::string(who) + ": step must divide half_width");
  return n0;
}

}  // namespace

GaussianProfile gauss_fourier(const GaussianProfile& g) {
  return GaussianProfile(g.amplitude * std::pow(g.width, -0.5 * g.dim), 1.0 / g.width, g.dim);
}

GaussianProfile gauss_convolve(const GaussianProfile& x, const GaussianProfile& y) {
  if (x.dim != y.dim) throw std::invalid_argument("gauss_convolve: dimension mismatch");
  const double s = x.width + y.width;
  return GaussianProfile(x.amplitude * y.amplitude * std::pow(s, -0.5 * x.dim),
                         x.width * y.width / s, x.dim);
}

double weak_lr_norm_gauss(double lambda, double r, int d) {
  if (!(lambda > 0.0)) throw std::invalid_argument("weak_lr_norm_gauss: lambda must be positive");
  if (!(r >= 1.0)) throw std::invalid_argument("weak_lr_norm_gauss: r must be >= 1");
  if (d < 1) throw std::invalid_argument("weak_lr_norm_gauss: d must be >= 1");
  // sup_alpha alpha * mu({|g_lambda| > alpha})^{1/r} with
  // mu = (log(1/alpha))^{d/2} / (Gamma(d/2+1) lambda^{d/2}); the maximizer is
  // alpha = e^{-d/(2r)}, and the ball-volume constant enters with power 1/r.
  const double e = 0.5 * d / r;  // d/(2r)
  return std::exp(-e) * std::pow(e, e) * std::pow(std::tgamma(0.5 * d + 1.0), -1.0 / r) *
         std::pow(lambda, -e);
}

GaussianProfile fourier_multiplier_gauss(double lambda, int d) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("fourier_multiplier_gauss: lambda must be positive");
  return GaussianProfile(std::pow(lambda * lambda + 1.0, -0.5 * d),
                         lambda / (lambda * lambda + 1.0), d);
}

GaussianProfile antiwick_gauss(double lambda, int d) {
  if (!(lambda > 0.0)) throw std::invalid_argument("antiwick_gauss: lambda must be positive");
  const double q = 2.0 * lambda * lambda + lambda + 2.0;
  return GaussianProfile(std::pow(2.0, 0.5 * d) * std::pow(q, -0.5 * d),
                         lambda * (lambda + 2.0) / q, d);
}

GridFunction::GridFunction(double L, double delta) {
  if (!(L > 0.0) || !(delta > 0.0))
    throw std::invalid_argument("GridFunction: half_width and step must be positive");
  const double count = 2.0 * L / delta;
  const long long m = std::llround(count);
  if (std::abs(count - m) > 1e-9)
    throw std::invalid_argument("GridFunction: 2L/step must be an integer");
  half_width = L;
  step = delta;
  samples.assign(static_cast<std::size_t>(m) + 1, cplx(0.0));
}

double GridFunction::l2_norm() const {
  double s = 0.0;
  for (const cplx& z : samples) s += std::norm(z);
  return std::sqrt(step * s);
}

double rel_l2_error(const GridFunction& got, const GridFunction& expect) {
  require_common_grid(got, expect, "rel_l2_error");
  double num = 0.0, den = 0.0;
  for (int i = 0; i < got.size(); ++i) {
    num += std::norm(got[i] - expect[i]);
    den += std::norm(expect[i]);
  }
  return std::sqrt(num / den);
}

double weak_lr_norm_numeric(const GridFunction& f, double r) {
  if (!(r >= 1.0)) throw std::invalid_argument("weak_lr_norm_numeric: r must be >= 1");
  double mx = 0.0;
  for (const cplx& z : f.samples) mx = std::max(mx, std::abs(z));
  if (mx == 0.0) return 0.0;
  std::vector<double> mags(f.samples.size());
  for (std::size_t i = 0; i < f.samples.size(); ++i) mags[i] = std::abs(f.samples[i]);
  std::sort(mags.begin(), mags.end());  // ascending, for O(log n) level counts

  const int K = 10000;
  const double lo = 1e-6 * mx;
  double best = 0.0;
  for (int i = 0; i < K; ++i) {
    const double alpha = lo * std::pow(mx / lo, static_cast<double>(i) / (K - 1));
    const auto it = std::upper_bound(mags.begin(), mags.end(), alpha);
    const double count = static_cast<double>(mags.end() - it);
    best = std::max(best, alpha * std::pow(f.step * count, 1.0 / r));
  }
  return best;
}

GridFunction window_correlation_numeric(const GridFunction& g1, const GridFunction& g2) {
  require_common_grid(g1, g2, "window_correlation_numeric");
  const int n = g1.size();
  const int n0 = aligned_origin_index(g1, "window_correlation_numeric");
  GridFunction out(g1.half_width, g1.step);
  // C(y) = int g2(s - y) conj(g1(s)) ds; index of (s - y): is - iy + n0
  for (int iy = 0; iy < n; ++iy) {
    cplx acc = 0.0;
    for (int is = 0; is < n; ++is) {
      const int j = is - iy + n0;
      if (j < 0 || j >= n) continue;
      acc += g2[j] * std::conj(g1[is]);
    }
    out[iy] = acc * g1.step;
  }
  return out;
}

GridFunction convolve_numeric(const GridFunction& a, const GridFunction& b) {
  require_common_grid(a, b, "convolve_numeric");
  const int n = a.size();
  const int n0 = aligned_origin_index(a, "convolve_numeric");
  GridFunction out(a.half_width, a.step);
  // (a * b)(y) = int a(y - s) b(s) ds; index of (y - s): iy - is + n0
  for (int iy = 0; iy < n; ++iy) {
    cplx acc = 0.0;
    for (int is = 0; is < n; ++is) {
      const int j = iy - is + n0;
      if (j < 0 || j >= n) continue;
      acc += a[j] * b[is];
    }
    out[iy] = acc * a.step;
  }
  return out;
}

GridFunction fourier_multiplier_numeric(const GridFunction& m, const GridFunction& f) {
  require_common_grid(m, f, "fourier_multiplier_numeric");
  const int n = f.size();
  GridFunction fhat(f.half_width, f.step);
  for (int iw = 0; iw < n; ++iw) {
    const double w = f.t(iw);
    cplx acc = 0.0;
    for (int iy = 0; iy < n; ++iy)
      acc += f[iy] * std::polar(1.0, -2.0 * M_PI * f.t(iy) * w);
    fhat[iw] = acc * f.step;
  }
  GridFunction out(f.half_width, f.step);
  for (int it = 0; it < n; ++it) {
    const double t = f.t(it);
    cplx acc = 0.0;
    for (int iw = 0; iw < n; ++iw)
      acc += m[iw] * fhat[iw] * std::polar(1.0, 2.0 * M_PI * f.t(iw) * t);
    out[it] = acc * f.step;
  }
  return out;
}

GridFunction stft_multiplier_numeric(const GridFunction& m, const GridFunction& g1,
                                     const GridFunction& g2, const GridFunction& f) {
  require_common_grid(m, f, "stft_multiplier_numeric");
  require_common_grid(g1, f, "stft_multiplier_numeric");
  require_common_grid(g2, f, "stft_multiplier_numeric");
  const int n = f.size();
  const int n0 = aligned_origin_index(f, "stft_multiplier_numeric");
  const GridFunction C = window_correlation_numeric(g1, g2);

  // V(iy, it) = f(y) C(y - t); W = E V with E(iw, iy) = e^{-2 pi i w y};
  // out(t) = step^2 * sum_w conj(E(iw, it)) m(w) W(iw, it).
  Eigen::MatrixXcd V = Eigen::MatrixXcd::Zero(n, n);
  for (int it = 0; it < n; ++it)
    for (int iy = 0; iy < n; ++iy) {
      const int j = iy - it + n0;
      if (j < 0 || j >= n) continue;
      V(iy, it) = f[iy] * C[j];
    }
  Eigen::MatrixXcd E(n, n);
  for (int iw = 0; iw < n; ++iw)
    for (int iy = 0; iy < n; ++iy)
      E(iw, iy) = std::polar(1.0, -2.0 * M_PI * f.t(iw) * f.t(iy));
  const Eigen::MatrixXcd W = E * V;

  GridFunction out(f.half_width, f.step);
  const double s2 = f.step * f.step;
  for (int it = 0; it < n; ++it) {
    cplx acc = 0.0;
    for (int iw = 0; iw < n; ++iw) acc += std::conj(E(iw, it)) * m[iw] * W(iw, it);
    out[it] = s2 * acc;
  }
  return out;
}

GridFunction smoothed_multiplier(const GridFunction& m, const GridFunction& g1,
                                 const GridFunction& g2) {
  require_common_grid(m, g1, "smoothed_multiplier");
  require_common_grid(m, g2, "smoothed_multiplier");
  const GridFunction C = window_correlation_numeric(g1, g2);
  const int n = m.size();
  GridFunction kinv(m.half_width, m.step);  // F^{-1} C
  for (int ix = 0; ix < n; ++ix) {
    const double x = m.t(ix);
    cplx acc = 0.0;
    for (int iy = 0; iy < n; ++iy)
      acc += C[iy] * std::polar(1.0, 2.0 * M_PI * m.t(iy) * x);
    kinv[ix] = acc * m.step;
  }
  return convolve_numeric(m, kinv);
}

}  // namespace gabfilt::gauss
