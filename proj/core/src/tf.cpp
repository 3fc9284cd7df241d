// core/tf.cpp

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

#include "gabfilt/tf.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "gabfilt/fourier.hpp"

namespace gabfilt {

Signal translate(const Signal& f, long long k) {
  const int n = f.size();
  Signal out(n);
  for (int t = 0; t < n; ++t) out[t] = f.wrap(t - k);
  return out;
}

Signal modulate(const Signal& f, long long l) {
  const int n = f.size();
  const int lr = mod_index(l, n);
  Signal out(n);
  for (int t = 0; t < n; ++t)
    out[t] = std::polar(1.0, 2.0 * M_PI * ((static_cast<long long>(lr) * t) % n) / n) * f[t];
  return out;
}

Signal tf_shift(const Signal& f, long long k, long long l) {
  return modulate(translate(f, k), l);
}

Matrix2D stft(const Signal& f, const Signal& g) {
  const int n = f.size();
  if (g.size() != n) throw std::invalid_argument("stft: length mismatch");
  Matrix2D out(n);
  Signal prod(n);
  for (int u = 0; u < n; ++u) {
    for (int k = 0; k < n; ++k) prod[k] = f[k] * std::conj(g.wrap(k - u));
    Signal row = dft(prod);
    for (int vv = 0; vv < n; ++vv) out(u, vv) = row[vv];
  }
  return out;
}

Matrix2D spectrogram(const Signal& f, const Signal& g) {
  Matrix2D V = stft(f, g);
  for (cplx& z : V.v) z = std::norm(z);
  return V;
}

Signal window_correlation(const Signal& g1, const Signal& g2) {
  const int n = g1.size();
  if (g2.size() != n) throw std::invalid_argument("window_correlation: length mismatch");
  Signal out(n);
  for (int u = 0; u < n; ++u) {
    cplx acc = 0.0;
    for (int t = 0; t < n; ++t) acc += g2[t] * std::conj(g1.wrap(t - u));
    out[u] = acc;
  }
  return out;
}

Matrix2D frame_operator(const GaborSystem& sys) {
  const int n = sys.lattice.n;
  const int A = sys.lattice.a_count();
  const int B = sys.lattice.b_count();
  Matrix2D S(n);
  for (int k = 0; k < A; ++k) {
    for (int l = 0; l < B; ++l) {
      const Signal atom =
          tf_shift(sys.window, static_cast<long long>(sys.lattice.alpha) * k,
                   static_cast<long long>(sys.lattice.beta) * l);
      for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) S(u, w) += atom[u] * std::conj(atom[w]);
    }
  }
  return S;
}

FrameBounds frame_bounds(const GaborSystem& sys) {
  const Matrix2D S = frame_operator(sys);
  const int n = S.n;
  Eigen::MatrixXcd M(n, n);
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w) M(u, w) = S(u, w);
  M = (M + M.adjoint()).eval() / 2.0;  // exact Hermitian input for the solver
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M, Eigen::EigenvaluesOnly);
  FrameBounds fb;
  fb.lower = std::max(0.0, es.eigenvalues()(0));
  fb.upper = std::max(0.0, es.eigenvalues()(n - 1));
  return fb;
}

Signal discrete_gaussian(int n, double width) {
  if (n < 1) throw std::invalid_argument("discrete_gaussian: n must be >= 1");
  if (!(width > 0.0)) throw std::invalid_argument("discrete_gaussian: width must be positive");
  Signal g(n);
  for (int t = 0; t < n; ++t) {
    // centered representative in (-N/2, N/2] keeps g(N-t) == g(t) exact
    const double tc = (t > n / 2) ? t - n : t;
    double acc = 0.0;
    for (int j = -4; j <= 4; ++j) {
      const double d = tc + static_cast<double>(j) * n;
      acc += std::exp(-M_PI * d * d / (width * n));
    }
    g[t] = acc;
  }
  return g;
}

Signal normalized(const Signal& g) {
  const double nrm = g.norm2();
  if (nrm == 0.0) throw std::invalid_argument("normalized: zero signal");
  Signal out = g;
  for (cplx& z : out.v) z /= nrm;
  return out;
}

}  // namespace gabfilt
