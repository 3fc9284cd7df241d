// core/fourier.cpp

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

#include "gabfilt/fourier.hpp"

#include <cmath>

namespace gabfilt {

namespace {

// Table of the N-th roots w[r] = e^{sign * 2 pi i r / N}. Index arithmetic is
// done exactly in integers, so w[0] is exactly 1 and lattice sums that should
// be integers come out clean. Direct O(N^2) summation is the contract here;
// N stays <= 1024.
std::vector<cplx> root_table(int n, int sign) {
  std::vector<cplx> w(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    w[static_cast<std::size_t>(r)] = std::polar(1.0, sign * 2.0 * M_PI * r / n);
  return w;
}

Signal transform_1d(const Signal& f, int sign, double scale) {
  const int n = f.size();
  const std::vector<cplx> w = root_table(n, sign);
  Signal out(n);
  for (int k = 0; k < n; ++k) {
    cplx acc = 0.0;
    for (int l = 0; l < n; ++l)
      acc += f[l] * w[static_cast<std::size_t>((static_cast<long long>(k) * l) % n)];
    out[k] = scale * acc;
  }
  return out;
}

// Row pass then column pass with the same 1-D kernel.
Matrix2D transform_2d(const Matrix2D& a, int sign, double scale) {
  const int n = a.n;
  const std::vector<cplx> w = root_table(n, sign);
  Matrix2D rows(n);
  for (int u = 0; u < n; ++u)
    for (int vv = 0; vv < n; ++vv) {
      cplx acc = 0.0;
      for (int l = 0; l < n; ++l)
        acc += a(u, l) * w[static_cast<std::size_t>((static_cast<long long>(vv) * l) % n)];
      rows(u, vv) = acc;
    }
  Matrix2D out(n);
  for (int uu = 0; uu < n; ++uu)
    for (int vv = 0; vv < n; ++vv) {
      cplx acc = 0.0;
      for (int k = 0; k < n; ++k)
        acc += rows(k, vv) * w[static_cast<std::size_t>((static_cast<long long>(uu) * k) % n)];
      out(uu, vv) = scale * acc;
    }
  return out;
}

}  // namespace

Signal dft(const Signal& f) { return transform_1d(f, -1, 1.0); }

Signal idft(const Signal& f) { return transform_1d(f, +1, 1.0 / f.size()); }

Matrix2D dft2(const Matrix2D& a) { return transform_2d(a, -1, 1.0); }

Matrix2D idft2(const Matrix2D& a) {
  return transform_2d(a, +1, 1.0 / (static_cast<double>(a.n) * a.n));
}

Matrix2D sdft(const Matrix2D& a) {
  // F_s a(u,v) = (1/N) sum_{k,l} a(k,l) e^{2 pi i l u / N} e^{-2 pi i k v / N};
  // separable: +DFT along columns index, -DFT along rows index.
  const int n = a.n;
  const std::vector<cplx> wp = root_table(n, +1);
  const std::vector<cplx> wm = root_table(n, -1);
  Matrix2D rows(n);  // rows(k, u) = sum_l a(k,l) e^{+2 pi i l u / N}
  for (int k = 0; k < n; ++k)
    for (int u = 0; u < n; ++u) {
      cplx acc = 0.0;
      for (int l = 0; l < n; ++l)
        acc += a(k, l) * wp[static_cast<std::size_t>((static_cast<long long>(l) * u) % n)];
      rows(k, u) = acc;
    }
  Matrix2D out(n);
  for (int u = 0; u < n; ++u)
    for (int vv = 0; vv < n; ++vv) {
      cplx acc = 0.0;
      for (int k = 0; k < n; ++k)
        acc += rows(k, u) * wm[static_cast<std::size_t>((static_cast<long long>(k) * vv) % n)];
      out(u, vv) = acc / static_cast<double>(n);
    }
  return out;
}

Signal circ_conv(const Signal& f, const Signal& g) {
  const int n = f.size();
  if (g.size() != n) throw std::invalid_argument("circ_conv: length mismatch");
  Signal out(n);
  for (int u = 0; u < n; ++u) {
    cplx acc = 0.0;
    for (int k = 0; k < n; ++k) acc += f.wrap(u - k) * g[k];
    out[u] = acc;
  }
  return out;
}

Matrix2D conv2(const Matrix2D& a, const Matrix2D& b) {
  const int n = a.n;
  if (b.n != n) throw std::invalid_argument("conv2: size mismatch");
  Matrix2D out(n);
  for (int u = 0; u < n; ++u)
    for (int vv = 0; vv < n; ++vv) {
      cplx acc = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) acc += a.wrap(u - k, vv - l) * b(k, l);
      out(u, vv) = acc;
    }
  return out;
}

Matrix2D tensor(const Signal& f, const Signal& g) {
  const int n = f.size();
  if (g.size() != n) throw std::invalid_argument("tensor: length mismatch");
  Matrix2D out(n);
  for (int u = 0; u < n; ++u)
    for (int vv = 0; vv < n; ++vv) out(u, vv) = f[u] * g[vv];
  return out;
}

Signal delta(int n) {
  Signal f(n);
  f[0] = 1.0;
  return f;
}

Signal ones(int n) {
  Signal f(n);
  for (int i = 0; i < n; ++i) f[i] = 1.0;
  return f;
}

Signal char_subgroup(int n, int alpha) {
  if (alpha < 1 || n % alpha != 0)
    throw std::invalid_argument("char_subgroup: alpha must divide n");
  Signal f(n);
  for (int i = 0; i < n; i += alpha) f[i] = 1.0;
  return f;
}

Matrix2D impulse_train(const Lattice& lat) {
  return tensor(char_subgroup(lat.n, lat.alpha), char_subgroup(lat.n, lat.beta));
}

}  // namespace gabfilt
