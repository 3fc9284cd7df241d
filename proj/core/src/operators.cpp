// core/operators.cpp

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

#include "gabfilt/operators.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

#include "gabfilt/fourier.hpp"
#include "gabfilt/tf.hpp"

namespace gabfilt {

namespace {

Eigen::MatrixXcd to_eigen(const Matrix2D& a) {
  Eigen::MatrixXcd m(a.n, a.n);
  for (int u = 0; u < a.n; ++u)
    for (int w = 0; w < a.n; ++w) m(u, w) = a(u, w);
  return m;
}

}  // namespace

Signal LinearOp::apply(const Signal& f) const {
  const int n = kernel.n;
  if (f.size() != n) throw std::invalid_argument("LinearOp::apply: length mismatch");
  Signal out(n);
  for (int u = 0; u < n; ++u) {
    cplx acc = 0.0;
    for (int w = 0; w < n; ++w) acc += kernel(u, w) * f[w];
    out[u] = acc;
  }
  return out;
}

Signal LTIFilter::frequency_response() const { return dft(impulse_response); }

SpreadingFunction kernel_to_spreading(const LinearOp& op) {
  const int n = op.size();
  Matrix2D eta(n);
  Signal diag(n);
  for (int u = 0; u < n; ++u) {
    for (int k = 0; k < n; ++k) diag[k] = op.kernel.wrap(k, static_cast<long long>(k) - u);
    Signal row = dft(diag);
    for (int vv = 0; vv < n; ++vv) eta(u, vv) = row[vv];
  }
  return SpreadingFunction(eta);
}

LinearOp spreading_to_kernel(const SpreadingFunction& eta) {
  const int n = eta.size();
  Matrix2D K(n);
  // Per displaced diagonal u, the values K(m, m-u) are the idft of eta(u, .).
  Signal row(n);
  for (int u = 0; u < n; ++u) {
    for (int vv = 0; vv < n; ++vv) row[vv] = eta.eta(u, vv);
    Signal diag = idft(row);
    for (int m = 0; m < n; ++m) K(m, mod_index(static_cast<long long>(m) - u, n)) = diag[m];
  }
  return LinearOp(K);
}

LinearOp spreading_synthesis(const SpreadingFunction& eta) {
  const int n = eta.size();
  Matrix2D K(n);
  // pi(k,l) has matrix entries e^{2 pi i l m / N} at (m, m-k).
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      const cplx c = eta.eta(k, l) / static_cast<double>(n);
      if (c == cplx(0.0)) continue;
      for (int m = 0; m < n; ++m) {
        K(m, mod_index(static_cast<long long>(m) - k, n)) +=
            c * std::polar(1.0, 2.0 * M_PI * ((static_cast<long long>(l) * m) % n) / n);
      }
    }
  return LinearOp(K);
}

Signal lti_apply(const LTIFilter& flt, const Signal& f) {
  if (f.size() != flt.size()) throw std::invalid_argument("lti_apply: length mismatch");
  return circ_conv(flt.impulse_response, f);
}

LinearOp lti_kernel(const LTIFilter& flt) {
  const int n = flt.size();
  Matrix2D K(n);
  for (int u = 0; u < n; ++u)
    for (int vv = 0; vv < n; ++vv)
      K(u, vv) = flt.impulse_response.wrap(static_cast<long long>(u) - vv);
  return LinearOp(K);
}

Signal gm_apply(const GaborMultiplier& gm, const Signal& f) {
  const int n = gm.lattice.n;
  if (f.size() != n) throw std::invalid_argument("gm_apply: length mismatch");
  const int A = gm.lattice.a_count();
  const int B = gm.lattice.b_count();
  const int alpha = gm.lattice.alpha;
  const int beta = gm.lattice.beta;
  Signal out(n);
  for (int k = 0; k < A; ++k) {
    for (int l = 0; l < B; ++l) {
      // V_{g1} f (ak, bl) = <f, pi(ak, bl) g1>
      const Signal atom = tf_shift(gm.g1, static_cast<long long>(alpha) * k,
                                   static_cast<long long>(beta) * l);
      cplx coeff = 0.0;
      for (int t = 0; t < n; ++t) coeff += f[t] * std::conj(atom[t]);
      coeff *= gm.mask(alpha * k, beta * l);
      const Signal syn = tf_shift(gm.g2, static_cast<long long>(alpha) * k,
                                  static_cast<long long>(beta) * l);
      for (int t = 0; t < n; ++t) out[t] += coeff * syn[t];
    }
  }
  return out;
}

LinearOp gm_kernel(const GaborMultiplier& gm) {
  const int n = gm.lattice.n;
  const int A = gm.lattice.a_count();
  const int B = gm.lattice.b_count();
  const int alpha = gm.lattice.alpha;
  const int beta = gm.lattice.beta;
  Matrix2D K(n);
  // For each time node k, collapse the frequency sum into
  // w_k(m) = sum_l a(ak, bl) e^{2 pi i b l m / N}, then accumulate
  // K(u,v) += conj(g1(v-ak)) g2(u-ak) w_k(u-v).
  std::vector<cplx> w(static_cast<std::size_t>(n));
  for (int k = 0; k < A; ++k) {
    for (int m = 0; m < n; ++m) {
      cplx acc = 0.0;
      for (int l = 0; l < B; ++l) {
        const long long r = (static_cast<long long>(beta) * l * m) % n;
        acc += gm.mask(alpha * k, beta * l) * std::polar(1.0, 2.0 * M_PI * r / n);
      }
      w[static_cast<std::size_t>(m)] = acc;
    }
    for (int u = 0; u < n; ++u) {
      const cplx gu = gm.g2.wrap(static_cast<long long>(u) - static_cast<long long>(alpha) * k);
      if (gu == cplx(0.0)) continue;
      for (int vv = 0; vv < n; ++vv) {
        const cplx gv =
            std::conj(gm.g1.wrap(static_cast<long long>(vv) - static_cast<long long>(alpha) * k));
        K(u, vv) += gu * gv * w[static_cast<std::size_t>(mod_index(u - vv, n))];
      }
    }
  }
  return LinearOp(K);
}

Matrix2D mask_periodization(const Matrix2D& mask, const Lattice& lat) {
  if (mask.n != lat.n) throw std::invalid_argument("mask_periodization: size mismatch");
  const Matrix2D S = sdft(mask);
  const int n = lat.n;
  const int A = lat.a_count();
  const int B = lat.b_count();
  Matrix2D out(n);
  for (int u = 0; u < n; ++u)
    for (int vv = 0; vv < n; ++vv) {
      cplx acc = 0.0;
      for (int l = 0; l < lat.alpha; ++l)
        for (int k = 0; k < lat.beta; ++k)
          acc += S.wrap(u + static_cast<long long>(B) * k, vv - static_cast<long long>(A) * l);
      out(u, vv) = acc;
    }
  return out;
}

Matrix2D mask_periodization_via_comb(const Matrix2D& mask, const Lattice& lat) {
  if (mask.n != lat.n) throw std::invalid_argument("mask_periodization: size mismatch");
  const Matrix2D comb = impulse_train(lat);
  Matrix2D prod(lat.n);
  for (int u = 0; u < lat.n; ++u)
    for (int vv = 0; vv < lat.n; ++vv) prod(u, vv) = mask(u, vv) * comb(u, vv);
  Matrix2D out = sdft(prod);
  const double scale = static_cast<double>(lat.alpha) * lat.beta;
  for (cplx& z : out.v) z *= scale;
  return out;
}

SpreadingFunction gm_spreading(const GaborMultiplier& gm) {
  const Matrix2D ap = mask_periodization(gm.mask, gm.lattice);
  const Matrix2D V = stft(gm.g2, gm.g1);  // V_{g1} g2
  const double scale = gm.lattice.redundancy();
  Matrix2D eta(gm.lattice.n);
  for (int u = 0; u < gm.lattice.n; ++u)
    for (int vv = 0; vv < gm.lattice.n; ++vv) eta(u, vv) = scale * ap(u, vv) * V(u, vv);
  return SpreadingFunction(eta);
}

OpDistance op_distance(const LinearOp& x, const LinearOp& y) {
  if (x.size() != y.size()) throw std::invalid_argument("op_distance: size mismatch");
  const Matrix2D d = x.kernel - y.kernel;
  OpDistance out;
  out.frobenius = d.frobenius();
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(to_eigen(d));
  out.spectral = (d.n > 0) ? svd.singularValues()(0) : 0.0;
  return out;
}

std::vector<double> singular_spectrum(const LinearOp& op, int k) {
  const int n = op.size();
  if (k < 1 || k > n) throw std::invalid_argument("singular_spectrum: k out of range");
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(to_eigen(op.kernel));
  std::vector<double> out(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out[static_cast<std::size_t>(i)] = svd.singularValues()(i);
  return out;
}

}  // namespace gabfilt
