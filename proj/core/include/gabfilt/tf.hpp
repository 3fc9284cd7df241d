// gabfilt/tf.hpp
//
// Time-frequency primitives on C^N: shifts, STFT, spectrograms, Gabor frames,
// window correlation.

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

#ifndef GABFILT_TF_HPP_
#define GABFILT_TF_HPP_

#include "gabfilt/types.hpp"

namespace gabfilt {

/// T_k f(t) = f(t - k), indices mod N.
Signal translate(const Signal& f, long long k);

/// M_l f(t) = e^{2 pi i l t / N} f(t).
Signal modulate(const Signal& f, long long l);

/// pi(k,l) = M_l T_k.
Signal tf_shift(const Signal& f, long long k, long long l);

/// V_g f(u,v) = sum_k f(k) conj(g(k-u)) e^{-2 pi i k v / N} = <f, pi(u,v) g>.
/// Row u of the result is dft(f . conj(T_u g)).
Matrix2D stft(const Signal& f, const Signal& g);

/// Entrywise |V_g f|^2 (imaginary parts are exactly zero).
Matrix2D spectrogram(const Signal& f, const Signal& g);

/// (conj(I g1) * g2)(u) = sum_t g2(t) conj(g1(t-u)); equals stft(g2, g1)(u, 0).
Signal window_correlation(const Signal& g1, const Signal& g2);

struct GaborSystem {
  Signal window;
  Lattice lattice;

  GaborSystem(Signal w, Lattice lat) : window(std::move(w)), lattice(lat) {
    if (window.size() != lattice.n)
      throw std::invalid_argument("GaborSystem: window length must equal lattice.n");
    if (window.norm2() == 0.0)
      throw std::invalid_argument("GaborSystem: window must not be identically zero");
  }
};

struct FrameBounds {
  double lower = 0.0;  // C_1
  double upper = 0.0;  // C_2

  bool is_frame() const { return lower > 0.0; }
  double condition_number() const { return std::sqrt(upper / lower); }
};

/// Frame operator S f = sum_{k,l in lattice} <f, pi(ak, bl) g> pi(ak, bl) g
/// assembled as a dense Hermitian N x N matrix.
Matrix2D frame_operator(const GaborSystem& sys);

/// Extreme eigenvalues of the frame operator. lower == 0 signals "not a frame"
/// (tiny negative eigenvalues from roundoff are clamped to 0).
FrameBounds frame_bounds(const GaborSystem& sys);

/// Periodized Gaussian window g(t) = sum_{|j|<=4} exp(-pi (t+jN)^2 / (width N)),
/// evaluated on the centered representative of t so that g((N-t) mod N) == g(t)
/// exactly. Maximum at t = 0; default width 1.
Signal discrete_gaussian(int n, double width = 1.0);

/// g / ||g||_2.
Signal normalized(const Signal& g);

}  // namespace gabfilt

#endif  // GABFILT_TF_HPP_
