// gabfilt/fourier.hpp
//
// Exact finite Fourier/convolution algebra on Z_N and Z_N x Z_N.
// Normalizations: the forward DFT is unnormalized, the inverse carries 1/N;
// the 2-D inverse carries 1/N^2; the symplectic transform carries 1/N and is
// its own inverse. Every constant downstream (N/(alpha*beta), 1/N^2, A*B)
// depends on these.

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

#ifndef GABFILT_FOURIER_HPP_
#define GABFILT_FOURIER_HPP_

#include "gabfilt/types.hpp"

namespace gabfilt {

/// Forward DFT, hat(f)(k) = sum_l f(l) e^{-2 pi i k l / N}.
Signal dft(const Signal& f);

/// Inverse DFT, carries the 1/N factor; idft(dft(f)) == f.
Signal idft(const Signal& f);

/// 2-D DFT (separable, unnormalized forward).
Matrix2D dft2(const Matrix2D& a);

/// 2-D inverse DFT, carries 1/N^2.
Matrix2D idft2(const Matrix2D& a);

/// Symplectic Fourier transform,
/// F_s a(u,v) = (1/N) sum_{k,l} a(k,l) e^{2 pi i (l u - k v)/N}.
/// Self-inverse: sdft(sdft(a)) == a.
Matrix2D sdft(const Matrix2D& a);

/// Circular convolution (h*f)(u) = sum_k h(u-k) f(k), indices mod N.
Signal circ_conv(const Signal& f, const Signal& g);

/// 2-D circular convolution, both axes mod N.
Matrix2D conv2(const Matrix2D& a, const Matrix2D& b);

/// Tensor product (f (x) g)(u,v) = f(u) g(v).
Matrix2D tensor(const Signal& f, const Signal& g);

/// Kronecker delta.
Signal delta(int n);

/// Constant 1 vector.
Signal ones(int n);

/// Characteristic function of the subgroup alpha*Z_N. alpha must divide n.
Signal char_subgroup(int n, int alpha);

/// Impulse train (Dirac comb) of the lattice:
/// Sha(u,v) = chi_{alpha Z_N}(u) * chi_{beta Z_N}(v).
Matrix2D impulse_train(const Lattice& lat);

}  // namespace gabfilt

#endif  // GABFILT_FOURIER_HPP_
