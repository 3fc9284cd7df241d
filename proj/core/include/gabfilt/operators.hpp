// gabfilt/operators.hpp
//
// Operator representations: kernels, spreading functions, LTI filters, Gabor
// multipliers. Every formula is implemented as an independently checkable
// path (definition sum vs algebraic identity).

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

#ifndef GABFILT_OPERATORS_HPP_
#define GABFILT_OPERATORS_HPP_

#include <vector>

#include "gabfilt/types.hpp"

namespace gabfilt {

/// Linear operator on C^N through its matrix representation K; action f -> K f.
struct LinearOp {
  Matrix2D kernel;

  LinearOp() = default;
  explicit LinearOp(Matrix2D k) : kernel(std::move(k)) {}
  int size() const { return kernel.n; }

  Signal apply(const Signal& f) const;
};

/// LTI filter (Fourier multiplier) given by its impulse response h;
/// action is circular convolution h * f.
struct LTIFilter {
  Signal impulse_response;

  explicit LTIFilter(Signal h) : impulse_response(std::move(h)) {}
  int size() const { return impulse_response.size(); }

  /// Frequency response dft(h).
  Signal frequency_response() const;
};

/// Gabor multiplier: analysis window g1, synthesis window g2, mask a (lower
/// symbol), lattice. Only mask entries at lattice points (alpha k, beta l)
/// influence the operator; the full N x N mask is carried so that mask algebra
/// (sdft, periodization) stays uniform.
struct GaborMultiplier {
  Signal g1;
  Signal g2;
  Matrix2D mask;
  Lattice lattice;

  GaborMultiplier(Signal analysis, Signal synthesis, Matrix2D a, Lattice lat)
      : g1(std::move(analysis)), g2(std::move(synthesis)), mask(std::move(a)), lattice(lat) {
    if (g1.size() != lattice.n || g2.size() != lattice.n || mask.n != lattice.n)
      throw std::invalid_argument("GaborMultiplier: dimension mismatch");
  }
};

/// Spreading function eta of an operator; eta and the kernel are a bijective
/// transform pair (see kernel_to_spreading / spreading_to_kernel).
struct SpreadingFunction {
  Matrix2D eta;

  SpreadingFunction() = default;
  explicit SpreadingFunction(Matrix2D e) : eta(std::move(e)) {}
  int size() const { return eta.n; }
};

/// eta(u,v) = sum_k K(k, (k-u) mod N) e^{-2 pi i k v / N}.
SpreadingFunction kernel_to_spreading(const LinearOp& op);

/// Inverse of the definition: K(m,n) = (1/N) sum_v eta((m-n) mod N, v) e^{2 pi i m v / N}.
LinearOp spreading_to_kernel(const SpreadingFunction& eta);

/// Synthesis from the spreading coefficients, L = (1/N) sum_{k,l} eta(k,l) pi(k,l).
/// The 1/N makes the round trip with kernel_to_spreading exact (the TF shifts
/// have squared Hilbert-Schmidt norm N).
LinearOp spreading_synthesis(const SpreadingFunction& eta);

/// h * f by direct circular convolution.
Signal lti_apply(const LTIFilter& flt, const Signal& f);

/// Circulant matrix representation K(u,v) = h(u-v).
LinearOp lti_kernel(const LTIFilter& flt);

/// Literal double sum over the lattice:
/// sum_{k=0}^{A-1} sum_{l=0}^{B-1} a(ak,bl) V_{g1}f(ak,bl) pi(ak,bl) g2.
Signal gm_apply(const GaborMultiplier& gm, const Signal& f);

/// Matrix representation
/// K(u,v) = sum_{k,l} a(ak,bl) conj(g1(v-ak)) g2(u-ak) e^{2 pi i b l (u-v)/N}.
LinearOp gm_kernel(const GaborMultiplier& gm);

/// Periodization of S = sdft(mask):
/// A_P(u,v) = sum_{l=0}^{alpha-1} sum_{k=0}^{beta-1} S(u+Bk, v-Al).
/// Equals alpha*beta*sdft(mask . Sha_(alpha,beta)); both paths are implemented
/// (see mask_periodization_via_comb) and compared in tests.
Matrix2D mask_periodization(const Matrix2D& mask, const Lattice& lat);

/// Second route for the same quantity, alpha*beta*sdft(mask . Sha).
Matrix2D mask_periodization_via_comb(const Matrix2D& mask, const Lattice& lat);

/// Spreading function of a Gabor multiplier by the closed formula
/// eta(u,v) = (N/(alpha beta)) A_P(u,v) V_{g1}g2(u,v); must equal
/// kernel_to_spreading(gm_kernel(gm)).
SpreadingFunction gm_spreading(const GaborMultiplier& gm);

struct OpDistance {
  double frobenius = 0.0;
  double spectral = 0.0;  // largest singular value of the difference
};

OpDistance op_distance(const LinearOp& x, const LinearOp& y);

/// k largest singular values, descending. Requires 1 <= k <= N.
std::vector<double> singular_spectrum(const LinearOp& op, int k);

}  // namespace gabfilt

#endif  // GABFILT_OPERATORS_HPP_
