// gabfilt/types.hpp

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

#ifndef GABFILT_TYPES_HPP_
#define GABFILT_TYPES_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gabfilt {

using cplx = std::complex<double>;

/// Euclidean remainder: always in 0..n-1, also for negative i.
inline int mod_index(long long i, int n) {
  long long r = i % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

/// Length-N complex vector indexed over Z_N.
struct Signal {
  std::vector<cplx> v;

  Signal() = default;
  explicit Signal(int n) : v(static_cast<std::size_t>(n)) {
    if (n < 1) throw std::invalid_argument("Signal: length must be >= 1");
  }
  explicit Signal(std::vector<cplx> values) : v(std::move(values)) {
    if (v.empty()) throw std::invalid_argument("Signal: length must be >= 1");
  }

  int size() const { return static_cast<int>(v.size()); }
  cplx& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
  const cplx& operator[](int i) const { return v[static_cast<std::size_t>(i)]; }

  /// Access with index reduced mod N (negative indices allowed).
  cplx wrap(long long i) const { return v[static_cast<std::size_t>(mod_index(i, size()))]; }

  double norm2() const {
    double s = 0.0;
    for (const cplx& z : v) s += std::norm(z);
    return std::sqrt(s);
  }

  bool all_finite() const {
    for (const cplx& z : v)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }
};

/// N x N complex array, row index u, column index v.
struct Matrix2D {
  int n = 0;
  std::vector<cplx> v;  // row-major

  Matrix2D() = default;
  explicit Matrix2D(int size) : n(size), v(static_cast<std::size_t>(size) * size) {
    if (size < 1) throw std::invalid_argument("Matrix2D: size must be >= 1");
  }

  cplx& operator()(int u, int w) { return v[static_cast<std::size_t>(u) * n + w]; }
  const cplx& operator()(int u, int w) const { return v[static_cast<std::size_t>(u) * n + w]; }

  cplx wrap(long long u, long long w) const {
    return v[static_cast<std::size_t>(mod_index(u, n)) * n + mod_index(w, n)];
  }

  double frobenius() const {
    double s = 0.0;
    for (const cplx& z : v) s += std::norm(z);
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (const cplx& z : v) m = std::max(m, std::abs(z));
    return m;
  }
};

inline Matrix2D operator-(const Matrix2D& a, const Matrix2D& b) {
  if (a.n != b.n) throw std::invalid_argument("Matrix2D: size mismatch");
  Matrix2D d(a.n);
  for (std::size_t i = 0; i < a.v.size(); ++i) d.v[i] = a.v[i] - b.v[i];
  return d;
}

/// Rectangular sampling lattice alpha*Z_N x beta*Z_N with A = N/alpha, B = N/beta.
struct Lattice {
  int n, alpha, beta;

  Lattice(int n_, int alpha_, int beta_) : n(n_), alpha(alpha_), beta(beta_) {
    if (n < 1) throw std::invalid_argument("Lattice: n must be >= 1");
    if (alpha < 1 || n % alpha != 0)
      throw std::invalid_argument("Lattice: alpha must divide n (alpha=" +
                                  std::to_string(alpha_) + ", n=" + std::to_string(n_) + ")");
    if (beta < 1 || n % beta != 0)
      throw std::invalid_argument("Lattice: beta must divide n (beta=" +
                                  std::to_string(beta_) + ", n=" + std::to_string(n_) + ")");
  }

  int a_count() const { return n / alpha; }  // number of time nodes A
  int b_count() const { return n / beta; }   // number of frequency nodes B
  double redundancy() const { return static_cast<double>(n) / (alpha * beta); }
};

/// Deterministic seeded generator for test data: complex entries with
/// independent standard normal real and imaginary parts (mt19937_64 +
/// std::normal_distribution).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double normal() { return dist_(gen_); }
  cplx normal_cplx() {
    double re = dist_(gen_);
    double im = dist_(gen_);
    return {re, im};
  }

  Signal signal(int n) {
    Signal f(n);
    for (int i = 0; i < n; ++i) f[i] = normal_cplx();
    return f;
  }

  Matrix2D matrix(int n) {
    Matrix2D a(n);
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w) a(u, w) = normal_cplx();
    return a;
  }

  std::uint64_t integer() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> dist_{0.0, 1.0};
};

}  // namespace gabfilt

#endif  // GABFILT_TYPES_HPP_
