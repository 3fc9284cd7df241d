// tests/test_fourier.cpp

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gabfilt/fourier.hpp"
#include "testing_util.hpp"

using namespace gabfilt;
using testing::rel_err;

TEST_CASE("dft of delta is the all-ones vector") {
  const Signal f = dft(delta(8));
  CHECK(rel_err(f, ones(8)) < 1e-15);
}

TEST_CASE("dft of (1/N) ones is delta") {
  const int n = 12;
  Signal f = ones(n);
  for (auto& z : f.v) z /= n;
  CHECK(testing::max_abs_diff(dft(f), delta(n)) < 1e-14);
}

TEST_CASE("dft of the even-subgroup indicator at N=4") {
  // direct 4-point summation: dft((1,0,1,0)) = (2,0,2,0)
  const Signal got = dft(char_subgroup(4, 2));
  Signal expect(4);
  expect[0] = 2.0;
  expect[2] = 2.0;
  CHECK(testing::max_abs_diff(got, expect) < 1e-14);
}

TEST_CASE("idft inverts dft on random input") {
  Rng rng(17);
  const Signal f = rng.signal(16);
  CHECK(rel_err(idft(dft(f)), f) < 1e-13);
}

TEST_CASE("idft of delta and of ones") {
  const int n = 10;
  Signal expect = ones(n);
  for (auto& z : expect.v) z /= n;
  CHECK(testing::max_abs_diff(idft(delta(n)), expect) < 1e-15);
  // geometric-sum identity: sum_l e^{2 pi i k l / N} = N delta(k)
  CHECK(testing::max_abs_diff(idft(ones(n)), delta(n)) < 1e-14);
}

TEST_CASE("dft matches the per-term oracle") {
  Rng rng(3);
  for (int n : {5, 12, 31}) {
    const Signal f = rng.signal(n);
    CHECK(rel_err(dft(f), testing::naive_dft(f)) < 1e-12);
  }
}

TEST_CASE("Parseval with the unnormalized forward transform") {
  Rng rng(5);
  const Signal f = rng.signal(24);
  const double lhs = std::pow(dft(f).norm2(), 2);
  const double rhs = 24.0 * std::pow(f.norm2(), 2);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
}

TEST_CASE("round trips at machine precision for a spread of sizes") {
  Rng rng(23);
  for (int n : {2, 3, 8, 17, 33, 64}) {
    const Signal f = rng.signal(n);
    CHECK(rel_err(idft(dft(f)), f) < 1e-12);
    const Matrix2D a = rng.matrix(n);
    CHECK(rel_err(idft2(dft2(a)), a) < 1e-12);
    CHECK(rel_err(sdft(sdft(a)), a) < 1e-12);
  }
}

TEST_CASE("dft2 of the delta tensor is the all-ones matrix") {
  const Matrix2D got = dft2(tensor(delta(6), delta(6)));
  CHECK(rel_err(got, tensor(ones(6), ones(6))) < 1e-14);
}

TEST_CASE("2-D convolution theorem on random input") {
  const int n = 8;
  Rng rng(29);
  const Matrix2D a = rng.matrix(n);
  const Matrix2D b = rng.matrix(n);
  Matrix2D prod(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) prod(u, v) = a(u, v) * b(u, v);
  const Matrix2D lhs = dft2(prod);
  Matrix2D rhs = conv2(dft2(a), dft2(b));
  for (auto& z : rhs.v) z /= static_cast<double>(n) * n;
  CHECK(rel_err(lhs, rhs) < 1e-12);
}

TEST_CASE("Poisson summation for signals and combs") {
  for (int n : {6, 12, 16}) {
    for (int alpha : testing::divisors(n)) {
      const int A = n / alpha;
      Signal lhs = dft(char_subgroup(n, alpha));
      Signal rhs = char_subgroup(n, A);
      for (auto& z : rhs.v) z *= A;
      CHECK(testing::max_abs_diff(lhs, rhs) < 1e-12 * A);
      for (int beta : testing::divisors(n)) {
        const Lattice lat(n, alpha, beta);
        const int B = n / beta;
        const Matrix2D f2 = dft2(impulse_train(lat));
        Matrix2D expect = impulse_train(Lattice(n, A, B));
        const double ab = static_cast<double>(A) * B;
        for (auto& z : expect.v) z *= ab;
        CHECK((f2 - expect).max_abs() < 1e-12 * ab);
      }
    }
  }
}

TEST_CASE("symplectic transform swaps tensor factors") {
  // F_s(f (x) dft(g)) == g (x) dft(f), against a per-term oracle as well
  const int n = 12;
  Rng rng(31);
  const Signal f = rng.signal(n);
  const Signal g = rng.signal(n);
  const Matrix2D lhs = sdft(tensor(f, dft(g)));
  const Matrix2D expect = tensor(g, dft(f));
  CHECK(rel_err(lhs, expect) < 1e-12);

  Matrix2D oracle(n);
  const Matrix2D in = tensor(f, dft(g));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      cplx acc = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          acc += in(k, l) * std::exp(cplx(0.0, 2.0 * M_PI * (l * u - k * v) / n));
      oracle(u, v) = acc / static_cast<double>(n);
    }
  CHECK(rel_err(lhs, oracle) < 1e-12);
}

TEST_CASE("symplectic transform is an involution and matches the 2-D transform relation") {
  const int n = 8;
  Rng rng(37);
  const Matrix2D a = rng.matrix(n);
  CHECK(rel_err(sdft(sdft(a)), a) < 1e-13);
  // F_s a(u,v) = (1/N) F_2 a(v, -u)
  const Matrix2D fs = sdft(a);
  const Matrix2D f2 = dft2(a);
  double worst = 0.0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      worst = std::max(worst, std::abs(fs(u, v) - f2.wrap(v, -static_cast<long long>(u)) /
                                                      static_cast<double>(n)));
  CHECK(worst < 1e-13 * f2.max_abs());
}

TEST_CASE("circular convolution basics") {
  const int n = 9;
  Rng rng(41);
  const Signal f = rng.signal(n);
  CHECK(rel_err(circ_conv(f, delta(n)), f) < 1e-15);

  cplx total = 0.0;
  for (const auto& z : f.v) total += z;
  Signal expect(n);
  for (auto& z : expect.v) z = total;
  CHECK(rel_err(circ_conv(ones(n), f), expect) < 1e-13);
}

TEST_CASE("1-D convolution theorem against the transform product") {
  const int n = 32;
  Rng rng(43);
  const Signal f = rng.signal(n);
  const Signal g = rng.signal(n);
  const Signal direct = circ_conv(f, g);
  Signal prod(n);
  const Signal fh = dft(f), gh = dft(g);
  for (int i = 0; i < n; ++i) prod[i] = fh[i] * gh[i];
  CHECK(rel_err(direct, idft(prod)) < 1e-12);
}

TEST_CASE("2-D convolution identity and comb self-convolution") {
  const int n = 6;
  Rng rng(47);
  const Matrix2D a = rng.matrix(n);
  CHECK(rel_err(conv2(a, tensor(delta(n), delta(n))), a) < 1e-14);

  const Lattice lat(n, 2, 3);
  const Matrix2D comb = impulse_train(lat);
  Matrix2D expect = comb;
  const double ab = static_cast<double>(lat.a_count()) * lat.b_count();
  for (auto& z : expect.v) z *= ab;
  CHECK(rel_err(conv2(comb, comb), expect) < 1e-13);
}

TEST_CASE("tensor product shapes") {
  const int n = 5;
  Rng rng(53);
  const Signal f = rng.signal(n);
  Matrix2D dd = tensor(delta(n), delta(n));
  CHECK(std::abs(dd(0, 0) - cplx(1.0)) < 1e-15);
  CHECK(dd.frobenius() == doctest::Approx(1.0));

  const Matrix2D of = tensor(ones(n), f);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) CHECK(std::abs(of(u, v) - f[v]) < 1e-15);

  const Matrix2D fd = tensor(f, delta(n));
  for (int u = 0; u < n; ++u)
    for (int v = 1; v < n; ++v) CHECK(std::abs(fd(u, v)) == 0.0);
}

TEST_CASE("subgroup indicators") {
  const Signal c = char_subgroup(6, 2);
  for (int i = 0; i < 6; ++i) CHECK(c[i] == cplx(i % 2 == 0 ? 1.0 : 0.0));
  CHECK(testing::max_abs_diff(char_subgroup(7, 1), ones(7)) == 0.0);
  CHECK_THROWS_AS(char_subgroup(6, 4), std::invalid_argument);
}

TEST_CASE("impulse trains") {
  CHECK(rel_err(impulse_train(Lattice(5, 1, 1)), tensor(ones(5), ones(5))) == 0.0);
  CHECK(rel_err(impulse_train(Lattice(4, 4, 4)), tensor(delta(4), delta(4))) == 0.0);

  const Matrix2D sha = impulse_train(Lattice(6, 2, 3));
  int count = 0;
  for (int u = 0; u < 6; ++u)
    for (int v = 0; v < 6; ++v)
      if (sha(u, v) == cplx(1.0)) {
        ++count;
        CHECK(u % 2 == 0);
        CHECK(v % 3 == 0);
      } else {
        CHECK(sha(u, v) == cplx(0.0));
      }
  CHECK(count == 6);
}

TEST_CASE("length mismatches are rejected") {
  CHECK_THROWS_AS(circ_conv(ones(4), ones(5)), std::invalid_argument);
  CHECK_THROWS_AS(tensor(ones(4), ones(5)), std::invalid_argument);
  CHECK_THROWS_AS(Lattice(6, 4, 1), std::invalid_argument);
}
