// core/equivalence.cpp

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

#include "gabfilt/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "gabfilt/fourier.hpp"
#include "gabfilt/tf.hpp"

namespace gabfilt {

std::vector<int> support_of(const Signal& h, double eps_rel) {
  if (!(eps_rel > 0.0)) throw std::invalid_argument("support_of: eps_rel must be positive");
  double mx = 0.0;
  for (const cplx& z : h.v) mx = std::max(mx, std::abs(z));
  std::vector<int> supp;
  if (mx == 0.0) return supp;
  for (int u = 0; u < h.size(); ++u)
    if (std::abs(h[u]) > eps_rel * mx) supp.push_back(u);
  return supp;
}

RepresentabilityReport check_representability(const Signal& h, const Signal& g1,
                                              const Signal& g2, const Lattice& lat,
                                              double tol) {
  const int n = lat.n;
  if (h.size() != n || g1.size() != n || g2.size() != n)
    throw std::invalid_argument("check_representability: length mismatch");
  if (!(tol > 0.0)) throw std::invalid_argument("check_representability: tol must be positive");

  RepresentabilityReport rep;
  rep.tolerance = tol;
  rep.support_h = support_of(h);

  const Matrix2D V = stft(g2, g1);  // V_{g1} g2
  const double scale = g1.norm2() * g2.norm2();
  const double zero_bar = tol * scale;
  const int A = lat.a_count();
  const int B = lat.b_count();
  const std::set<int> supp(rep.support_h.begin(), rep.support_h.end());

  for (int u : rep.support_h) {
    // 1) nonvanishing correlation on the support
    if (std::abs(V(u, 0)) <= zero_bar)
      rep.per_condition[0].push_back({1, u, 0, 0, V(u, 0), cplx(0.0)});
    // 2) zeros at the nonzero frequency nodes of the adjoint lattice
    for (int k = 0; k < lat.beta; ++k) {
      const int uk = mod_index(u + static_cast<long long>(B) * k, n);
      for (int l = 1; l < lat.alpha; ++l) {
        const int vl = mod_index(static_cast<long long>(l) * A, n);
        if (std::abs(V(uk, vl)) > zero_bar)
          rep.per_condition[1].push_back({2, u, k, l, V(uk, vl), cplx(0.0)});
      }
    }
    // 3) + 4) along the B-coset of u on the time axis
    for (int k = 1; k < lat.beta; ++k) {
      const int uk = mod_index(u + static_cast<long long>(B) * k, n);
      if (supp.count(uk) == 0) {
        if (std::abs(V(uk, 0)) > zero_bar)
          rep.per_condition[2].push_back({3, u, k, 0, V(uk, 0), cplx(0.0)});
      } else {
        // |V(uk,0) h(u) - h(uk) V(u,0)| <= tol * scale * (|h(u)| + |h(uk)|)
        const cplx lhs = V(uk, 0) * h[u];
        const cplx rhs = h[uk] * V(u, 0);
        const double bar = tol * scale * (std::abs(h[u]) + std::abs(h[uk]));
        if (std::abs(lhs - rhs) > bar)
          rep.per_condition[3].push_back({4, u, k, 0, V(uk, 0), h[uk] / h[u] * V(u, 0)});
      }
    }
  }
  rep.representable = rep.violation_count() == 0;
  return rep;
}

SymbolConstruction construct_symbol_unchecked(const Signal& h, const Signal& g1,
                                              const Signal& g2, const Lattice& lat,
                                              double support_eps_rel) {
  const int n = lat.n;
  if (h.size() != n || g1.size() != n || g2.size() != n)
    throw std::invalid_argument("construct_symbol: length mismatch");
  const std::vector<int> supp_list = support_of(h, support_eps_rel);
  const std::set<int> supp(supp_list.begin(), supp_list.end());
  const int B = lat.b_count();

  const Signal corr = window_correlation(g1, g2);  // V_{g1}g2(., 0)
  SymbolConstruction sc;
  sc.v_function = Signal(n);
  sc.c_function.assign(static_cast<std::size_t>(n), 1);
  for (int u = 0; u < n; ++u)
    sc.v_function[u] = supp.count(u) ? corr[u] : cplx(1.0);
  for (int u = 0; u < n; ++u) {
    int c = 0;
    for (int k = 0; k < lat.beta; ++k)
      if (supp.count(mod_index(u + static_cast<long long>(B) * k, n))) ++c;
    if (c > 0) sc.c_function[static_cast<std::size_t>(u)] = c;
  }

  Signal ratio(n);
  for (int u = 0; u < n; ++u)
    ratio[u] = h[u] / (static_cast<double>(sc.c_function[static_cast<std::size_t>(u)]) *
                       sc.v_function[u]);
  const Signal spectrum = dft(ratio);
  const double scale = static_cast<double>(lat.alpha) * lat.beta / n;
  sc.mask = Matrix2D(n);
  for (int u = 0; u < n; ++u)
    for (int vv = 0; vv < n; ++vv) sc.mask(u, vv) = scale * spectrum[vv];
  return sc;
}

SymbolConstruction construct_symbol(const Signal& h, const Signal& g1, const Signal& g2,
                                    const Lattice& lat, double tol) {
  RepresentabilityReport rep = check_representability(h, g1, g2, lat, tol);
  if (!rep.representable) {
    const int count = rep.violation_count();
    throw NotRepresentableError("construct_symbol: representability conditions violated (" +
                                    std::to_string(count) + " violations)",
                                std::move(rep));
  }
  return construct_symbol_unchecked(h, g1, g2, lat);
}

Matrix2D construct_symbol_full_lattice(const Signal& h, const Signal& g1, const Signal& g2,
                                       double tol) {
  const int n = h.size();
  if (g1.size() != n || g2.size() != n)
    throw std::invalid_argument("construct_symbol_full_lattice: length mismatch");
  const Signal corr = window_correlation(g1, g2);
  const double zero_bar = tol * g1.norm2() * g2.norm2();
  for (int u = 0; u < n; ++u)
    if (std::abs(corr[u]) <= zero_bar)
      throw std::invalid_argument(
          "construct_symbol_full_lattice: window correlation vanishes at index " +
          std::to_string(u));
  Signal ratio(n);
  for (int u = 0; u < n; ++u) ratio[u] = h[u] / corr[u];
  const Signal spectrum = dft(ratio);
  Matrix2D mask(n);
  for (int u = 0; u < n; ++u)
    for (int vv = 0; vv < n; ++vv) mask(u, vv) = spectrum[vv] / static_cast<double>(n);
  return mask;
}

LTIFilter gm_to_lti(const Signal& g1, const Signal& g2, const Signal& h, const Lattice& lat) {
  const int n = lat.n;
  if (g1.size() != n || g2.size() != n || h.size() != n)
    throw std::invalid_argument("gm_to_lti: length mismatch");
  if (lat.alpha != 1) throw std::invalid_argument("gm_to_lti: requires alpha == 1");
  double asym = 0.0, mx = 0.0;
  for (int t = 0; t < n; ++t) {
    asym = std::max(asym, std::abs(g1[t] - g1.wrap(static_cast<long long>(n) - t)));
    mx = std::max(mx, std::abs(g1[t]));
  }
  if (asym > 1e-12 * mx)
    throw std::invalid_argument("gm_to_lti: g1 must satisfy g1((N-t) mod N) == g1(t)");

  Signal g1c(n);
  for (int t = 0; t < n; ++t) g1c[t] = std::conj(g1[t]);
  const Signal corr = circ_conv(g1c, g2);
  const int B = lat.b_count();
  Signal h_eff(n);
  for (int t = 0; t < n; ++t) {
    cplx acc = 0.0;
    for (int k = 0; k < lat.beta; ++k) acc += h.wrap(t + static_cast<long long>(B) * k);
    h_eff[t] = static_cast<double>(n) / lat.beta * acc * corr[t];
  }
  return LTIFilter(h_eff);
}

LowpassGap lowpass_gap(int R, const Signal& g1, const Signal& g2) {
  const int n = g1.size();
  if (g2.size() != n) throw std::invalid_argument("lowpass_gap: length mismatch");
  if (R <= 0 || R >= (n + 1) / 2) throw std::invalid_argument("lowpass_gap: need 0 < R < N/2");
  Signal hhat(n);
  for (int vv = 0; vv < n; ++vv) {
    const int c = std::min(vv, n - vv);  // distance to frequency 0 mod N
    hhat[vv] = (c <= R) ? 1.0 : 0.0;
  }
  const Signal h = idft(hhat);
  const Lattice lat(n, 1, 1);
  const LTIFilter eff = gm_to_lti(g1, g2, h, lat);
  const Signal hhat_eff = dft(eff.impulse_response);
  LowpassGap out;
  for (int vv = 0; vv < n; ++vv)
    out.gap_sup = std::max(out.gap_sup, std::abs(hhat[vv] - hhat_eff[vv]));
  const GaborMultiplier gm(g1, g2, tensor(ones(n), hhat), lat);
  out.spectral_distance = op_distance(lti_kernel(LTIFilter(h)), gm_kernel(gm)).spectral;
  return out;
}

bool index_condition(double p, double q, double r) {
  const auto check = [](double x) {
    if (std::isnan(x) || x <= 1.0)
      throw std::invalid_argument("index_condition: exponents must lie in (1, inf]");
  };
  check(p);
  check(q);
  check(r);
  const auto inv = [](double x) { return std::isinf(x) ? 0.0 : 1.0 / x; };
  return inv(q) <= inv(r) + inv(p);
}

}  // namespace gabfilt
