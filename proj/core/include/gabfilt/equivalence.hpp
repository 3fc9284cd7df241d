// gabfilt/equivalence.hpp
//
// Decide, construct, and quantify the equivalence between LTI filters and
// Gabor multipliers on C^N.

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

#ifndef GABFILT_EQUIVALENCE_HPP_
#define GABFILT_EQUIVALENCE_HPP_

#include <array>
#include <vector>

#include "gabfilt/operators.hpp"
#include "gabfilt/types.hpp"

namespace gabfilt {

/// Indices u with |h(u)| > eps_rel * max|h|; empty for the zero signal.
std::vector<int> support_of(const Signal& h, double eps_rel = 1e-10);

/// One failed condition instance. lhs/rhs record the compared STFT values
/// (rhs is meaningful for condition 4 only).
struct Violation {
  int condition = 0;  // 1..4
  int u = 0;
  int k = 0;
  int l = 0;
  cplx lhs{};
  cplx rhs{};
};

/// Outcome of the four window conditions for representing the LTI filter h as
/// a Gabor multiplier on the given lattice. representable iff all four
/// violation lists are empty. Zero tests use |value| <= tol * ||g1|| ||g2||.
struct RepresentabilityReport {
  bool representable = false;
  double tolerance = 0.0;
  std::array<std::vector<Violation>, 4> per_condition;
  std::vector<int> support_h;

  int violation_count() const {
    int c = 0;
    for (const auto& list : per_condition) c += static_cast<int>(list.size());
    return c;
  }
};

/// Check, for every u in supp(h):
///  1) V_{g1}g2(u, 0) != 0;
///  2) V_{g1}g2(u + Bk, lA) == 0 for k = 0..beta-1, l = 1..alpha-1;
///  3) V_{g1}g2(u + Bk, 0) == 0 for k = 1..beta-1 with u + Bk not in supp(h);
///  4) V_{g1}g2(u + Bk, 0) == (h(u+Bk)/h(u)) V_{g1}g2(u, 0) for k = 1..beta-1
///     with u + Bk in supp(h).
RepresentabilityReport check_representability(const Signal& h, const Signal& g1,
                                              const Signal& g2, const Lattice& lat,
                                              double tol = 1e-9);

/// Thrown by construct_symbol when the representability check fails; carries
/// the full report.
class NotRepresentableError : public std::runtime_error {
 public:
  NotRepresentableError(std::string what, RepresentabilityReport rep)
      : std::runtime_error(std::move(what)), report(std::move(rep)) {}
  RepresentabilityReport report;
};

/// Proof objects of the construction: mask a, the nonvanishing correlation
/// V(u) (V_{g1}g2(u,0) on supp(h), 1 elsewhere), and the coset multiplicity
/// C(u) = #({u + B Z_N} cap supp(h)) (>= 1, B-translation invariant).
struct SymbolConstruction {
  Matrix2D mask;
  Signal v_function;
  std::vector<int> c_function;
};

/// Constructive direction: mask a = (alpha beta / N) (1 (x) F_N(h/(C V))).
/// Requires check_representability to pass; the resulting Gabor multiplier's
/// kernel equals the circulant kernel of h.
SymbolConstruction construct_symbol(const Signal& h, const Signal& g1, const Signal& g2,
                                    const Lattice& lat, double tol = 1e-9);

/// Same formula without the precondition check (the conditions are what make
/// the reconstruction exact; callers probing violated instances use this).
SymbolConstruction construct_symbol_unchecked(const Signal& h, const Signal& g1,
                                              const Signal& g2, const Lattice& lat,
                                              double support_eps_rel = 1e-10);

/// Full-lattice (alpha = beta = 1) special case: requires the window
/// correlation to be nonvanishing everywhere and returns the mask
/// a = (1/N) (1 (x) F_N(h / corr)). Throws naming the first vanishing index.
Matrix2D construct_symbol_full_lattice(const Signal& h, const Signal& g1, const Signal& g2,
                                       double tol = 1e-9);

/// Converse direction (no time subsampling): the Gabor multiplier with mask
/// 1 (x) hhat, alpha = 1 and symmetric g1 is an LTI filter with impulse
/// response h_eff = (N/beta) sum_{k=0}^{beta-1} h(. + Bk) . (conj(g1) * g2).
/// Requires alpha == 1 and g1((N-t) mod N) == g1(t) within 1e-12 relative.
LTIFilter gm_to_lti(const Signal& g1, const Signal& g2, const Signal& h, const Lattice& lat);

struct LowpassGap {
  double gap_sup = 0.0;           // max_v |hhat(v) - hhat_eff(v)|
  double spectral_distance = 0.0; // operator-norm distance between H and the multiplier
};

/// Ideal low-pass experiment at full lattice: hhat = chi_{[-R,R]} (mod N),
/// Gabor multiplier with mask 1 (x) hhat. Requires 0 < R < N/2.
LowpassGap lowpass_gap(int R, const Signal& g1, const Signal& g2);

/// Index predicate 1/q <= 1/r + 1/p with all exponents in (1, inf];
/// pass std::numeric_limits<double>::infinity() for inf.
bool index_condition(double p, double q, double r);

}  // namespace gabfilt

#endif  // GABFILT_EQUIVALENCE_HPP_
