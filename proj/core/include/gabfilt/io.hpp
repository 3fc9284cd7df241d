// gabfilt/io.hpp
//
// Plain-text file formats:
//  - signal CSV: header "index,re,im", one row per index;
//  - matrix CSV: one-line JSON header naming the representation
//    (kernel | spreading | mask | spectrogram), then N rows of paired
//    re/im columns;
//  - grid CSV: JSON header recording half_width and step, then "t,re,im" rows;
//  - spectrogram CSV: frequency as rows (v), time as columns (u), real values;
//  - representability report JSON.

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

#ifndef GABFILT_IO_HPP_
#define GABFILT_IO_HPP_

#include <string>

#include "gabfilt/equivalence.hpp"
#include "gabfilt/gauss.hpp"
#include "gabfilt/types.hpp"

namespace gabfilt {

void write_signal_csv(const std::string& path, const Signal& f);
Signal read_signal_csv(const std::string& path);

struct NamedMatrix {
  Matrix2D matrix;
  std::string representation;
};

void write_matrix_csv(const std::string& path, const Matrix2D& a,
                      const std::string& representation);
NamedMatrix read_matrix_csv(const std::string& path);

/// Writes |.|-squared style real data with frequency (column index v of the
/// STFT matrix) as rows and time (row index u) as columns.
void write_spectrogram_csv(const std::string& path, const Matrix2D& spec);

void write_grid_csv(const std::string& path, const gauss::GridFunction& g);
gauss::GridFunction read_grid_csv(const std::string& path);

/// {representable, tolerance, violations: [{condition,u,k,l,lhs,rhs}]}
/// with lhs/rhs encoded as [re, im]. Returns a compact JSON string.
std::string report_to_json(const RepresentabilityReport& rep);

}  // namespace gabfilt

#endif  // GABFILT_IO_HPP_
