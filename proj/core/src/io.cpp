// core/io.cpp

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

#include "gabfilt/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gabfilt {

namespace {

using nlohmann::json;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.precision(17);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

std::vector<double> split_numbers(const std::string& line) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(std::stod(cell));
  return out;
}

}  // namespace

void write_signal_csv(const std::string& path, const Signal& f) {
  std::ofstream out = open_out(path);
  out << "index,re,im\n";
  for (int i = 0; i < f.size(); ++i)
    out << i << ',' << f[i].real() << ',' << f[i].imag() << '\n';
}

Signal read_signal_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty signal file: " + path);
  std::vector<cplx> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<double> cells = split_numbers(line);
    if (cells.size() != 3) throw std::runtime_error("bad signal row in " + path);
    values.emplace_back(cells[1], cells[2]);
  }
  if (values.empty()) throw std::runtime_error("no signal rows in " + path);
  return Signal(std::move(values));
}

void write_matrix_csv(const std::string& path, const Matrix2D& a,
                      const std::string& representation) {
  std::ofstream out = open_out(path);
  json header = {{"kind", "matrix2d"}, {"n", a.n}, {"representation", representation}};
  out << header.dump() << '\n';
  for (int u = 0; u < a.n; ++u) {
    for (int vv = 0; vv < a.n; ++vv) {
      if (vv) out << ',';
      out << a(u, vv).real() << ',' << a(u, vv).imag();
    }
    out << '\n';
  }
}

NamedMatrix read_matrix_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty matrix file: " + path);
  const json header = json::parse(line);
  const int n = header.at("n").get<int>();
  NamedMatrix out{Matrix2D(n), header.at("representation").get<std::string>()};
  for (int u = 0; u < n; ++u) {
    if (!std::getline(in, line)) throw std::runtime_error("truncated matrix file: " + path);
    const std::vector<double> cells = split_numbers(line);
    if (static_cast<int>(cells.size()) != 2 * n)
      throw std::runtime_error("bad matrix row in " + path);
    for (int vv = 0; vv < n; ++vv)
      out.matrix(u, vv) = cplx(cells[2 * vv], cells[2 * vv + 1]);
  }
  return out;
}

void write_spectrogram_csv(const std::string& path, const Matrix2D& spec) {
  std::ofstream out = open_out(path);
  json header = {{"kind", "spectrogram"}, {"n", spec.n},
                 {"rows", "frequency"}, {"cols", "time"}};
  out << header.dump() << '\n';
  for (int vv = 0; vv < spec.n; ++vv) {
    for (int u = 0; u < spec.n; ++u) {
      if (u) out << ',';
      out << spec(u, vv).real();
    }
    out << '\n';
  }
}

void write_grid_csv(const std::string& path, const gauss::GridFunction& g) {
  std::ofstream out = open_out(path);
  json header = {{"kind", "grid"}, {"half_width", g.half_width}, {"step", g.step}};
  out << header.dump() << '\n';
  out << "t,re,im\n";
  for (int i = 0; i < g.size(); ++i)
    out << g.t(i) << ',' << g[i].real() << ',' << g[i].imag() << '\n';
}

gauss::GridFunction read_grid_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty grid file: " + path);
  const json header = json::parse(line);
  gauss::GridFunction g(header.at("half_width").get<double>(), header.at("step").get<double>());
  if (!std::getline(in, line)) throw std::runtime_error("truncated grid file: " + path);
  int i = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<double> cells = split_numbers(line);
    if (cells.size() != 3) throw std::runtime_error("bad grid row in " + path);
    if (i >= g.size()) throw std::runtime_error("too many grid rows in " + path);
    g[i++] = cplx(cells[1], cells[2]);
  }
  if (i != g.size()) throw std::runtime_error("grid row count mismatch in " + path);
  return g;
}

std::string report_to_json(const RepresentabilityReport& rep) {
  json violations = json::array();
  for (const auto& list : rep.per_condition)
    for (const Violation& v : list)
      violations.push_back({{"condition", v.condition},
                            {"u", v.u},
                            {"k", v.k},
                            {"l", v.l},
                            {"lhs", {v.lhs.real(), v.lhs.imag()}},
                            {"rhs", {v.rhs.real(), v.rhs.imag()}}});
  json j = {{"representable", rep.representable},
            {"tolerance", rep.tolerance},
            {"support_h", rep.support_h},
            {"violations", violations}};
  return j.dump(2);
}

}  // namespace gabfilt
