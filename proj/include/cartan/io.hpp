#pragma once

// JSON and CSV serialization. Integer matrices go out as strings so exact
// data never passes through a double; spectral data uses plain numbers and
// complex entries are [re, im] pairs.

#include <json.hpp>
#include <ostream>
#include <string>

#include "cartan/ising.hpp"
#include "cartan/matrix.hpp"
#include "cartan/rootsys.hpp"
#include "cartan/spectral.hpp"

namespace cartan::io {

using nlohmann::json;

inline json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(std::to_string(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline IntMatrix int_matrix_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j.at(0).size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = std::stoll(j[i][c].get<std::string>());
  }
  return m;
}

inline json to_json(const RealMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(std::vector<double>(m.row(i).begin(), m.row(i).end()));
  return rows;
}

inline json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const ComplexVector& v) {
  json a = json::array();
  for (auto z : v) a.push_back(to_json(z));
  return a;
}

inline ComplexVector complex_vector_from_json(const json& j) {
  ComplexVector v;
  for (const auto& z : j) v.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
  return v;
}

inline json to_json(const spectral::Eigenpair& p) {
  return {{"k", p.k}, {"h", p.h}, {"lambda", p.lambda}, {"vector", to_json(p.vector)}, {"residual", p.residual}};
}

inline spectral::Eigenpair eigenpair_from_json(const json& j) {
  spectral::Eigenpair p;
  p.k = j.at("k").get<int>();
  p.h = j.at("h").get<int>();
  p.lambda = j.at("lambda").get<double>();
  p.vector = complex_vector_from_json(j.at("vector"));
  p.residual = j.at("residual").get<double>();
  return p;
}

inline json to_json(const spectral::Spectrum& s) {
  json a = json::array();
  for (const auto& p : s) a.push_back(to_json(p));
  return a;
}

inline json to_json(const Coloring& c) {
  json a = json::array();
  for (auto x : c) a.push_back(x == Color::white ? "white" : "black");
  return a;
}

inline json to_json(const RootSystemData& d) {
  json edges = json::array();
  for (auto [a, b] : d.edges) edges.push_back({a + 1, b + 1});
  return {{"system", d.id.name()},   {"rank", d.rank},           {"cartan", to_json(d.cartan)},
          {"edges", edges},          {"h", d.h},                 {"exponents", d.exponents},
          {"coloring", to_json(d.coloring)}};
}

/// "p,epsilon" header then one row per level.
inline void write_csv(std::ostream& os, const ising::MomentumSpectrum& s) {
  os << "p,epsilon\n";
  os.precision(17);
  for (const auto& lv : s.levels) os << lv.p << ',' << lv.epsilon << '\n';
}

inline json to_json(const ising::BandFit& f) {
  json pts = json::array();
  for (auto [p, e] : f.points) pts.push_back({p, e});
  return {{"band", f.band}, {"mass", f.mass},  {"mass_sq", f.mass_sq},
          {"stiffness", f.stiffness}, {"rms", f.rms}, {"points", pts}};
}

}  // namespace cartan::io
