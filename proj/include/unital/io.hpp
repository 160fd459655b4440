#pragma once

// JSON encoding of matrices and channels. A matrix is an array of rows; an
// entry is a number or a pair [re, im]. A channel is {"kraus": [matrix, ...]}
// and a Choi state is {"d": n, "rho": matrix}.

#include <fstream>
#include <string>

#include "json.hpp"

#include "unital/channel.hpp"

namespace unital::io {

using nlohmann::json;

inline json complex_to_json(Complex z) {
  if (z.imag() == 0.0) return z.real();
  return json::array({z.real(), z.imag()});
}

inline json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Complex complex_from_json(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw FormatError("matrix entry must be a number or [re, im]");
}

inline CMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw FormatError("matrix rows must be non-empty arrays");
  const std::size_t cols = j[0].size();
  CMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw FormatError("matrix row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < cols; ++c)
      m(Eigen::Index(r), Eigen::Index(c)) = complex_from_json(j[r][c]);
  }
  return m;
}

inline json channel_to_json(const KrausChannel& ch) {
  json ks = json::array();
  for (const auto& a : ch.kraus) ks.push_back(matrix_to_json(a));
  return {{"d", ch.d}, {"kraus", ks}};
}

inline KrausChannel channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty())
    throw FormatError("channel must be an object with a non-empty \"kraus\" array");
  std::vector<CMatrix> ks;
  for (const auto& m : j["kraus"]) {
    CMatrix a = matrix_from_json(m);
    if (a.rows() != a.cols()) throw FormatError("Kraus operators must be square");
    ks.push_back(std::move(a));
  }
  for (const auto& a : ks)
    if (a.rows() != ks.front().rows()) throw FormatError("Kraus operators differ in size");
  if (j.contains("d") && j["d"] != ks.front().rows())
    throw FormatError("\"d\" disagrees with the Kraus operator size");
  return make_channel(std::move(ks));
}

inline json choi_to_json(const ChoiState& c) { return {{"d", c.d}, {"rho", matrix_to_json(c.rho)}}; }

inline ChoiState choi_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rho")) throw FormatError("Choi state must be an object with \"rho\"");
  CMatrix rho = matrix_from_json(j["rho"]);
  if (rho.rows() != rho.cols()) throw FormatError("rho must be square");
  const int n = int(rho.rows());
  const int d = int(std::lround(std::sqrt(double(n))));
  if (d * d != n) throw FormatError("rho size is not a perfect square");
  if (j.contains("d") && j["d"] != d) throw FormatError("\"d\" disagrees with the size of rho");
  return {d, std::move(rho)};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace unital::io
