#include "qlie/io.hpp"

#include <json.hpp>

namespace qlie {

namespace {

using json = nlohmann::ordered_json;

json parse_json(std::string_view bytes) {
  try {
    return json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    fail(errc::parse_error, e.what());
  }
}

Scalar scalar_field(const json& j, const std::string& where) {
  if (!j.is_string()) fail(errc::parse_error, where + ": scalars must be strings");
  return parse_scalar(j.get<std::string>());
}

std::size_t count_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    fail(errc::parse_error, std::string("missing or non-integral \"") + key + "\"");
  return j[key].get<std::size_t>();
}

Matrix grid_field(const json& j, const char* key, std::size_t rows, std::size_t cols) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != rows)
    fail(errc::parse_error, std::string("\"") + key + "\" must be an array of " +
                                std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j[key][i];
    if (!row.is_array() || row.size() != cols)
      fail(errc::parse_error, std::string("\"") + key + "\" row " + std::to_string(i) +
                                  " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(i, c) = scalar_field(row[c], std::string(key) + "[" + std::to_string(i) + "]");
  }
  return m;
}

json scalar_grid(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace

QuadraticLieAlgebra parse_algebra(std::string_view bytes) {
  json j = parse_json(bytes);
  if (!j.is_object()) fail(errc::parse_error, "top level must be an object");

  std::size_t dim = count_field(j, "dim");
  if (dim == 0) fail(errc::parse_error, "\"dim\" must be positive");

  std::vector<std::string> labels;
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || j["basis"].size() != dim)
      fail(errc::parse_error, "\"basis\" must list one name per basis vector");
    for (const auto& name : j["basis"]) {
      if (!name.is_string()) fail(errc::parse_error, "\"basis\" entries must be strings");
      labels.push_back(name.get<std::string>());
    }
  }

  Matrix gram = grid_field(j, "gram", dim, dim);

  std::vector<BracketEntry> entries;
  if (!j.contains("brackets") || !j["brackets"].is_array())
    fail(errc::parse_error, "missing \"brackets\" array");
  for (const auto& e : j["brackets"]) {
    if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("v"))
      fail(errc::parse_error, "bracket entries need keys i, j, v");
    if (!e["i"].is_number_unsigned() || !e["j"].is_number_unsigned())
      fail(errc::index_error, "bracket indices must be non-negative integers");
    std::size_t bi = e["i"].get<std::size_t>();
    std::size_t bj = e["j"].get<std::size_t>();
    if (bi >= bj) fail(errc::index_error, "bracket entries require i < j");
    if (bj >= dim) fail(errc::index_error, "bracket index out of range");
    if (!e["v"].is_array() || e["v"].size() != dim)
      fail(errc::index_error, "bracket coordinate list must have dim entries");
    Vec v(dim);
    for (std::size_t k = 0; k < dim; ++k) v[k] = scalar_field(e["v"][k], "bracket v");
    entries.push_back({bi, bj, std::move(v)});
  }

  try {
    return QuadraticLieAlgebra(dim, entries, std::move(gram), std::move(labels));
  } catch (const error& e) {
    if (e.code() == errc::index_error) throw;
    fail(errc::parse_error, e.what());
  }
}

std::string write_algebra(const QuadraticLieAlgebra& g) {
  json j = json::object();
  j["dim"] = g.dim();
  if (!g.labels().empty()) j["basis"] = g.labels();
  j["gram"] = scalar_grid(g.gram());

  json brackets = json::array();
  for (const auto& e : g.entries()) { // already sorted by (i, j), zeros dropped
    json entry = json::object();
    entry["i"] = e.i;
    entry["j"] = e.j;
    json v = json::array();
    for (const auto& x : e.v) v.push_back(to_string(x));
    entry["v"] = std::move(v);
    brackets.push_back(std::move(entry));
  }
  j["brackets"] = std::move(brackets);
  return j.dump(2) + "\n";
}

Matrix parse_matrix(std::string_view bytes) {
  json j = parse_json(bytes);
  if (!j.is_object()) fail(errc::parse_error, "top level must be an object");
  std::size_t dim = count_field(j, "dim");
  return grid_field(j, "entries", dim, dim);
}

std::string write_matrix(const Matrix& m) {
  json j = json::object();
  j["dim"] = m.rows();
  j["entries"] = scalar_grid(m);
  return j.dump(2) + "\n";
}

Matrix random_gram_skew(const QuadraticLieAlgebra& g, SplitMix64& rng) {
  std::size_t n = g.dim();
  // antisymmetric K with small rational entries; S = gram^-1 K is then skew
  // for the form
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar num = Scalar(static_cast<int>(rng.below(5)) - 2);
      Scalar den = Scalar(static_cast<int>(rng.below(3)) + 1);
      k.at(i, j) = num / den;
      k.at(j, i) = -k.at(i, j);
    }
  return inverse(g.gram()) * k;
}

LinearMap cayley_isometry(const Matrix& gram, const Matrix& s) {
  Matrix skew = gram * s;
  if (skew != skew.transpose().scaled(Scalar(-1)))
    fail(errc::bad_parameter, "cayley input is not skew for the form");
  Matrix id = Matrix::identity(gram.rows());
  Matrix i_minus_s = id - s;
  if (determinant(i_minus_s).is_zero()) fail(errc::singular_map, "I - S is singular");
  return inverse(i_minus_s) * (id + s);
}

LinearMap random_isometry(const QuadraticLieAlgebra& g, std::uint64_t seed) {
  if (determinant(g.gram()).is_zero())
    fail(errc::degenerate_form, "isometry generation needs a non-degenerate form");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Matrix s = random_gram_skew(g, rng);
    try {
      return cayley_isometry(g.gram(), s);
    } catch (const error& e) {
      if (e.code() != errc::singular_map) throw;
    }
  }
  fail(errc::resample_exhausted, "no invertible Cayley sample in 16 attempts");
}

} // namespace qlie
