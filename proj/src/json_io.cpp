#include "bruhat/json_io.hpp"

namespace bruhat {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be a JSON array");
  return j;
}

std::size_t count(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw FormatError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::vector<Vector> vectors_from_json(const Json& j, std::size_t length, const char* what) {
  std::vector<Vector> out;
  for (const auto& v : array(j, what)) out.push_back(vector_from_json(v, length));
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  throw FormatError("exact values must be fraction strings or integers, got " + j.dump());
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Vector vector_from_json(const Json& j, std::optional<std::size_t> length) {
  Vector v;
  for (const auto& x : array(j, "vector")) v.push_back(rational_from_json(x));
  if (length && v.size() != *length) {
    throw FormatError("vector of length " + std::to_string(v.size()) + ", expected " + std::to_string(*length));
  }
  return v;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

Json rationals_to_json(const std::vector<Rational>& v) { return vector_to_json(v); }

Matrix matrix_from_json(const Json& j) {
  std::vector<Vector> rows;
  for (const auto& r : array(j, "matrix")) rows.push_back(vector_from_json(r, rows.empty() ? std::nullopt : std::optional(rows.front().size())));
  if (rows.empty()) throw FormatError("empty matrix");
  return Matrix::from_rows(rows);
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (const auto& r : m.row_vectors()) out.push_back(vector_to_json(r));
  return out;
}

Filtration filtration_from_json(const Json& j) {
  const std::size_t n = count(field(j, "dim"), "dim");
  std::vector<Step> steps;
  for (const auto& s : array(field(j, "steps"), "steps")) {
    steps.push_back({rational_from_json(field(s, "weight")),
                     Subspace::span(vectors_from_json(field(s, "basis"), n, "basis"), n)});
  }
  return Filtration(n, std::move(steps));
}

Json filtration_to_json(const Filtration& f) {
  Json steps = Json::array();
  for (const auto& s : f.steps()) {
    Json basis = Json::array();
    for (const auto& v : s.space.basis()) basis.push_back(vector_to_json(v));
    steps.push_back({{"weight", rational_to_json(s.weight)}, {"basis", std::move(basis)}});
  }
  return {{"dim", f.dim()}, {"steps", std::move(steps)}};
}

Json residue_filtration_to_json(const ResidueFiltration& f) {
  Json steps = Json::array();
  for (const auto& s : f.steps()) {
    Json basis = Json::array();
    for (const auto& v : s.space.basis()) {
      Json row = Json::array();
      for (const auto& x : v) row.push_back(x.value());
      basis.push_back(std::move(row));
    }
    steps.push_back({{"weight", rational_to_json(s.weight)}, {"basis", std::move(basis)}});
  }
  return {{"dim", f.dim()}, {"p", f.field().characteristic()}, {"steps", std::move(steps)}};
}

SplitNorm norm_from_json(const Json& j, std::optional<unsigned long> default_p) {
  if (!j.is_object()) throw FormatError("a norm must be a JSON object");
  unsigned long p = 0;
  if (j.contains("p")) {
    p = static_cast<unsigned long>(count(j["p"], "p"));
  } else if (default_p) {
    p = *default_p;
  } else {
    throw FormatError("missing field \"p\"");
  }
  const auto& weights_json = array(field(j, "weights"), "weights");
  std::vector<Rational> weights;
  for (const auto& w : weights_json) weights.push_back(rational_from_json(w));
  const auto columns = vectors_from_json(field(j, "basis"), weights.size(), "basis");
  if (columns.size() != weights.size()) throw FormatError("norm needs one weight per basis vector");
  if (columns.empty()) throw FormatError("norm on the zero space");
  return SplitNorm(p, Matrix::from_columns(columns), std::move(weights));
}

Json norm_to_json(const SplitNorm& a) {
  Json basis = Json::array();
  for (const auto& c : a.basis().columns()) basis.push_back(vector_to_json(c));
  return {{"p", a.p()}, {"basis", std::move(basis)}, {"weights", rationals_to_json(a.weights())}};
}

Frame frame_from_json(const Json& j) {
  const auto& lines = array(field(j, "lines"), "lines");
  return Frame::from_vectors(vectors_from_json(lines, lines.size(), "lines"));
}

Json frame_to_json(const Frame& f) {
  Json lines = Json::array();
  for (const auto& l : f.lines()) lines.push_back(vector_to_json(l.basis()[0]));
  return {{"lines", std::move(lines)}};
}

Flag flag_from_json(const Json& j) {
  const auto& chain = array(field(j, "chain"), "chain");
  std::size_t n = 0;
  if (j.contains("dim")) {
    n = count(j["dim"], "dim");
  } else if (!chain.empty() && chain.front().is_array() && !chain.front().empty() && chain.front().front().is_array()) {
    n = chain.front().front().size();
  } else {
    throw FormatError("flag: cannot infer the ambient dimension; give \"dim\"");
  }
  std::vector<Subspace> spaces;
  for (const auto& basis : chain) spaces.push_back(Subspace::span(vectors_from_json(basis, n, "chain basis"), n));
  return Flag(n, std::move(spaces));
}

Json flag_to_json(const Flag& f) {
  Json chain = Json::array();
  for (const auto& s : f.chain()) {
    Json basis = Json::array();
    for (const auto& v : s.basis()) basis.push_back(vector_to_json(v));
    chain.push_back(std::move(basis));
  }
  return {{"dim", f.ambient_dim()}, {"chain", std::move(chain)}};
}

EuclideanNorm euclidean_from_json(const Json& j) {
  const auto& rows = array(field(j, "gram"), "gram");
  const auto n = static_cast<Eigen::Index>(rows.size());
  RealMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = array(rows[static_cast<std::size_t>(i)], "gram row");
    if (static_cast<Eigen::Index>(row.size()) != n) throw FormatError("gram matrix must be square");
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto& x = row[static_cast<std::size_t>(k)];
      if (!x.is_number()) throw FormatError("gram entries must be numbers");
      g(i, k) = x.get<double>();
    }
  }
  return EuclideanNorm(std::move(g));
}

Json euclidean_to_json(const EuclideanNorm& a) {
  Json rows = Json::array();
  const auto& g = a.gram();
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < g.cols(); ++k) row.push_back(g(i, k));
    rows.push_back(std::move(row));
  }
  return {{"gram", std::move(rows)}};
}

}  // namespace bruhat
