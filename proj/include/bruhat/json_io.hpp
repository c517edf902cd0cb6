#pragma once

// JSON forms of the library objects. Exact values are written as fraction
// strings ("3", "-1/2"); on input, JSON integers are accepted as well.
// Structural problems raise FormatError; well-formed input describing an
// invalid object (say, a non-decreasing chain) raises DomainError.

#include <optional>

#include <json.hpp>

#include "bruhat/filtration.hpp"
#include "bruhat/symspace.hpp"
#include "bruhat/tits.hpp"
#include "bruhat/valnorm.hpp"

namespace bruhat {

using Json = nlohmann::ordered_json;

/// Parses JSON text; FormatError on syntax errors.
Json parse_json(const std::string& text);

Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& q);
Vector vector_from_json(const Json& j, std::optional<std::size_t> length = std::nullopt);
Json vector_to_json(const Vector& v);
Json rationals_to_json(const std::vector<Rational>& v);
/// Matrix given as a list of rows.
Matrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);

/// {"dim": n, "steps": [{"weight": "w", "basis": [[...], ...]}, ...]}
Filtration filtration_from_json(const Json& j);
Json filtration_to_json(const Filtration& f);
/// Same layout plus "p"; entries are residues 0 .. p-1.
Json residue_filtration_to_json(const ResidueFiltration& f);

/// {"p": 2, "basis": [b_1, ..., b_n], "weights": [...]}; the basis is the list
/// of adapted basis vectors. A missing "p" falls back to `default_p`.
SplitNorm norm_from_json(const Json& j, std::optional<unsigned long> default_p = std::nullopt);
Json norm_to_json(const SplitNorm& a);

/// {"lines": [v_1, ..., v_n]}
Frame frame_from_json(const Json& j);
Json frame_to_json(const Frame& f);
/// {"dim": n, "chain": [basis_1, ..., basis_k]}; "dim" may be omitted when
/// the chain is nonempty.
Flag flag_from_json(const Json& j);
Json flag_to_json(const Flag& f);

/// {"gram": [[...], ...]} with decimal floats.
EuclideanNorm euclidean_from_json(const Json& j);
Json euclidean_to_json(const EuclideanNorm& a);

}  // namespace bruhat
