#pragma once

// JSON encodings shared by the CLI and tests. Every top-level document
// carries "schema": 1. Integers are JSON numbers when they fit in 64 bits
// and decimal strings otherwise.

#include "genocchi/dellac.hpp"
#include "genocchi/dyck_histories.hpp"
#include "genocchi/permutations.hpp"
#include "genocchi/qpoly.hpp"
#include "genocchi/sequences.hpp"

#include <json.hpp>

namespace genocchi {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::json& j);

/// Coefficient array, lowest degree first.
nlohmann::json to_json(const QPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);

/// {"rows": R, "cols": C, "coeffs": [[...], ...]} with row a = x^a,
/// column b = q^b, zero padded to C columns.
nlohmann::json to_json(const XQPoly& p);
XQPoly xqpoly_from_json(const nlohmann::json& j);

/// {"rows": [[g(1,1)], [g(2,1), g(2,2)], ...]}
nlohmann::json to_json(const SeidelTriangle& t);

/// {"path": "UUDD", "xi": [[a,b], ...], "weight_exponent": e, "weight": "q^e"}
nlohmann::json to_json(const DellacHistory& h);
DellacHistory history_from_json(const nlohmann::json& j);
/// Parses a xi list given as JSON text, e.g. "[[0,0],[1,0]]".
std::vector<XiPair> parse_xi(std::string_view text);

/// "q^e" / "q" / "1".
std::string monomial_string(long long exponent);

} // namespace genocchi
