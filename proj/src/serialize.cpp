#include "genocchi/serialize.hpp"

#include <limits>
#include <stdexcept>

namespace genocchi {

using nlohmann::json;

json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

json to_json(const QPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

QPoly qpoly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a coefficient array");
  std::vector<BigInt> c;
  for (const auto& e : j) c.push_back(bigint_from_json(e));
  return QPoly(std::move(c));
}

json to_json(const XQPoly& p) {
  const int rows = p.x_degree() + 1;
  const int cols = p.q_degree() + 1;
  json m = json::array();
  for (int a = 0; a < rows; ++a) {
    json row = json::array();
    for (int b = 0; b < cols; ++b) row.push_back(to_json(p.coeff(a, b)));
    m.push_back(std::move(row));
  }
  return json{{"rows", rows}, {"cols", cols}, {"coeffs", std::move(m)}};
}

XQPoly xqpoly_from_json(const json& j) {
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const json& m = j.at("coeffs");
  if (static_cast<int>(m.size()) != rows) throw std::invalid_argument("xqpoly: row count mismatch");
  std::vector<QPoly> out;
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("xqpoly: column count mismatch");
    out.push_back(qpoly_from_json(row));
  }
  return XQPoly(std::move(out));
}

json to_json(const SeidelTriangle& t) {
  json rows = json::array();
  for (int i = 1; i <= t.rows(); ++i) {
    json row = json::array();
    for (const auto& v : t.row(i)) row.push_back(to_json(v));
    rows.push_back(std::move(row));
  }
  return json{{"rows", std::move(rows)}};
}

std::string monomial_string(long long e) {
  if (e == 0) return "1";
  if (e == 1) return "q";
  return "q^" + std::to_string(e);
}

json to_json(const DellacHistory& h) {
  json xi = json::array();
  for (const auto& x : h.xi) xi.push_back({x.n1, x.n2});
  json out{{"path", h.path.to_string()}, {"xi", std::move(xi)}};
  if (validate_history(h)) {
    const long long e = history_weight_exponent(h);
    out["weight_exponent"] = e;
    out["weight"] = monomial_string(e);
  }
  return out;
}

namespace {

std::vector<XiPair> xi_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("xi must be a list of [n1, n2] pairs");
  std::vector<XiPair> xi;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
      throw std::invalid_argument("xi entry must be [n1, n2], got " + pair.dump());
    xi.push_back({pair[0].get<int>(), pair[1].get<int>()});
  }
  return xi;
}

} // namespace

DellacHistory history_from_json(const json& j) {
  return DellacHistory{DyckPath::parse(j.at("path").get<std::string>()), xi_from_json(j.at("xi"))};
}

std::vector<XiPair> parse_xi(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("xi: ") + e.what());
  }
  return xi_from_json(j);
}

} // namespace genocchi
