#include "genocchi/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace genocchi {

namespace {
const BigInt kZero{0};
const QPoly kZeroPoly{};
} // namespace

// ---- QPoly ----------------------------------------------------------------

QPoly::QPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(BigInt c) { return QPoly(std::vector<BigInt>{std::move(c)}); }

QPoly QPoly::monomial(int degree, BigInt c) {
  if (degree < 0) throw std::invalid_argument("QPoly::monomial: negative degree");
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[k];
}

BigInt QPoly::eval(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPoly QPoly::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(k, BigInt{0});
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(v));
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(v));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = boost::multiprecision::abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << "q";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

std::optional<QPolyDivision> divmod(const QPoly& p, const QPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("divmod: division by the zero polynomial");
  std::vector<BigInt> rem = p.coeffs();
  const int dd = d.degree();
  const BigInt& lead = d.coeff(dd);
  const int qdeg = p.degree() - dd;
  std::vector<BigInt> quot(std::max(qdeg + 1, 0));
  for (int k = qdeg; k >= 0; --k) {
    const BigInt& top = rem[k + dd];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    BigInt c = top / lead;
    for (int i = 0; i <= dd; ++i) rem[k + i] -= c * d.coeff(i);
    quot[k] = std::move(c);
  }
  return QPolyDivision{QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly exact_div(const QPoly& p, const QPoly& d) {
  auto r = divmod(p, d);
  if (!r || !r->remainder.is_zero())
    throw IntegrityError("exact_div: (" + p.to_string() + ") / (" + d.to_string() + ") is not exact");
  return std::move(r->quotient);
}

bool divides(const QPoly& d, const QPoly& p) {
  auto r = divmod(p, d);
  return r && r->remainder.is_zero();
}

QPoly pow(const QPoly& p, int e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  QPoly r = QPoly::constant(1);
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

// ---- XQPoly ---------------------------------------------------------------

XQPoly::XQPoly(std::vector<QPoly> rows) : rows_(std::move(rows)) { trim(); }

XQPoly XQPoly::constant(QPoly c) { return XQPoly(std::vector<QPoly>{std::move(c)}); }

XQPoly XQPoly::x() { return XQPoly(std::vector<QPoly>{QPoly{}, QPoly{1}}); }

void XQPoly::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

int XQPoly::q_degree() const {
  int d = -1;
  for (const auto& r : rows_) d = std::max(d, r.degree());
  return d;
}

const QPoly& XQPoly::x_coeff(int a) const {
  if (a < 0 || a >= static_cast<int>(rows_.size())) return kZeroPoly;
  return rows_[a];
}

QPoly XQPoly::eval_x(const QPoly& x) const {
  QPoly acc;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

XQPoly XQPoly::substitute_x(const XQPoly& s) const {
  XQPoly acc;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * s + XQPoly::constant(*it);
  return acc;
}

XQPoly XQPoly::times_x() const {
  if (is_zero()) return {};
  std::vector<QPoly> r;
  r.reserve(rows_.size() + 1);
  r.emplace_back();
  r.insert(r.end(), rows_.begin(), rows_.end());
  return XQPoly(std::move(r));
}

XQPoly& XQPoly::operator+=(const XQPoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t a = 0; a < o.rows_.size(); ++a) rows_[a] += o.rows_[a];
  trim();
  return *this;
}

XQPoly& XQPoly::operator-=(const XQPoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t a = 0; a < o.rows_.size(); ++a) rows_[a] -= o.rows_[a];
  trim();
  return *this;
}

XQPoly operator*(const XQPoly& a, const XQPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<QPoly> r(a.rows_.size() + b.rows_.size() - 1);
  for (std::size_t i = 0; i < a.rows_.size(); ++i)
    for (std::size_t j = 0; j < b.rows_.size(); ++j) r[i + j] += a.rows_[i] * b.rows_[j];
  return XQPoly(std::move(r));
}

std::string XQPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int a = 0; a <= x_degree(); ++a) {
    if (rows_[a].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << rows_[a].to_string() << ")";
    if (a >= 1) os << "x";
    if (a >= 2) os << "^" << a;
  }
  return os.str();
}

// ---- q-Gandhi machinery ---------------------------------------------------

XQPoly delta_q(const XQPoly& p) {
  // 1 + q x
  const XQPoly one_plus_qx(std::vector<QPoly>{QPoly{1}, QPoly{0, 1}});
  const XQPoly num = p.substitute_x(one_plus_qx) - p;
  if (num.is_zero()) return {};

  // The divisor 1 + (q-1)x has constant term 1 in x, so the quotient can be
  // solved for from the lowest x-degree upward: Q_a = N_a - (q-1) Q_{a-1}.
  const QPoly q_minus_one{-1, 1};
  const int deg = num.x_degree();
  std::vector<QPoly> quot(std::max(deg, 0));
  for (int a = 0; a < deg; ++a) {
    quot[a] = num.x_coeff(a);
    if (a > 0) quot[a] -= q_minus_one * quot[a - 1];
  }
  XQPoly result(std::move(quot));
  const XQPoly divisor(std::vector<QPoly>{QPoly{1}, q_minus_one});
  if (result * divisor != num)
    throw IntegrityError("delta_q: division by 1 + qx - x left a remainder");
  return result;
}

XQPoly gandhi(int n) {
  if (n < 1) throw std::invalid_argument("gandhi: n must be >= 1");
  const XQPoly one_plus_qx(std::vector<QPoly>{QPoly{1}, QPoly{0, 1}});
  XQPoly c = XQPoly::constant(QPoly{1});
  for (int k = 1; k < n; ++k) c = one_plus_qx * delta_q(c.times_x());
  return c;
}

QPoly cbar(int n) {
  if (n < 1) throw std::invalid_argument("cbar: n must be >= 1");
  QPoly at_one = gandhi(n).eval_x(QPoly{1});
  return exact_div(at_one, pow(QPoly{1, 1}, n - 1));
}

QPoly lambda_seq(int k) {
  if (k < 1) throw std::invalid_argument("lambda_seq: k must be >= 1");
  const int p = (k + 1) / 2;
  // (1 - q^{p+1})(1 - q^p) / ((1 - q^2)(1 - q))
  QPoly num = (QPoly::constant(1) - QPoly::monomial(p + 1)) * (QPoly::constant(1) - QPoly::monomial(p));
  QPoly den = QPoly{1, 0, -1} * QPoly{1, -1};
  QPoly odd = exact_div(num, den);
  return k % 2 == 1 ? odd : odd.shifted(1);
}

std::vector<QPoly> lambda_prefix(int count) {
  std::vector<QPoly> out;
  out.reserve(std::max(count, 0));
  for (int k = 1; k <= count; ++k) out.push_back(lambda_seq(k));
  return out;
}

namespace {

using Series = std::vector<QPoly>; // truncated power series in t

// 1 / s for a series with constant term 1.
Series series_inverse_unit(const Series& s, int len) {
  Series g(len);
  if (len == 0) return g;
  g[0] = QPoly{1};
  for (int m = 1; m < len; ++m) {
    QPoly acc;
    for (int i = 1; i <= m && i < static_cast<int>(s.size()); ++i) acc += s[i] * g[m - i];
    g[m] = -acc;
  }
  return g;
}

} // namespace

std::vector<QPoly> cfrac_coeffs(std::span<const QPoly> weights, int n_terms) {
  if (n_terms < 0) throw std::invalid_argument("cfrac_coeffs: negative term count");
  if (n_terms == 0) return {};
  const int depth = n_terms - 1;
  if (static_cast<int>(weights.size()) < depth)
    throw std::invalid_argument("cfrac_coeffs: need " + std::to_string(depth) + " weights, got " +
                                std::to_string(weights.size()));
  Series f(n_terms);
  f[0] = QPoly{1};
  for (int k = depth; k >= 1; --k) {
    // f <- 1 / (1 - w_k t f)
    Series denom(n_terms);
    denom[0] = QPoly{1};
    for (int m = 1; m < n_terms; ++m) denom[m] = -(weights[k - 1] * f[m - 1]);
    f = series_inverse_unit(denom, n_terms);
  }
  return f;
}

} // namespace genocchi
