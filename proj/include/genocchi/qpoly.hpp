#pragma once

#include "genocchi/common.hpp"

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace genocchi {

/// Dense univariate polynomial in q with big-integer coefficients.
/// coeff(k) is the coefficient of q^k; trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients.
class QPoly {
public:
  QPoly() = default;
  QPoly(std::initializer_list<long long> coeffs);
  explicit QPoly(std::vector<BigInt> coeffs);
  static QPoly constant(BigInt c);
  static QPoly monomial(int degree, BigInt c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt eval(const BigInt& q) const;
  QPoly shifted(int k) const; // multiply by q^k

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const BigInt& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const BigInt& c) { return a *= c; }
  QPoly operator-() const;

  bool operator==(const QPoly&) const = default;

  std::string to_string() const;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct QPolyDivision {
  QPoly quotient;
  QPoly remainder;
};

/// Long division over the integers. Returns nullopt when some step needs a
/// non-integral quotient coefficient (the divisor's leading coefficient does
/// not divide the running remainder's).
std::optional<QPolyDivision> divmod(const QPoly& p, const QPoly& d);

/// p / d, throwing IntegrityError unless the division is exact.
QPoly exact_div(const QPoly& p, const QPoly& d);

/// True iff d divides p in Z[q]. d must be nonzero.
bool divides(const QPoly& d, const QPoly& p);

QPoly pow(const QPoly& p, int e);

/// Polynomial in x and q: row a is the coefficient of x^a (itself a QPoly).
/// Trailing zero rows are trimmed.
class XQPoly {
public:
  XQPoly() = default;
  explicit XQPoly(std::vector<QPoly> rows);
  static XQPoly constant(QPoly c);
  static XQPoly x();

  bool is_zero() const { return rows_.empty(); }
  int x_degree() const { return static_cast<int>(rows_.size()) - 1; }
  int q_degree() const;
  const QPoly& x_coeff(int a) const;
  const std::vector<QPoly>& rows() const { return rows_; }

  /// Coefficient of x^a q^b.
  const BigInt& coeff(int a, int b) const { return x_coeff(a).coeff(b); }

  QPoly eval_x(const QPoly& x) const;
  /// Compose with x <- s(x, q), via Horner in x.
  XQPoly substitute_x(const XQPoly& s) const;
  XQPoly times_x() const;

  XQPoly& operator+=(const XQPoly& o);
  XQPoly& operator-=(const XQPoly& o);
  friend XQPoly operator+(XQPoly a, const XQPoly& b) { return a += b; }
  friend XQPoly operator-(XQPoly a, const XQPoly& b) { return a -= b; }
  friend XQPoly operator*(const XQPoly& a, const XQPoly& b);

  bool operator==(const XQPoly&) const = default;

  std::string to_string() const;

private:
  void trim();
  std::vector<QPoly> rows_;
};

/// (P(1+qx) - P(x)) / (1 + qx - x). Throws IntegrityError on a remainder.
XQPoly delta_q(const XQPoly& p);

/// q-Gandhi polynomial C_n(x, q): C_1 = 1, C_{n+1} = (1+qx) delta_q(x C_n).
XQPoly gandhi(int n);

/// C_n(1, q) / (1+q)^{n-1}.
QPoly cbar(int n);

/// Continued-fraction weight lambda_k, k >= 1.
QPoly lambda_seq(int k);
/// lambda_1 .. lambda_count.
std::vector<QPoly> lambda_prefix(int count);

/// First n_terms Taylor coefficients (in t) of
///   1 / (1 - w_1 t / (1 - w_2 t / (1 - ...)))
/// truncated at depth n_terms - 1. weights[0] is w_1.
std::vector<QPoly> cfrac_coeffs(std::span<const QPoly> weights, int n_terms);

} // namespace genocchi
