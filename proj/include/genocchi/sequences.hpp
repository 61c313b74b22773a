#pragma once

#include "genocchi/common.hpp"

#include <vector>

namespace genocchi {

/// Seidel triangle g(i, j), rows 1..max_i, stored row-major.
///
/// Row i holds ceil(i/2) entries. Reads outside 1 <= j <= ceil(i/2) return 0,
/// which is the boundary convention both recurrences rely on.
class SeidelTriangle {
public:
  SeidelTriangle() = default;
  explicit SeidelTriangle(int max_i);

  int rows() const { return static_cast<int>(rows_.size()); }
  const BigInt& at(int i, int j) const;
  const std::vector<BigInt>& row(int i) const { return rows_.at(i - 1); }

private:
  std::vector<std::vector<BigInt>> rows_;
};

SeidelTriangle seidel_triangle(int max_i);

/// G_{2n} = g(2n-1, n), n >= 1.
BigInt genocchi(int n);
/// H_{2n+1} = g(2n+2, 1), n >= 0.
BigInt median_genocchi(int n);
/// h_n = H_{2n+1} / 2^n. Throws IntegrityError if the division is inexact.
BigInt normalized_h(int n);

} // namespace genocchi
