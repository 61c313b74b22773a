#include "genocchi/sequences.hpp"

#include <stdexcept>

namespace genocchi {

namespace {
const BigInt kZero{0};
}

SeidelTriangle::SeidelTriangle(int max_i) {
  if (max_i < 0) throw std::invalid_argument("seidel_triangle: negative row count");
  rows_.reserve(max_i);
  for (int i = 1; i <= max_i; ++i) {
    // nonzero entries sit at j <= ceil(i/2)
    rows_.emplace_back((i + 1) / 2);
    auto& cur = rows_.back();
    if (i == 1) {
      cur[0] = 1;
    } else if (i % 2 == 1) {
      // g(2p-1, j) = g(2p-1, j-1) + g(2p-2, j), filled left to right
      for (int j = 1; j <= (i + 1) / 2; ++j) cur[j - 1] = at(i, j - 1) + at(i - 1, j);
    } else {
      // g(2p, j) = g(2p-1, j) + g(2p, j+1), filled right to left
      for (int j = i / 2; j >= 1; --j) cur[j - 1] = at(i - 1, j) + at(i, j + 1);
    }
  }
}

const BigInt& SeidelTriangle::at(int i, int j) const {
  if (i < 1 || i > rows() || j < 1 || j > (i + 1) / 2) return kZero;
  return rows_[i - 1][j - 1];
}

SeidelTriangle seidel_triangle(int max_i) { return SeidelTriangle(max_i); }

BigInt genocchi(int n) {
  if (n < 1) throw std::invalid_argument("genocchi: n must be >= 1");
  return SeidelTriangle(2 * n - 1).at(2 * n - 1, n);
}

BigInt median_genocchi(int n) {
  if (n < 0) throw std::invalid_argument("median_genocchi: n must be >= 0");
  return SeidelTriangle(2 * n + 2).at(2 * n + 2, 1);
}

BigInt normalized_h(int n) {
  BigInt h = median_genocchi(n);
  BigInt pow2 = BigInt{1} << n;
  if (h % pow2 != 0)
    throw IntegrityError("normalized_h: 2^" + std::to_string(n) + " does not divide H_" +
                         std::to_string(2 * n + 1));
  return h / pow2;
}

} // namespace genocchi
