#include "genocchi/dumont_bijection.hpp"

#include <cassert>
#include <stdexcept>

namespace genocchi {

int y_value(int k) { return k % 2 == 1 ? k + 2 : k; }

int y_index(int value) { return value % 2 == 1 ? value - 2 : value; }

Perm phi(const DellacConfig& c) {
  const int n = c.n();
  std::vector<int> word(2 * n + 2);
  word[0] = 2;
  for (int j = 1; j <= n; ++j) {
    const auto [lower, upper] = c.column_rows(j);
    word[2 * j - 1] = label(upper, n);
    word[2 * j] = label(lower, n);
  }
  word[2 * n + 1] = 2 * n + 1;
  Perm sigma = Perm(std::move(word)).inverse();
  assert(is_normalized_dumont(sigma));
  return sigma;
}

Perm tau(const DellacConfig& c) {
  const int n = c.n();
  const Perm sigma = phi(c);
  std::vector<int> t(2 * n);
  for (int i = 1; i <= 2 * n; ++i) t[i - 1] = y_index(sigma(label(i, n)));
  return Perm(std::move(t));
}

Perm tau_from_stats(const DellacConfig& c) {
  const int n = c.n();
  std::vector<int> t(2 * n);
  for (int i = 1; i <= 2 * n; ++i) {
    const RefinedStats s = refined_stats(c, i);
    t[i - 1] = i + s.l - s.r;
  }
  try {
    return Perm(std::move(t));
  } catch (const std::invalid_argument&) {
    throw IntegrityError("tau_from_stats: refined statistics of " + c.to_string() + " do not give a permutation");
  }
}

Perm phi_via_tau(const DellacConfig& c) {
  const int n = c.n();
  const Perm t = tau_from_stats(c);
  std::vector<int> sigma(2 * n + 2);
  sigma[1] = 1;              // sigma(2)
  sigma[2 * n] = 2 * n + 2;  // sigma(2n+1)
  for (int i = 1; i <= 2 * n; ++i) sigma[label(i, n) - 1] = y_value(t(i));
  try {
    return Perm(std::move(sigma));
  } catch (const std::invalid_argument&) {
    throw IntegrityError("phi_via_tau: images for " + c.to_string() + " are not a permutation");
  }
}

DellacConfig varphi(const Perm& sigma) {
  if (sigma.size() < 4 || !is_dumont(sigma))
    throw std::invalid_argument("varphi: " + sigma.to_string() + " is not a Dumont permutation of order >= 4");
  const int n = sigma.size() / 2 - 1;
  const Perm inv = sigma.inverse();
  std::vector<int> col(2 * n);
  for (int j = 1; j <= n; ++j) {
    col[row_of_label(inv(2 * j), n) - 1] = j;
    col[row_of_label(inv(2 * j + 1), n) - 1] = j;
  }
  try {
    return DellacConfig::from_columns(std::move(col));
  } catch (const std::invalid_argument& e) {
    throw IntegrityError(std::string("varphi: ") + e.what());
  }
}

Perm orbit_canonical(const Perm& sigma) { return phi(varphi(sigma)); }

} // namespace genocchi
