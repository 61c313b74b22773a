#include "genocchi/permutations.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>

namespace genocchi {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size() + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v])
      throw std::invalid_argument("Perm: not a permutation of 1.." + std::to_string(size()));
    seen[v] = 1;
  }
}

Perm Perm::identity(int m) {
  std::vector<int> v(m);
  for (int k = 0; k < m; ++k) v[k] = k + 1;
  return Perm(std::move(v), Unchecked{});
}

Perm Perm::parse(std::string_view text) {
  std::vector<int> v;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("Perm::parse: unexpected character '" + std::string(1, c) + "'");
      v.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string token(text.substr(pos, next - pos));
      std::erase_if(token, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
      if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("Perm::parse: bad entry '" + token + "'");
      v.push_back(std::stoi(token));
      pos = next + 1;
    }
  }
  if (v.empty()) throw std::invalid_argument("Perm::parse: empty input");
  return Perm(std::move(v));
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int k = 1; k <= size(); ++k) inv[(*this)(k) - 1] = k;
  return Perm(std::move(inv), Unchecked{});
}

std::string Perm::to_string() const {
  std::string out;
  for (int k = 0; k < size(); ++k) {
    if (size() > 9 && k > 0) out += ',';
    out += std::to_string(images_[k]);
  }
  return out;
}

long long inv_word(std::span<const int> w) {
  long long count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++count;
  return count;
}

namespace {

void require_even(const Perm& s, const char* who) {
  if (s.size() % 2 != 0) throw std::invalid_argument(std::string(who) + ": permutation length must be even");
}

// Shared parity condition: for each j, sigma^{-1}(2j) and sigma^{-1}(2j+1)
// have the same parity iff (sigma^{-1}(2j) > sigma^{-1}(2j+1)) == greater.
bool parity_condition(const Perm& s, bool greater) {
  const Perm inv = s.inverse();
  const int n = s.size() / 2;
  for (int j = 1; j <= n - 1; ++j) {
    const int a = inv(2 * j), b = inv(2 * j + 1);
    const bool same_parity = (a % 2) == (b % 2);
    if (same_parity != ((a > b) == greater)) return false;
  }
  return true;
}

} // namespace

bool is_dumont(const Perm& s) {
  require_even(s, "is_dumont");
  for (int i = 1; 2 * i <= s.size(); ++i)
    if (!(s(2 * i) < 2 * i && s(2 * i - 1) > 2 * i - 1)) return false;
  return true;
}

bool is_normalized_dumont(const Perm& s) {
  if (!is_dumont(s)) throw std::invalid_argument("is_normalized_dumont: " + s.to_string() + " is not Dumont");
  return parity_condition(s, true);
}

bool is_normalized_genocchi(const Perm& s) {
  if (!is_dumont(s)) throw std::invalid_argument("is_normalized_genocchi: " + s.to_string() + " is not Dumont");
  return parity_condition(s, false);
}

long long st(const Perm& s) {
  require_even(s, "st");
  const int n = s.size() / 2;
  std::vector<int> odd, even;
  odd.reserve(n);
  even.reserve(n);
  long long even_sum = 0;
  for (int i = 1; i <= n; ++i) {
    odd.push_back(s(2 * i - 1));
    even.push_back(s(2 * i));
    even_sum += s(2 * i);
  }
  return static_cast<long long>(n) * n - even_sum - inv_word(odd) - inv_word(even);
}

// Backtracking over positions: an even position p takes a value < p, an odd
// position p a value > p. Values are tried in increasing order, which gives
// lexicographic output.
class DumontSearch {
public:
  DumontSearch(int n, DumontClass cls, const PermVisitor& visit)
      : m_(2 * n), cls_(cls), visit_(visit), images_(2 * n) {
    if (m_ > 62) throw std::invalid_argument("for_each_dumont: n too large");
  }

  void run(std::span<const int> prefix) {
    std::uint64_t used = 0;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      const int pos = static_cast<int>(k) + 1, v = prefix[k];
      if (!admissible(pos, v) || (used >> v & 1)) return;
      used |= std::uint64_t{1} << v;
      images_[k] = v;
    }
    extend(static_cast<int>(prefix.size()) + 1, used);
  }

  static bool admissible(int pos, int v) { return pos % 2 == 0 ? v < pos : v > pos; }

private:
  void extend(int pos, std::uint64_t used) {
    if (pos > m_) {
      Perm p(images_, Perm::Unchecked{});
      if (cls_ == DumontClass::All ||
          (cls_ == DumontClass::NormalizedDumont ? parity_condition(p, true) : parity_condition(p, false)))
        visit_(p);
      return;
    }
    const int lo = pos % 2 == 0 ? 1 : pos + 1;
    const int hi = pos % 2 == 0 ? pos - 1 : m_;
    for (int v = lo; v <= hi; ++v) {
      if (used >> v & 1) continue;
      images_[pos - 1] = v;
      extend(pos + 1, used | std::uint64_t{1} << v);
    }
  }

  int m_;
  DumontClass cls_;
  const PermVisitor& visit_;
  std::vector<int> images_;
};

void for_each_dumont(int n, DumontClass cls, const PermVisitor& visit) {
  if (n < 1) throw std::invalid_argument("for_each_dumont: n must be >= 1");
  DumontSearch(n, cls, visit).run({});
}

void for_each_dumont_from(int n, std::span<const int> prefix, DumontClass cls, const PermVisitor& visit) {
  if (n < 1) throw std::invalid_argument("for_each_dumont_from: n must be >= 1");
  if (static_cast<int>(prefix.size()) > 2 * n) throw std::invalid_argument("for_each_dumont_from: prefix too long");
  DumontSearch(n, cls, visit).run(prefix);
}

std::vector<std::vector<int>> dumont_prefixes(int n, int depth) {
  if (n < 1) throw std::invalid_argument("dumont_prefixes: n must be >= 1");
  depth = std::clamp(depth, 0, 2 * n);
  std::vector<std::vector<int>> out{{}};
  for (int pos = 1; pos <= depth; ++pos) {
    std::vector<std::vector<int>> next;
    for (const auto& pre : out)
      for (int v = 1; v <= 2 * n; ++v)
        if (DumontSearch::admissible(pos, v) && std::find(pre.begin(), pre.end(), v) == pre.end()) {
          next.push_back(pre);
          next.back().push_back(v);
        }
    out = std::move(next);
  }
  return out;
}

std::vector<Perm> enumerate_dumont(int n, DumontClass cls) {
  std::vector<Perm> out;
  for_each_dumont(n, cls, [&](const Perm& p) { out.push_back(p); });
  return out;
}

Perm transposition_compose(const Perm& s, int a, int b, Side side) {
  if (a == b || a < 1 || b < 1 || a > s.size() || b > s.size())
    throw std::out_of_range("transposition_compose: need distinct a, b in [1, " + std::to_string(s.size()) + "]");
  std::vector<int> v(s.images().begin(), s.images().end());
  if (side == Side::Right) {
    std::swap(v[a - 1], v[b - 1]);
  } else {
    for (int& x : v) {
      if (x == a) x = b;
      else if (x == b) x = a;
    }
  }
  return Perm(std::move(v));
}

} // namespace genocchi
