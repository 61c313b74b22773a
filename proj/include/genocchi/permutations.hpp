#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace genocchi {

/// A permutation of [m] in one-line notation. perm(k) is sigma(k), 1-based.
class Perm {
public:
  Perm() = default;
  /// Throws std::invalid_argument unless images is a permutation of 1..m.
  explicit Perm(std::vector<int> images);
  static Perm identity(int m);
  /// "41726583" (single digits) or "4,1,7,2,6,5,8,3".
  static Perm parse(std::string_view text);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[k - 1]; }
  std::span<const int> images() const { return images_; }

  Perm inverse() const;
  /// Digit string when size() <= 9, comma separated otherwise.
  std::string to_string() const;

  auto operator<=>(const Perm&) const = default;

private:
  struct Unchecked {};
  Perm(std::vector<int> images, Unchecked) : images_(std::move(images)) {}
  friend class DumontSearch;
  std::vector<int> images_;
};

/// Number of pairs i < j with w_i > w_j.
long long inv_word(std::span<const int> w);

bool is_dumont(const Perm& s);
/// Throws std::invalid_argument when s is not Dumont.
bool is_normalized_dumont(const Perm& s);
bool is_normalized_genocchi(const Perm& s);

/// n^2 - sum sigma(2i) - inv(odd-position word) - inv(even-position word).
long long st(const Perm& s);

enum class DumontClass { All, NormalizedDumont, NormalizedGenocchi };

/// Dumont permutations of order 2n (optionally restricted), in
/// lexicographic order of their one-line notation.
std::vector<Perm> enumerate_dumont(int n, DumontClass cls = DumontClass::All);

using PermVisitor = std::function<void(const Perm&)>;

/// Streams the same sequence as enumerate_dumont without materialising it.
void for_each_dumont(int n, DumontClass cls, const PermVisitor& visit);

/// All admissible length-`depth` prefixes of Dumont permutations of order 2n,
/// in lexicographic order. Completing each prefix with
/// for_each_dumont_from yields a partition of the full enumeration.
std::vector<std::vector<int>> dumont_prefixes(int n, int depth);
void for_each_dumont_from(int n, std::span<const int> prefix, DumontClass cls, const PermVisitor& visit);

enum class Side { Left, Right };

/// (a b) o s when side == Left (swaps the values a and b),
/// s o (a b) when side == Right (swaps the entries at positions a and b).
Perm transposition_compose(const Perm& s, int a, int b, Side side);

} // namespace genocchi
