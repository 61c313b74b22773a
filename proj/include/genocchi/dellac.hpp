#pragma once

#include "genocchi/qpoly.hpp"

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace genocchi {

/// A Dellac configuration of size n: 2n dots in an n x 2n tableau, one per
/// row, two per column, with the dot of row i in a column j satisfying
/// j <= i <= j + n. Stored as the row -> column map; rows are numbered
/// bottom to top from 1.
class DellacConfig {
public:
  DellacConfig() = default;
  /// Validates; throws std::invalid_argument on a malformed map.
  static DellacConfig from_columns(std::vector<int> col);
  /// Comma separated column list, e.g. "1,2,1,2".
  static DellacConfig parse(std::string_view text);

  int n() const { return static_cast<int>(col_.size()) / 2; }
  int col(int row) const { return col_[row - 1]; }
  std::span<const int> cols() const { return col_; }

  /// Rows (lower, upper) of the two dots in column j.
  std::pair<int, int> column_rows(int j) const;

  std::string to_string() const;
  /// ASCII picture, top row first; each line shows the dot label.
  std::string render_grid() const;

  auto operator<=>(const DellacConfig&) const = default;

private:
  explicit DellacConfig(std::vector<int> col) : col_(std::move(col)) {}
  friend class DellacSearch;
  friend DellacConfig c0(int);
  friend DellacConfig c1(int);
  friend DellacConfig switch_config(const DellacConfig&, int);
  std::vector<int> col_;
};

/// Band and column-count check on a raw row -> column map.
bool is_valid_dellac(std::span<const int> col);

/// Label of the dot in row i: 2i+2 for i <= n, 2(i-n)-1 above.
int label(int row, int n);
/// Inverse of label().
int row_of_label(int label, int n);

/// Configurations of size n in lexicographic order of the column map.
std::vector<DellacConfig> enumerate_dellac(int n);

using DellacVisitor = std::function<void(const DellacConfig&)>;
void for_each_dellac(int n, const DellacVisitor& visit);

/// Admissible column-map prefixes of the given length (lexicographic);
/// completing each with for_each_dellac_from partitions the enumeration.
std::vector<std::vector<int>> dellac_prefixes(int n, int depth);
void for_each_dellac_from(int n, std::span<const int> prefix, const DellacVisitor& visit);

/// Pairs of rows p < q with col(p) > col(q).
long long inv(const DellacConfig& c);

/// Inversion counts of one dot against later rows (l) and earlier rows (r).
/// l_even is only defined for even dots (row <= n) and counts only partners
/// that are even dots; r_odd likewise for odd dots.
struct RefinedStats {
  int l = 0;
  int r = 0;
  std::optional<int> l_even;
  std::optional<int> r_odd;
};

RefinedStats refined_stats(const DellacConfig& c, int row);

/// The zero-inversion configuration: rows 2j-1, 2j in column j.
DellacConfig c0(int n);
/// The maximal configuration: rows j and n+j in column j.
DellacConfig c1(int n);

/// Whether exchanging the columns of rows i and i+1 stays a Dellac
/// configuration. i in [1, 2n-1].
bool is_switchable(const DellacConfig& c, int i);
/// Throws std::invalid_argument if c is not switchable at i.
DellacConfig switch_config(const DellacConfig& c, int i);

struct SwitchingGraph {
  std::vector<DellacConfig> vertices; // enumeration order
  std::vector<std::vector<int>> adjacency;

  std::size_t edge_count() const;
  bool connected() const;
  std::string to_dot() const;
};

SwitchingGraph switching_graph(int n);

/// Row indices of the i-th even dot / odd dot when the dots are read column
/// by column, lower dot first. even_dot_order(c)[i-1] is p_C(i);
/// odd_dot_order(c)[i-1] is n + q_C(i).
std::vector<int> even_dot_order(const DellacConfig& c);
std::vector<int> odd_dot_order(const DellacConfig& c);

/// sum over DC(n) of q^{2 inv(C)}.
QPoly poincare(int n);
/// sum over DC(n) of q^{binom(n,2) - inv(C)}.
QPoly htilde(int n);

} // namespace genocchi
