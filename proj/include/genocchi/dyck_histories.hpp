#pragma once

#include "genocchi/dellac.hpp"
#include "genocchi/qpoly.hpp"

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace genocchi {

enum class Step : char { Up = 'U', Down = 'D' };

/// A Dyck path of semilength n: 2n unit steps, never below height 0,
/// ending at height 0. Always valid once constructed.
class DyckPath {
public:
  DyckPath() = default;
  /// Throws std::invalid_argument unless steps form a Dyck path.
  explicit DyckPath(std::vector<Step> steps);
  /// "UUDD" style.
  static DyckPath parse(std::string_view text);

  int semilength() const { return static_cast<int>(steps_.size()) / 2; }
  int length() const { return static_cast<int>(steps_.size()); }
  /// Step at 1-based position.
  Step step(int pos) const { return steps_[pos - 1]; }
  std::span<const Step> steps() const { return steps_; }
  /// Height of p_pos, i.e. after the first pos steps.
  int height(int pos) const;
  int max_height() const;

  std::string to_string() const;

  auto operator<=>(const DyckPath&) const = default;

private:
  std::vector<Step> steps_;
};

/// All Dyck paths of semilength n, U before D lexicographically.
std::vector<DyckPath> enumerate_dyck(int n);

/// Product over down steps of mu_h, h being the height the step starts
/// from. mu[0] holds mu_1. Throws std::invalid_argument if mu is too short.
QPoly weight_mu(const DyckPath& path, std::span<const QPoly> mu);

/// How the two steps 2j-1, 2j of a path look. Column pairs always start at
/// an even height 2k.
enum class ColumnShape { UpUp, DownUp, UpDown, DownDown };

struct ColumnInfo {
  ColumnShape shape;
  int k;          ///< half the height of p_{2j-2}
  int first_up;   ///< ordinal of the first up step in the pair, 0 if none
  int first_down; ///< ordinal of the first down step in the pair, 0 if none
};

/// Indexed by column j - 1.
std::vector<ColumnInfo> analyse_columns(const DyckPath& path);

/// Pairs every UpUp column with the DownDown column that brings the path
/// back down to the level it started from (and vice versa). match[j-1] is
/// the partner column, 0 for mixed columns.
std::vector<int> match_columns(const DyckPath& path);

struct XiPair {
  int n1 = 0;
  int n2 = 0;
  auto operator<=>(const XiPair&) const = default;
};

/// A Dyck path with one integer pair per down step, indexed by down-step
/// ordinal.
struct DellacHistory {
  DyckPath path;
  std::vector<XiPair> xi;

  int n() const { return path.semilength(); }
  /// e.g. "UDUUDD [[0,0],[0,1],[0,0]]"
  std::string to_string() const;
  auto operator<=>(const DellacHistory&) const = default;
};

/// Checks every pair against the inequalities of its column shape.
bool validate_history(const DellacHistory& h);

/// Exponent e of the monomial weight q^e. Throws std::invalid_argument on an
/// invalid history.
long long history_weight_exponent(const DellacHistory& h);
QPoly history_weight(const DellacHistory& h);

using HistoryVisitor = std::function<void(const DellacHistory&)>;
/// Every valid history over the given path.
void for_each_history_over(const DyckPath& path, const HistoryVisitor& visit);
/// Every valid history of length 2n, path by path.
void for_each_history(int n, const HistoryVisitor& visit);
std::vector<DellacHistory> enumerate_histories(int n);

/// DC(n) -> DH(n), column by column.
DellacHistory big_phi(const DellacConfig& c);

/// Bookkeeping of the two insertion sweeps of big_psi, one entry per dot.
struct PsiTrace {
  struct Insertion {
    int ordinal;                 ///< i: odd sweep counts down steps, even sweep counts up steps from the right
    std::vector<int> candidates; ///< the index list just before this dot was taken
    int position;                ///< 0-based position taken from candidates
    int chosen;                  ///< q (odd sweep) or p (even sweep)
  };
  std::vector<Insertion> odd;
  std::vector<Insertion> even;
};

/// DH(n) -> DC(n); inverse of big_phi. Throws std::invalid_argument on an
/// invalid history.
DellacConfig big_psi(const DellacHistory& h, PsiTrace* trace = nullptr);

} // namespace genocchi
