#include "genocchi/dyck_histories.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace genocchi {

// ---- Dyck paths -----------------------------------------------------------

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  int h = 0;
  for (Step s : steps_) {
    h += s == Step::Up ? 1 : -1;
    if (h < 0) throw std::invalid_argument("DyckPath: path goes below height 0");
  }
  if (h != 0) throw std::invalid_argument("DyckPath: path does not return to height 0");
}

DyckPath DyckPath::parse(std::string_view text) {
  std::vector<Step> steps;
  for (char ch : text) {
    if (ch == 'U' || ch == 'u') steps.push_back(Step::Up);
    else if (ch == 'D' || ch == 'd') steps.push_back(Step::Down);
    else throw std::invalid_argument("DyckPath::parse: unexpected character '" + std::string(1, ch) + "'");
  }
  return DyckPath(std::move(steps));
}

int DyckPath::height(int pos) const {
  int h = 0;
  for (int p = 0; p < pos; ++p) h += steps_[p] == Step::Up ? 1 : -1;
  return h;
}

int DyckPath::max_height() const {
  int h = 0, best = 0;
  for (Step s : steps_) {
    h += s == Step::Up ? 1 : -1;
    best = std::max(best, h);
  }
  return best;
}

std::string DyckPath::to_string() const {
  std::string s;
  s.reserve(steps_.size());
  for (Step st : steps_) s += static_cast<char>(st);
  return s;
}

std::vector<DyckPath> enumerate_dyck(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_dyck: n must be >= 0");
  std::vector<DyckPath> out;
  std::vector<Step> cur;
  auto rec = [&](auto&& self, int ups, int downs) -> void {
    if (ups == n && downs == n) {
      out.emplace_back(cur);
      return;
    }
    if (ups < n) {
      cur.push_back(Step::Up);
      self(self, ups + 1, downs);
      cur.pop_back();
    }
    if (downs < ups) {
      cur.push_back(Step::Down);
      self(self, ups, downs + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

QPoly weight_mu(const DyckPath& path, std::span<const QPoly> mu) {
  if (static_cast<int>(mu.size()) < path.max_height())
    throw std::invalid_argument("weight_mu: weights cover heights up to " + std::to_string(mu.size()) +
                                " but the path reaches " + std::to_string(path.max_height()));
  QPoly w{1};
  int h = 0;
  for (Step s : path.steps()) {
    if (s == Step::Down) w *= mu[h - 1];
    h += s == Step::Up ? 1 : -1;
  }
  return w;
}

std::vector<ColumnInfo> analyse_columns(const DyckPath& path) {
  const int n = path.semilength();
  std::vector<ColumnInfo> cols;
  cols.reserve(n);
  int h = 0, ups = 0, downs = 0;
  for (int j = 1; j <= n; ++j) {
    const Step a = path.step(2 * j - 1), b = path.step(2 * j);
    ColumnInfo info{};
    info.k = h / 2;
    if (a == Step::Up && b == Step::Up) info.shape = ColumnShape::UpUp;
    else if (a == Step::Down && b == Step::Up) info.shape = ColumnShape::DownUp;
    else if (a == Step::Up) info.shape = ColumnShape::UpDown;
    else info.shape = ColumnShape::DownDown;
    const int u = (a == Step::Up) + (b == Step::Up);
    info.first_up = u > 0 ? ups + 1 : 0;
    info.first_down = u < 2 ? downs + 1 : 0;
    ups += u;
    downs += 2 - u;
    h += 2 * u - 2;
    cols.push_back(info);
  }
  return cols;
}

std::vector<int> match_columns(const DyckPath& path) {
  const auto cols = analyse_columns(path);
  const int n = static_cast<int>(cols.size());
  std::vector<int> match(n, 0);
  // pending[level] holds UpUp columns that climbed to height 2*level and
  // have not been brought back down yet; the most recent one is on top.
  std::vector<std::vector<int>> pending(n + 2);
  for (int j = 1; j <= n; ++j) {
    const ColumnInfo& c = cols[j - 1];
    if (c.shape == ColumnShape::UpUp) {
      pending[c.k + 1].push_back(j);
    } else if (c.shape == ColumnShape::DownDown) {
      auto& stack = pending[c.k];
      if (stack.empty()) throw IntegrityError("match_columns: DownDown column without a partner");
      match[j - 1] = stack.back();
      match[stack.back() - 1] = j;
      stack.pop_back();
    }
  }
  return match;
}

// ---- Dellac histories -----------------------------------------------------

std::string DellacHistory::to_string() const {
  std::ostringstream os;
  os << path.to_string() << " [";
  for (std::size_t i = 0; i < xi.size(); ++i) os << (i ? "," : "") << "[" << xi[i].n1 << "," << xi[i].n2 << "]";
  os << "]";
  return os.str();
}

namespace {

// Allowed pairs and exponent offset for one down step, by shape:
//   DownUp            k   >= n1 >  n2 >= 0, exponent 2k   - n1 - n2
//   UpDown            0   <= n1 <= n2 <= k, exponent 2k   - n1 - n2
//   DownDown, first   k-1 >= n1 >= n2 >= 0, exponent 2k-1 - n1 - n2
//   DownDown, second  0   <= n1 <= n2 <= k-1, exponent 2k-2 - n1 - n2
enum class DownRule { Strict, Weak, FirstOfPair, SecondOfPair };

struct DownStep {
  DownRule rule;
  int k;
};

std::vector<DownStep> down_steps(const DyckPath& path) {
  std::vector<DownStep> out;
  for (const ColumnInfo& c : analyse_columns(path)) {
    switch (c.shape) {
    case ColumnShape::UpUp: break;
    case ColumnShape::DownUp: out.push_back({DownRule::Strict, c.k}); break;
    case ColumnShape::UpDown: out.push_back({DownRule::Weak, c.k}); break;
    case ColumnShape::DownDown:
      out.push_back({DownRule::FirstOfPair, c.k});
      out.push_back({DownRule::SecondOfPair, c.k});
      break;
    }
  }
  return out;
}

bool admissible(const DownStep& d, const XiPair& x) {
  const int k = d.k;
  switch (d.rule) {
  case DownRule::Strict: return k >= x.n1 && x.n1 > x.n2 && x.n2 >= 0;
  case DownRule::Weak: return 0 <= x.n1 && x.n1 <= x.n2 && x.n2 <= k;
  case DownRule::FirstOfPair: return k - 1 >= x.n1 && x.n1 >= x.n2 && x.n2 >= 0;
  case DownRule::SecondOfPair: return 0 <= x.n1 && x.n1 <= x.n2 && x.n2 <= k - 1;
  }
  return false;
}

int exponent_base(const DownStep& d) {
  switch (d.rule) {
  case DownRule::FirstOfPair: return 2 * d.k - 1;
  case DownRule::SecondOfPair: return 2 * d.k - 2;
  default: return 2 * d.k;
  }
}

std::vector<XiPair> choices(const DownStep& d) {
  std::vector<XiPair> out;
  for (int a = 0; a <= d.k; ++a)
    for (int b = 0; b <= d.k; ++b)
      if (admissible(d, {a, b})) out.push_back({a, b});
  return out;
}

} // namespace

bool validate_history(const DellacHistory& h) {
  const auto downs = down_steps(h.path);
  if (h.xi.size() != downs.size()) return false;
  for (std::size_t i = 0; i < downs.size(); ++i)
    if (!admissible(downs[i], h.xi[i])) return false;
  return true;
}

long long history_weight_exponent(const DellacHistory& h) {
  if (!validate_history(h)) throw std::invalid_argument("history_weight: invalid history " + h.to_string());
  const auto downs = down_steps(h.path);
  long long e = 0;
  for (std::size_t i = 0; i < downs.size(); ++i) e += exponent_base(downs[i]) - h.xi[i].n1 - h.xi[i].n2;
  return e;
}

QPoly history_weight(const DellacHistory& h) {
  return QPoly::monomial(static_cast<int>(history_weight_exponent(h)));
}

void for_each_history_over(const DyckPath& path, const HistoryVisitor& visit) {
  const auto downs = down_steps(path);
  std::vector<std::vector<XiPair>> options;
  options.reserve(downs.size());
  for (const auto& d : downs) options.push_back(choices(d));
  DellacHistory h{path, std::vector<XiPair>(downs.size())};
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == downs.size()) {
      visit(h);
      return;
    }
    for (const XiPair& x : options[i]) {
      h.xi[i] = x;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

void for_each_history(int n, const HistoryVisitor& visit) {
  for (const DyckPath& path : enumerate_dyck(n)) for_each_history_over(path, visit);
}

std::vector<DellacHistory> enumerate_histories(int n) {
  std::vector<DellacHistory> out;
  for_each_history(n, [&](const DellacHistory& h) { out.push_back(h); });
  return out;
}

// ---- DC(n) -> DH(n) -------------------------------------------------------

DellacHistory big_phi(const DellacConfig& c) {
  const int n = c.n();
  std::vector<Step> steps;
  steps.reserve(2 * n);
  std::vector<XiPair> xi;
  xi.reserve(n);
  std::vector<std::vector<int>> pending(n + 2); // see match_columns
  int height = 0, ups = 0, downs = 0;

  auto l_even = [&](int row) { return *refined_stats(c, row).l_even; };
  auto r_odd = [&](int row) { return *refined_stats(c, row).r_odd; };
  auto fail = [&](const std::string& what) {
    throw IntegrityError("big_phi(" + c.to_string() + "): " + what);
  };

  for (int j = 1; j <= n; ++j) {
    const auto [lower, upper] = c.column_rows(j);
    const int k = height / 2;
    if (upper <= n) {
      if (ups + 1 != j + k) fail("up-step ordinal breaks i = j + k");
      steps.insert(steps.end(), {Step::Up, Step::Up});
      pending[k + 1].push_back(j);
      ups += 2;
      height += 2;
    } else if (lower <= n) {
      const XiPair x{l_even(lower), r_odd(upper)};
      if (ups + 1 != j + k || downs + 1 != j - k) fail("mixed column breaks i = j +- k");
      if (x.n1 > x.n2) {
        if (k == 0) fail("path would go below height 0");
        steps.insert(steps.end(), {Step::Down, Step::Up});
      } else {
        steps.insert(steps.end(), {Step::Up, Step::Down});
      }
      xi.push_back(x);
      ++ups;
      ++downs;
    } else {
      if (downs + 1 != j - k) fail("down-step ordinal breaks i = j - k");
      auto& stack = pending[k];
      if (k == 0 || stack.empty()) fail("two odd dots with no matching two-even column");
      const int partner = stack.back();
      stack.pop_back();
      const auto [plo, phi_] = c.column_rows(partner);
      steps.insert(steps.end(), {Step::Down, Step::Down});
      xi.push_back({l_even(plo), l_even(phi_)});
      xi.push_back({r_odd(lower), r_odd(upper)});
      downs += 2;
      height -= 2;
    }
  }
  if (height != 0) fail("path does not return to height 0");

  DellacHistory h;
  try {
    h.path = DyckPath(std::move(steps));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  h.xi = std::move(xi);
  if (!validate_history(h)) fail("produced an invalid history " + h.to_string());
  return h;
}

// ---- DH(n) -> DC(n) -------------------------------------------------------

namespace {

int take(std::vector<int>& list, int position, int ordinal, std::vector<PsiTrace::Insertion>* log) {
  if (position < 0 || position >= static_cast<int>(list.size()))
    throw IntegrityError("big_psi: index list exhausted");
  if (log) log->push_back({ordinal, list, position, list[position]});
  const int v = list[position];
  list.erase(list.begin() + position);
  return v;
}

} // namespace

DellacConfig big_psi(const DellacHistory& h, PsiTrace* trace) {
  if (!validate_history(h)) throw std::invalid_argument("big_psi: invalid history " + h.to_string());
  const int n = h.n();
  const auto cols = analyse_columns(h.path);
  const auto match = match_columns(h.path);
  std::vector<int> col(2 * n, 0);
  auto* odd_log = trace ? &trace->odd : nullptr;
  auto* even_log = trace ? &trace->even : nullptr;

  // Odd dots, left to right, from the ascending list (1, ..., n).
  std::vector<int> odd(n);
  for (int q = 1; q <= n; ++q) odd[q - 1] = q;
  for (int j = 1; j <= n; ++j) {
    const ColumnInfo& c = cols[j - 1];
    if (c.shape == ColumnShape::UpUp) continue;
    if (c.shape == ColumnShape::DownDown) {
      const XiPair x = h.xi[c.first_down]; // second down step of the pair
      // (1+n1)-th and (2+n2)-th of the list; after the first removal the
      // second sits at position n2 since n1 <= n2.
      const int q1 = take(odd, x.n1, c.first_down, odd_log);
      const int q2 = take(odd, x.n2, c.first_down + 1, odd_log);
      col[n + q1 - 1] = col[n + q2 - 1] = j;
    } else {
      const XiPair x = h.xi[c.first_down - 1];
      const int q = take(odd, x.n2, c.first_down, odd_log);
      col[n + q - 1] = j;
    }
  }

  // Even dots, right to left, from the descending list (n, ..., 1).
  std::vector<int> even(n);
  for (int p = 0; p < n; ++p) even[p] = n - p;
  int ordinal = 1;
  for (int j = n; j >= 1; --j) {
    const ColumnInfo& c = cols[j - 1];
    if (c.shape == ColumnShape::DownDown) continue;
    if (c.shape == ColumnShape::UpUp) {
      const XiPair x = h.xi[cols[match[j - 1] - 1].first_down - 1];
      // (1+n2)-th then (2+n1)-th; n2 <= n1 so the second is at n1 afterwards.
      const int p1 = take(even, x.n2, ordinal, even_log);
      const int p2 = take(even, x.n1, ordinal + 1, even_log);
      col[p1 - 1] = col[p2 - 1] = j;
      ordinal += 2;
    } else {
      const XiPair x = h.xi[c.first_down - 1];
      const int p = take(even, x.n1, ordinal, even_log);
      col[p - 1] = j;
      ++ordinal;
    }
  }

  try {
    return DellacConfig::from_columns(std::move(col));
  } catch (const std::invalid_argument& e) {
    throw IntegrityError(std::string("big_psi: ") + e.what());
  }
}

} // namespace genocchi
