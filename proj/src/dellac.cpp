#include "genocchi/dellac.hpp"

#include "genocchi/kernels.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace genocchi {

bool is_valid_dellac(std::span<const int> col) {
  if (col.empty() || col.size() % 2 != 0) return false;
  const int n = static_cast<int>(col.size()) / 2;
  std::vector<int> count(n + 1, 0);
  for (int i = 1; i <= 2 * n; ++i) {
    const int j = col[i - 1];
    if (j < 1 || j > n || i < j || i > j + n) return false;
    ++count[j];
  }
  return std::all_of(count.begin() + 1, count.end(), [](int c) { return c == 2; });
}

DellacConfig DellacConfig::from_columns(std::vector<int> col) {
  if (!is_valid_dellac(col)) {
    std::string s;
    for (std::size_t k = 0; k < col.size(); ++k) s += (k ? "," : "") + std::to_string(col[k]);
    throw std::invalid_argument("DellacConfig: [" + s + "] is not a Dellac configuration");
  }
  return DellacConfig(std::move(col));
}

DellacConfig DellacConfig::parse(std::string_view text) {
  std::vector<int> col;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string token(text.substr(pos, next - pos));
    std::erase_if(token, [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '[' || c == ']'; });
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("DellacConfig::parse: bad entry '" + token + "'");
    col.push_back(std::stoi(token));
    pos = next + 1;
  }
  return from_columns(std::move(col));
}

std::pair<int, int> DellacConfig::column_rows(int j) const {
  int lower = 0;
  for (int i = 1; i <= 2 * n(); ++i) {
    if (col(i) != j) continue;
    if (lower == 0) lower = i;
    else return {lower, i};
  }
  throw std::out_of_range("DellacConfig::column_rows: no column " + std::to_string(j));
}

std::string DellacConfig::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < col_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(col_[k]);
  }
  return s;
}

std::string DellacConfig::render_grid() const {
  std::ostringstream os;
  for (int i = 2 * n(); i >= 1; --i) {
    std::string lab = std::to_string(label(i, n()));
    os << std::string(3 - std::min<std::size_t>(3, lab.size()), ' ') << lab << " |";
    for (int j = 1; j <= n(); ++j) {
      // cells outside the band are blank
      const bool in_band = j <= i && i <= j + n();
      os << ' ' << (col(i) == j ? '*' : (in_band ? '.' : ' '));
    }
    os << '\n';
  }
  return os.str();
}

int label(int row, int n) {
  if (n < 1 || row < 1 || row > 2 * n)
    throw std::out_of_range("label: row " + std::to_string(row) + " outside [1, 2n]");
  return row <= n ? 2 * row + 2 : 2 * (row - n) - 1;
}

int row_of_label(int lab, int n) {
  if (n < 1 || lab < 1 || lab > 2 * n + 2 || lab == 2 || lab == 2 * n + 1)
    throw std::out_of_range("row_of_label: " + std::to_string(lab) + " is not a dot label for n=" + std::to_string(n));
  return lab % 2 == 0 ? lab / 2 - 1 : n + (lab + 1) / 2;
}

// Row-by-row backtracking with per-column fill counters. Column c can take
// rows up to c+n only, so by row i the column i-n must already hold a dot
// and row i is forced into it if it holds just one.
class DellacSearch {
public:
  DellacSearch(int n, const DellacVisitor& visit)
      : n_(n), visit_(visit), current_(std::vector<int>(2 * n)), count_(n + 2, 0) {}

  void run(std::span<const int> prefix) {
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      const int row = static_cast<int>(k) + 1, j = prefix[k];
      if (!allowed(row, j)) return;
      place(row, j);
    }
    extend(static_cast<int>(prefix.size()) + 1);
  }

  bool allowed(int row, int j) const {
    if (j < std::max(1, row - n_) || j > std::min(n_, row) || count_[j] >= 2) return false;
    const int closing = row - n_;
    if (closing >= 1 && count_[closing] < 2) return j == closing && count_[closing] == 1;
    return true;
  }

  void place(int row, int j) {
    current_.col_[row - 1] = j;
    ++count_[j];
  }
  void unplace(int j) { --count_[j]; }

private:
  void extend(int row) {
    if (row > 2 * n_) {
      visit_(current_);
      return;
    }
    for (int j = std::max(1, row - n_); j <= std::min(n_, row); ++j) {
      if (!allowed(row, j)) continue;
      place(row, j);
      extend(row + 1);
      unplace(j);
    }
  }

  int n_;
  const DellacVisitor& visit_;
  DellacConfig current_;
  std::vector<int> count_;
};

void for_each_dellac(int n, const DellacVisitor& visit) {
  if (n < 1) throw std::invalid_argument("for_each_dellac: n must be >= 1");
  DellacSearch(n, visit).run({});
}

void for_each_dellac_from(int n, std::span<const int> prefix, const DellacVisitor& visit) {
  if (n < 1) throw std::invalid_argument("for_each_dellac_from: n must be >= 1");
  if (static_cast<int>(prefix.size()) > 2 * n) throw std::invalid_argument("for_each_dellac_from: prefix too long");
  DellacSearch(n, visit).run(prefix);
}

std::vector<std::vector<int>> dellac_prefixes(int n, int depth) {
  if (n < 1) throw std::invalid_argument("dellac_prefixes: n must be >= 1");
  depth = std::clamp(depth, 0, 2 * n);
  std::vector<std::vector<int>> out;
  std::vector<int> pre;
  const DellacVisitor none = [](const DellacConfig&) {};
  DellacSearch search(n, none);
  // depth-limited walk using the same admissibility rule as the search
  auto walk = [&](auto&& self, int row) -> void {
    if (row > depth) {
      out.push_back(pre);
      return;
    }
    for (int j = std::max(1, row - n); j <= std::min(n, row); ++j) {
      if (!search.allowed(row, j)) continue;
      search.place(row, j);
      pre.push_back(j);
      self(self, row + 1);
      pre.pop_back();
      search.unplace(j);
    }
  };
  walk(walk, 1);
  return out;
}

std::vector<DellacConfig> enumerate_dellac(int n) {
  std::vector<DellacConfig> out;
  for_each_dellac(n, [&](const DellacConfig& c) { out.push_back(c); });
  return out;
}

long long inv(const DellacConfig& c) {
  long long count = 0;
  const auto col = c.cols();
  for (std::size_t p = 0; p < col.size(); ++p)
    for (std::size_t q = p + 1; q < col.size(); ++q)
      if (col[p] > col[q]) ++count;
  return count;
}

RefinedStats refined_stats(const DellacConfig& c, int row) {
  const int n = c.n();
  if (row < 1 || row > 2 * n) throw std::out_of_range("refined_stats: row outside [1, 2n]");
  RefinedStats s;
  int l_even = 0, r_odd = 0;
  for (int other = 1; other <= 2 * n; ++other) {
    if (other > row && c.col(other) < c.col(row)) {
      ++s.l;
      if (other <= n) ++l_even;
    } else if (other < row && c.col(other) > c.col(row)) {
      ++s.r;
      if (other > n) ++r_odd;
    }
  }
  if (row <= n) s.l_even = l_even;
  else s.r_odd = r_odd;
  return s;
}

DellacConfig c0(int n) {
  if (n < 1) throw std::invalid_argument("c0: n must be >= 1");
  std::vector<int> col(2 * n);
  for (int j = 1; j <= n; ++j) col[2 * j - 2] = col[2 * j - 1] = j;
  return DellacConfig(std::move(col));
}

DellacConfig c1(int n) {
  if (n < 1) throw std::invalid_argument("c1: n must be >= 1");
  std::vector<int> col(2 * n);
  for (int j = 1; j <= n; ++j) col[j - 1] = col[n + j - 1] = j;
  return DellacConfig(std::move(col));
}

bool is_switchable(const DellacConfig& c, int i) {
  const int n = c.n();
  if (i < 1 || i > 2 * n - 1) throw std::out_of_range("is_switchable: index outside [1, 2n-1]");
  if (i <= n) return c.col(i + 1) < i + 1;
  return c.col(i) > i - n;
}

DellacConfig switch_config(const DellacConfig& c, int i) {
  if (!is_switchable(c, i))
    throw std::invalid_argument("switch_config: " + c.to_string() + " is not switchable at " + std::to_string(i));
  std::vector<int> col(c.cols().begin(), c.cols().end());
  std::swap(col[i - 1], col[i]);
  return DellacConfig(std::move(col));
}

std::size_t SwitchingGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& a : adjacency) twice += a.size();
  return twice / 2;
}

bool SwitchingGraph::connected() const {
  if (vertices.empty()) return true;
  std::vector<char> seen(vertices.size(), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adjacency[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
  }
  return reached == vertices.size();
}

std::string SwitchingGraph::to_dot() const {
  std::ostringstream os;
  os << "graph switching {\n";
  for (std::size_t v = 0; v < vertices.size(); ++v)
    os << "  v" << v << " [label=\"" << vertices[v].to_string() << "\\ninv=" << inv(vertices[v]) << "\"];\n";
  for (std::size_t v = 0; v < adjacency.size(); ++v)
    for (int w : adjacency[v])
      if (static_cast<std::size_t>(w) > v) os << "  v" << v << " -- v" << w << ";\n";
  os << "}\n";
  return os.str();
}

SwitchingGraph switching_graph(int n) {
  SwitchingGraph g;
  g.vertices = enumerate_dellac(n);
  g.adjacency.resize(g.vertices.size());
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& c = g.vertices[v];
    for (int i = 1; i <= 2 * n - 1; ++i) {
      if (!is_switchable(c, i)) continue;
      DellacConfig d = switch_config(c, i);
      if (d == c) continue;
      const auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), d);
      const int w = static_cast<int>(it - g.vertices.begin());
      auto& adj = g.adjacency[v];
      if (std::find(adj.begin(), adj.end(), w) == adj.end()) adj.push_back(w);
    }
    std::sort(g.adjacency[v].begin(), g.adjacency[v].end());
  }
  return g;
}

namespace {

std::vector<int> dot_order(const DellacConfig& c, bool even) {
  std::vector<int> out;
  out.reserve(c.n());
  for (int j = 1; j <= c.n(); ++j) {
    const auto [lo, hi] = c.column_rows(j);
    for (int row : {lo, hi})
      if ((row <= c.n()) == even) out.push_back(row);
  }
  return out;
}

} // namespace

std::vector<int> even_dot_order(const DellacConfig& c) { return dot_order(c, true); }
std::vector<int> odd_dot_order(const DellacConfig& c) { return dot_order(c, false); }

QPoly poincare(int n) {
  if (n < 0) throw std::invalid_argument("poincare: n must be >= 0");
  if (n == 0) return QPoly{1};
  const auto hist = inv_histogram_parallel(n);
  std::vector<BigInt> coeffs(2 * hist.size());
  for (std::size_t k = 0; k < hist.size(); ++k) coeffs[2 * k] = hist[k];
  return QPoly(std::move(coeffs));
}

QPoly htilde(int n) {
  if (n < 0) throw std::invalid_argument("htilde: n must be >= 0");
  if (n == 0) return QPoly{1};
  const auto hist = inv_histogram_parallel(n);
  const long long top = binom2(n);
  if (static_cast<long long>(hist.size()) > top + 1)
    throw IntegrityError("htilde: a configuration has more than binom(n,2) inversions");
  std::vector<BigInt> coeffs(top + 1);
  for (std::size_t k = 0; k < hist.size(); ++k) coeffs[top - k] = hist[k];
  return QPoly(std::move(coeffs));
}

} // namespace genocchi
