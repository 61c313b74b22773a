#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genocchi/dellac.hpp"
#include "genocchi/dyck_histories.hpp"
#include "genocchi/qpoly.hpp"
#include "genocchi/sequences.hpp"

#include <functional>

using namespace genocchi;

namespace {

BigInt catalan(int n) {
  BigInt c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

// Per-path number of admissible xi sequences, read straight off the step
// pairs: DU gives k(k+1)/2, UD gives (k+1)(k+2)/2, DD gives (k(k+1)/2)^2.
BigInt xi_choices(const DyckPath& p) {
  BigInt total = 1;
  for (int j = 1; j <= p.semilength(); ++j) {
    const long long k = p.height(2 * j - 2) / 2;
    const Step a = p.step(2 * j - 1), b = p.step(2 * j);
    if (a == Step::Down && b == Step::Up) total *= k * (k + 1) / 2;
    if (a == Step::Up && b == Step::Down) total *= (k + 1) * (k + 2) / 2;
    if (a == Step::Down && b == Step::Down) total *= (k * (k + 1) / 2) * (k * (k + 1) / 2);
  }
  return total;
}

// Every xi in the box [0, n]^2 per down step, kept when valid.
long long brute_history_count(int n) {
  long long count = 0;
  for (const auto& path : enumerate_dyck(n)) {
    DellacHistory h{path, std::vector<XiPair>(n)};
    std::function<void(int)> rec = [&](int idx) {
      if (idx == n) {
        count += validate_history(h);
        return;
      }
      for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
          h.xi[idx] = {a, b};
          rec(idx + 1);
        }
    };
    rec(0);
  }
  return count;
}

} // namespace

TEST_CASE("Dyck paths") {
  const auto p0 = enumerate_dyck(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].length() == 0);
  CHECK(enumerate_dyck(2) == std::vector{DyckPath::parse("UUDD"), DyckPath::parse("UDUD")});
  CHECK(enumerate_dyck(3).size() == 5);
  for (int n = 0; n <= 8; ++n) CHECK(enumerate_dyck(n).size() == catalan(n));
  const auto p = DyckPath::parse("UUDUDD");
  CHECK(p.semilength() == 3);
  CHECK(p.height(0) == 0);
  CHECK(p.height(2) == 2);
  CHECK(p.height(3) == 1);
  CHECK(p.max_height() == 2);
  CHECK(p.to_string() == "UUDUDD");
  CHECK_THROWS_AS(DyckPath::parse("DU"), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath::parse("UUD"), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath::parse("UXDD"), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_dyck(-1), std::invalid_argument);
}

TEST_CASE("mu weights") {
  const std::vector<QPoly> ones(8, QPoly{1});
  for (const auto& p : enumerate_dyck(5)) CHECK(weight_mu(p, ones) == QPoly{1});
  const auto lam = lambda_prefix(8);
  CHECK(weight_mu(DyckPath::parse("UDUD"), lam) == lam[0] * lam[0]);
  CHECK(weight_mu(DyckPath::parse("UUDD"), lam) == lam[1] * lam[0]);
  for (int n = 0; n <= 6; ++n) {
    QPoly total;
    for (const auto& p : enumerate_dyck(n)) total += weight_mu(p, lam);
    CHECK(total == cbar(n + 1));
  }
  CHECK_THROWS_AS(weight_mu(DyckPath::parse("UUDD"), std::span<const QPoly>(lam.data(), 1)), std::invalid_argument);
}

TEST_CASE("column analysis") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : enumerate_dyck(n)) {
      const auto cols = analyse_columns(p);
      const auto match = match_columns(p);
      REQUIRE(cols.size() == static_cast<std::size_t>(n));
      for (int j = 1; j <= n; ++j) {
        const auto& c = cols[j - 1];
        CHECK(2 * c.k == p.height(2 * j - 2));
        // the first up / first down step of a pair sits at ordinal j + k / j - k
        if (c.first_up) CHECK(c.first_up == j + c.k);
        if (c.first_down) CHECK(c.first_down == j - c.k);
        const bool uu = c.shape == ColumnShape::UpUp, dd = c.shape == ColumnShape::DownDown;
        if (!uu && !dd) CHECK(match[j - 1] == 0);
        if (dd) {
          // the largest earlier UU column that ends at this column's anchor height
          int best = 0;
          for (int jp = 1; jp < j; ++jp)
            if (cols[jp - 1].shape == ColumnShape::UpUp && p.height(2 * jp) == 2 * c.k) best = jp;
          CHECK(best > 0);
          CHECK(match[j - 1] == best);
          CHECK(match[best - 1] == j);
        }
        if (uu) {
          REQUIRE(match[j - 1] > j);
          CHECK(cols[match[j - 1] - 1].shape == ColumnShape::DownDown);
        }
      }
    }
}

TEST_CASE("history validation") {
  CHECK(validate_history({DyckPath::parse("UD"), {{0, 0}}}));
  CHECK_FALSE(validate_history({DyckPath::parse("UD"), {{1, 0}}}));
  CHECK_FALSE(validate_history({DyckPath::parse("UD"), {}}));
  CHECK_FALSE(validate_history({DyckPath::parse("UD"), {{0, -1}}}));
  // UUDD: one DD column at k = 1; first pair k-1 >= n1 >= n2 >= 0, second 0 <= n1 <= n2 <= k-1
  CHECK(validate_history({DyckPath::parse("UUDD"), {{0, 0}, {0, 0}}}));
  // UDUD: two UD columns at k = 0
  CHECK(validate_history({DyckPath::parse("UDUD"), {{0, 0}, {0, 0}}}));
  CHECK_FALSE(validate_history({DyckPath::parse("UUDD"), {{1, 0}, {0, 0}}}));
  CHECK(validate_history({DellacHistory{}}));
}

TEST_CASE("history counts") {
  for (int n = 0; n <= 3; ++n) {
    long long count = 0;
    for_each_history(n, [&](const DellacHistory& h) {
      CHECK(validate_history(h));
      ++count;
    });
    CHECK(count == brute_history_count(n));
  }
  for (int n = 0; n <= 6; ++n) {
    BigInt oracle = 0;
    for (const auto& p : enumerate_dyck(n)) {
      oracle += xi_choices(p);
      long long over = 0;
      for_each_history_over(p, [&](const DellacHistory&) { ++over; });
      CHECK(over == xi_choices(p));
    }
    CHECK(oracle == normalized_h(n));
    CHECK(enumerate_histories(n).size() == normalized_h(n));
  }
}

TEST_CASE("history weights") {
  CHECK(history_weight({DyckPath::parse("UD"), {{0, 0}}}) == QPoly{1});
  CHECK(history_weight(DellacHistory{}) == QPoly{1});
  CHECK_THROWS_AS(history_weight({DyckPath::parse("UD"), {{1, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(history_weight_exponent({DyckPath::parse("UD"), {{1, 0}}}), std::invalid_argument);
  const auto lam = lambda_prefix(10);
  for (int n = 0; n <= 5; ++n) {
    QPoly total;
    for (const auto& p : enumerate_dyck(n)) {
      QPoly fiber;
      for_each_history_over(p, [&](const DellacHistory& h) { fiber += history_weight(h); });
      CHECK(fiber == weight_mu(p, lam));
      total += fiber;
    }
    CHECK(total == htilde(n));
  }
}

TEST_CASE("big_phi") {
  const auto h1 = big_phi(DellacConfig::parse("1,1"));
  CHECK(h1.path == DyckPath::parse("UD"));
  CHECK(h1.xi == std::vector<XiPair>{{0, 0}});
  CHECK(big_psi(h1) == DellacConfig::parse("1,1"));
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : enumerate_dellac(n)) {
      const auto h = big_phi(c);
      CHECK(validate_history(h));
      CHECK(history_weight_exponent(h) == binom2(n) - inv(c));
      CHECK(big_psi(h) == c);
      // the i-th up step lives in the column of the dot e_{p_C(i)}, the i-th down step in that of e_{n+q_C(i)}
      const auto even = even_dot_order(c), odd = odd_dot_order(c);
      int ups = 0, downs = 0;
      for (int pos = 1; pos <= 2 * n; ++pos) {
        const int column = (pos + 1) / 2;
        if (h.path.step(pos) == Step::Up) CHECK(c.col(even[ups++]) == column);
        else CHECK(c.col(odd[downs++]) == column);
      }
    }
}

TEST_CASE("big_psi") {
  CHECK_THROWS_AS(big_psi({DyckPath::parse("UD"), {{1, 0}}}), std::invalid_argument);
  for (int n = 1; n <= 5; ++n)
    for_each_history(n, [&](const DellacHistory& h) {
      const auto c = big_psi(h);
      CHECK(is_valid_dellac(c.cols()));
      CHECK(big_phi(c) == h);
    });
}

TEST_CASE("insertion positions are the refined inversion counts") {
  for (int n = 1; n <= 4; ++n)
    for_each_history(n, [&](const DellacHistory& h) {
      PsiTrace trace;
      const auto c = big_psi(h, &trace);
      const auto even = even_dot_order(c), odd = odd_dot_order(c);
      REQUIRE(trace.odd.size() == static_cast<std::size_t>(n));
      REQUIRE(trace.even.size() == static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) {
        const auto& o = trace.odd[i - 1];
        CHECK(o.ordinal == i);
        CHECK(o.candidates.at(o.position) == o.chosen);
        CHECK(n + o.chosen == odd[i - 1]);
        CHECK(o.position == *refined_stats(c, n + o.chosen).r_odd);
        const auto& e = trace.even[i - 1];
        CHECK(e.ordinal == i);
        CHECK(e.candidates.at(e.position) == e.chosen);
        CHECK(e.chosen == even[n - i]);
        CHECK(e.position == *refined_stats(c, e.chosen).l_even);
      }
    });
}

TEST_CASE("history text form") {
  const DellacHistory h{DyckPath::parse("UUDD"), {{0, 0}, {0, 0}}};
  CHECK(h.to_string() == "UUDD [[0,0],[0,0]]");
  CHECK(h.n() == 2);
}
