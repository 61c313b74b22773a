#include "genocchi/verify.hpp"

#include "genocchi/dumont_bijection.hpp"
#include "genocchi/kernels.hpp"
#include "genocchi/qpoly.hpp"
#include "genocchi/sequences.hpp"
#include "genocchi/serialize.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace genocchi {

using nlohmann::json;

nlohmann::json VerificationReport::to_json() const {
  json j{{"schema", kSchemaVersion},
         {"check", check_name},
         {"n", n},
         {"total_objects", genocchi::to_json(total_objects)},
         {"status", passed() ? "pass" : "fail"},
         {"elapsed_ms", elapsed_ms}};
  j["counterexample"] = counterexample ? json(*counterexample) : json(nullptr);
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << (passed() ? "PASS" : "FAIL") << "  " << check_name << " n=" << n << " objects=" << total_objects
     << " (" << elapsed_ms << " ms)";
  if (counterexample) os << "\n  counterexample: " << *counterexample;
  return os.str();
}

namespace {

struct Outcome {
  BigInt total = 0;
  std::optional<std::string> counterexample;
};

Outcome from_sweep(const SweepResult& s) { return {BigInt(s.total), s.counterexample}; }

std::string perm_str(const Perm& p) { return p.to_string(); }

// ---- individual checks ----------------------------------------------------

Outcome check_seidel_recurrence(int n) {
  const SeidelTriangle t = seidel_triangle(n);
  Outcome out;
  if (t.at(1, 1) != 1) return {1, "g(1,1) != 1"};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= (i + 1) / 2; ++j) {
      ++out.total;
      if (i == 1) continue;
      const BigInt expected = i % 2 == 1 ? t.at(i, j - 1) + t.at(i - 1, j) : t.at(i - 1, j) + t.at(i, j + 1);
      if (t.at(i, j) != expected && !out.counterexample)
        out.counterexample = "g(" + std::to_string(i) + "," + std::to_string(j) + ") = " + t.at(i, j).str() +
                             ", recurrence gives " + expected.str();
    }
  return out;
}

Outcome check_h_divisibility(int n) {
  const SeidelTriangle t = seidel_triangle(2 * n + 2);
  Outcome out;
  for (int k = 0; k <= n; ++k) {
    ++out.total;
    const BigInt& h = t.at(2 * k + 2, 1);
    if (h % (BigInt{1} << k) != 0 && !out.counterexample)
      out.counterexample = "2^" + std::to_string(k) + " does not divide H_" + std::to_string(2 * k + 1) + " = " + h.str();
  }
  return out;
}

Outcome check_dc_count(int n) {
  std::uint64_t count = 0;
  for_each_dellac(n, [&](const DellacConfig&) { ++count; });
  Outcome out{BigInt(count), std::nullopt};
  const BigInt h = normalized_h(n);
  if (out.total != h) out.counterexample = "|DC(" + std::to_string(n) + ")| = " + out.total.str() + " but h_n = " + h.str();
  return out;
}

Outcome check_phi_bijection(int n) {
  std::vector<Perm> image;
  std::optional<std::string> bad;
  for_each_dellac(n, [&](const DellacConfig& c) {
    Perm p = phi(c);
    if (!bad && !(is_dumont(p) && is_normalized_dumont(p))) bad = c.to_string() + " -> " + perm_str(p) + " not normalized Dumont";
    if (!bad && varphi(p) != c) bad = "varphi(phi(" + c.to_string() + ")) != C";
    image.push_back(std::move(p));
  });
  Outcome out{BigInt(image.size()), bad};
  if (out.counterexample) return out;
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end())
    return {out.total, "phi is not injective: " + perm_str(*std::adjacent_find(image.begin(), image.end()))};
  const auto target = enumerate_dumont(n + 1, DumontClass::NormalizedDumont);
  if (image != target)
    out.counterexample = "image has " + std::to_string(image.size()) + " elements, D'_" + std::to_string(n + 1) +
                         " has " + std::to_string(target.size()) + " (or the sets differ)";
  return out;
}

Outcome check_phi_statistic(int n) {
  const long long top = binom2(n);
  return from_sweep(sweep_dellac_parallel(n, [top](const DellacConfig& c) -> std::optional<std::string> {
    const long long s = st(phi(c)), i = inv(c);
    if (s == top - i) return std::nullopt;
    return c.to_string() + ": st(phi) = " + std::to_string(s) + ", binom(n,2) - inv = " + std::to_string(top - i);
  }));
}

Outcome check_tau_agreement(int n) {
  return from_sweep(sweep_dellac_parallel(n, [](const DellacConfig& c) -> std::optional<std::string> {
    if (tau(c) != tau_from_stats(c)) return c.to_string() + ": tau differs from i + l - r";
    const Perm a = phi(c), b = phi_via_tau(c);
    if (a != b) return c.to_string() + ": phi = " + perm_str(a) + ", phi_via_tau = " + perm_str(b);
    return std::nullopt;
  }));
}

Outcome check_orbit_structure(int n) {
  const std::size_t orbit_size = std::size_t{1} << n;
  std::map<Perm, std::size_t> members; // canonical representative -> orbit elements seen
  Outcome out;
  for_each_dumont(n + 1, DumontClass::All, [&](const Perm& sigma) {
    ++out.total;
    if (out.counterexample) return;
    const Perm canon = orbit_canonical(sigma);
    const DellacConfig base = varphi(sigma);
    std::set<Perm> orbit;
    int normalized = 0;
    for (std::size_t mask = 0; mask < orbit_size; ++mask) {
      Perm g = sigma;
      for (int j = 1; j <= n; ++j)
        if (mask >> (j - 1) & 1) g = transposition_compose(g, 2 * j, 2 * j + 1, Side::Left);
      if (!is_dumont(g)) {
        out.counterexample = perm_str(g) + " in the orbit of " + perm_str(sigma) + " is not Dumont";
        return;
      }
      if (is_normalized_dumont(g)) {
        ++normalized;
        if (g != canon) out.counterexample = "orbit of " + perm_str(sigma) + " has normalized " + perm_str(g) + " != canonical " + perm_str(canon);
      }
      if (orbit_canonical(g) != canon || varphi(g) != base)
        out.counterexample = "orbit_canonical/varphi not constant on the orbit of " + perm_str(sigma);
      orbit.insert(std::move(g));
    }
    if (!out.counterexample && orbit.size() != orbit_size) out.counterexample = "action on " + perm_str(sigma) + " is not free";
    if (!out.counterexample && normalized != 1)
      out.counterexample = "orbit of " + perm_str(sigma) + " holds " + std::to_string(normalized) + " normalized permutations";
    ++members[canon];
  });
  if (out.counterexample) return out;
  for (const auto& [canon, count] : members)
    if (count != orbit_size) return {out.total, "orbit of " + perm_str(canon) + " has " + std::to_string(count) + " members"};
  if (BigInt(members.size()) * orbit_size != out.total || BigInt(members.size()) != normalized_h(n))
    out.counterexample = std::to_string(members.size()) + " orbits for " + out.total.str() + " permutations";
  return out;
}

Outcome check_switch_facts(int n) {
  return from_sweep(sweep_dellac_parallel(n, [n](const DellacConfig& c) -> std::optional<std::string> {
    const long long base = inv(c);
    const Perm sigma = phi(c);
    for (int i = 1; i <= 2 * n - 1; ++i) {
      const std::string where = c.to_string() + " at i=" + std::to_string(i) + ": ";
      std::vector<int> swapped(c.cols().begin(), c.cols().end());
      std::swap(swapped[i - 1], swapped[i]);
      const bool brute = is_valid_dellac(swapped);
      const bool sw = is_switchable(c, i);
      if (sw != brute) return where + "switchability criterion disagrees with the band check";
      if (i == n && !sw) return where + "not switchable at n";
      const bool same_column = c.col(i) == c.col(i + 1);
      const bool inversion = c.col(i) > c.col(i + 1);
      if ((same_column || inversion) && !sw) return where + "should be switchable";
      if (!sw) continue;
      const DellacConfig d = switch_config(c, i);
      const long long delta = inv(d) - base;
      if (delta < -1 || delta > 1) return where + "inv changed by " + std::to_string(delta);
      if (!is_switchable(d, i) || switch_config(d, i) != c) return where + "switching is not an involution";
      if (same_column && d != c) return where + "same-column switch changed C";
      if (inversion && delta != -1) return where + "switching an inversion did not drop inv by 1";
      if (d != c) {
        const Perm expected = transposition_compose(sigma, label(i, n), label(i + 1, n), Side::Right);
        if (phi(d) != expected) return where + "phi(Sw(C)) != phi(C) o (e_i, e_{i+1})";
      }
    }
    return std::nullopt;
  }));
}

Outcome check_switch_connectivity(int n) {
  const SwitchingGraph g = switching_graph(n);
  Outcome out{BigInt(g.vertices.size()), std::nullopt};
  if (!g.connected()) out.counterexample = "switching graph of DC(" + std::to_string(n) + ") is disconnected";
  return out;
}

Outcome check_history_count(int n) {
  std::uint64_t count = 0;
  for_each_history(n, [&](const DellacHistory&) { ++count; });
  Outcome out{BigInt(count), std::nullopt};
  if (out.total != normalized_h(n)) out.counterexample = "|DH(n)| = " + out.total.str() + ", h_n = " + normalized_h(n).str();
  return out;
}

Outcome check_phi_roundtrip(int n) {
  Outcome out;
  std::set<DellacHistory> image;
  for_each_dellac(n, [&](const DellacConfig& c) {
    ++out.total;
    if (out.counterexample) return;
    DellacHistory h = big_phi(c);
    if (big_psi(h) != c) out.counterexample = "Psi(Phi(" + c.to_string() + ")) != C";
    image.insert(std::move(h));
  });
  if (out.counterexample) return out;
  std::uint64_t histories = 0;
  for_each_history(n, [&](const DellacHistory& h) {
    ++histories;
    if (out.counterexample) return;
    if (big_phi(big_psi(h)) != h) out.counterexample = "Phi(Psi(" + h.to_string() + ")) != h";
    else if (!image.contains(h)) out.counterexample = h.to_string() + " is not in the image of Phi";
  });
  if (!out.counterexample && BigInt(histories) != out.total)
    out.counterexample = "|DH(n)| = " + std::to_string(histories) + " != |DC(n)| = " + out.total.str();
  return out;
}

Outcome check_phi_weight(int n) {
  const long long top = binom2(n);
  return from_sweep(sweep_dellac_parallel(n, [top](const DellacConfig& c) -> std::optional<std::string> {
    const long long e = history_weight_exponent(big_phi(c));
    if (e == top - inv(c)) return std::nullopt;
    return c.to_string() + ": weight exponent " + std::to_string(e) + ", expected " + std::to_string(top - inv(c));
  }));
}

Outcome check_fiber_sum(int n) {
  const auto lambda = lambda_prefix(n + 1);
  Outcome out;
  for (const DyckPath& path : enumerate_dyck(n)) {
    QPoly sum;
    for_each_history_over(path, [&](const DellacHistory& h) {
      ++out.total;
      sum += history_weight(h);
    });
    const QPoly expected = weight_mu(path, lambda);
    if (sum != expected && !out.counterexample)
      out.counterexample = path.to_string() + ": fiber sum " + sum.to_string() + " != " + expected.to_string();
  }
  return out;
}

Outcome check_lambda_lemma(int n) {
  Outcome out;
  for (int p = 1; p <= n; ++p) {
    ++out.total;
    QPoly sum;
    for (int a = 0; a <= p - 1; ++a)
      for (int b = a; b <= p - 1; ++b) sum += QPoly::monomial(2 * p - 2 - a - b);
    if (sum != lambda_seq(2 * p - 1) && !out.counterexample)
      out.counterexample = "p=" + std::to_string(p) + ": " + sum.to_string() + " != " + lambda_seq(2 * p - 1).to_string();
  }
  return out;
}

Outcome check_cfrac_agreement(int n) {
  const auto coeffs = cfrac_coeffs(lambda_prefix(n), n + 1);
  Outcome out;
  for (int k = 0; k <= n; ++k) {
    ++out.total;
    const QPoly c = cbar(k + 1);
    if (coeffs[k] != c && !out.counterexample)
      out.counterexample = "[t^" + std::to_string(k) + "] = " + coeffs[k].to_string() + ", cbar = " + c.to_string();
  }
  return out;
}

QPoly from_histogram(const std::vector<std::uint64_t>& hist) {
  std::vector<BigInt> c(hist.begin(), hist.end());
  return QPoly(std::move(c));
}

Outcome check_cbar_ways(int n) {
  const QPoly gandhi_route = cbar(n + 1);
  const QPoly dumont_route = from_histogram(st_histogram_parallel(n + 1, DumontClass::NormalizedDumont));
  const QPoly full_dumont = from_histogram(st_histogram_parallel(n + 1, DumontClass::All));
  const QPoly dellac_route = htilde(n);
  const auto lambda = lambda_prefix(n + 1);
  QPoly path_route;
  for (const DyckPath& p : enumerate_dyck(n)) path_route += weight_mu(p, lambda);
  const QPoly cf_route = cfrac_coeffs(lambda, n + 1)[n];

  Outcome out{BigInt(6), std::nullopt};
  auto differ = [&](const char* what, const QPoly& got) {
    if (got != gandhi_route && !out.counterexample)
      out.counterexample = std::string(what) + " gives " + got.to_string() + ", cbar gives " + gandhi_route.to_string();
  };
  differ("sum over D'_{n+1} of q^st", dumont_route);
  differ("htilde(n)", dellac_route);
  differ("lambda-weighted Dyck path sum", path_route);
  differ("continued fraction", cf_route);
  const QPoly c_at_one = gandhi(n + 1).eval_x(QPoly{1});
  if (full_dumont != c_at_one && !out.counterexample)
    out.counterexample = "sum over D_{n+1} of q^st != C_{n+1}(1,q)";
  return out;
}

const std::set<std::string> kDc3Golden{"41736285", "41736582", "71436285", "71436582",
                                       "51436287", "21736584", "21436587"};

Outcome check_dc3_table(int n) {
  const auto rows = table_rows(n);
  Outcome out{BigInt(rows.size()), std::nullopt};
  std::set<std::string> middle;
  for (const auto& r : rows) {
    middle.insert(r.perm.to_string());
    if (r.st != binom2(n) - r.inv || r.weight_exponent != r.st)
      out.counterexample = r.config.to_string() + ": st / inv / weight disagree";
  }
  if (!out.counterexample && middle != kDc3Golden) out.counterexample = "phi(DC(3)) differs from the reference table";
  return out;
}

struct Entry {
  CheckInfo info;
  std::function<Outcome(int)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all{
      {{"seidel-recurrence", 1, 400, "both Seidel recurrences hold entrywise on rows 1..n"}, check_seidel_recurrence},
      {{"h-divisibility", 0, 200, "2^k divides H_{2k+1} for k <= n"}, check_h_divisibility},
      {{"dc-count", 1, 8, "|DC(n)| = h_n"}, check_dc_count},
      {{"phi-bijection", 1, 6, "phi maps DC(n) onto D'_{n+1} and varphi inverts it"}, check_phi_bijection},
      {{"phi-statistic", 1, 7, "st(phi(C)) = binom(n,2) - inv(C)"}, check_phi_statistic},
      {{"tau-agreement", 1, 7, "tau_C(i) = i + l - r and phi_via_tau = phi"}, check_tau_agreement},
      {{"orbit-structure", 1, 5, "transposition orbits on D_{n+1} are free with one normalized member"}, check_orbit_structure},
      {{"switch-facts", 1, 6, "switching facts hold for every (C, i)"}, check_switch_facts},
      {{"switch-connectivity", 1, 6, "the switching graph of DC(n) is connected"}, check_switch_connectivity},
      {{"history-count", 1, 7, "|DH(n)| = h_n"}, check_history_count},
      {{"Phi-roundtrip", 1, 6, "Psi o Phi = id and Phi o Psi = id"}, check_phi_roundtrip},
      {{"Phi-weight", 1, 7, "weight(Phi(C)) = q^{binom(n,2) - inv(C)}"}, check_phi_weight},
      {{"fiber-sum", 1, 6, "history weights over a path sum to its lambda weight"}, check_fiber_sum},
      {{"lambda-lemma", 1, 60, "double sum of q-powers equals lambda_{2p-1} for p <= n"}, check_lambda_lemma},
      {{"cfrac-agreement", 1, 12, "continued fraction coefficients equal cbar"}, check_cfrac_agreement},
      {{"cbar-three-ways", 1, 6, "cbar(n+1) via Gandhi, D'_{n+1}, DC(n), Dyck paths and continued fraction"}, check_cbar_ways},
      {{"dc3-table", 3, 3, "phi(DC(3)) matches the reference correspondence table"}, check_dc3_table},
  };
  return all;
}

} // namespace

const std::vector<CheckInfo>& registered_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

const CheckInfo* find_check(std::string_view name) {
  for (const auto& info : registered_checks())
    if (info.name == name) return &info;
  return nullptr;
}

VerificationReport run_check(std::string_view name, int n) {
  const Entry* entry = nullptr;
  for (const auto& e : entries())
    if (e.info.name == name) entry = &e;
  if (!entry) throw std::invalid_argument("unknown check '" + std::string(name) + "'");
  if (n < entry->info.min_n || n > entry->info.max_n)
    throw std::out_of_range("check '" + entry->info.name + "' supports n in [" + std::to_string(entry->info.min_n) +
                            ", " + std::to_string(entry->info.max_n) + "], got " + std::to_string(n));

  VerificationReport report;
  report.check_name = entry->info.name;
  report.n = n;
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = entry->run(n);
    report.total_objects = o.total;
    report.counterexample = std::move(o.counterexample);
  } catch (const std::exception& e) {
    report.counterexample = std::string("exception: ") + e.what();
  }
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  report.status = report.counterexample ? Status::Fail : Status::Pass;
  return report;
}

// ---- correspondence table -------------------------------------------------

std::vector<TableRow> table_rows(int n) {
  if (n < 1 || n > kMaxTableN)
    throw std::out_of_range("table: n must be in [1, " + std::to_string(kMaxTableN) + "]");
  std::vector<TableRow> rows;
  for_each_dellac(n, [&](const DellacConfig& c) {
    TableRow r{c, phi(c), big_phi(c)};
    r.inv = inv(c);
    r.st = st(r.perm);
    r.weight_exponent = history_weight_exponent(r.history);
    rows.push_back(std::move(r));
  });
  return rows;
}

namespace {

std::string xi_string(const DellacHistory& h) {
  std::string s = "[";
  for (std::size_t i = 0; i < h.xi.size(); ++i)
    s += (i ? "," : "") + std::string("[") + std::to_string(h.xi[i].n1) + "," + std::to_string(h.xi[i].n2) + "]";
  return s + "]";
}

} // namespace

std::string emit_table(int n, TableFormat format) {
  const auto rows = table_rows(n);
  std::ostringstream os;
  switch (format) {
  case TableFormat::Json: {
    json arr = json::array();
    for (const auto& r : rows) {
      json row = to_json(r.history);
      arr.push_back({{"config", std::vector<int>(r.config.cols().begin(), r.config.cols().end())},
                     {"phi", r.perm.to_string()},
                     {"Phi", std::move(row)},
                     {"inv", r.inv},
                     {"st", r.st},
                     {"weight_exponent", r.weight_exponent}});
    }
    os << json{{"schema", kSchemaVersion}, {"n", n}, {"rows", std::move(arr)}}.dump(2) << '\n';
    break;
  }
  case TableFormat::Csv:
    os << "config,phi,path,xi,inv,st,weight_exponent\n";
    for (const auto& r : rows)
      os << '"' << r.config.to_string() << "\"," << r.perm.to_string() << ',' << r.history.path.to_string() << ",\""
         << xi_string(r.history) << "\"," << r.inv << ',' << r.st << ',' << r.weight_exponent << '\n';
    break;
  case TableFormat::Text:
    os << "C (columns by row)  phi(C)        Phi(C)                              inv  st  weight\n";
    for (const auto& r : rows) {
      std::string cfg = r.config.to_string(), perm = r.perm.to_string(), hist = r.history.to_string();
      cfg.resize(std::max<std::size_t>(cfg.size(), 19), ' ');
      perm.resize(std::max<std::size_t>(perm.size(), 13), ' ');
      hist.resize(std::max<std::size_t>(hist.size(), 35), ' ');
      os << cfg << ' ' << perm << ' ' << hist << ' ' << r.inv << "    " << r.st << "   "
         << monomial_string(r.weight_exponent) << '\n';
    }
    break;
  }
  return os.str();
}

} // namespace genocchi
