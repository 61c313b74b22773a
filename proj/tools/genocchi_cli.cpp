// genocchi: command-line front end. Exit codes: 0 pass, 1 fail, 2 usage error.

#include "genocchi/dellac.hpp"
#include "genocchi/dumont_bijection.hpp"
#include "genocchi/dyck_histories.hpp"
#include "genocchi/permutations.hpp"
#include "genocchi/qpoly.hpp"
#include "genocchi/sequences.hpp"
#include "genocchi/serialize.hpp"
#include "genocchi/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <iostream>
#include <map>
#include <string>
#include <vector>

using namespace genocchi;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool want_json(const std::string& format) { return format == "json"; }

int report(const std::vector<VerificationReport>& reports, bool as_json, const json& extra = json::object()) {
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (as_json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    json doc{{"schema", kSchemaVersion}, {"status", ok ? "pass" : "fail"}, {"reports", arr}};
    doc.update(extra);
    std::cout << doc.dump(2) << '\n';
  } else {
    for (const auto& r : reports) std::cout << r.to_text() << '\n';
    std::cout << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kExitPass : kExitFail;
}

int run_named(const std::vector<std::string>& names, int n, bool as_json) {
  std::vector<VerificationReport> reports;
  for (const auto& name : names) reports.push_back(run_check(name, n));
  return report(reports, as_json);
}

// seidel, sequence

int cmd_seidel(int rows, const std::string& format) {
  const auto t = seidel_triangle(rows);
  if (want_json(format)) {
    json doc = to_json(t);
    doc["schema"] = kSchemaVersion;
    std::cout << doc.dump() << '\n';
    return kExitPass;
  }
  for (int i = 1; i <= t.rows(); ++i) {
    const auto& row = t.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
    std::cout << '\n';
  }
  return kExitPass;
}

int cmd_sequence(const std::string& which, int upto) {
  if (which == "genocchi") {
    for (int n = 1; n <= upto; ++n) std::cout << genocchi::genocchi(n) << '\n';
  } else if (which == "median") {
    for (int n = 0; n <= upto; ++n) std::cout << median_genocchi(n) << '\n';
  } else {
    for (int n = 0; n <= upto; ++n) std::cout << normalized_h(n) << '\n';
  }
  return kExitPass;
}

// qpoly

int cmd_qpoly(const std::string& which, int n, const std::string& format) {
  const bool as_json = want_json(format);
  json doc{{"schema", kSchemaVersion}, {"kind", which}, {"n", n}};
  std::string text;
  if (which == "gandhi") {
    const XQPoly c = gandhi(n);
    doc["poly"] = to_json(c);
    text = c.to_string();
  } else if (which == "cbar") {
    const QPoly c = cbar(n);
    doc["poly"] = to_json(c);
    text = c.to_string();
  } else if (which == "lambda") {
    const QPoly l = lambda_seq(n);
    doc["poly"] = to_json(l);
    text = l.to_string();
  } else {
    // coefficients of t^0 .. t^n
    const auto lam = lambda_prefix(n);
    const auto coeffs = cfrac_coeffs(lam, n + 1);
    json arr = json::array();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      arr.push_back(to_json(coeffs[k]));
      text += "t^" + std::to_string(k) + ": " + coeffs[k].to_string() + (k + 1 < coeffs.size() ? "\n" : "");
    }
    doc["coeffs"] = arr;
  }
  std::cout << (as_json ? doc.dump() : text) << '\n';
  return kExitPass;
}

// perm

int cmd_perm_enumerate(int n, const std::string& cls_name) {
  static const std::map<std::string, DumontClass> classes{
      {"dumont", DumontClass::All}, {"ndumont", DumontClass::NormalizedDumont}, {"ngenocchi", DumontClass::NormalizedGenocchi}};
  for_each_dumont(n, classes.at(cls_name), [](const Perm& p) { std::cout << p.to_string() << '\n'; });
  return kExitPass;
}

// dellac

int cmd_dellac_enumerate(int n, bool stats) {
  for_each_dellac(n, [&](const DellacConfig& c) {
    json line{{"n", n}, {"col", std::vector<int>(c.cols().begin(), c.cols().end())}, {"inv", inv(c)}};
    if (stats) {
      std::vector<int> l, r;
      for (int i = 1; i <= 2 * n; ++i) {
        const auto s = refined_stats(c, i);
        l.push_back(s.l);
        r.push_back(s.r);
      }
      line["labels"] = json::array();
      for (int i = 1; i <= 2 * n; ++i) line["labels"].push_back(label(i, n));
      line["l"] = l;
      line["r"] = r;
    }
    std::cout << line.dump() << '\n';
  });
  return kExitPass;
}

int cmd_dellac_graph(int n, const std::string& format) {
  const auto g = switching_graph(n);
  if (format == "dot") {
    std::cout << g.to_dot();
    return kExitPass;
  }
  json vertices = json::array(), edges = json::array();
  for (const auto& v : g.vertices) vertices.push_back(v.to_string());
  for (std::size_t a = 0; a < g.adjacency.size(); ++a)
    for (int b : g.adjacency[a])
      if (static_cast<int>(a) < b) edges.push_back({a, b});
  std::cout << json{{"schema", kSchemaVersion}, {"n", n}, {"vertices", vertices}, {"edges", edges},
                    {"connected", g.connected()}}
                   .dump()
            << '\n';
  return kExitPass;
}

// bij

int cmd_bij_phi(const std::string& config) {
  const auto c = DellacConfig::parse(config);
  const Perm s = phi(c);
  std::cout << json{{"config", config}, {"phi", s.to_string()}, {"phi_inverse", s.inverse().to_string()},
                    {"inv", inv(c)}, {"st", st(s)}}
                   .dump()
            << '\n';
  return kExitPass;
}

int cmd_bij_varphi(const std::string& perm) {
  const Perm s = Perm::parse(perm);
  const auto c = varphi(s);
  std::cout << json{{"perm", s.to_string()}, {"config", c.to_string()}, {"canonical", phi(c).to_string()}}.dump()
            << '\n';
  return kExitPass;
}

// hist

int cmd_hist_phi(const std::string& config) {
  const auto h = big_phi(DellacConfig::parse(config));
  json doc = to_json(h);
  doc["config"] = config;
  std::cout << doc.dump() << '\n';
  return kExitPass;
}

int cmd_hist_psi(const std::string& path, const std::string& xi) {
  const DellacHistory h{DyckPath::parse(path), parse_xi(xi)};
  if (!validate_history(h)) throw std::invalid_argument("not a valid Dellac history: " + h.to_string());
  const auto c = big_psi(h);
  std::cout << json{{"path", path}, {"xi", to_json(h)["xi"]}, {"config", c.to_string()}, {"inv", inv(c)}}.dump()
            << '\n';
  return kExitPass;
}

int cmd_hist_moments(int n, const std::string& format) {
  const auto lam = lambda_prefix(n + 1);
  bool ok = true;
  json rows = json::array();
  for (int k = 0; k <= n; ++k) {
    QPoly path_sum;
    for (const auto& p : enumerate_dyck(k)) path_sum += weight_mu(p, lam);
    const QPoly c = cbar(k + 1);
    ok = ok && path_sum == c;
    rows.push_back({{"n", k}, {"path_sum", to_json(path_sum)}, {"cbar", to_json(c)}, {"equal", path_sum == c}});
    if (!want_json(format))
      std::cout << "n=" << k << "  path sum " << path_sum.to_string() << "  cbar(n+1) " << c.to_string()
                << (path_sum == c ? "  ok" : "  MISMATCH") << '\n';
  }
  if (want_json(format))
    std::cout << json{{"schema", kSchemaVersion}, {"status", ok ? "pass" : "fail"}, {"rows", rows}}.dump() << '\n';
  else
    std::cout << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitPass : kExitFail;
}

// verify

int cmd_verify_all(int max_n, int jobs, long long seed, const std::string& format) {
  std::vector<std::pair<std::string, int>> tasks;
  for (const auto& c : registered_checks())
    for (int n = c.min_n; n <= std::min(c.max_n, max_n); ++n) tasks.emplace_back(c.name, n);
  std::vector<VerificationReport> reports(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    try {
      reports[t] = run_check(tasks[t].first, tasks[t].second);
    } catch (const std::exception& e) {
      reports[t] = {tasks[t].first, tasks[t].second, 0, Status::Fail, std::string("exception: ") + e.what(), 0};
    }
  }
  return report(reports, want_json(format), {{"max_n", max_n}, {"jobs", jobs}, {"seed", seed}});
}

int cmd_table(int n, const std::string& format) {
  static const std::map<std::string, TableFormat> formats{
      {"text", TableFormat::Text}, {"json", TableFormat::Json}, {"csv", TableFormat::Csv}};
  std::cout << emit_table(n, formats.at(format));
  return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genocchi numbers, Dellac configurations, Dumont permutations and Dellac histories"};
  app.require_subcommand(1);
  int code = kExitPass;

  auto* seidel = app.add_subcommand("seidel", "print the Seidel triangle");
  int rows = 0;
  std::string seidel_format = "text";
  seidel->add_option("--rows", rows, "number of rows")->required()->check(CLI::Range(0, 2000));
  seidel->add_option("--format", seidel_format)->check(CLI::IsMember({"text", "json"}));
  seidel->callback([&] { code = cmd_seidel(rows, seidel_format); });

  auto* sequence = app.add_subcommand("sequence", "print G_{2n}, H_{2n+1} or h_n, one per line");
  std::string seq_name;
  int upto = 0;
  sequence->add_option("name", seq_name)->required()->check(CLI::IsMember({"genocchi", "median", "h"}));
  sequence->add_option("--upto", upto)->required()->check(CLI::Range(0, 1000));
  sequence->callback([&] { code = cmd_sequence(seq_name, upto); });

  auto* qpoly = app.add_subcommand("qpoly", "q-Gandhi polynomials, cbar, lambda, continued fraction");
  std::string qpoly_name, qpoly_format = "text";
  int qpoly_n = 0;
  qpoly->add_option("name", qpoly_name)->required()->check(CLI::IsMember({"gandhi", "cbar", "lambda", "cfrac"}));
  qpoly->add_option("--n", qpoly_n)->required()->check(CLI::Range(1, 40));
  qpoly->add_option("--format", qpoly_format)->check(CLI::IsMember({"text", "json"}));
  qpoly->callback([&] { code = cmd_qpoly(qpoly_name, qpoly_n, qpoly_format); });

  auto* perm = app.add_subcommand("perm", "Dumont permutations");
  perm->require_subcommand(1);
  auto* perm_enum = perm->add_subcommand("enumerate", "list a class of order 2n in lexicographic order");
  int perm_n = 0;
  std::string perm_class = "dumont";
  perm_enum->add_option("--n", perm_n)->required()->check(CLI::Range(1, 8));
  perm_enum->add_option("--class", perm_class)->check(CLI::IsMember({"dumont", "ndumont", "ngenocchi"}));
  perm_enum->callback([&] { code = cmd_perm_enumerate(perm_n, perm_class); });

  auto* dellac = app.add_subcommand("dellac", "Dellac configurations");
  dellac->require_subcommand(1);
  auto* dellac_enum = dellac->add_subcommand("enumerate", "one JSON object per configuration");
  int dellac_n = 0;
  bool dellac_stats = false;
  dellac_enum->add_option("--n", dellac_n)->required()->check(CLI::Range(1, 9));
  dellac_enum->add_flag("--stats", dellac_stats, "add per-row labels and l/r counts");
  dellac_enum->callback([&] { code = cmd_dellac_enumerate(dellac_n, dellac_stats); });
  auto* dellac_graph = dellac->add_subcommand("graph", "switching graph");
  int graph_n = 0;
  std::string graph_format = "dot";
  dellac_graph->add_option("--n", graph_n)->required()->check(CLI::Range(1, 7));
  dellac_graph->add_option("--format", graph_format)->check(CLI::IsMember({"dot", "json"}));
  dellac_graph->callback([&] { code = cmd_dellac_graph(graph_n, graph_format); });

  auto* bij = app.add_subcommand("bij", "the bijection phi: DC(n) -> D'_{n+1}");
  bij->require_subcommand(1);
  std::string bij_config, bij_perm;
  int bij_n = 0;
  auto* bij_phi = bij->add_subcommand("phi", "apply phi to a configuration");
  bij_phi->add_option("--config", bij_config, "column of each row, e.g. 1,2,1,2")->required();
  bij_phi->callback([&] { code = cmd_bij_phi(bij_config); });
  auto* bij_varphi = bij->add_subcommand("varphi", "apply varphi to a Dumont permutation");
  bij_varphi->add_option("--perm", bij_perm)->required();
  bij_varphi->callback([&] { code = cmd_bij_varphi(bij_perm); });
  auto* bij_check = bij->add_subcommand("check-dumont", "round trip and statistic over DC(n)");
  std::string bij_format = "text";
  bij_check->add_option("--n", bij_n)->required();
  bij_check->add_option("--format", bij_format)->check(CLI::IsMember({"text", "json"}));
  bij_check->callback(
      [&] { code = run_named({"phi-bijection", "phi-statistic", "tau-agreement"}, bij_n, want_json(bij_format)); });

  auto* hist = app.add_subcommand("hist", "Dellac histories");
  hist->require_subcommand(1);
  std::string hist_config, hist_path, hist_xi, hist_format = "text";
  int hist_n = 0;
  auto* hist_phi = hist->add_subcommand("phi", "configuration -> history");
  hist_phi->add_option("--config", hist_config)->required();
  hist_phi->callback([&] { code = cmd_hist_phi(hist_config); });
  auto* hist_psi = hist->add_subcommand("psi", "history -> configuration");
  hist_psi->add_option("--path", hist_path, "e.g. UUDD")->required();
  hist_psi->add_option("--xi", hist_xi, "e.g. [[0,0],[0,0]]")->required();
  hist_psi->callback([&] { code = cmd_hist_psi(hist_path, hist_xi); });
  auto* hist_check = hist->add_subcommand("check", "round trip and weight identity over DC(n)");
  hist_check->add_option("--n", hist_n)->required();
  hist_check->add_option("--format", hist_format)->check(CLI::IsMember({"text", "json"}));
  hist_check->callback(
      [&] { code = run_named({"history-count", "Phi-roundtrip", "Phi-weight"}, hist_n, want_json(hist_format)); });
  auto* hist_moments = hist->add_subcommand("moments", "lambda-weighted path sums against cbar");
  hist_moments->add_option("--n", hist_n)->required()->check(CLI::Range(0, 10));
  hist_moments->add_option("--format", hist_format)->check(CLI::IsMember({"text", "json"}));
  hist_moments->callback([&] { code = cmd_hist_moments(hist_n, hist_format); });

  auto* verify = app.add_subcommand("verify", "run a named check, or every check with --all");
  std::string check_name, verify_format = "text";
  int verify_n = 0, max_n = 5, jobs = 1;
  long long seed = 1;
  bool all = false;
  verify->add_option("check", check_name, "check name");
  verify->add_option("--n", verify_n);
  verify->add_flag("--all", all);
  verify->add_option("--max-n", max_n)->check(CLI::Range(1, 400));
  verify->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  verify->add_option("--seed", seed, "recorded in the report");
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
  verify->callback([&] {
    if (all) {
      if (!check_name.empty()) throw UsageError("--all takes no check name");
      code = cmd_verify_all(max_n, jobs, seed, verify_format);
      return;
    }
    if (check_name.empty()) throw UsageError("give a check name or --all");
    if (verify->count("--n") == 0) throw UsageError("--n is required");
    code = run_named({check_name}, verify_n, want_json(verify_format));
  });

  auto* table = app.add_subcommand("table", "phi and big_phi side by side over DC(n)");
  int table_n = 3;
  std::string table_format = "text";
  table->add_option("--n", table_n)->required();
  table->add_option("--format", table_format)->check(CLI::IsMember({"text", "json", "csv"}));
  table->callback([&] { code = cmd_table(table_n, table_format); });

  auto* checks = app.add_subcommand("checks", "list the registered checks");
  checks->callback([&] {
    for (const auto& c : registered_checks())
      std::cout << c.name << "  n=" << c.min_n << ".." << c.max_n << "  " << c.summary << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return code;
}
