#pragma once

#include "genocchi/common.hpp"
#include "genocchi/dellac.hpp"
#include "genocchi/dyck_histories.hpp"
#include "genocchi/permutations.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace genocchi {

enum class Status { Pass, Fail };

struct VerificationReport {
  std::string check_name;
  int n = 0;
  BigInt total_objects = 0;
  Status status = Status::Pass;
  std::optional<std::string> counterexample; ///< always set when status == Fail
  long long elapsed_ms = 0;

  bool passed() const { return status == Status::Pass; }
  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct CheckInfo {
  std::string name;
  int min_n;
  int max_n;
  std::string summary;
};

/// Registered checks in a fixed order.
const std::vector<CheckInfo>& registered_checks();
const CheckInfo* find_check(std::string_view name);

/// Runs one named check at size n. Throws std::invalid_argument for an
/// unknown name and std::out_of_range when n is outside the check's range.
VerificationReport run_check(std::string_view name, int n);

struct TableRow {
  DellacConfig config;
  Perm perm;             ///< phi(C)
  DellacHistory history; ///< big_phi(C)
  long long inv = 0;
  long long st = 0;
  long long weight_exponent = 0;
};

inline constexpr int kMaxTableN = 4;

/// One row per C in DC(n), enumeration order. n in [1, kMaxTableN].
std::vector<TableRow> table_rows(int n);

enum class TableFormat { Text, Json, Csv };
std::string emit_table(int n, TableFormat format);

} // namespace genocchi
