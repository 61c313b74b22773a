#pragma once

// Exhaustive sweeps over DC(n) and D_n.
//
// Every kernel comes in two flavours: a straightforward serial loop over the
// enumeration, and an OpenMP version that splits the enumeration into
// prefixes and completes them in parallel. The serial ones are the reference
// the parallel ones are tested against; the library itself calls the
// parallel ones.

#include "genocchi/dellac.hpp"
#include "genocchi/permutations.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace genocchi {

/// histogram[k] = #{C in DC(n) : inv(C) = k}
std::vector<std::uint64_t> inv_histogram_serial(int n);
std::vector<std::uint64_t> inv_histogram_parallel(int n);

/// histogram[k] = #{sigma in class of order 2n : st(sigma) = k}
std::vector<std::uint64_t> st_histogram_serial(int n, DumontClass cls);
std::vector<std::uint64_t> st_histogram_parallel(int n, DumontClass cls);

struct SweepResult {
  std::uint64_t total = 0;
  /// First failure in enumeration order, if any.
  std::optional<std::string> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

/// Returns a description of the failure, or nullopt if c passes.
/// Must be safe to call concurrently.
using DellacPredicate = std::function<std::optional<std::string>(const DellacConfig&)>;
using PermPredicate = std::function<std::optional<std::string>(const Perm&)>;

SweepResult sweep_dellac_serial(int n, const DellacPredicate& check);
SweepResult sweep_dellac_parallel(int n, const DellacPredicate& check);

SweepResult sweep_dumont_serial(int n, DumontClass cls, const PermPredicate& check);
SweepResult sweep_dumont_parallel(int n, DumontClass cls, const PermPredicate& check);

/// Thread count the parallel kernels will use (OpenMP max threads).
int kernel_threads();

} // namespace genocchi
