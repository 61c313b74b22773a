#include "genocchi/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace genocchi {

int kernel_threads() { return omp_get_max_threads(); }

namespace {

// Deepen the prefix split until there is enough work to balance dynamically.
template <class PrefixFn>
std::vector<std::vector<int>> split(int max_depth, PrefixFn prefixes) {
  const std::size_t wanted = 16 * static_cast<std::size_t>(kernel_threads());
  std::vector<std::vector<int>> out = prefixes(0);
  for (int d = 1; d <= max_depth && out.size() < wanted; ++d) out = prefixes(d);
  return out;
}

void bump(std::vector<std::uint64_t>& hist, long long k) {
  if (k < 0) throw IntegrityError("histogram: negative statistic " + std::to_string(k));
  if (static_cast<std::size_t>(k) >= hist.size()) hist.resize(k + 1, 0);
  ++hist[k];
}

void merge_into(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
  if (from.size() > into.size()) into.resize(from.size(), 0);
  for (std::size_t k = 0; k < from.size(); ++k) into[k] += from[k];
}

template <class T, class Pred>
std::optional<std::string> guarded(const Pred& check, const T& obj) {
  try {
    return check(obj);
  } catch (const std::exception& e) {
    return obj.to_string() + ": exception: " + e.what();
  }
}

} // namespace

std::vector<std::uint64_t> inv_histogram_serial(int n) {
  std::vector<std::uint64_t> hist;
  for_each_dellac(n, [&](const DellacConfig& c) { bump(hist, inv(c)); });
  return hist;
}

std::vector<std::uint64_t> inv_histogram_parallel(int n) {
  const auto work = split(2 * n, [n](int d) { return dellac_prefixes(n, d); });
  std::vector<std::uint64_t> hist;
  const long long count = static_cast<long long>(work.size());
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic)
    for (long long w = 0; w < count; ++w)
      for_each_dellac_from(n, work[w], [&](const DellacConfig& c) { bump(local, inv(c)); });
#pragma omp critical
    merge_into(hist, local);
  }
  return hist;
}

std::vector<std::uint64_t> st_histogram_serial(int n, DumontClass cls) {
  std::vector<std::uint64_t> hist;
  for_each_dumont(n, cls, [&](const Perm& p) { bump(hist, st(p)); });
  return hist;
}

std::vector<std::uint64_t> st_histogram_parallel(int n, DumontClass cls) {
  const auto work = split(2 * n, [n](int d) { return dumont_prefixes(n, d); });
  std::vector<std::uint64_t> hist;
  const long long count = static_cast<long long>(work.size());
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic)
    for (long long w = 0; w < count; ++w)
      for_each_dumont_from(n, work[w], cls, [&](const Perm& p) { bump(local, st(p)); });
#pragma omp critical
    merge_into(hist, local);
  }
  return hist;
}

SweepResult sweep_dellac_serial(int n, const DellacPredicate& check) {
  SweepResult res;
  for_each_dellac(n, [&](const DellacConfig& c) {
    ++res.total;
    if (res.counterexample) return;
    res.counterexample = guarded(check, c);
  });
  return res;
}

SweepResult sweep_dellac_parallel(int n, const DellacPredicate& check) {
  const auto work = split(2 * n, [n](int d) { return dellac_prefixes(n, d); });
  std::vector<SweepResult> parts(work.size());
  const long long count = static_cast<long long>(work.size());
#pragma omp parallel for schedule(dynamic)
  for (long long w = 0; w < count; ++w) {
    SweepResult& part = parts[w];
    for_each_dellac_from(n, work[w], [&](const DellacConfig& c) {
      ++part.total;
      if (!part.counterexample) part.counterexample = guarded(check, c);
    });
  }
  SweepResult res;
  for (auto& part : parts) {
    res.total += part.total;
    if (!res.counterexample && part.counterexample) res.counterexample = std::move(part.counterexample);
  }
  return res;
}

SweepResult sweep_dumont_serial(int n, DumontClass cls, const PermPredicate& check) {
  SweepResult res;
  for_each_dumont(n, cls, [&](const Perm& p) {
    ++res.total;
    if (res.counterexample) return;
    res.counterexample = guarded(check, p);
  });
  return res;
}

SweepResult sweep_dumont_parallel(int n, DumontClass cls, const PermPredicate& check) {
  const auto work = split(2 * n, [n](int d) { return dumont_prefixes(n, d); });
  std::vector<SweepResult> parts(work.size());
  const long long count = static_cast<long long>(work.size());
#pragma omp parallel for schedule(dynamic)
  for (long long w = 0; w < count; ++w) {
    SweepResult& part = parts[w];
    for_each_dumont_from(n, work[w], cls, [&](const Perm& p) {
      ++part.total;
      if (!part.counterexample) part.counterexample = guarded(check, p);
    });
  }
  SweepResult res;
  for (auto& part : parts) {
    res.total += part.total;
    if (!res.counterexample && part.counterexample) res.counterexample = std::move(part.counterexample);
  }
  return res;
}

} // namespace genocchi
