#pragma once

// Benchmark harness: summit-set sizes and timings over random samples from
// the generator families, emitted as CSV.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <vector>

#include "garside/braid.hpp"
#include "garside/generators.hpp"
#include "garside/random.hpp"
#include "garside/summit.hpp"

namespace garside {

struct BenchConfig {
  int test = 1;
  int n = 5;
  int l = 3;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  std::optional<std::chrono::milliseconds> budget;
  std::optional<std::size_t> size_cap;
  std::vector<SummitKind> kinds{SummitKind::ultra, SummitKind::star};
};

/// Statistics over the samples that completed within budget.
struct BenchRow {
  int test = 0;
  int n = 0;
  int l = 0;
  std::size_t samples = 0;
  SummitKind kind = SummitKind::star;
  double mean_size = 0;
  std::size_t max_size = 0;
  double mean_ms = 0;
  double max_ms = 0;
  std::size_t timeouts = 0;

  std::size_t completed() const { return samples - timeouts; }
};

/// Called after each (sample, kind); `set` is null when the budget ran out.
/// Returning false stops the run after the current sample.
using BenchObserver =
    std::function<bool(std::size_t index, const Braid& x, SummitKind kind, const SummitSet<BraidStructure>* set)>;

inline std::vector<BenchRow> run_bench(const BenchConfig& cfg, const BenchObserver& observe = {}) {
  BraidStructure g(cfg.n);
  std::vector<BenchRow> rows;
  std::vector<double> size_sum(cfg.kinds.size(), 0), ms_sum(cfg.kinds.size(), 0);
  for (SummitKind k : cfg.kinds) rows.push_back(BenchRow{cfg.test, cfg.n, cfg.l, 0, k});

  for (std::size_t i = 0; i < cfg.samples; ++i) {
    Braid x = gen_test(cfg.test, cfg.n, cfg.l, mix_seed(cfg.seed, i));
    bool keep_going = true;
    for (std::size_t k = 0; k < cfg.kinds.size(); ++k) {
      BenchRow& row = rows[k];
      ++row.samples;
      const auto start = std::chrono::steady_clock::now();
      std::optional<SummitSet<BraidStructure>> set;
      try {
        set = summit_set(g, x, cfg.kinds[k], Budget(cfg.budget, cfg.size_cap));
      } catch (const BudgetExceeded&) {
        ++row.timeouts;
      }
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (set) {
        size_sum[k] += static_cast<double>(set->size());
        ms_sum[k] += ms;
        row.max_size = std::max(row.max_size, set->size());
        row.max_ms = std::max(row.max_ms, ms);
      }
      if (observe && !observe(i, x, cfg.kinds[k], set ? &*set : nullptr)) keep_going = false;
    }
    if (!keep_going) break;
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto done = static_cast<double>(rows[k].completed());
    if (done > 0) {
      rows[k].mean_size = size_sum[k] / done;
      rows[k].mean_ms = ms_sum[k] / done;
    }
  }
  return rows;
}

inline void write_csv_header(std::ostream& out, std::uint64_t seed) {
  out << "# seed=" << seed << "\n";
  out << "test,n,l,samples,kind,mean_size,max_size,mean_ms,max_ms,timeouts\n";
}

inline void write_csv_row(std::ostream& out, const BenchRow& r) {
  out << r.test << ',' << r.n << ',' << r.l << ',' << r.samples << ',' << to_string(r.kind) << ',' << std::fixed
      << std::setprecision(2) << r.mean_size << ',' << r.max_size << ',' << r.mean_ms << ',' << r.max_ms << ','
      << r.timeouts << '\n';
  out.unsetf(std::ios::floatfield);
}

}  // namespace garside
