#pragma once

#include <functional>
#include <string>
#include <vector>

#include "opbook/degseq.hpp"

namespace opbook {

struct SweepCounts {
  long long total = 0;
  long long not_graphic = 0;
  long long forest = 0;
  long long realized = 0;       // non-forest realizations
  long long not_outerplanaric = 0;
  long long oracle_checked = 0;
};

struct SweepViolation {
  std::vector<int> degrees;
  std::string what;
};

struct SweepResult {
  SweepCounts counts;
  std::vector<SweepViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Every nonincreasing sequence with 2 <= n <= max_n and 1 <= d_i <= n-1.
std::vector<std::vector<int>> all_sequences_up_to(int max_n);

// Classify-and-audit over the full range: every realization must verify with
// its class, every rejection must be oracle-confirmed non-outerplanaric, and
// every oracle-outerplanaric member of family D must be realized. fail_fast
// stops at the first violation; progress (nullable) is called per sequence
// batch with (done, total) and may return false to abort the sweep.
SweepResult run_sweep(int max_n, int threads, bool fail_fast,
                      const std::function<bool(long long, long long)>& progress = {});

std::string power_notation(const std::vector<int>& degrees);

}  // namespace opbook
