#include "opbook/sweep.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include "opbook/classifier.hpp"
#include "opbook/embedding.hpp"
#include "opbook/oracle.hpp"

namespace opbook {

namespace {

void extend(std::vector<int>& cur, int n, int max_next,
            std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int v = max_next; v >= 1; --v) {
    cur.push_back(v);
    extend(cur, n, v, out);
    cur.pop_back();
  }
}

std::string audit_one(const std::vector<int>& degrees, SweepCounts& counts) {
  DegreeSequence d(degrees);
  Outcome out = classify(d);
  switch (out.status) {
    case Outcome::Status::NotGraphic: {
      ++counts.not_graphic;
      bool any = false;
      oracle::enumerate_graphs(
          d,
          [&](const std::vector<Edge>&) {
            any = true;
            return false;
          },
          1);
      ++counts.oracle_checked;
      if (any) return "declared not graphic but a realization exists";
      return {};
    }
    case Outcome::Status::Realized: {
      if (!out.embedding || !out.cls) return "realized verdict without an embedding";
      if (*out.cls == RealizationClass::Forest)
        ++counts.forest;
      else
        ++counts.realized;
      VerifyReport vr = verify(d, *out.embedding, *out.cls);
      if (!vr.pass()) return "embedding failed verification: " + vr.detail;
      return {};
    }
    case Outcome::Status::NotOuterplanaric: {
      ++counts.not_outerplanaric;
      if (!out.certificate) return "rejection without a certificate";
      if (!out.certificate->holds(d)) return "certificate inequality does not hold";
      ++counts.oracle_checked;
      if (oracle::is_outerplanaric_bf(d))
        return "rejected but the oracle found an outerplanar realization";
      return {};
    }
  }
  return "unknown classifier status";
}

}  // namespace

std::vector<std::vector<int>> all_sequences_up_to(int max_n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  for (int n = 2; n <= max_n; ++n) extend(cur, n, n - 1, out);
  return out;
}

SweepResult run_sweep(int max_n, int threads, bool fail_fast,
                      const std::function<bool(long long, long long)>& progress) {
  std::vector<std::vector<int>> seqs = all_sequences_up_to(max_n);
  const long long total = static_cast<long long>(seqs.size());
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;

  SweepResult result;
  result.counts.total = total;
  std::atomic<long long> next{0};
  std::atomic<long long> done{0};
  std::atomic<bool> stop{false};
  std::mutex mtx;
  std::vector<SweepCounts> per_thread(threads);

  auto worker = [&](int tid) {
    SweepCounts& c = per_thread[tid];
    for (;;) {
      long long i = next.fetch_add(1);
      if (i >= total || stop.load()) return;
      std::string what;
      try {
        what = audit_one(seqs[i], c);
      } catch (const std::exception& e) {
        what = std::string("exception: ") + e.what();
      }
      if (!what.empty()) {
        std::lock_guard<std::mutex> lk(mtx);
        result.violations.push_back({seqs[i], what});
        if (fail_fast) stop.store(true);
      }
      long long d = done.fetch_add(1) + 1;
      if (progress && (d % 1024 == 0 || d == total)) {
        std::lock_guard<std::mutex> lk(mtx);
        if (!progress(d, total)) stop.store(true);
      }
    }
  };

  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  for (auto& th : pool) th.join();

  for (const SweepCounts& c : per_thread) {
    result.counts.not_graphic += c.not_graphic;
    result.counts.forest += c.forest;
    result.counts.realized += c.realized;
    result.counts.not_outerplanaric += c.not_outerplanaric;
    result.counts.oracle_checked += c.oracle_checked;
  }
  return result;
}

std::string power_notation(const std::vector<int>& degrees) {
  std::string out;
  size_t i = 0;
  while (i < degrees.size()) {
    size_t j = i;
    while (j < degrees.size() && degrees[j] == degrees[i]) ++j;
    if (!out.empty()) out += ' ';
    out += std::to_string(degrees[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace opbook
