// Internal helpers shared by the leaf-handling constructions: peel degree-1
// entries off a sorted sequence while decrementing the current maximum, and
// glue the corresponding leaves back onto a finished embedding.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "opbook/embedding.hpp"
#include "opbook/errors.hpp"

namespace opbook {
namespace detail {

struct PeelStep {
  int leaf_rank;    // removed degree-1 entry (original rank)
  int target_rank;  // decremented maximum (original rank)
  int new_value;    // target's value after the decrement
};

struct PeelResult {
  std::vector<int> residual;          // surviving values, nonincreasing
  std::vector<int> residual_to_orig;  // residual rank -> original rank
  std::vector<PeelStep> trace;        // in peel order
};

// Remove 1s from d (sorted nonincreasing), one at a time from the highest
// rank, decrementing the lowest-rank maximum each time. Runs while 1s remain
// and the current maximum is at least min_target; with must_finish the run
// must consume every 1 or it is an internal error. Unconsumed 1s stay in the
// residual.
inline PeelResult peel_ones(const std::vector<int>& d, int min_target,
                            bool must_finish) {
  const int n = static_cast<int>(d.size());
  int ones = 0;
  while (ones < n && d[n - 1 - ones] == 1) ++ones;

  std::vector<int> value(d);
  // Ordered by (value desc, rank asc); the front is the decrement target.
  std::set<std::pair<int, int>> live;
  for (int r = 0; r < n - ones; ++r) live.insert({-value[r], r});

  PeelResult res;
  int taken = 0;
  for (; taken < ones; ++taken) {
    auto top = live.begin();
    if (top == live.end() || -top->first < min_target) break;
    int leaf = n - 1 - taken;
    int target = top->second;
    live.erase(top);
    --value[target];
    live.insert({-value[target], target});
    res.trace.push_back({leaf, target, value[target]});
  }
  if (must_finish && taken < ones)
    throw InternalError("leaf peel ran out of decrement targets");
  for (const auto& [negv, r] : live) {
    res.residual.push_back(-negv);
    res.residual_to_orig.push_back(r);
  }
  for (int k = ones - taken; k >= 1; --k) {
    res.residual.push_back(1);
    res.residual_to_orig.push_back(n - ones + k - 1);
  }
  return res;
}

// The family-D volume bound keeps the maximum at 3 or more while 1s remain,
// so the full peel never creates a fresh 1.
inline PeelResult peel_all_ones(const std::vector<int>& d) {
  return peel_ones(d, 3, true);
}

// Actual degree of every id in the embedding, sized to hold ids 0..n_ids-1.
// Constructions are free to permute equal-degree vertices, so bookkeeping
// that feeds reattachment must read degrees off the embedding, not assume
// rank order.
inline std::vector<int> degrees_by_id(const BookEmbedding& emb, int n_ids) {
  std::vector<int> deg(n_ids, 0);
  for (const auto& page : emb.pages)
    for (const Edge& e : page) {
      ++deg[e.u];
      ++deg[e.v];
    }
  return deg;
}

// Rewrite vertex ids through new_id_of_old.
inline BookEmbedding relabel(const BookEmbedding& emb,
                             const std::vector<int>& new_id_of_old) {
  BookEmbedding out;
  out.spine.reserve(emb.spine.size());
  for (int v : emb.spine) out.spine.push_back(new_id_of_old[v]);
  for (const auto& page : emb.pages) {
    std::vector<Edge> np;
    np.reserve(page.size());
    for (const Edge& e : page)
      np.emplace_back(new_id_of_old[e.u], new_id_of_old[e.v]);
    out.pages.push_back(std::move(np));
  }
  return out;
}

// Replay a peel trace backwards over an embedding whose ids are original
// ranks. Each leaf attaches on page `page` right after a vertex whose current
// degree equals the recorded post-decrement value; the recorded target rank
// is preferred, any vertex of that degree works otherwise (constructions are
// free to permute equal degrees). One spine rebuild at the end.
inline void reattach_leaves(BookEmbedding& emb, std::vector<int>& degree_by_id,
                            const std::vector<PeelStep>& trace, int page) {
  if (trace.empty()) return;
  std::map<int, std::set<int>> by_degree;
  std::vector<bool> present(degree_by_id.size(), false);
  for (int v : emb.spine) {
    by_degree[degree_by_id[v]].insert(v);
    present[v] = true;
  }
  while (static_cast<int>(emb.pages.size()) <= page) emb.pages.emplace_back();

  std::map<int, std::vector<int>> hang;  // target id -> leaves, in attach order
  for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
    int target = it->target_rank;
    if (!present[target] || degree_by_id[target] != it->new_value) {
      auto bucket = by_degree.find(it->new_value);
      if (bucket == by_degree.end() || bucket->second.empty())
        throw InternalError("no reattachment target of the recorded degree");
      target = *bucket->second.begin();
    }
    by_degree[degree_by_id[target]].erase(target);
    ++degree_by_id[target];
    by_degree[degree_by_id[target]].insert(target);

    degree_by_id[it->leaf_rank] = 1;
    by_degree[1].insert(it->leaf_rank);
    present[it->leaf_rank] = true;
    hang[target].push_back(it->leaf_rank);
    emb.pages[page].emplace_back(target, it->leaf_rank);
  }

  std::vector<int> spine;
  spine.reserve(emb.spine.size() + trace.size());
  for (int v : emb.spine) {
    spine.push_back(v);
    auto it = hang.find(v);
    if (it != hang.end())
      for (int leaf : it->second) spine.push_back(leaf);
  }
  emb.spine = std::move(spine);
}

}  // namespace detail
}  // namespace opbook
