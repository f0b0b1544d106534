#include "opbook/reductions.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "opbook/forest.hpp"
#include "opbook/hamiltonian.hpp"
#include "opbook/lowdeg.hpp"
#include "opbook/maxvol.hpp"
#include "peel.hpp"

namespace opbook {

namespace {

void require(bool cond, const char* clause) {
  if (!cond) throw PreconditionFailed(clause);
}

Labeled sorted_labeled(const std::vector<int>& value, const std::vector<bool>& alive) {
  std::vector<std::pair<int, int>> rows;  // (-value, label)
  for (int i = 0; i < static_cast<int>(value.size()); ++i)
    if (alive[i]) rows.push_back({-value[i], i});
  std::sort(rows.begin(), rows.end());
  Labeled out;
  for (const auto& [nv, lab] : rows) {
    out.deg.push_back(-nv);
    out.label.push_back(lab);
  }
  return out;
}

}  // namespace

std::pair<Labeled, ShrinkTrace> algorithm3_shrink(const DegreeSequence& d) {
  const int n = d.n();
  require(d[n - 1] == 2, "minimum degree must be 2");

  std::vector<int> value = d.degrees();
  std::vector<bool> alive(n, true);
  long long sum = d.volume();
  int nn = n, w2 = d.multiplicity(2);
  int low2 = n;  // labels [low2, next2) hold the surviving 2s
  int next2 = n;
  while (low2 > 0 && value[low2 - 1] == 2) --low2;

  std::priority_queue<std::pair<int, int>> heap;  // (value, -label), lazy
  for (int i = 0; i < low2; ++i) heap.push({value[i], -i});

  ShrinkTrace trace;
  while (sum < 4LL * nn - 6 && w2 > 3 && !heap.empty()) {
    auto [v, ni] = heap.top();
    if (v != value[-ni] || !alive[-ni]) {
      heap.pop();
      continue;
    }
    if (v <= 4) break;
    heap.pop();
    int target = -ni;
    value[target] -= 2;
    heap.push({value[target], ni});
    // Drop the two highest-label 2s.
    int a = next2 - 1, b = next2 - 2;
    next2 -= 2;
    alive[a] = alive[b] = false;
    sum -= 6;
    nn -= 2;
    w2 -= 2;
    trace.push_back({target, value[target], b, a});
  }
  if (next2 < low2) throw InternalError("shrink consumed too many 2s");
  return {sorted_labeled(value, alive), trace};
}

BookEmbedding algorithm4_expand(BookEmbedding emb, const std::vector<int>& degs_by_id,
                                const ShrinkTrace& trace) {
  if (trace.empty()) return emb;
  std::vector<int> degree = degs_by_id;
  std::map<int, std::set<int>> by_degree;
  std::vector<bool> present(degree.size(), false);
  for (int v : emb.spine) {
    by_degree[degree[v]].insert(v);
    present[v] = true;
  }

  std::map<int, std::vector<std::pair<int, int>>> hang;
  auto& page1 = emb.pages[0];
  for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
    int v = it->target_label;
    if (!present[v] || degree[v] != it->new_value) {
      auto bucket = by_degree.find(it->new_value);
      if (bucket == by_degree.end() || bucket->second.empty())
        throw InternalError("no expansion target of the recorded degree");
      v = *bucket->second.begin();
    }
    int u = it->removed_a, w = it->removed_b;
    by_degree[degree[v]].erase(v);
    degree[v] += 2;
    by_degree[degree[v]].insert(v);
    degree[u] = degree[w] = 2;
    by_degree[2].insert(u);
    by_degree[2].insert(w);
    present[u] = present[w] = true;
    hang[v].push_back({u, w});
    page1.emplace_back(v, u);
    page1.emplace_back(v, w);
    page1.emplace_back(u, w);
  }

  std::vector<int> spine;
  spine.reserve(emb.spine.size() + 2 * trace.size());
  for (int v : emb.spine) {
    spine.push_back(v);
    auto it = hang.find(v);
    if (it != hang.end())
      for (const auto& [u, w] : it->second) {
        spine.push_back(u);
        spine.push_back(w);
      }
  }
  emb.spine = std::move(spine);
  return emb;
}

std::pair<Labeled, StripTrace> algorithm5_strip(const DegreeSequence& d) {
  detail::PeelResult peel = detail::peel_ones(d.degrees(), 5, false);
  Labeled lab;
  lab.deg = peel.residual;
  lab.label = peel.residual_to_orig;
  StripTrace trace;
  for (const auto& st : peel.trace)
    trace.push_back({st.leaf_rank, st.target_rank, st.new_value});
  return {lab, trace};
}

std::pair<BookEmbedding, RealizationClass> realize_nonmax(const DegreeSequence& d) {
  require(in_family_d(d), "sequence must lie in family D");
  const int n = d.n();
  require(d[0] >= 5, "maximum degree must be at least 5");
  require(d[0] <= n - 1, "maximum degree must fit a simple graph");
  require(d[1] >= 4, "second degree must exceed 3");
  require(d[n - 1] == 2, "minimum degree must be 2");
  require(d.multiplicity(2) > 2, "more than two 2s required");
  require(2 * edge_deficit(d) >= low_degree_surplus(d), "deficit budget exhausted");

  auto [lab, trace] = algorithm3_shrink(d);
  DegreeSequence bar(lab.deg);
  const int bn = bar.n();

  BookEmbedding emb;
  RealizationClass cls;
  if (bar[0] <= 4) {
    std::tie(emb, cls) = realize_d1le4_tail22(bar);
  } else if (bar.volume() == 4LL * bn - 6) {
    if (bar.multiplicity(2) == 2) {
      emb = realize_hamiltonian(bar);
      cls = RealizationClass::OP;
    } else {
      std::tie(emb, cls) = realize_maxvol(bar);
    }
  } else if (bar.multiplicity(2) == 2) {
    emb = realize_hamiltonian(bar);
    cls = RealizationClass::OP;
  } else if (bar.multiplicity(2) == 3) {
    emb = realize_many_twos(bar);
    cls = RealizationClass::OP;
  } else {
    throw InternalError("shrink stopped in an unhandled state");
  }

  emb = detail::relabel(emb, lab.label);
  std::vector<int> degree = detail::degrees_by_id(emb, n);
  emb = algorithm4_expand(std::move(emb), degree, trace);
  return {std::move(emb), cls};
}

std::pair<BookEmbedding, RealizationClass> realize_small_d2(const DegreeSequence& d) {
  require(in_family_d(d), "sequence must lie in family D");
  const int n = d.n();
  require(d[0] >= 5, "maximum degree must be at least 5");
  require(d[0] <= n - 1, "maximum degree must fit a simple graph");
  require(d[1] <= 3, "second degree must be at most 3");

  detail::PeelResult peel = detail::peel_all_ones(d.degrees());
  const std::vector<int>& dp = peel.residual;
  const int np = static_cast<int>(dp.size());

  BookEmbedding emb;
  RealizationClass cls;
  if (dp[0] <= 4) {
    std::tie(emb, cls) = realize_d1le4(DegreeSequence(dp));
  } else {
    // Hub route: strip the one big vertex onto page 2 as a star; what is
    // left is all 2s and 3s and lands in one of the one-page shapes.
    const int hub_deg = dp[0];
    std::vector<int> rest(np - 1);
    for (int i = 1; i < np; ++i) rest[i - 1] = dp[i] - (i <= hub_deg ? 1 : 0);
    std::vector<int> order(np - 1);
    for (int i = 0; i < np - 1; ++i) order[i] = i + 1;  // residual rank in dp
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return rest[a - 1] > rest[b - 1]; });
    std::vector<int> sorted(np - 1);
    long long rest_sum = 0;
    for (int r = 0; r < np - 1; ++r) {
      sorted[r] = rest[order[r] - 1];
      if (sorted[r] < 1) throw InternalError("hub split produced a zero");
      rest_sum += sorted[r];
    }

    DegreeSequence core(sorted);
    if (rest_sum <= 2LL * (np - 1) - 2)
      emb = realize_forestic(core).first;
    else
      emb = realize_many_twos(core);
    emb = detail::relabel(emb, order);

    emb.spine.push_back(0);  // the hub rides at the end of the spine
    emb.pages.emplace_back();
    for (int i = 1; i <= hub_deg; ++i) emb.pages[1].emplace_back(0, i);
    cls = RealizationClass::OPbi;
  }

  emb = detail::relabel(emb, peel.residual_to_orig);
  std::vector<int> degree = detail::degrees_by_id(emb, n);
  detail::reattach_leaves(emb, degree, peel.trace, 0);
  return {std::move(emb), cls};
}

std::pair<BookEmbedding, RealizationClass> realize_tail2(const DegreeSequence& d) {
  require(in_family_d(d), "sequence must lie in family D");
  const int n = d.n();
  require(d[0] >= 5, "maximum degree must be at least 5");
  require(d[n - 1] == 2 && d[n - 2] == 2, "last two degrees must be 2");
  if (d.multiplicity(2) == 2) return {realize_hamiltonian(d), RealizationClass::OP};
  if (d[1] <= 3) return realize_small_d2(d);
  return realize_nonmax(d);
}

std::pair<BookEmbedding, RealizationClass> realize_with_ones(const DegreeSequence& d) {
  require(in_family_d(d), "sequence must lie in family D");
  const int n = d.n();
  require(d[0] >= 5, "maximum degree must be at least 5");
  require(d[0] <= n - 1, "maximum degree must fit a simple graph");
  require(d[n - 2] <= 2 && d[n - 3] <= 3, "tail must stay low");
  require(2 * edge_deficit(d) >= low_degree_surplus(d), "deficit budget exhausted");

  if (d[n - 1] == 2) return realize_tail2(d);
  require(d[n - 1] == 1, "minimum degree must be 1 or 2");

  // Strip 1s against the big degrees; both family inequalities are invariant
  // under each step, so the residual inherits them.
  detail::PeelResult peel = detail::peel_ones(d.degrees(), 5, false);
  DegreeSequence bar(peel.residual);
  const int bn = bar.n();

  BookEmbedding emb;
  RealizationClass cls;
  if (bar[0] <= 4) {
    std::tie(emb, cls) = realize_d1le4(bar);
  } else if (bar[bn - 1] == 2 && bar[bn - 2] == 2) {
    std::tie(emb, cls) = realize_tail2(bar);
  } else if (bar[bn - 2] == 3) {
    std::tie(emb, cls) = realize_tail_ge23(bar);
  } else {
    throw InternalError("strip stopped with an unhandled tail");
  }

  emb = detail::relabel(emb, peel.residual_to_orig);
  std::vector<int> degree = detail::degrees_by_id(emb, n);
  detail::reattach_leaves(emb, degree, peel.trace, 0);
  return {std::move(emb), cls};
}

}  // namespace opbook
