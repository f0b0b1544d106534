#include "opbook/forest.hpp"

#include <numeric>
#include <string>

namespace opbook {

CaterpillarRealization caterpillar_decompose(const std::vector<int>& degrees) {
  const int n = static_cast<int>(degrees.size());
  long long sum = 0;
  for (int i = 0; i < n; ++i) {
    if (degrees[i] < 1) throw NotForestic("degrees must be positive");
    if (i > 0 && degrees[i] > degrees[i - 1])
      throw NotForestic("degrees must be nonincreasing");
    sum += degrees[i];
  }
  if (sum % 2 != 0) throw NotForestic("odd volume");
  if (sum > 2LL * n - 2) throw NotForestic("volume exceeds 2n-2");

  int s = 0;
  while (s < n && degrees[s] >= 2) ++s;
  const int ones = n - s;

  CaterpillarRealization r;
  r.spine.resize(s);
  std::iota(r.spine.begin(), r.spine.end(), 0);
  r.leaves.resize(s);

  // Path edges cover 2 of each internal spine degree and 1 at the two ends;
  // the rest is leaves, and whatever 1s remain pair off into a matching.
  long long need = 0;
  for (int i = 0; i < s; ++i) {
    int k = degrees[i];
    if (s >= 2) k -= (i == 0 || i == s - 1) ? 1 : 2;
    need += k;
  }
  if (need > ones)
    throw InternalError("caterpillar needs more leaves than available");

  int next = s;
  for (int i = 0; i < s; ++i) {
    int k = degrees[i];
    if (s >= 2) k -= (i == 0 || i == s - 1) ? 1 : 2;
    for (int j = 0; j < k; ++j) r.leaves[i].push_back(next++);
  }
  if ((n - next) % 2 != 0) throw InternalError("odd number of unmatched leaves");
  while (next < n) {
    r.matching.emplace_back(next, next + 1);
    next += 2;
  }
  return r;
}

std::pair<BookEmbedding, CaterpillarPlan> realize_forestic(const DegreeSequence& d) {
  if (family_of(d) != FamilyTag::Forestic)
    throw NotForestic("volume " + std::to_string(d.volume()) + " with n = " +
                      std::to_string(d.n()));
  CaterpillarRealization r = caterpillar_decompose(d.degrees());

  BookEmbedding emb;
  emb.pages.resize(1);
  auto& page = emb.pages[0];
  const int s = static_cast<int>(r.spine.size());
  for (int i = 0; i < s; ++i) {
    emb.spine.push_back(r.spine[i]);
    for (int leaf : r.leaves[i]) {
      emb.spine.push_back(leaf);
      page.emplace_back(r.spine[i], leaf);
    }
    if (i + 1 < s) page.emplace_back(r.spine[i], r.spine[i + 1]);
  }
  for (const auto& [a, b] : r.matching) {
    emb.spine.push_back(a);
    emb.spine.push_back(b);
    page.emplace_back(a, b);
  }

  CaterpillarPlan plan;
  for (int i = 0; i < s; ++i) {
    plan.spine_degrees.push_back(d[r.spine[i]]);
    plan.leaf_counts.push_back(static_cast<int>(r.leaves[i].size()));
  }
  plan.matching_pairs = static_cast<int>(r.matching.size());
  return {std::move(emb), std::move(plan)};
}

}  // namespace opbook
