#pragma once

#include <utility>
#include <vector>

#include "opbook/embedding.hpp"

namespace opbook {

struct CaterpillarPlan {
  std::vector<int> spine_degrees;  // degrees > 1, in spine order
  std::vector<int> leaf_counts;    // k_i per spine vertex
  int matching_pairs = 0;          // t
};

// Explicit vertex-level decomposition of a forestic sequence: a caterpillar
// spine with its leaves plus t disjoint matching edges. Vertex ids are ranks
// into the sorted sequence.
struct CaterpillarRealization {
  std::vector<int> spine;                   // ranks of x_1..x_s
  std::vector<std::vector<int>> leaves;     // leaves[i] belongs to spine[i]
  std::vector<std::pair<int, int>> matching;
};

// degrees must be nonincreasing, positive, with even sum <= 2n-2.
CaterpillarRealization caterpillar_decompose(const std::vector<int>& degrees);

// One-page forest embedding; throws NotForestic outside the family.
std::pair<BookEmbedding, CaterpillarPlan> realize_forestic(const DegreeSequence& d);

}  // namespace opbook
