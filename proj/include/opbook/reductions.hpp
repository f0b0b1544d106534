#pragma once

#include <utility>
#include <vector>

#include "opbook/embedding.hpp"

namespace opbook {

// A degree multiset that remembers which original rank each entry came from.
// Kept nonincreasing by value, ties in rank order.
struct Labeled {
  std::vector<int> deg;
  std::vector<int> label;
};

// One volume-shrinking step: rank label whose degree was cut by 2, its value
// after the cut, and the labels of the two removed 2s.
struct ShrinkStep {
  int target_label;
  int new_value;
  int removed_a, removed_b;
};
using ShrinkTrace = std::vector<ShrinkStep>;

// One leaf-stripping step: the removed 1's label and the decremented max.
struct StripStep {
  int leaf_label;
  int target_label;
  int new_value;  // target's value after the decrement
};
using StripTrace = std::vector<StripStep>;

// Volume shrink: while volume < 4n-6 and omega2 > 3 and d1 > 4, cut the max
// by 2 and drop two 2s. 2*deltaE - deltaOmega is invariant per step.
std::pair<Labeled, ShrinkTrace> algorithm3_shrink(const DegreeSequence& d);

// Reverse of the shrink: replay the trace backwards, gluing a fresh triangle
// (v,u),(v,w),(u,w) onto a page-1 vertex v of the recorded degree. current_ids
// maps embedding vertex ids to their shrunken-sequence labels.
BookEmbedding algorithm4_expand(BookEmbedding emb, const std::vector<int>& degs_by_id,
                                const ShrinkTrace& trace);

// Leaf strip: while omega1 > 0 and d1 > 4, decrement the max and drop one 1.
std::pair<Labeled, StripTrace> algorithm5_strip(const DegreeSequence& d);

// d in D, d1 >= 5, d2 > 3, d_n = 2, omega2 > 2, 2*deltaE >= deltaOmega,
// d1 <= n-1: shrink, realize the terminal sequence, expand back.
std::pair<BookEmbedding, RealizationClass> realize_nonmax(const DegreeSequence& d);

// d in D, d1 >= 5, d2 <= 3, graphic: hub star on page 2 (or the d1 <= 4
// dispatcher after peeling drops the max).
std::pair<BookEmbedding, RealizationClass> realize_small_d2(const DegreeSequence& d);

// d in D, d1 >= 5, d_{n-1} = d_n = 2, 2*deltaE >= deltaOmega, d1 <= n-1.
std::pair<BookEmbedding, RealizationClass> realize_tail2(const DegreeSequence& d);

// d in D, d1 >= 5, d_{n-1} <= 2, d_{n-2} <= 3, 2*deltaE >= deltaOmega,
// d1 <= n-1. Handles trailing 1s by stripping and reattaching.
std::pair<BookEmbedding, RealizationClass> realize_with_ones(const DegreeSequence& d);

}  // namespace opbook
