#pragma once

#include <utility>

#include "opbook/embedding.hpp"

namespace opbook {

// Realizations for the d1 <= 4 slice of family D. All four entry points
// return an embedding together with its realization class and throw
// PreconditionFailed outside their gates.

// d in D, d1 <= 4, d_{n-1} = d_n = 2, d1 <= n-1. Class OP or OP2.
std::pair<BookEmbedding, RealizationClass> realize_d1le4_tail22(const DegreeSequence& d);

// d in D, d_n >= 2, d_{n-1} >= 3 (volume forces the tail into {(3,3),(3,2)}).
// One page-2 edge; class OP1. Not restricted to d1 <= 4.
std::pair<BookEmbedding, RealizationClass> realize_tail_ge23(const DegreeSequence& d);

// d in D, d1 <= 4, d_n = 1, d1 <= n-1. Peels the 1s, realizes the residual,
// reattaches leaves.
std::pair<BookEmbedding, RealizationClass> realize_d1le4_with_ones(const DegreeSequence& d);

// Dispatcher over the three cases by tail shape; d in D, d1 <= 4, graphic.
std::pair<BookEmbedding, RealizationClass> realize_d1le4(const DegreeSequence& d);

}  // namespace opbook
