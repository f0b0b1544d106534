#pragma once

#include <utility>
#include <vector>

#include "opbook/embedding.hpp"

namespace opbook {

// Bookkeeping for the maximal-volume split. d_prime and d_dblprime are
// positionally aligned with d (zeros allowed) and sum back to d entry by
// entry. pi lists the page-1 spine order of the reduced high-degree block B.
struct SplitPlan {
  int q = 0;    // omega2 - 2
  int ell = 0;  // count of degrees >= 5
  std::vector<int> d_prime;
  std::vector<int> d_dblprime;
  std::vector<int> pi;  // B vertex ids in spine order (filled by the builders)
  std::vector<int> b1, b2, a1, a2;  // vertex ids (Case B only)
};

// Preconditions shared by both cases: volume = 4n-6, d1 >= 5, omega2 > 2,
// 2*omega2 + omega3 <= n+1, d_n = 2.

// Case A split (q <= ell): the one-path complement d'. Returns the plan with
// d_prime/d_dblprime filled per the case formulas.
SplitPlan split_case_a(const DegreeSequence& d);

// Case A end-to-end construction. q <= ell.
std::pair<BookEmbedding, RealizationClass> build_case_a(const DegreeSequence& d);

// Case B first reduction (q >= ell): aligned working sequence dbar.
std::vector<int> reduce_dbar(const DegreeSequence& d);

// Decrement the max among the first ell entries until the first n-q entries
// reach volume 4(n-q)-6. Returns the trimmed positive prefix, still in
// positional (unsorted) order. Requires q >= ell + 1.
std::vector<int> algorithm1_reduce(std::vector<int> dbar, int q, int ell);

// Case B end-to-end construction (matching + stars + zigzag with the crossing
// correction). Accepts q >= ell; q == ell is routed through the Case A
// formulas, which stay valid there because omega4 >= q - ell + 1 forces
// d_{q+1} = 4.
std::pair<BookEmbedding, RealizationClass> build_case_b(const DegreeSequence& d);

// Dispatch q <= ell -> Case A, q > ell -> Case B.
std::pair<BookEmbedding, RealizationClass> realize_maxvol(const DegreeSequence& d);

}  // namespace opbook
