#pragma once

#include <utility>
#include <vector>

#include "opbook/errors.hpp"

namespace opbook {
namespace bbb {

struct Token {
  bool is_q;         // false = P class, true = Q class
  int source_index;  // caller-defined payload
};

// Stack-based bracket balancing over a merged two-class sequence. Returns one
// (i, j) position pair per P/Q couple, i < j. Pairs are pairwise nested or
// disjoint and always join opposite classes. Throws Unbalanced when the class
// counts differ.
std::vector<std::pair<int, int>> balance(const std::vector<Token>& r);

}  // namespace bbb
}  // namespace opbook
