#include "opbook/bbb.hpp"

#include <string>

namespace opbook {
namespace bbb {

std::vector<std::pair<int, int>> balance(const std::vector<Token>& r) {
  long long p = 0, q = 0;
  for (const Token& t : r) (t.is_q ? q : p)++;
  if (p != q)
    throw Unbalanced("class counts differ: " + std::to_string(p) + " vs " +
                     std::to_string(q));

  std::vector<std::pair<int, int>> out;
  out.reserve(p);
  // The stack only ever holds tokens of one class, so a single vector of
  // positions plus the current resident class is enough.
  std::vector<int> stack;
  bool stack_is_q = false;
  for (int i = 0; i < static_cast<int>(r.size()); ++i) {
    if (stack.empty() || r[i].is_q == stack_is_q) {
      stack_is_q = r[i].is_q;
      stack.push_back(i);
    } else {
      out.emplace_back(stack.back(), i);
      stack.pop_back();
    }
  }
  if (!stack.empty()) throw InternalError("balance left tokens on the stack");
  return out;
}

}  // namespace bbb
}  // namespace opbook
