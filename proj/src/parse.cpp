#include "opbook/parse.hpp"

#include <cctype>
#include <sstream>

namespace opbook {

namespace {

long long parse_int(const std::string& tok, size_t& i) {
  size_t start = i;
  while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
  if (i == start) throw Error("expected a number in '" + tok + "'");
  if (i - start > 9) throw Error("number too large in '" + tok + "'");
  return std::stoll(tok.substr(start, i - start));
}

}  // namespace

DegreeSequence parse_sequence(const std::string& text) {
  std::string normalized = text;
  for (char& c : normalized)
    if (c == ',') c = ' ';

  std::vector<int> degrees;
  std::istringstream in(normalized);
  std::string tok;
  while (in >> tok) {
    size_t i = 0;
    long long base = parse_int(tok, i);
    long long reps = 1;
    if (i < tok.size() && tok[i] == '^') {
      ++i;
      reps = parse_int(tok, i);
    }
    if (i != tok.size()) throw Error("malformed token '" + tok + "'");
    if (base < 1) throw Error("degrees must be positive");
    if (reps < 1) throw Error("repetition must be positive in '" + tok + "'");
    if (reps > 10'000'000 || degrees.size() + reps > 10'000'000)
      throw Error("sequence too long");
    degrees.insert(degrees.end(), static_cast<size_t>(reps), static_cast<int>(base));
  }
  if (degrees.empty()) throw Error("empty sequence");
  return DegreeSequence(std::move(degrees));
}

}  // namespace opbook
