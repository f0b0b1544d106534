#pragma once

#include <string>

#include "opbook/degseq.hpp"

namespace opbook {

// Power-notation sequence grammar: tokens split on whitespace or commas,
// token := INT | INT "^" INT with positive base and repetition.
DegreeSequence parse_sequence(const std::string& text);

}  // namespace opbook
