#pragma once

#include <string>

#include "opbook/classifier.hpp"

namespace opbook {

// Outcome -> stable-key-order JSON. Includes the input degrees so the result
// round-trips through verify_json without outside context.
std::string outcome_to_json(const DegreeSequence& d, const Outcome& out);

// Re-run the verifier on a stored classify/realize result. Returns a JSON
// report; throws Error on malformed input.
std::string verify_json(const std::string& stored_json);

// DOT export: spine ordinal as a vertex attribute, pages in distinct colors.
std::string embedding_to_dot(const BookEmbedding& emb);

}  // namespace opbook
