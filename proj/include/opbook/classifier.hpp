#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opbook/embedding.hpp"

namespace opbook {

struct Certificate {
  enum class Kind { TailViolation, VolumeViolation, DeficitViolation };
  Kind kind;
  // The violated inequality instantiated numerically, e.g. lhs > rhs where the
  // necessary condition demands lhs <= rhs.
  std::string inequality;
  std::vector<std::pair<std::string, long long>> values;

  // Re-evaluate the certificate on a sequence; true means it still witnesses
  // non-outerplanarity.
  bool holds(const DegreeSequence& d) const;
};

const char* certificate_name(Certificate::Kind k);

struct Outcome {
  enum class Status { NotGraphic, NotOuterplanaric, Realized };
  Status status;
  std::optional<Certificate> certificate;
  std::optional<BookEmbedding> embedding;
  std::optional<RealizationClass> cls;
};

// The full decision tree: graphicality gates, forest branch, the two
// rejection certificates, the d1 <= 4 dispatcher, the d2 <= 3 hub, the
// deficit-gated general construction, and the final deficit rejection.
Outcome classify(const DegreeSequence& d);

}  // namespace opbook
