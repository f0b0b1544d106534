#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "opbook/embedding.hpp"

namespace opbook {
namespace oracle {

// Default 9; override with the OPBOOK_ORACLE_LIMIT environment variable.
int n_limit();

// Enumerate every labeled simple graph with degree multiset d (vertex i has
// degree d[i]). The callback returns false to stop early. cap bounds the
// number of yielded graphs. Throws TooLarge above the limit.
void enumerate_graphs(const DegreeSequence& d,
                      const std::function<bool(const std::vector<Edge>&)>& yield,
                      std::optional<long long> cap = std::nullopt,
                      std::optional<int> limit = std::nullopt);

// Exhaustive spine-order search with vertex 0 pinned to position 0.
bool is_outerplanar_bf(const std::vector<Edge>& edges, int n,
                       std::optional<int> limit = std::nullopt);

// True iff some realization of d is outerplanar.
bool is_outerplanaric_bf(const DegreeSequence& d,
                         std::optional<int> limit = std::nullopt);

// Independent second oracle: a graph is outerplanar iff it has no K4 minor
// and no K23 minor.
bool has_forbidden_minor(const std::vector<Edge>& edges, int n);

// All graphs on n vertices up to isomorphism, as edge lists; n <= 8.
std::vector<std::vector<Edge>> all_graphs_up_to_iso(int n);

bool is_connected(const std::vector<Edge>& edges, int n);

}  // namespace oracle
}  // namespace opbook
