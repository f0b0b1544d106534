#pragma once

#include <string>
#include <utility>
#include <vector>

#include "opbook/degseq.hpp"

namespace opbook {

struct Edge {
  int u, v;  // stored with u < v
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
  bool operator<(const Edge& o) const { return u != o.u ? u < o.u : v < o.v; }
};

struct BookEmbedding {
  std::vector<int> spine;               // spine[pos] = vertex id
  std::vector<std::vector<Edge>> pages; // 1 or 2 pages
  int n() const { return static_cast<int>(spine.size()); }
};

enum class RealizationClass { Forest, OP, OP1, OP2, OPbi, TwoPBE };

const char* class_name(RealizationClass c);

struct VerifyReport {
  bool degree_match = false;
  bool pages_disjoint = false;
  bool simple = false;
  std::vector<bool> page_noncrossing;
  bool class_constraint = false;
  std::string detail;  // first failure, empty when everything passes

  bool pass() const;
};

// Linear-spine chord crossing: with positions a<b and c<d, edges cross iff
// a<c<b<d or c<a<d<b. Shared endpoints never cross. Throws Error on ids
// missing from the spine.
bool edges_cross(const std::vector<int>& spine, Edge e1, Edge e2);

VerifyReport verify(const DegreeSequence& d, const BookEmbedding& emb,
                    RealizationClass claimed);

// Stack sweep over one page, O(E log E); used by verify and exposed for the
// constructions' internal asserts.
bool page_noncrossing(const std::vector<int>& spine, const std::vector<Edge>& page);

}  // namespace opbook
