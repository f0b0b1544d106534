#include "opbook/embedding.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace opbook {

const char* class_name(RealizationClass c) {
  switch (c) {
    case RealizationClass::Forest: return "Forest";
    case RealizationClass::OP: return "OP";
    case RealizationClass::OP1: return "OP+1";
    case RealizationClass::OP2: return "OP+2";
    case RealizationClass::OPbi: return "OP+bi";
    case RealizationClass::TwoPBE: return "2PBE";
  }
  return "?";
}

bool VerifyReport::pass() const {
  if (!degree_match || !pages_disjoint || !simple || !class_constraint) return false;
  for (bool ok : page_noncrossing)
    if (!ok) return false;
  return true;
}

namespace {

std::vector<int> positions_of(const std::vector<int>& spine) {
  int n = static_cast<int>(spine.size());
  std::vector<int> pos(n, -1);
  for (int p = 0; p < n; ++p) {
    int v = spine[p];
    if (v < 0 || v >= n || pos[v] != -1) throw Error("spine is not a permutation");
    pos[v] = p;
  }
  return pos;
}

bool bipartite(const std::vector<Edge>& edges, int n) {
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1 || adj[s].empty()) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        if (color[w] == -1) {
          color[w] = color[v] ^ 1;
          q.push(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool acyclic(const std::vector<Edge>& edges, int n) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges) {
    int a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

}  // namespace

bool edges_cross(const std::vector<int>& spine, Edge e1, Edge e2) {
  auto pos = positions_of(spine);
  int n = static_cast<int>(spine.size());
  for (int v : {e1.u, e1.v, e2.u, e2.v})
    if (v < 0 || v >= n) throw Error("edge endpoint not on the spine");
  if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) return false;
  int a = std::min(pos[e1.u], pos[e1.v]), b = std::max(pos[e1.u], pos[e1.v]);
  int c = std::min(pos[e2.u], pos[e2.v]), d = std::max(pos[e2.u], pos[e2.v]);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

bool page_noncrossing(const std::vector<int>& spine, const std::vector<Edge>& page) {
  auto pos = positions_of(spine);
  std::vector<std::pair<int, int>> iv;
  iv.reserve(page.size());
  for (const Edge& e : page) {
    int a = pos[e.u], b = pos[e.v];
    if (a > b) std::swap(a, b);
    iv.emplace_back(a, b);
  }
  std::sort(iv.begin(), iv.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first < y.first : x.second > y.second;
  });
  // Chords over a line nest iff each new interval fits inside whatever is
  // still open once the intervals ending at or before its left end are gone.
  std::vector<int> open;
  for (const auto& [a, b] : iv) {
    while (!open.empty() && open.back() <= a) open.pop_back();
    if (!open.empty() && open.back() < b) return false;
    open.push_back(b);
  }
  return true;
}

VerifyReport verify(const DegreeSequence& d, const BookEmbedding& emb,
                    RealizationClass claimed) {
  VerifyReport rep;
  const int n = d.n();
  auto fail = [&rep](const std::string& why) {
    if (rep.detail.empty()) rep.detail = why;
  };

  if (emb.n() != n) {
    fail("spine size differs from sequence length");
    return rep;
  }
  try {
    positions_of(emb.spine);
  } catch (const Error& e) {
    fail(e.what());
    return rep;
  }
  if (emb.pages.empty() || emb.pages.size() > 2) {
    fail("embedding must have one or two pages");
    return rep;
  }

  // Simplicity and page disjointness over the union of all pages.
  rep.simple = true;
  rep.pages_disjoint = true;
  std::vector<Edge> all;
  for (const auto& page : emb.pages)
    for (const Edge& e : page) {
      if (e.u == e.v) {
        rep.simple = false;
        fail("self loop");
      }
      if (e.u < 0 || e.v >= n) {
        rep.simple = false;
        fail("edge endpoint out of range");
      }
      all.push_back(e);
    }
  if (rep.simple) {
    std::vector<Edge> sorted = all;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      // Figure out whether the repeat lives inside one page or across pages.
      for (size_t p = 0; p < emb.pages.size(); ++p) {
        std::vector<Edge> pg = emb.pages[p];
        std::sort(pg.begin(), pg.end());
        if (std::adjacent_find(pg.begin(), pg.end()) != pg.end()) {
          rep.simple = false;
          fail("duplicate edge within a page");
        }
      }
      if (rep.simple) {
        rep.pages_disjoint = false;
        fail("edge appears on both pages");
      }
    }
  }

  // Degrees.
  if (rep.simple) {
    std::vector<int> got(n, 0);
    for (const Edge& e : all) {
      ++got[e.u];
      ++got[e.v];
    }
    std::sort(got.begin(), got.end(), std::greater<int>());
    rep.degree_match = (got == d.degrees());
    if (!rep.degree_match) fail("degree multiset mismatch");
  }

  for (const auto& page : emb.pages) {
    bool ok = page_noncrossing(emb.spine, page);
    rep.page_noncrossing.push_back(ok);
    if (!ok) fail("crossing edges within a page");
  }

  const std::vector<Edge> page2 =
      emb.pages.size() > 1 ? emb.pages[1] : std::vector<Edge>{};
  switch (claimed) {
    case RealizationClass::Forest:
      rep.class_constraint = page2.empty() && acyclic(emb.pages[0], n);
      if (!rep.class_constraint) fail("forest class needs one acyclic page");
      break;
    case RealizationClass::OP:
      rep.class_constraint = page2.empty();
      if (!rep.class_constraint) fail("OP class allows no second page");
      break;
    case RealizationClass::OP1:
      rep.class_constraint = page2.size() <= 1;
      if (!rep.class_constraint) fail("OP+1 allows at most one second-page edge");
      break;
    case RealizationClass::OP2:
      rep.class_constraint = page2.size() <= 2;
      if (!rep.class_constraint) fail("OP+2 allows at most two second-page edges");
      break;
    case RealizationClass::OPbi:
      rep.class_constraint = bipartite(page2, n);
      if (!rep.class_constraint) fail("OP+bi needs a bipartite second page");
      break;
    case RealizationClass::TwoPBE:
      rep.class_constraint = true;
      break;
  }
  return rep;
}

}  // namespace opbook
