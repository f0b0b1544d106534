#include "opbook/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>

namespace opbook {
namespace oracle {

int n_limit() {
  if (const char* env = std::getenv("OPBOOK_ORACLE_LIMIT")) {
    int v = std::atoi(env);
    if (v >= 2) return v;
  }
  return 9;
}

namespace {

void check_limit(int n, std::optional<int> limit) {
  int lim = limit.value_or(n_limit());
  if (n > lim)
    throw TooLarge("oracle limited to " + std::to_string(lim) + " vertices");
}

struct Enumerator {
  int n;
  std::vector<int> residual;
  std::vector<Edge> edges;
  const std::function<bool(const std::vector<Edge>&)>* yield;
  long long remaining_cap;
  bool stopped = false;

  void run(int v) {
    if (stopped) return;
    if (v == n) {
      if (remaining_cap == 0) {
        stopped = true;
        return;
      }
      if (remaining_cap > 0) --remaining_cap;
      if (!(*yield)(edges)) stopped = true;
      return;
    }
    if (residual[v] == 0) {
      run(v + 1);
      return;
    }
    pick(v, v + 1, residual[v]);
  }

  // Choose `need` neighbors for v among w..n-1.
  void pick(int v, int w, int need) {
    if (stopped) return;
    if (need == 0) {
      run(v + 1);
      return;
    }
    if (n - w < need) return;
    if (residual[w] > 0) {
      --residual[v];
      --residual[w];
      edges.emplace_back(v, w);
      pick(v, w + 1, need - 1);
      edges.pop_back();
      ++residual[v];
      ++residual[w];
    }
    pick(v, w + 1, need);
  }
};

std::vector<std::vector<int>> adjacency(const std::vector<Edge>& edges, int n) {
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

// Backtracking spine search: place vertices one position at a time and check
// each fresh chord against the chords already drawn.
struct SpineSearch {
  int n;
  std::vector<std::vector<int>> adj;
  std::vector<int> pos;      // vertex -> position, -1 if unplaced
  std::vector<int> spine;    // filled prefix
  std::vector<std::pair<int, int>> chords;  // (position, position), a < b

  bool place(int v) {
    int p = static_cast<int>(spine.size());
    size_t added = 0;
    for (int w : adj[v]) {
      if (pos[w] < 0) continue;
      int a = pos[w], b = p;
      // The new chord ends at the rightmost position, so an existing chord
      // (c,e) crosses it exactly when c < a < e; chords also ending at p
      // share the new vertex and never cross it.
      for (const auto& [c, e] : chords)
        if (e != b && c < a && a < e) {
          while (added--) chords.pop_back();
          return false;
        }
      chords.emplace_back(a, b);
      ++added;
    }
    pos[v] = p;
    spine.push_back(v);
    return true;
  }

  void unplace(int v) {
    size_t drop = 0;
    for (int w : adj[v])
      if (pos[w] >= 0 && w != v) ++drop;
    // chords added for v are exactly those reaching position pos[v]
    while (!chords.empty() && chords.back().second == pos[v]) chords.pop_back();
    spine.pop_back();
    pos[v] = -1;
    (void)drop;
  }

  bool search() {
    if (static_cast<int>(spine.size()) == n) return true;
    for (int v = 0; v < n; ++v) {
      if (pos[v] >= 0) continue;
      if (v == 0 && !spine.empty()) continue;  // vertex 0 is pinned first
      if (spine.empty() && v != 0) continue;
      if (!place(v)) continue;
      if (search()) return true;
      unplace(v);
    }
    return false;
  }
};

}  // namespace

void enumerate_graphs(const DegreeSequence& d,
                      const std::function<bool(const std::vector<Edge>&)>& yield,
                      std::optional<long long> cap, std::optional<int> limit) {
  check_limit(d.n(), limit);
  Enumerator en;
  en.n = d.n();
  en.residual = d.degrees();
  en.yield = &yield;
  en.remaining_cap = cap.value_or(-1);
  if (en.remaining_cap == 0) return;
  en.run(0);
}

bool is_outerplanar_bf(const std::vector<Edge>& edges, int n,
                       std::optional<int> limit) {
  check_limit(n, limit);
  if (static_cast<long long>(edges.size()) > 2LL * n - 3 && n >= 2) return false;
  SpineSearch s;
  s.n = n;
  s.adj = adjacency(edges, n);
  s.pos.assign(n, -1);
  return s.search();
}

bool is_outerplanaric_bf(const DegreeSequence& d, std::optional<int> limit) {
  check_limit(d.n(), limit);
  bool found = false;
  enumerate_graphs(
      d,
      [&](const std::vector<Edge>& edges) {
        if (is_outerplanar_bf(edges, d.n(), limit)) {
          found = true;
          return false;
        }
        return true;
      },
      std::nullopt, limit);
  return found;
}

namespace {

struct SubsetSpace {
  std::vector<unsigned> sets;    // connected vertex subsets, as bitmasks
  std::vector<unsigned> nbr;     // outside-neighborhood of each subset
};

SubsetSpace connected_subsets(const std::vector<Edge>& edges, int n) {
  std::vector<unsigned> vnbr(n, 0);
  for (const Edge& e : edges) {
    vnbr[e.u] |= (1u << e.v);
    vnbr[e.v] |= (1u << e.u);
  }
  SubsetSpace sp;
  for (unsigned s = 1; s < (1u << n); ++s) {
    // connectivity by flood fill over bits
    unsigned start = s & (~s + 1u);
    unsigned seen = start;
    for (;;) {
      unsigned grow = 0;
      for (int v = 0; v < n; ++v)
        if (seen & (1u << v)) grow |= vnbr[v];
      unsigned next = seen | (grow & s);
      if (next == seen) break;
      seen = next;
    }
    if (seen != s) continue;
    unsigned out = 0;
    for (int v = 0; v < n; ++v)
      if (s & (1u << v)) out |= vnbr[v];
    sp.sets.push_back(s);
    sp.nbr.push_back(out & ~s);
  }
  return sp;
}

}  // namespace

bool has_forbidden_minor(const std::vector<Edge>& edges, int n) {
  if (n > 16) throw TooLarge("minor oracle limited to 16 vertices");
  SubsetSpace sp = connected_subsets(edges, n);
  const int m = static_cast<int>(sp.sets.size());
  auto touch = [&](int a, int b) { return (sp.nbr[a] & sp.sets[b]) != 0; };
  auto disjoint = [&](int a, int b) { return (sp.sets[a] & sp.sets[b]) == 0; };

  // K4 minor: four disjoint connected branch sets, pairwise touching.
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (!disjoint(a, b) || !touch(a, b)) continue;
      for (int c = b + 1; c < m; ++c) {
        if (!disjoint(a, c) || !disjoint(b, c) || !touch(a, c) || !touch(b, c))
          continue;
        for (int e = c + 1; e < m; ++e)
          if (disjoint(a, e) && disjoint(b, e) && disjoint(c, e) && touch(a, e) &&
              touch(b, e) && touch(c, e))
            return true;
      }
    }

  // K23 minor: two "hub" branch sets each touching three further disjoint
  // branch sets (the three need not touch each other).
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (!disjoint(a, b)) continue;
      std::vector<int> mid;
      for (int c = 0; c < m; ++c)
        if (disjoint(a, c) && disjoint(b, c) && touch(a, c) && touch(b, c))
          mid.push_back(c);
      const int k = static_cast<int>(mid.size());
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          if (!disjoint(mid[i], mid[j])) continue;
          for (int l = j + 1; l < k; ++l)
            if (disjoint(mid[i], mid[l]) && disjoint(mid[j], mid[l])) return true;
        }
    }
  return false;
}

bool is_connected(const std::vector<Edge>& edges, int n) {
  auto adj = adjacency(edges, n);
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++cnt;
        stack.push_back(w);
      }
  }
  return cnt == n;
}

namespace {

using Mask = unsigned long long;

Mask adjacency_mask(const std::vector<std::vector<bool>>& adj, int n) {
  Mask m = 0;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (adj[i][j]) m |= (Mask{1} << bit);
  return m;
}

// Minimum adjacency bitstring over all degree-monotone relabelings: vertices
// are grouped by degree (descending) and permuted within groups only, which
// is a sound canonical form because isomorphism preserves degrees.
Mask canonical_form(const std::vector<Edge>& edges, int n) {
  std::vector<int> deg(n, 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : edges) adj[e.u][e.v] = adj[e.v][e.u] = true;

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return deg[a] != deg[b] ? deg[a] > deg[b] : a < b; });

  Mask best = ~Mask{0};
  std::vector<int> label(n);  // old vertex -> new position
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      std::vector<std::vector<bool>> re(n, std::vector<bool>(n, false));
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (adj[a][b]) re[label[a]][label[b]] = re[label[b]][label[a]] = true;
      best = std::min(best, adjacency_mask(re, n));
      return;
    }
    // positions i..j-1 belong to one degree class; permute within it
    int j = i;
    while (j < n && deg[order[j]] == deg[order[i]]) ++j;
    std::vector<int> block(order.begin() + i, order.begin() + j);
    std::sort(block.begin(), block.end());
    do {
      for (int k = 0; k < j - i; ++k) label[block[k]] = i + k;
      rec(j);
    } while (std::next_permutation(block.begin(), block.end()));
  };
  rec(0);
  return best;
}

std::vector<Edge> edges_from_mask(Mask m, int n) {
  std::vector<Edge> out;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (m & (Mask{1} << bit)) out.emplace_back(i, j);
  return out;
}

}  // namespace

std::vector<std::vector<Edge>> all_graphs_up_to_iso(int n) {
  if (n > 8) throw TooLarge("isomorph-free atlas limited to 8 vertices");
  // Grow one vertex at a time: attach the new vertex to every neighbor
  // subset of every smaller graph and keep one representative per canonical
  // form.
  std::set<Mask> level{0};  // graphs on 1 vertex
  for (int k = 2; k <= n; ++k) {
    std::set<Mask> next;
    for (Mask g : level) {
      std::vector<Edge> base = edges_from_mask(g, k - 1);
      for (unsigned nb = 0; nb < (1u << (k - 1)); ++nb) {
        std::vector<Edge> cand = base;
        for (int v = 0; v < k - 1; ++v)
          if (nb & (1u << v)) cand.emplace_back(v, k - 1);
        next.insert(canonical_form(cand, k));
      }
    }
    level = std::move(next);
  }
  std::vector<std::vector<Edge>> out;
  out.reserve(level.size());
  for (Mask m : level) out.push_back(edges_from_mask(m, n));
  return out;
}

}  // namespace oracle
}  // namespace opbook
