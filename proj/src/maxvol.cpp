#include "opbook/maxvol.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "opbook/bbb.hpp"
#include "opbook/hamiltonian.hpp"
#include "peel.hpp"

namespace opbook {

namespace {

void require(bool cond, const char* clause) {
  if (!cond) throw PreconditionFailed(clause);
}

struct MaxvolShape {
  int q;    // omega2 - 2
  int ell;  // count of degrees >= 5
};

MaxvolShape check_preconditions(const DegreeSequence& d) {
  const int n = d.n();
  require(d.volume() == 4LL * n - 6, "volume must equal 4n-6");
  require(d[0] >= 5, "maximum degree must be at least 5");
  require(d[0] <= n - 1, "maximum degree must fit a simple graph");
  require(d[n - 1] == 2, "minimum degree must be 2");
  const int w2 = d.multiplicity(2);
  require(w2 > 2, "more than two degree-2 entries required");
  require(2LL * w2 + d.multiplicity(3) <= n + 1, "low-degree count bound");
  int ell = 0;
  while (ell < n && d[ell] >= 5) ++ell;
  return {w2 - 2, ell};
}

// Realize a positionally labeled working sequence through the Hamiltonian
// construction: sort (value desc, position asc), realize, relabel ids back to
// the original positions.
BookEmbedding hamiltonian_on_positions(const std::vector<int>& values) {
  const int m = static_cast<int>(values.size());
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return values[a] > values[b]; });
  std::vector<int> sorted(m);
  for (int r = 0; r < m; ++r) sorted[r] = values[order[r]];
  BookEmbedding emb = realize_hamiltonian(DegreeSequence(sorted));
  return detail::relabel(emb, order);
}

std::vector<int> spine_positions(const BookEmbedding& emb, int id_space) {
  std::vector<int> pos(id_space, -1);
  for (int p = 0; p < emb.n(); ++p) pos[emb.spine[p]] = p;
  return pos;
}

}  // namespace

SplitPlan split_case_a(const DegreeSequence& d) {
  MaxvolShape sh = check_preconditions(d);
  require(sh.q <= sh.ell, "degree-2 excess must not exceed the high-degree count");
  const int n = d.n();

  SplitPlan plan;
  plan.q = sh.q;
  plan.ell = sh.ell;
  plan.d_prime.assign(n, 0);
  plan.d_prime[0] = 1;
  for (int i = 1; i < sh.q; ++i) plan.d_prime[i] = 2;
  plan.d_prime[sh.q] = 1;
  for (int i = n - sh.q; i < n; ++i) plan.d_prime[i] = 2;
  plan.d_dblprime.resize(n);
  for (int i = 0; i < n; ++i) {
    plan.d_dblprime[i] = d[i] - plan.d_prime[i];
    if (plan.d_dblprime[i] < 0) throw InternalError("negative split entry");
  }
  return plan;
}

std::pair<BookEmbedding, RealizationClass> build_case_a(const DegreeSequence& d) {
  SplitPlan plan = split_case_a(d);
  const int n = d.n();
  const int q = plan.q;

  // The last q entries vanish entirely into the page-2 path; everything else
  // goes through the Hamiltonian construction at full remaining degree.
  std::vector<int> core(plan.d_dblprime.begin(), plan.d_dblprime.end() - q);
  BookEmbedding emb = hamiltonian_on_positions(core);

  // Rotate the cycle so vertex 0 opens the spine; crossing freedom is a
  // cyclic property of the outer cycle, so any rotation stays flat.
  auto pivot = std::find(emb.spine.begin(), emb.spine.end(), 0);
  std::rotate(emb.spine.begin(), pivot, emb.spine.end());

  auto pos = spine_positions(emb, n);
  std::vector<int> b;  // ranks 0..q in spine order
  for (int r = 0; r <= q; ++r) b.push_back(r);
  std::sort(b.begin(), b.end(), [&](int x, int y) { return pos[x] < pos[y]; });
  if (b[0] != 0) throw InternalError("rotation failed to front vertex 0");
  plan.pi = b;

  // Pivot: the spine-order stop whose remaining degree matches rank q's
  // target. It takes the single path endpoint; everyone else gets two.
  int j = -1;
  for (int i = 1; i <= q; ++i)
    if (plan.d_dblprime[b[i]] == d[q] - 1) {
      j = i;
      break;
    }
  if (j < 0) throw InternalError("no pivot for the page-2 path");

  // Connector ids n-q..n-1 thread the path b0-r0-b1-...; the pivot hop skips
  // straight to b_q so the remaining chain can nest inside it.
  std::map<int, std::vector<int>> hang;
  emb.pages.emplace_back();
  auto& page2 = emb.pages[1];
  for (int i = 0; i < q; ++i) {
    int r = n - q + i;
    hang[b[i]].push_back(r);
    page2.emplace_back(b[i], r);
    page2.emplace_back(r, i == j - 1 ? b[q] : b[i + 1]);
  }

  std::vector<int> spine;
  spine.reserve(n);
  for (int v : emb.spine) {
    spine.push_back(v);
    auto it = hang.find(v);
    if (it != hang.end())
      for (int r : it->second) spine.push_back(r);
  }
  emb.spine = std::move(spine);

  for (const auto& page : emb.pages)
    if (!page_noncrossing(emb.spine, page))
      throw InternalError("path overlay crossed itself");
  return {std::move(emb), RealizationClass::OPbi};
}

std::vector<int> reduce_dbar(const DegreeSequence& d) {
  MaxvolShape sh = check_preconditions(d);
  require(sh.q >= sh.ell, "needs at least as many spare 2s as high degrees");
  const int n = d.n();
  std::vector<int> dbar(n);
  for (int i = 0; i < n; ++i) {
    if (i < sh.ell)
      dbar[i] = d[i] - 2;
    else if (i <= sh.q)
      dbar[i] = d[i] - 1;
    else if (i < n - sh.q)
      dbar[i] = d[i];
    else
      dbar[i] = 0;
  }
  for (int i = sh.ell; i <= sh.q; ++i)
    if (d[i] != 4) throw InternalError("middle block must be all 4s");
  return dbar;
}

std::vector<int> algorithm1_reduce(std::vector<int> dbar, int q, int ell) {
  if (q < ell + 1) throw PreconditionFailed("reduction needs q >= ell + 1");
  // Push the surplus q-ell-1 onto the former high block, always at the
  // current maximum (lowest position first), which never dips below 3.
  std::priority_queue<std::pair<int, int>> heap;
  for (int i = 0; i < ell; ++i) heap.push({dbar[i], -i});
  for (int step = 0; step < q - ell - 1; ++step) {
    auto [v, ni] = heap.top();
    heap.pop();
    if (v <= 3) throw InternalError("reduction target fell to 3");
    dbar[-ni] = v - 1;
    heap.push({v - 1, ni});
  }
  dbar.resize(dbar.size() - q);
  return dbar;
}

std::pair<BookEmbedding, RealizationClass> build_case_b(const DegreeSequence& d) {
  MaxvolShape sh = check_preconditions(d);
  if (sh.q == sh.ell) return build_case_a(d);
  require(sh.q > sh.ell, "Case B needs q > ell");
  const int n = d.n(), q = sh.q, ell = sh.ell;

  std::vector<int> dbar = reduce_dbar(d);
  std::vector<int> dhat = algorithm1_reduce(dbar, q, ell);
  BookEmbedding emb = hamiltonian_on_positions(dhat);

  // Page-2 degree owed per kept vertex.
  std::vector<int> owed(n - q, 0);
  for (int i = 0; i <= q; ++i) owed[i] = d[i] - dhat[i];

  // Step 1: each singly-owed stop (ids ell..q) takes one fresh degree-2
  // vertex right beside it.
  auto pos0 = spine_positions(emb, n);
  std::vector<int> b1(q - ell + 1);
  for (int i = 0; i < q - ell + 1; ++i) b1[i] = ell + i;
  std::sort(b1.begin(), b1.end(), [&](int x, int y) { return pos0[x] < pos0[y]; });

  emb.pages.emplace_back();
  std::vector<Edge> page2;
  std::map<int, std::vector<int>> hang;
  std::vector<int> a1;
  for (int i = 0; i < static_cast<int>(b1.size()); ++i) {
    int a = n - q + i;
    a1.push_back(a);
    hang[b1[i]].push_back(a);
    page2.emplace_back(b1[i], a);
    if (owed[b1[i]] != 1) throw InternalError("single-owed stop owes more");
  }
  std::vector<int> spine;
  spine.reserve(n);
  for (int v : emb.spine) {
    spine.push_back(v);
    auto it = hang.find(v);
    if (it != hang.end())
      for (int a : it->second) spine.push_back(a);
  }
  emb.spine = std::move(spine);
  auto pos = spine_positions(emb, n);

  // Step 2: the heavily owed stops (ids 0..ell-1) star out to the fresh
  // vertices; ports not reserved for the chain below pair off against the
  // fresh vertices by bracket balancing along the spine.
  std::vector<int> b2(ell);
  for (int i = 0; i < ell; ++i) b2[i] = i;
  std::sort(b2.begin(), b2.end(), [&](int x, int y) { return pos[x] < pos[y]; });
  std::vector<int> ports(n - q, 0);
  for (int i = 0; i < ell; ++i) {
    int reserve = (ell == 1) ? 0 : ((i == 0 || i == ell - 1) ? 1 : 2);
    ports[b2[i]] = owed[b2[i]] - reserve;
    if (ports[b2[i]] < 0) throw InternalError("negative star budget");
  }

  std::vector<bbb::Token> walk;
  std::set<int> a1set(a1.begin(), a1.end());
  for (int v : emb.spine) {
    if (v < n - q && v < ell)
      for (int k = 0; k < ports[v]; ++k) walk.push_back({true, v});
    else if (a1set.count(v))
      walk.push_back({false, v});
  }
  std::vector<Edge> stars;
  std::map<int, int> star_owner;  // fresh vertex -> owning stop
  for (auto [i, jj] : bbb::balance(walk)) {
    const bbb::Token &t1 = walk[i], &t2 = walk[jj];
    int owner = t1.is_q ? t1.source_index : t2.source_index;
    int a = t1.is_q ? t2.source_index : t1.source_index;
    stars.emplace_back(owner, a);
    star_owner[a] = owner;
  }
  page2.insert(page2.end(), stars.begin(), stars.end());

  // Step 3: one chain vertex per gap between consecutive heavy stops, with
  // the local star edges rewired so nothing crosses the chain.
  std::set<Edge> p2(page2.begin(), page2.end());
  if (p2.size() != page2.size()) throw InternalError("duplicate page-2 edge");
  std::map<int, std::vector<int>> hang2;

  for (int g = 0; g + 1 < ell; ++g) {
    int u = b2[g], w = b2[g + 1], c = n - ell + 1 + g;
    // Fresh vertices strictly between u and w, in spine order.
    std::vector<int> inside;
    for (int a : a1)
      if (pos[a] > pos[u] && pos[a] < pos[w]) inside.push_back(a);
    std::sort(inside.begin(), inside.end(),
              [&](int x, int y) { return pos[x] < pos[y]; });

    std::vector<int> e_le, e_ri;  // star partners whose owner lies outside
    int anchor = u;  // c lands right after the last leftward-tied vertex
    bool seen_right = false;
    for (int a : inside) {
      auto so = star_owner.find(a);
      // Fresh vertices matched beside an interior stop keep a spine-adjacent
      // edge; they sit on either side of the chain without conflict.
      if (so == star_owner.end()) continue;
      int op = pos[so->second];
      if (op <= pos[u]) {
        if (seen_right)
          throw InternalError("gap order broke left-right separation");
        anchor = a;
        if (op < pos[u]) e_le.push_back(a);
      } else {
        seen_right = true;
        if (op > pos[w]) e_ri.push_back(a);
      }
    }

    hang2[anchor].push_back(c);
    p2.insert(Edge(u, c));
    p2.insert(Edge(c, w));

    if (!e_le.empty()) {
      // Rotate the leftward stars one slot: u picks up the nearest, each
      // owner hands its vertex to the next, the farthest owner takes c.
      p2.erase(Edge(u, c));
      const int pcnt = static_cast<int>(e_le.size());
      for (int m = 0; m < pcnt; ++m) p2.erase(Edge(star_owner[e_le[m]], e_le[m]));
      p2.insert(Edge(u, e_le[0]));
      for (int m = 0; m + 1 < pcnt; ++m)
        p2.insert(Edge(star_owner[e_le[m]], e_le[m + 1]));
      p2.insert(Edge(star_owner[e_le[pcnt - 1]], c));
    }
    if (!e_ri.empty()) {
      p2.erase(Edge(c, w));
      const int pcnt = static_cast<int>(e_ri.size());
      for (int m = 0; m < pcnt; ++m) p2.erase(Edge(star_owner[e_ri[m]], e_ri[m]));
      p2.insert(Edge(star_owner[e_ri[0]], c));
      for (int m = 0; m + 1 < pcnt; ++m)
        p2.insert(Edge(star_owner[e_ri[m + 1]], e_ri[m]));
      p2.insert(Edge(w, e_ri[pcnt - 1]));
    }
  }

  std::vector<int> spine2;
  spine2.reserve(n);
  for (int v : emb.spine) {
    spine2.push_back(v);
    auto it = hang2.find(v);
    if (it != hang2.end())
      for (int c : it->second) spine2.push_back(c);
  }
  emb.spine = std::move(spine2);
  emb.pages[1].assign(p2.begin(), p2.end());

  for (const auto& page : emb.pages)
    if (!page_noncrossing(emb.spine, page))
      throw InternalError("chain overlay crossed itself");
  return {std::move(emb), RealizationClass::OPbi};
}

std::pair<BookEmbedding, RealizationClass> realize_maxvol(const DegreeSequence& d) {
  MaxvolShape sh = check_preconditions(d);
  return sh.q <= sh.ell ? build_case_a(d) : build_case_b(d);
}

}  // namespace opbook
