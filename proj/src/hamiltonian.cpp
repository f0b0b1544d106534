#include "opbook/hamiltonian.hpp"

#include <algorithm>
#include <string>

#include "opbook/forest.hpp"

namespace opbook {

namespace {

void require(bool cond, const char* clause) {
  if (!cond) throw PreconditionFailed(clause);
}

}  // namespace

BookEmbedding realize_hamiltonian(const DegreeSequence& d) {
  require(in_family_d(d), "sequence must lie in family D");
  const int n = d.n();
  require(d[n - 1] == 2, "minimum degree must be 2");
  require(d.multiplicity(2) == 2, "exactly two degree-2 entries required");

  // Ranks 0..n-3 carry degree >= 3; dropping 2 from each leaves a forestic
  // sequence whose caterpillar-plus-matching shape drives the spine order.
  // The two degree-2 ranks become the cycle anchors x0 and x_last.
  std::vector<int> reduced(n - 2);
  for (int i = 0; i < n - 2; ++i) reduced[i] = d[i] - 2;
  CaterpillarRealization cat = caterpillar_decompose(reduced);
  const int s = static_cast<int>(cat.spine.size());
  const int x0 = n - 2, xlast = n - 1;

  std::vector<int> cyc;
  cyc.reserve(n);
  cyc.push_back(x0);
  // Down one side: odd spine stops interleaved with the leaf blocks of their
  // even successors.
  for (int i = 0; i < s; i += 2) {
    cyc.push_back(cat.spine[i]);
    if (i + 1 < s)
      for (int leaf : cat.leaves[i + 1]) cyc.push_back(leaf);
  }
  // The matching opens around the far anchor so each pair nests over it.
  for (const auto& pr : cat.matching) cyc.push_back(pr.first);
  cyc.push_back(xlast);
  for (auto it = cat.matching.rbegin(); it != cat.matching.rend(); ++it)
    cyc.push_back(it->second);
  // Back up the other side: even spine stops with the leaf blocks of their odd
  // predecessors.
  if (s % 2 == 1)
    for (int leaf : cat.leaves[s - 1]) cyc.push_back(leaf);
  for (int e = (s % 2 == 0) ? s - 1 : s - 2; e >= 1; e -= 2) {
    cyc.push_back(cat.spine[e]);
    for (int leaf : cat.leaves[e - 1]) cyc.push_back(leaf);
  }

  if (static_cast<int>(cyc.size()) != n)
    throw InternalError("cycle order lost vertices");

  BookEmbedding emb;
  emb.spine = cyc;
  emb.pages.resize(1);
  auto& page = emb.pages[0];
  for (int i = 0; i + 1 < n; ++i) page.emplace_back(cyc[i], cyc[i + 1]);
  page.emplace_back(cyc.front(), cyc.back());
  for (int i = 0; i + 1 < s; ++i)
    page.emplace_back(cat.spine[i], cat.spine[i + 1]);
  for (int i = 0; i < s; ++i)
    for (int leaf : cat.leaves[i]) page.emplace_back(cat.spine[i], leaf);
  for (const auto& pr : cat.matching) page.emplace_back(pr.first, pr.second);

  if (!page_noncrossing(emb.spine, page))
    throw InternalError("hamiltonian layout crossed itself");
  return emb;
}

BookEmbedding realize_many_twos(const DegreeSequence& d) {
  require(in_family_d(d), "sequence must lie in family D");
  const int n = d.n();
  require(d[n - 1] == 2 && d[n - 2] == 2, "last two degrees must be 2");
  const int w2 = d.multiplicity(2);

  if (d[0] == 2) {
    // Pure cycle.
    BookEmbedding emb;
    emb.pages.resize(1);
    for (int i = 0; i < n; ++i) emb.spine.push_back(i);
    for (int i = 0; i + 1 < n; ++i) emb.pages[0].emplace_back(i, i + 1);
    emb.pages[0].emplace_back(0, n - 1);
    return emb;
  }
  if (w2 == 2) return realize_hamiltonian(d);
  require(d.volume() <= 4LL * n - 2 * w2 - 2, "volume bound for the subdivision");

  // Keep two 2s, realize, then stretch the wrap-around edge into a path
  // through the removed 2s. The kept ids coincide with the final ranks.
  const int p = n - w2;
  std::vector<int> shrunk(d.degrees().begin(), d.degrees().begin() + p);
  shrunk.push_back(2);
  shrunk.push_back(2);
  BookEmbedding emb = realize_hamiltonian(DegreeSequence(std::move(shrunk)));

  Edge wrap(emb.spine.front(), emb.spine.back());
  auto& page = emb.pages[0];
  auto it = std::find(page.begin(), page.end(), wrap);
  if (it == page.end()) throw InternalError("wrap-around edge missing");
  page.erase(it);

  int prev = emb.spine.back();
  for (int w = p + 2; w < n; ++w) {
    emb.spine.push_back(w);
    page.emplace_back(prev, w);
    prev = w;
  }
  page.emplace_back(prev, emb.spine.front());

  if (!page_noncrossing(emb.spine, page))
    throw InternalError("subdivided layout crossed itself");
  return emb;
}

}  // namespace opbook
