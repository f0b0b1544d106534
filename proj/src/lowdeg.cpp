#include "opbook/lowdeg.hpp"

#include <algorithm>
#include <string>

#include "opbook/hamiltonian.hpp"
#include "peel.hpp"

namespace opbook {

namespace {

void require(bool cond, const char* clause) {
  if (!cond) throw PreconditionFailed(clause);
}

// Insert vertex id right after the spine position of `anchor`.
void insert_after(BookEmbedding& emb, int anchor, int id) {
  auto it = std::find(emb.spine.begin(), emb.spine.end(), anchor);
  if (it == emb.spine.end()) throw InternalError("anchor vertex missing");
  emb.spine.insert(it + 1, id);
}

}  // namespace

std::pair<BookEmbedding, RealizationClass> realize_d1le4_tail22(
    const DegreeSequence& d) {
  require(in_family_d(d), "sequence must lie in family D");
  const int n = d.n();
  require(d[0] <= 4, "maximum degree must be at most 4");
  require(d[0] <= n - 1, "maximum degree must fit a simple graph");
  require(d[n - 1] == 2 && d[n - 2] == 2, "last two degrees must be 2");

  const int w2 = d.multiplicity(2), w3 = d.multiplicity(3), w4 = d.multiplicity(4);

  if (w3 > 0 || w4 == 0) {
    // Volume parity makes omega3 even, so omega3 >= 2 here and the
    // subdivision volume bound 4n - 2*omega2 - 2 holds with room to spare.
    return {realize_many_twos(d), RealizationClass::OP};
  }

  if (w4 == 1) {
    // (4, 2^(n-1)): one degree-4 hub riding a cycle through all the 2s, with
    // a chord pair (v1,v4),(v1,v5) closed by (v4,v5) to soak up the extra
    // degree. Ids: 0 is the 4; 1..4 are the four special 2s; the rest chain.
    BookEmbedding emb;
    emb.pages.resize(1);
    auto& page = emb.pages[0];
    emb.spine.push_back(1);
    int prev = 1;
    for (int u = 5; u < n; ++u) {
      emb.spine.push_back(u);
      page.emplace_back(prev, u);
      prev = u;
    }
    emb.spine.push_back(2);
    page.emplace_back(prev, 2);
    emb.spine.push_back(0);
    emb.spine.push_back(3);
    emb.spine.push_back(4);
    page.emplace_back(0, 1);
    page.emplace_back(0, 2);
    page.emplace_back(0, 3);
    page.emplace_back(0, 4);
    page.emplace_back(3, 4);
    if (!page_noncrossing(emb.spine, page))
      throw InternalError("degree-4 hub layout crossed itself");
    return {std::move(emb), RealizationClass::OP};
  }

  // omega4 >= 2: realize one vertex short with the two spare degree units
  // parked on a pair of 3s, then wire a fresh degree-2 vertex to both on the
  // second page.
  std::vector<int> d0;
  d0.insert(d0.end(), w4 - 2, 4);
  d0.push_back(3);
  d0.push_back(3);
  d0.insert(d0.end(), w2 - 1, 2);
  BookEmbedding emb = realize_many_twos(DegreeSequence(std::move(d0)));
  const int u = n - 1;
  insert_after(emb, w4 - 1, u);
  emb.pages.emplace_back();
  emb.pages[1].emplace_back(w4 - 2, u);
  emb.pages[1].emplace_back(w4 - 1, u);
  return {std::move(emb), RealizationClass::OP2};
}

std::pair<BookEmbedding, RealizationClass> realize_tail_ge23(
    const DegreeSequence& d) {
  const int n = d.n();
  // One page-2 edge buys two degree units beyond the outerplanar volume cap,
  // so the family gate here runs up to 4n - 4 - 2*omega1 (e.g. K4's (3^4)).
  require(d.volume() % 2 == 0, "volume must be even");
  require(d.volume() >= 2LL * n, "volume must reach 2n");
  require(d.volume() <= 4LL * n - 4 - 2LL * d.multiplicity(1),
          "volume must fit an outerplanar graph plus one edge");
  require(d[n - 1] >= 2 && d[n - 2] >= 3, "tail must be (3,3) or (3,2)");
  require(d[n - 2] == 3, "second-smallest degree must be exactly 3");
  require(d[n - 1] <= 3, "smallest degree must be 2 or 3");

  std::vector<int> dd = d.degrees();
  BookEmbedding emb;
  if (d[n - 1] == 3) {
    // Drop the last two 3s to 2s, close the Hamiltonian construction, and
    // join its two anchors on page 2.
    dd[n - 2] = 2;
    dd[n - 1] = 2;
    emb = realize_hamiltonian(DegreeSequence(std::move(dd)));
    emb.pages.emplace_back();
    emb.pages[1].emplace_back(n - 2, n - 1);
  } else {
    // Tail (3,3,2): demote the two 3s, realize with the subdivision step, and
    // join the far anchor to the subdivision vertex on page 2.
    if (n < 4 || d[n - 3] != 3)
      throw PreconditionFailed("tail (3,2) needs a third trailing 3");
    dd[n - 3] = 2;
    dd[n - 2] = 2;
    emb = realize_many_twos(DegreeSequence(std::move(dd)));
    emb.pages.emplace_back();
    emb.pages[1].emplace_back(n - 2, n - 1);
  }
  return {std::move(emb), RealizationClass::OP1};
}

std::pair<BookEmbedding, RealizationClass> realize_d1le4_with_ones(
    const DegreeSequence& d) {
  require(in_family_d(d), "sequence must lie in family D");
  require(d[0] <= 4, "maximum degree must be at most 4");
  require(d[d.n() - 1] == 1, "smallest degree must be 1");
  require(d[0] <= d.n() - 1, "maximum degree must fit a simple graph");

  detail::PeelResult peel = detail::peel_all_ones(d.degrees());
  DegreeSequence residual(peel.residual);
  if (residual[0] > residual.n() - 1)
    throw InternalError("peeled residual is not graphic");
  auto [emb, cls] = realize_d1le4(residual);

  std::vector<int> to_orig(d.n(), -1);
  for (int r = 0; r < residual.n(); ++r) to_orig[r] = peel.residual_to_orig[r];
  emb = detail::relabel(emb, to_orig);

  std::vector<int> degree = detail::degrees_by_id(emb, d.n());
  detail::reattach_leaves(emb, degree, peel.trace, 0);
  return {std::move(emb), cls};
}

std::pair<BookEmbedding, RealizationClass> realize_d1le4(const DegreeSequence& d) {
  require(d[0] <= 4, "maximum degree must be at most 4");
  require(d[0] <= d.n() - 1, "maximum degree must fit a simple graph");
  const int n = d.n();
  if (d[n - 1] == 1) return realize_d1le4_with_ones(d);
  // The (3,3)-tail route tolerates one edge past the outerplanar cap and
  // checks its own widened family gate.
  if (d[n - 2] >= 3) return realize_tail_ge23(d);
  return realize_d1le4_tail22(d);
}

}  // namespace opbook
