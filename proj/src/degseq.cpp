#include "opbook/degseq.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace opbook {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : deg_(std::move(degrees)) {
  if (deg_.size() < 2) throw Error("degree sequence needs at least 2 entries");
  std::sort(deg_.begin(), deg_.end(), std::greater<int>());
  if (deg_.back() < 1) throw Error("degrees must be positive");
  volume_ = std::accumulate(deg_.begin(), deg_.end(), 0LL);
}

int DegreeSequence::multiplicity(int x) const {
  if (x < 1) throw Error("multiplicity is defined for positive degrees");
  // deg_ is nonincreasing: the block of value x is an equal_range.
  auto lo = std::lower_bound(deg_.begin(), deg_.end(), x, std::greater<int>());
  auto hi = std::upper_bound(deg_.begin(), deg_.end(), x, std::greater<int>());
  return static_cast<int>(hi - lo);
}

bool is_graphic(const DegreeSequence& d) {
  const auto& a = d.degrees();
  const int n = d.n();
  if (d.volume() % 2 != 0) return false;
  if (a[0] > n - 1) return false;
  // Erdos-Gallai with prefix sums.
  std::vector<long long> pre(n + 1, 0);
  for (int i = 0; i < n; ++i) pre[i + 1] = pre[i] + a[i];
  for (int k = 1; k <= n; ++k) {
    long long lhs = pre[k];
    long long rhs = static_cast<long long>(k) * (k - 1);
    // Entries beyond k contribute min(d_i, k); a is sorted so the cutoff where
    // d_i <= k is found by binary search.
    auto it = std::lower_bound(a.begin() + k, a.end(), k, std::greater<int>());
    long long above = it - (a.begin() + k);  // entries > k
    rhs += above * k;
    rhs += pre[n] - pre[k + above];
    if (lhs > rhs) return false;
  }
  return true;
}

long long edge_deficit(const DegreeSequence& d) {
  if (d.volume() % 2 != 0) throw OddVolume();
  return (4LL * d.n() - 6 - d.volume()) / 2;
}

long long low_degree_surplus(const DegreeSequence& d) {
  return 3LL * d.multiplicity(1) + 2LL * d.multiplicity(2) + d.multiplicity(3) - d.n();
}

FamilyTag family_of(const DegreeSequence& d) {
  const long long vol = d.volume();
  const long long n = d.n();
  if (vol % 2 != 0) return FamilyTag::OddSum;
  if (vol <= 2 * n - 2) return FamilyTag::Forestic;
  if (vol > 4 * n - 6 - 2LL * d.multiplicity(1)) return FamilyTag::OverVolume;
  // No even volume lies strictly between 2n-2 and 2n, so vol >= 2n here.
  return d.degrees()[0] <= 4 ? FamilyTag::InDle4 : FamilyTag::InDge5;
}

bool in_family_d(const DegreeSequence& d) {
  FamilyTag t = family_of(d);
  return t == FamilyTag::InDle4 || t == FamilyTag::InDge5;
}

}  // namespace opbook
