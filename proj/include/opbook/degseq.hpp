#pragma once

#include <cstdint>
#include <vector>

#include "opbook/errors.hpp"

namespace opbook {

// Nonincreasing sequence of positive vertex degrees. Inputs are sorted at
// construction; zero entries and n < 2 are rejected. Working sequences that
// carry zeros (they show up inside the volume-splitting constructions) are
// plain vectors, not this type.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> degrees);

  int n() const { return static_cast<int>(deg_.size()); }
  long long volume() const { return volume_; }
  int operator[](int rank) const { return deg_[rank]; }
  const std::vector<int>& degrees() const { return deg_; }

  // omega_x: how many entries equal x.
  int multiplicity(int x) const;

 private:
  std::vector<int> deg_;
  long long volume_ = 0;
};

enum class FamilyTag { Forestic, InDle4, InDge5, OverVolume, OddSum };

bool is_graphic(const DegreeSequence& d);

// (4n - 6 - volume) / 2; throws OddVolume when the volume is odd.
long long edge_deficit(const DegreeSequence& d);

// 3*omega1 + 2*omega2 + omega3 - n.
long long low_degree_surplus(const DegreeSequence& d);

FamilyTag family_of(const DegreeSequence& d);

// True for InDle4 and InDge5, i.e. even volume with 2n <= volume <= 4n-6-2*omega1.
bool in_family_d(const DegreeSequence& d);

}  // namespace opbook
