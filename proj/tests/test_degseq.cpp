#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opbook/degseq.hpp"

using namespace opbook;

TEST_CASE("construction sorts and validates") {
  DegreeSequence d({2, 4, 3, 2});
  CHECK(d.n() == 4);
  CHECK(d[0] == 4);
  CHECK(d[1] == 3);
  CHECK(d[3] == 2);
  CHECK(d.volume() == 11);
  CHECK_THROWS_AS(DegreeSequence({3, 0, 1}), Error);
  CHECK_THROWS_AS(DegreeSequence({-1, 2}), Error);
  CHECK_THROWS_AS(DegreeSequence({5}), Error);
  CHECK_THROWS_AS(DegreeSequence({}), Error);
}

TEST_CASE("multiplicity counts equal entries") {
  DegreeSequence d({4, 3, 3, 2, 2, 2, 1});
  CHECK(d.multiplicity(1) == 1);
  CHECK(d.multiplicity(2) == 3);
  CHECK(d.multiplicity(3) == 2);
  CHECK(d.multiplicity(4) == 1);
  CHECK(d.multiplicity(5) == 0);
}

TEST_CASE("graphicality") {
  CHECK(is_graphic(DegreeSequence({3, 3, 3, 3})));
  CHECK(is_graphic(DegreeSequence({3, 1, 1, 1})));
  CHECK(is_graphic(DegreeSequence({3, 3, 2, 2, 1, 1})));
  CHECK_FALSE(is_graphic(DegreeSequence({3, 3, 1, 1})));
  CHECK_FALSE(is_graphic(DegreeSequence({6, 3, 3, 3, 3, 2})));
  // odd volume is never graphic
  CHECK_FALSE(is_graphic(DegreeSequence({3, 2, 2})));
}

TEST_CASE("edge deficit and its parity guard") {
  CHECK(edge_deficit(DegreeSequence({2, 2, 2})) == 0);
  CHECK(edge_deficit(DegreeSequence({2, 2, 2, 2})) == 1);
  CHECK_THROWS_AS(edge_deficit(DegreeSequence({3, 2, 2})), OddVolume);
}

TEST_CASE("low degree surplus") {
  // 3*omega1 + 2*omega2 + omega3 - n
  CHECK(low_degree_surplus(DegreeSequence({4, 2, 2, 2, 2})) == 3);
  CHECK(low_degree_surplus(DegreeSequence({2, 2, 2})) == 3);
  CHECK(low_degree_surplus(DegreeSequence({4, 4, 2, 2, 2})) == 1);
  CHECK(low_degree_surplus(DegreeSequence({5, 5, 4, 4})) == -4);
}

TEST_CASE("family classification") {
  CHECK(family_of(DegreeSequence({1, 1})) == FamilyTag::Forestic);
  CHECK(family_of(DegreeSequence({2, 2, 1, 1})) == FamilyTag::Forestic);
  CHECK(family_of(DegreeSequence({2, 2, 2})) == FamilyTag::InDle4);
  CHECK(family_of(DegreeSequence({4, 4, 2, 2, 2, 2})) == FamilyTag::InDle4);
  CHECK(family_of(DegreeSequence({5, 3, 2, 2, 2, 2, 2, 2})) == FamilyTag::InDge5);
  CHECK(family_of(DegreeSequence({3, 3, 3, 3})) == FamilyTag::OverVolume);
  CHECK(family_of(DegreeSequence({3, 2, 2})) == FamilyTag::OddSum);
  // 1s tighten the volume cap: (4,4,4,4,1,1,1,1) has volume 20 > 4*8-6-2*4
  CHECK(family_of(DegreeSequence({4, 4, 4, 4, 1, 1, 1, 1})) ==
        FamilyTag::OverVolume);
}

TEST_CASE("family membership predicate") {
  CHECK(in_family_d(DegreeSequence({2, 2, 2})));
  CHECK(in_family_d(DegreeSequence({5, 3, 2, 2, 2, 2, 2, 2})));
  CHECK_FALSE(in_family_d(DegreeSequence({1, 1})));
  CHECK_FALSE(in_family_d(DegreeSequence({3, 3, 3, 3})));
  CHECK_FALSE(in_family_d(DegreeSequence({3, 2, 2})));
}
