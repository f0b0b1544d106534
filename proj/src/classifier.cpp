#include "opbook/classifier.hpp"

#include <string>

#include "opbook/forest.hpp"
#include "opbook/lowdeg.hpp"
#include "opbook/reductions.hpp"

namespace opbook {

const char* certificate_name(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::TailViolation: return "tail_violation";
    case Certificate::Kind::VolumeViolation: return "volume_violation";
    case Certificate::Kind::DeficitViolation: return "deficit_violation";
  }
  return "?";
}

bool Certificate::holds(const DegreeSequence& d) const {
  const int n = d.n();
  switch (kind) {
    case Kind::TailViolation:
      return d[n - 2] > 2 || (n >= 3 && d[n - 3] > 3);
    case Kind::VolumeViolation:
      return d.volume() > 4LL * n - 6 - 2LL * d.multiplicity(1);
    case Kind::DeficitViolation:
      // the deficit bound is only a necessary condition when d2 > 3
      if (d[1] <= 3 || d.volume() % 2 != 0) return false;
      return 2 * edge_deficit(d) < low_degree_surplus(d);
  }
  return false;
}

Outcome classify(const DegreeSequence& d) {
  const int n = d.n();
  Outcome out;

  if (d.volume() % 2 != 0 || !is_graphic(d)) {
    out.status = Outcome::Status::NotGraphic;
    return out;
  }

  FamilyTag tag = family_of(d);
  if (tag == FamilyTag::Forestic) {
    out.status = Outcome::Status::Realized;
    out.embedding = realize_forestic(d).first;
    out.cls = RealizationClass::Forest;
    return out;
  }

  if (tag == FamilyTag::OverVolume) {
    // More degree than any outerplanar graph on n vertices can carry once
    // each degree-1 vertex's forced edge is set aside.
    Certificate c;
    c.kind = Certificate::Kind::VolumeViolation;
    c.inequality = "volume > 4n - 6 - 2*omega1";
    c.values = {{"n", n}, {"volume", d.volume()}, {"omega1", d.multiplicity(1)}};
    out.status = Outcome::Status::NotOuterplanaric;
    out.certificate = std::move(c);
    return out;
  }

  // Any outerplanar graph keeps at least two vertices of degree at most 2
  // and at least three of degree at most 3 (ears of the outer face).
  if (d[n - 2] > 2 || (n >= 3 && d[n - 3] > 3)) {
    Certificate c;
    c.kind = Certificate::Kind::TailViolation;
    if (d[n - 2] > 2) {
      c.inequality = "d_{n-1} > 2";
      c.values = {{"n", n}, {"d_{n-1}", d[n - 2]}};
    } else {
      c.inequality = "d_{n-2} > 3";
      c.values = {{"n", n}, {"d_{n-2}", d[n - 3]}};
    }
    out.status = Outcome::Status::NotOuterplanaric;
    out.certificate = std::move(c);
    return out;
  }

  // With two vertices of degree above 3, any outerplanar realization obeys
  // 2*deltaE >= deltaOmega; too many low-degree vertices rule every
  // realization out, whatever the maximum degree is.
  if (d[1] > 3 && 2 * edge_deficit(d) < low_degree_surplus(d)) {
    Certificate c;
    c.kind = Certificate::Kind::DeficitViolation;
    c.inequality = "2*deltaE < deltaOmega";
    c.values = {{"n", n},
                {"deltaE", edge_deficit(d)},
                {"deltaOmega", low_degree_surplus(d)}};
    out.status = Outcome::Status::NotOuterplanaric;
    out.certificate = std::move(c);
    return out;
  }

  auto [emb, cls] = d[0] <= 4   ? realize_d1le4(d)
                    : d[1] <= 3 ? realize_small_d2(d)
                                : realize_with_ones(d);
  out.status = Outcome::Status::Realized;
  out.embedding = std::move(emb);
  out.cls = cls;
  return out;
}

}  // namespace opbook
