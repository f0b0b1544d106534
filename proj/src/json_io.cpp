#include "opbook/json_io.hpp"

#include <json.hpp>

#include "opbook/embedding.hpp"

namespace opbook {

using json = nlohmann::ordered_json;

namespace {

json stats_json(const DegreeSequence& d) {
  json st;
  st["n"] = d.n();
  st["volume"] = d.volume();
  if (d.volume() % 2 == 0)
    st["delta_e"] = edge_deficit(d);
  else
    st["delta_e"] = nullptr;
  st["delta_omega"] = low_degree_surplus(d);
  st["omega1"] = d.multiplicity(1);
  st["omega2"] = d.multiplicity(2);
  st["omega3"] = d.multiplicity(3);
  st["omega4"] = d.multiplicity(4);
  return st;
}

json pages_json(const BookEmbedding& emb) {
  json pages = json::array();
  for (const auto& page : emb.pages) {
    json pj = json::array();
    for (const Edge& e : page) pj.push_back({e.u, e.v});
    pages.push_back(std::move(pj));
  }
  return pages;
}

}  // namespace

std::string outcome_to_json(const DegreeSequence& d, const Outcome& out) {
  json j;
  switch (out.status) {
    case Outcome::Status::NotGraphic:
      j["status"] = "not_graphic";
      break;
    case Outcome::Status::NotOuterplanaric:
      j["status"] = "not_outerplanaric";
      break;
    case Outcome::Status::Realized:
      j["status"] = "realized";
      break;
  }
  if (out.certificate) {
    json c;
    c["type"] = certificate_name(out.certificate->kind);
    c["inequality"] = out.certificate->inequality;
    json vals;
    for (const auto& [k, v] : out.certificate->values) vals[k] = v;
    c["values"] = std::move(vals);
    j["certificate"] = std::move(c);
  }
  if (out.cls) j["class"] = class_name(*out.cls);
  j["input"] = d.degrees();
  if (out.embedding) {
    j["spine"] = out.embedding->spine;
    j["pages"] = pages_json(*out.embedding);
  }
  j["stats"] = stats_json(d);
  return j.dump(2) + "\n";
}

std::string verify_json(const std::string& stored_json) {
  json j;
  try {
    j = json::parse(stored_json);
  } catch (const json::exception& e) {
    throw Error(std::string("bad JSON: ") + e.what());
  }
  if (!j.contains("input") || !j["input"].is_array())
    throw Error("stored result lacks an input array");
  std::vector<int> degrees;
  for (const auto& x : j["input"]) degrees.push_back(x.get<int>());
  DegreeSequence d(degrees);

  json rep;
  const std::string status = j.value("status", "");
  rep["status"] = status;
  if (status == "realized") {
    if (!j.contains("spine") || !j.contains("pages") || !j.contains("class"))
      throw Error("realized result lacks spine/pages/class");
    BookEmbedding emb;
    for (const auto& x : j["spine"]) emb.spine.push_back(x.get<int>());
    for (const auto& pg : j["pages"]) {
      std::vector<Edge> page;
      for (const auto& e : pg) page.emplace_back(e[0].get<int>(), e[1].get<int>());
      emb.pages.push_back(std::move(page));
    }
    const std::string cls_s = j["class"].get<std::string>();
    RealizationClass cls;
    if (cls_s == "Forest") cls = RealizationClass::Forest;
    else if (cls_s == "OP") cls = RealizationClass::OP;
    else if (cls_s == "OP+1") cls = RealizationClass::OP1;
    else if (cls_s == "OP+2") cls = RealizationClass::OP2;
    else if (cls_s == "OP+bi") cls = RealizationClass::OPbi;
    else if (cls_s == "2PBE") cls = RealizationClass::TwoPBE;
    else throw Error("unknown class '" + cls_s + "'");

    VerifyReport vr = verify(d, emb, cls);
    rep["degree_match"] = vr.degree_match;
    rep["pages_disjoint"] = vr.pages_disjoint;
    rep["simple"] = vr.simple;
    rep["page_noncrossing"] = vr.page_noncrossing;
    rep["class_constraint"] = vr.class_constraint;
    rep["pass"] = vr.pass();
    if (!vr.detail.empty()) rep["detail"] = vr.detail;
  } else if (status == "not_outerplanaric") {
    if (!j.contains("certificate")) throw Error("rejection lacks a certificate");
    const std::string type = j["certificate"].value("type", "");
    Certificate c;
    if (type == "tail_violation") c.kind = Certificate::Kind::TailViolation;
    else if (type == "volume_violation") c.kind = Certificate::Kind::VolumeViolation;
    else if (type == "deficit_violation") c.kind = Certificate::Kind::DeficitViolation;
    else throw Error("unknown certificate '" + type + "'");
    bool holds = c.holds(d);
    rep["certificate_holds"] = holds;
    rep["pass"] = holds;
  } else if (status == "not_graphic") {
    bool ok = d.volume() % 2 != 0 || !is_graphic(d);
    rep["not_graphic_confirmed"] = ok;
    rep["pass"] = ok;
  } else {
    throw Error("unknown status '" + status + "'");
  }
  return rep.dump(2) + "\n";
}

std::string embedding_to_dot(const BookEmbedding& emb) {
  static const char* colors[2] = {"black", "red"};
  std::string out = "graph book {\n  node [shape=circle];\n";
  for (int p = 0; p < emb.n(); ++p) {
    out += "  v" + std::to_string(emb.spine[p]) + " [spine=" + std::to_string(p) +
           "];\n";
  }
  for (size_t pg = 0; pg < emb.pages.size(); ++pg)
    for (const Edge& e : emb.pages[pg])
      out += "  v" + std::to_string(e.u) + " -- v" + std::to_string(e.v) +
             " [color=" + colors[pg % 2] + "];\n";
  out += "}\n";
  return out;
}

}  // namespace opbook
