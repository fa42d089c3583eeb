#include "lsg/document.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace lsg {

using nlohmann::json;

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string kind_name(const AnyDesign& d) {
  static const char* names[] = {"gdd", "large_set", "holed_ls", "gls", "lr", "frame", "fan"};
  return names[d.index()];
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::runtime_error("document: " + what); }

json blocks_json(const BlockMultiset& m) {
  json a = json::array();
  for (const auto& [b, c] : m) a.push_back({{"m", c}, {"p", b}});
  return a;
}

json block_list_json(const std::vector<Block>& bs) {
  json a = json::array();
  for (const auto& b : bs) a.push_back(b);
  return a;
}

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key ") + key);
  return j.at(key);
}

int need_int(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number_integer()) bad(std::string("key ") + key + " is not an integer");
  return v.get<int>();
}

Block block_from(const json& j) {
  if (!j.is_array()) bad("block is not an array");
  Block b;
  for (const auto& x : j) {
    if (!x.is_number_integer()) bad("block entry is not an integer");
    b.push_back(x.get<int>());
  }
  return b;
}

BlockMultiset blocks_from(const json& j) {
  if (!j.is_array()) bad("blocks is not an array");
  BlockMultiset m;
  for (const auto& e : j) {
    Block b = block_from(need(e, "p"));
    std::sort(b.begin(), b.end());
    const int c = need_int(e, "m");
    if (c <= 0) bad("non-positive multiplicity");
    m[b] += c;
  }
  return m;
}

std::vector<Block> block_list_from(const json& j) {
  if (!j.is_array()) bad("block list is not an array");
  std::vector<Block> out;
  for (const auto& e : j) out.push_back(block_from(e));
  return out;
}

json params_json(const DesignParams& p) { return {{"lambda", p.lambda}, {"g", p.g}, {"u", p.u}}; }

DesignParams params_from(const json& j) {
  return {need_int(j, "lambda"), need_int(j, "g"), need_int(j, "u")};
}

json profile_json(const HoleProfile& p) { return {{"K0", p.K0}, {"K1", p.K1}, {"K2", p.K2}}; }

std::set<int> int_set(const json& j) {
  if (!j.is_array()) bad("size set is not an array");
  std::set<int> s;
  for (const auto& x : j) s.insert(x.get<int>());
  return s;
}

json holed_json(const HoledLargeSet& h, const std::vector<ArcList>* arcs) {
  json j;
  j["v"] = h.v;
  j["lambda"] = h.lambda;
  j["profile"] = profile_json(h.profile);
  j["labels"] = {{"inf1", h.inf1()}, {"inf2", h.inf2()}};
  json ms = json::array();
  for (std::size_t r = 0; r < h.members.size(); ++r) {
    json m;
    m["blocks"] = blocks_json(h.members[r]);
    if (arcs) {
      json a = json::array();
      for (const auto& [x, y] : arcs->at(r)) a.push_back({x, y});
      m["arcs"] = a;
    }
    ms.push_back(m);
  }
  j["members"] = ms;
  return j;
}

HoledLargeSet holed_from(const json& j, std::vector<ArcList>* arcs) {
  HoledLargeSet h;
  h.v = need_int(j, "v");
  h.lambda = need_int(j, "lambda");
  const json& p = need(j, "profile");
  h.profile = {int_set(need(p, "K0")), int_set(need(p, "K1")), int_set(need(p, "K2"))};
  const json& labels = need(j, "labels");
  if (need_int(labels, "inf1") != h.v - 2 || need_int(labels, "inf2") != h.v - 1)
    bad("distinguished points must be the two largest labels");
  for (const auto& m : need(j, "members")) {
    h.members.push_back(blocks_from(need(m, "blocks")));
    if (arcs) {
      ArcList a;
      for (const auto& e : need(m, "arcs")) {
        if (!e.is_array() || e.size() != 2) bad("arc must be a pair");
        a.push_back({e[0].get<int>(), e[1].get<int>()});
      }
      sort_arcs(a);
      arcs->push_back(std::move(a));
    }
  }
  return h;
}

json resolution_json(const Resolution& r) {
  json cls = json::array();
  for (const auto& c : r.classes) cls.push_back(block_list_json(c));
  return cls;
}

Resolution resolution_from(const json& j, int v) {
  Resolution r{v, {}};
  if (!j.is_array()) bad("resolution is not an array");
  for (const auto& c : j) r.classes.push_back(block_list_from(c));
  return r;
}

bool flat(const json& j) {
  if (j.is_primitive()) return true;
  if (j.is_array()) {
    for (const auto& e : j)
      if (!e.is_primitive()) return false;
    return true;
  }
  for (const auto& [k, v] : j.items())
    if (!(v.is_primitive() || (v.is_array() && flat(v)))) return false;
  return true;
}

void dump_into(const json& j, int indent, std::string& out) {
  if (flat(j)) {
    out += j.dump();
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    out += "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + json(k).dump() + ": ";
      dump_into(v, indent + 2, out);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else {
    out += "[\n";
    bool first = true;
    for (const auto& v : j) {
      if (!first) out += ",\n";
      first = false;
      out += pad;
      dump_into(v, indent + 2, out);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
  }
}

}  // namespace

std::string canonical_dump(const json& j) {
  std::string out;
  dump_into(j, 0, out);
  return out + "\n";
}

json to_json(const DesignDocument& doc) {
  json j = std::visit(
      [&](const auto& d) -> json {
        using T = std::decay_t<decltype(d)>;
        json o;
        if constexpr (std::is_same_v<T, GroupedDesign>) {
          o["v"] = d.v;
          o["groups"] = d.groups;
          o["params"] = params_json(doc.params);
          o["simple"] = doc.simple;
          o["blocks"] = blocks_json(d.blocks);
        } else if constexpr (std::is_same_v<T, LargeSet>) {
          o["v"] = d.v();
          o["groups"] = d.groups;
          o["params"] = params_json(d.params);
          json ms = json::array();
          for (const auto& m : d.members) ms.push_back({{"blocks", blocks_json(m)}});
          o["members"] = ms;
        } else if constexpr (std::is_same_v<T, HoledLargeSet>) {
          o = holed_json(d, nullptr);
          o["star"] = doc.star;
        } else if constexpr (std::is_same_v<T, GoodLargeSet>) {
          o = holed_json(d.base, &d.digraphs);
          o["star"] = doc.star;
        } else if constexpr (std::is_same_v<T, LRDesign>) {
          o["v"] = d.v;
          json ms = json::array();
          for (const auto& pr : d.members) ms.push_back({resolution_json(pr[0]), resolution_json(pr[1])});
          o["members"] = ms;
        } else if constexpr (std::is_same_v<T, Frame>) {
          o["params"] = {{"g", d.g}, {"u", d.u}};
          json cs = json::array();
          for (const auto& c : d.classes) cs.push_back(block_list_json(c));
          o["classes"] = cs;
        } else {
          o["v"] = d.v;
          o["groups"] = d.groups;
          o["a1"] = block_list_json(d.a1);
          o["t"] = block_list_json(d.t);
        }
        return o;
      },
      doc.design);
  j["format"] = doc.version;
  j["kind"] = kind_name(doc.design);
  j["provenance"] = doc.provenance;
  j["report"] = {{"passed", doc.recorded_pass}, {"violations", doc.recorded_violations}};
  return j;
}

DesignDocument from_json(const json& j) {
  DesignDocument doc;
  doc.version = need_int(j, "format");
  if (doc.version != 1) bad("unsupported format version");
  const std::string kind = need(j, "kind").get<std::string>();
  if (j.contains("provenance")) doc.provenance = j.at("provenance").get<std::string>();
  if (j.contains("report")) {
    doc.recorded_pass = need(j.at("report"), "passed").get<bool>();
    doc.recorded_violations = need(j.at("report"), "violations").get<std::size_t>();
  }
  auto groups_from = [](const json& g) {
    Groups gs;
    for (const auto& x : g) gs.push_back(block_from(x));
    return gs;
  };
  if (kind == "gdd") {
    GroupedDesign d{need_int(j, "v"), groups_from(need(j, "groups")), blocks_from(need(j, "blocks"))};
    doc.params = params_from(need(j, "params"));
    doc.simple = need(j, "simple").get<bool>();
    doc.design = std::move(d);
  } else if (kind == "large_set") {
    LargeSet ls;
    ls.params = params_from(need(j, "params"));
    ls.groups = groups_from(need(j, "groups"));
    for (const auto& m : need(j, "members")) ls.members.push_back(blocks_from(need(m, "blocks")));
    if (need_int(j, "v") != ls.v()) bad("v disagrees with params");
    doc.params = ls.params;
    doc.design = std::move(ls);
  } else if (kind == "holed_ls") {
    doc.design = holed_from(j, nullptr);
    doc.star = need(j, "star").get<bool>();
  } else if (kind == "gls") {
    GoodLargeSet g;
    g.base = holed_from(j, &g.digraphs);
    doc.star = need(j, "star").get<bool>();
    doc.design = std::move(g);
  } else if (kind == "lr") {
    LRDesign lr;
    lr.v = need_int(j, "v");
    for (const auto& pr : need(j, "members")) {
      if (!pr.is_array() || pr.size() != 2) bad("LR member must be a pair of resolutions");
      lr.members.push_back({resolution_from(pr[0], lr.v), resolution_from(pr[1], lr.v)});
    }
    doc.design = std::move(lr);
  } else if (kind == "frame") {
    Frame f;
    f.g = need_int(need(j, "params"), "g");
    f.u = need_int(need(j, "params"), "u");
    for (const auto& c : need(j, "classes")) f.classes.push_back(block_list_from(c));
    doc.design = std::move(f);
  } else if (kind == "fan") {
    FanDesign f;
    f.v = need_int(j, "v");
    f.groups = groups_from(need(j, "groups"));
    f.a1 = block_list_from(need(j, "a1"));
    f.t = block_list_from(need(j, "t"));
    doc.design = std::move(f);
  } else {
    bad("unknown kind " + kind);
  }
  return doc;
}

std::string export_document(const DesignDocument& doc) { return canonical_dump(to_json(doc)); }

DesignDocument import_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text, nullptr, true, true);
  } catch (const json::exception& e) {
    bad(std::string("parse error: ") + e.what());
  }
  try {
    return from_json(j);
  } catch (const json::exception& e) {
    bad(std::string("type error: ") + e.what());
  }
}

VerificationReport verify_document(const DesignDocument& doc, const VerifyOptions& o) {
  return std::visit(
      [&](const auto& d) -> VerificationReport {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, GroupedDesign>) {
          VerificationReport r = verify_gdd(d, doc.params.lambda, o);
          if (doc.simple) r.absorb(verify_simple(d, o));
          return r;
        } else if constexpr (std::is_same_v<T, LargeSet>) {
          return verify_large_set(d, o);
        } else if constexpr (std::is_same_v<T, HoledLargeSet>) {
          return doc.star ? verify_ls_star(d, o) : verify_ls(d, o);
        } else if constexpr (std::is_same_v<T, GoodLargeSet>) {
          return verify_gls(d, doc.star, o);
        } else {
          return verify_auxiliary(AuxObject(d), o);
        }
      },
      doc.design);
}

VerificationReport stamp_report(DesignDocument& doc, const VerifyOptions& o) {
  VerificationReport r = verify_document(doc, o);
  doc.recorded_pass = r.passed;
  doc.recorded_violations = r.total;
  return r;
}

}  // namespace lsg
