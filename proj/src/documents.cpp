// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#include "tdl/documents.hpp"

#include <fstream>
#include <map>

#include "tdl/duality.hpp"

namespace tdl {

namespace {

using json = nlohmann::ordered_json;

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed,
                    const std::string& where) {
  if (!obj.is_object()) throw InputError(where + " must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (std::string_view a : allowed) known = known || key == a;
    if (!known) throw InputError("unknown field '" + key + "' in " + where);
  }
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError("missing field '" + std::string(key) + "' in " + where);
  return *it;
}

void expect_type(const json& doc, const std::string& type) {
  const std::string got = document_type(doc);
  if (got != type) throw InputError("expected a " + type + " document, got " + got);
}

// Names in declaration order; index lookup by name.
class Names {
 public:
  Names(const json& list, const std::string& where) : where_(where) {
    if (!list.is_array()) throw InputError(where + " must be an array of names");
    if (list.size() > static_cast<std::size_t>(kMaxCarrier))
      throw SizeLimit(where + " has more than " + std::to_string(kMaxCarrier) + " entries");
    for (const json& n : list) {
      const std::string s = n.get<std::string>();
      if (!index_.emplace(s, static_cast<Element>(names_.size())).second)
        throw InputError("duplicate name '" + s + "' in " + where);
      names_.push_back(s);
    }
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  Element at(const json& n) const {
    const std::string s = n.get<std::string>();
    auto it = index_.find(s);
    if (it == index_.end()) throw InputError("unknown name '" + s + "' in " + where_);
    return it->second;
  }

  std::vector<std::pair<Element, Element>> pairs(const json& list, const std::string& what) const {
    if (!list.is_array()) throw InputError(what + " must be an array of pairs");
    std::vector<std::pair<Element, Element>> out;
    for (const json& p : list) {
      if (!p.is_array() || p.size() != 2) throw InputError(what + " entries must be [name, name]");
      out.emplace_back(at(p[0]), at(p[1]));
    }
    return out;
  }

  Subset subset(const json& list, const std::string& what) const {
    if (!list.is_array()) throw InputError(what + " must be an array of names");
    Subset s;
    for (const json& n : list) s = s.with(at(n));
    return s;
  }

 private:
  std::string where_;
  std::vector<std::string> names_;
  std::map<std::string, Element> index_;
};

OperatorTable table_from_json(const json& map, const Names& names, const std::string& op) {
  if (!map.is_object()) throw InputError(op + " must be an object from names to names");
  OperatorTable t(static_cast<std::size_t>(names.size()), -1);
  for (const auto& [key, value] : map.items()) t[names.at(json(key))] = names.at(value);
  for (Element x = 0; x < names.size(); ++x)
    if (t[x] < 0) throw InputError(op + " has no value for '" + names.names()[x] + "'");
  return t;
}

json table_to_json(const Lattice& l, const OperatorTable& t) {
  json out = json::object();
  for (Element x = 0; x < l.size(); ++x) out[l.label(x)] = l.label(t[x]);
  return out;
}

json pairs_to_json(const Poset& p, const std::vector<std::pair<Element, Element>>& pairs) {
  json out = json::array();
  for (auto [x, y] : pairs) out.push_back(json::array({p.label(x), p.label(y)}));
  return out;
}

json names_to_json(const Poset& p) {
  json out = json::array();
  for (Element x = 0; x < p.size(); ++x) out.push_back(p.label(x));
  return out;
}

json subset_to_json(const Poset& p, Subset s) {
  json out = json::array();
  for (Element x : s) out.push_back(p.label(x));
  return out;
}

}  // namespace

TdlAlgebra AlgebraDocument::build() const {
  TdlAlgebra a = build_tdl_algebra(lattice, G, H, F, P);
  return neg ? a.with_negation(*neg) : a;
}

std::string document_type(const json& doc) {
  if (!doc.is_object()) throw InputError("a document must be a JSON object");
  return field(doc, "type", "document").get<std::string>();
}

AlgebraDocument algebra_document_from_json(const json& doc) {
  expect_type(doc, "tdl-algebra");
  reject_unknown(doc, {"type", "elements", "leq", "G", "H", "F", "P", "neg"}, "tdl-algebra");
  const Names names(field(doc, "elements", "tdl-algebra"), "elements");
  if (names.size() == 0) throw InputError("an algebra needs at least one element");
  const auto leq = names.pairs(field(doc, "leq", "tdl-algebra"), "leq");
  AlgebraDocument out;
  out.lattice = lattice_from_poset(build_poset(names.size(), leq, names.names()));
  out.G = table_from_json(field(doc, "G", "tdl-algebra"), names, "G");
  out.H = table_from_json(field(doc, "H", "tdl-algebra"), names, "H");
  out.F = table_from_json(field(doc, "F", "tdl-algebra"), names, "F");
  out.P = table_from_json(field(doc, "P", "tdl-algebra"), names, "P");
  if (auto n = doc.find("neg"); n != doc.end()) out.neg = table_from_json(*n, names, "neg");
  return out;
}

json to_json(const TdlAlgebra& a) {
  const Lattice& l = a.lattice();
  json out = {{"type", "tdl-algebra"},
              {"elements", names_to_json(l.order())},
              {"leq", pairs_to_json(l.order(), l.order().covers())},
              {"G", table_to_json(l, a.G_table())},
              {"H", table_to_json(l, a.H_table())},
              {"F", table_to_json(l, a.F_table())},
              {"P", table_to_json(l, a.P_table())}};
  if (a.neg()) out["neg"] = table_to_json(l, *a.neg());
  return out;
}

TdlFrame frame_from_json(const json& doc) {
  expect_type(doc, "tdl-frame");
  reject_unknown(doc, {"type", "points", "leq", "R"}, "tdl-frame");
  const Names names(field(doc, "points", "tdl-frame"), "points");
  const auto leq = names.pairs(field(doc, "leq", "tdl-frame"), "leq");
  TdlFrame x;
  x.order = build_poset(names.size(), leq, names.names());
  x.R = Relation(names.size());
  for (auto [p, q] : names.pairs(field(doc, "R", "tdl-frame"), "R")) x.R.add(p, q);
  const FrameReport report = is_tdl_frame(x.order, x.R);
  if (!report.ok()) {
    std::string msg = "not a tDL-frame:";
    for (const Violation& v : report.violations) msg += " " + v.detail + ";";
    throw InputError(msg);
  }
  return x;
}

json to_json(const TdlFrame& x) {
  const Poset& order = x.order;
  return {{"type", "tdl-frame"},
          {"points", names_to_json(order)},
          {"leq", pairs_to_json(order, order.covers())},
          {"R", pairs_to_json(order, x.R.pairs())}};
}

KripkeModel model_from_json(const json& doc) {
  expect_type(doc, "kripke-model");
  reject_unknown(doc, {"type", "frame", "meaning"}, "kripke-model");
  json frame = field(doc, "frame", "kripke-model");
  if (frame.is_object() && !frame.contains("type")) frame["type"] = "tdl-frame";
  TdlFrame x = frame_from_json(frame);
  const Names names(names_to_json(x.order), "points");
  const json& meaning = field(doc, "meaning", "kripke-model");
  if (!meaning.is_object()) throw InputError("meaning must be an object from variables to point lists");
  Meaning m;
  for (const auto& [var, points] : meaning.items()) {
    // Variable names follow the formula syntax.
    if (parse_formula(var).op() != Op::var) throw InputError("'" + var + "' is not a variable name");
    m[var] = names.subset(points, "meaning of " + var);
  }
  return KripkeModel(std::move(x), std::move(m));
}

json to_json(const KripkeModel& m) {
  json frame = to_json(m.frame());
  const Poset& order = m.frame().order;
  json meaning = json::object();
  for (const auto& [var, s] : m.meaning()) meaning[var] = subset_to_json(order, s);
  return {{"type", "kripke-model"}, {"frame", frame}, {"meaning", meaning}};
}

json assignment_to_json(const TdlAlgebra& a, const Assignment& v) {
  json out = json::object();
  for (const auto& [var, e] : v) out[var] = a.label(e);
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace tdl
