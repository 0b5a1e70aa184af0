// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#include "tdl/proof_script.hpp"

#include <cstdlib>
#include <fstream>
#include <map>

#include "tdl/semantics.hpp"

namespace tdl {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
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

ScriptProof proof_from_json(const json& p, Calculus c) {
  if (!p.is_object()) throw InputError("a proof must be an object");
  const std::string name = field(p, "name", "proof").get<std::string>();
  const std::string where = "proof '" + name + "'";
  reject_unknown(p, {"name", "hypotheses", "nodes"}, where);
  ScriptProof out{name, {}, {}};
  if (auto h = p.find("hypotheses"); h != p.end())
    for (const json& s : *h) out.hypotheses.push_back(parse_sequent(s.get<std::string>(), c));

  const json& nodes = field(p, "nodes", where);
  if (!nodes.is_array() || nodes.empty()) throw InputError(where + " has no nodes");
  std::map<long long, ProofTree> open;  // built but not yet used as a premise
  std::set<long long> seen;
  long long last = 0;
  for (const json& n : nodes) {
    if (!n.is_array() || n.size() != 4) throw InputError(where + ": a node is [id, rule, [premises], sequent]");
    const long long id = n[0].get<long long>();
    if (!seen.insert(id).second) throw InputError(where + ": duplicate node id " + std::to_string(id));
    ProofTree t{parse_sequent(n[3].get<std::string>(), c), n[1].get<std::string>(), {}};
    for (const json& pid : n[2]) {
      auto it = open.find(pid.get<long long>());
      if (it == open.end())
        throw InputError(where + ": node " + std::to_string(id) + " cites " + pid.dump() +
                         ", which is not an earlier unused node");
      t.premises.push_back(std::move(it->second));
      open.erase(it);
    }
    open.emplace(id, std::move(t));
    last = id;
  }
  if (open.size() != 1) throw InputError(where + ": every node except the root must be used once");
  out.tree = std::move(open.at(last));
  return out;
}

void flatten(const ProofTree& t, json& nodes) {
  json premises = json::array();
  for (const ProofTree& p : t.premises) {
    flatten(p, nodes);
    premises.push_back(nodes.back()[0]);
  }
  nodes.push_back(json::array({static_cast<long long>(nodes.size()) + 1, t.rule, premises, render(t.conclusion)}));
}

}  // namespace

ProofScript proof_script_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("a proof script must be a JSON object");
  reject_unknown(doc, {"type", "system", "proofs"}, "proof-script");
  if (field(doc, "type", "proof-script") != "proof-script") throw InputError("type must be \"proof-script\"");
  ProofScript out;
  out.calc = parse_calculus(field(doc, "system", "proof-script").get<std::string>());
  for (const json& p : field(doc, "proofs", "proof-script")) out.proofs.push_back(proof_from_json(p, out.calc));
  return out;
}

json to_json(const ProofScript& script) {
  json proofs = json::array();
  for (const ScriptProof& p : script.proofs) {
    json hyps = json::array();
    for (const Sequent& s : p.hypotheses) hyps.push_back(render(s));
    json nodes = json::array();
    flatten(p.tree, nodes);
    proofs.push_back({{"name", p.name}, {"hypotheses", hyps}, {"nodes", nodes}});
  }
  return {{"type", "proof-script"}, {"system", std::string(calculus_name(script.calc))}, {"proofs", proofs}};
}

ProofScript load_proof_script(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  try {
    return proof_script_from_json(doc);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string bundled_script_path(Calculus c) {
  const char* env = std::getenv("TDL_DATA_DIR");
  const std::string dir = env && *env ? env : TDL_DATA_DIR;
  return dir + "/proofs/" + std::string(calculus_name(c)) + ".json";
}

bool ScriptReport::ok() const {
  for (const ScriptItemReport& i : items)
    if (!i.ok()) return false;
  return !items.empty();
}

int default_script_bound(Calculus c) {
  switch (c) {
    case Calculus::ltc: return 8;
    case Calculus::lti: return 5;
    default: return 5;
  }
}

ScriptReport run_proof_script(const ProofScript& script, int max_size) {
  ScriptReport report{script.calc, max_size, 0, {}};
  const std::vector<TdlAlgebra> algebras = algebra_class(script.calc, max_size);
  report.algebras = static_cast<int>(algebras.size());
  for (const ScriptProof& p : script.proofs) {
    ScriptItemReport item{p.name, proof_size(p.tree), std::nullopt, std::nullopt, false};
    CheckOptions opts{{p.hypotheses.begin(), p.hypotheses.end()}, true};
    item.mismatch = check_proof(p.tree, script.calc, opts);
    if (!item.mismatch) {
      opts.allow_derived = false;
      item.expanded_mismatch = check_proof(expand_derived(p.tree, script.calc), script.calc, opts);
    }
    item.valid = true;
    for (const TdlAlgebra& a : algebras) {
      bool premises = true;
      for (const Sequent& h : p.hypotheses) premises = premises && holds(a, h);
      if (premises && !holds(a, p.tree.conclusion)) {
        item.valid = false;
        break;
      }
    }
    report.items.push_back(std::move(item));
  }
  return report;
}

ScriptReport run_bundled_proofs(Calculus c) { return run_bundled_proofs(c, default_script_bound(c)); }

ScriptReport run_bundled_proofs(Calculus c, int max_size) {
  const ProofScript script = load_proof_script(bundled_script_path(c));
  if (script.calc != c)
    throw InputError(bundled_script_path(c) + " is written for " + std::string(calculus_name(script.calc)));
  return run_proof_script(script, max_size);
}

}  // namespace tdl
