// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "tdl/calculus.hpp"

namespace tdl {

// A named proof. A non-empty hypothesis set makes it a template: the tree
// derives the conclusion from those sequents, used as "hyp" leaves.
struct ScriptProof {
  std::string name;
  std::vector<Sequent> hypotheses;
  ProofTree tree;
};

struct ProofScript {
  Calculus calc = Calculus::lt;
  std::vector<ScriptProof> proofs;
};

// Document form: {"type": "proof-script", "system": ..., "proofs": [{"name",
// "hypotheses", "nodes": [[id, rule, [premise ids], sequent], ...]}]}. A
// premise id must name an earlier node and every node except the last, which
// is the root, is used exactly once. Unknown fields are rejected.
ProofScript proof_script_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const ProofScript& script);
ProofScript load_proof_script(const std::string& path);

// Directory of the shipped scripts; TDL_DATA_DIR overrides the build-time path.
std::string bundled_script_path(Calculus c);

struct ScriptItemReport {
  std::string name;
  int nodes = 0;
  std::optional<RuleMismatchInfo> mismatch;           // as written
  std::optional<RuleMismatchInfo> expanded_mismatch;  // after expand_derived, primitives only
  bool valid = false;  // conclusion valid on the class (templates: relative to the hypotheses)
  bool ok() const { return !mismatch && !expanded_mismatch && valid; }
};

struct ScriptReport {
  Calculus calc = Calculus::lt;
  int max_size = 0;
  int algebras = 0;
  std::vector<ScriptItemReport> items;
  bool ok() const;
};

// Default class bounds per calculus, chosen to keep each replay short.
int default_script_bound(Calculus c);

ScriptReport run_proof_script(const ProofScript& script, int max_size);
ScriptReport run_bundled_proofs(Calculus c);
ScriptReport run_bundled_proofs(Calculus c, int max_size);

}  // namespace tdl
