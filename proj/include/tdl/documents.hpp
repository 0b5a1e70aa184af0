// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "tdl/kripke.hpp"
#include "tdl/semantics.hpp"

namespace tdl {

// JSON documents exchanged with the command line tool. Elements and points
// are referred to by name in files and by index in memory; indices follow the
// order of the "elements" or "points" array. Unknown fields are rejected.

// An algebra document after schema validation but before the axioms are
// checked, so that a file violating t1-t8 can still be reported on.
struct AlgebraDocument {
  Lattice lattice;
  OperatorTable G, H, F, P;
  std::optional<OperatorTable> neg;

  // Throws AxiomError on a t1-t8 failure and DeMorganLawViolation when the
  // attached negation is not a De Morgan involution.
  TdlAlgebra build() const;
};

std::string document_type(const nlohmann::ordered_json& doc);

AlgebraDocument algebra_document_from_json(const nlohmann::ordered_json& doc);
nlohmann::ordered_json to_json(const TdlAlgebra& a);

// The order must be a partial order and R must satisfy K1-K5.
TdlFrame frame_from_json(const nlohmann::ordered_json& doc);
nlohmann::ordered_json to_json(const TdlFrame& x);

KripkeModel model_from_json(const nlohmann::ordered_json& doc);
nlohmann::ordered_json to_json(const KripkeModel& m);

// Valuation as a map from variable to element name.
nlohmann::ordered_json assignment_to_json(const TdlAlgebra& a, const Assignment& v);

// Reads and parses a JSON file. Throws InputError on I/O or syntax errors.
nlohmann::ordered_json read_json_file(const std::string& path);

}  // namespace tdl
