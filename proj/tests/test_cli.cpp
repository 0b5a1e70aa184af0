// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "tdl/cli.hpp"
#include "tdl/documents.hpp"
#include "tdl/duality.hpp"

using namespace tdl;
using json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run tdl_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(TDL_FIXTURE_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("tdl_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check reports axioms and parse failures with distinct exit codes") {
  const Run ok = tdl_run({"check", fixture("ex24.json")});
  CHECK(ok.code == kExitOk);
  CHECK(contains(ok.out, "valid: 6 elements"));

  const Run bad = tdl_run({"check", fixture("t4_violation.json")});
  CHECK(bad.code == kExitFailed);
  CHECK(contains(bad.out, "t4 at (0,1)"));

  const Run json_bad = tdl_run({"check", fixture("t4_violation.json"), "--format", "json"});
  const json report = json::parse(json_bad.out);
  CHECK(report["valid"] == false);
  bool found = false;
  for (const json& v : report["violations"]) found = found || v["detail"] == "t4 at (0,1)";
  CHECK(found);

  CHECK(tdl_run({"check", fixture("malformed.json")}).code == kExitInput);
  CHECK(tdl_run({"check", fixture("missing.json")}).code == kExitInput);
  CHECK(tdl_run({"check", fixture("chain2_frame.json")}).code == kExitInput);
}

TEST_CASE("documents reject unknown fields, unknown names and partial tables") {
  json doc = json::parse(std::ifstream(fixture("ex24.json")));
  CHECK_NOTHROW(algebra_document_from_json(doc).build());

  json extra = doc;
  extra["comment"] = "x";
  CHECK_THROWS_AS(algebra_document_from_json(extra), InputError);

  json unknown = doc;
  unknown["G"]["a"] = "e";
  CHECK_THROWS_AS(algebra_document_from_json(unknown), InputError);

  json partial = doc;
  partial["F"].erase("d");
  CHECK_THROWS_AS(algebra_document_from_json(partial), InputError);

  json dup = doc;
  dup["elements"].push_back("a");
  CHECK_THROWS_AS(algebra_document_from_json(dup), InputError);

  // Covers that do not form a lattice: two maximal elements.
  json no_top = doc;
  no_top["leq"].erase(no_top["leq"].size() - 1);
  CHECK_THROWS_AS(algebra_document_from_json(no_top), InputError);

  json frame = json::parse(std::ifstream(fixture("chain2_frame.json")));
  frame["R"].erase(0);
  frame["R"].erase(0);
  frame["R"].push_back(json::array({"y", "x"}));
  CHECK_THROWS_AS(frame_from_json(frame), InputError);

  json model = json::parse(std::ifstream(fixture("chain2_model.json")));
  model["meaning"]["p"] = json::array({"x"});  // not an up-set
  CHECK_THROWS_AS(model_from_json(model), InputError);
}

TEST_CASE("congruence summaries") {
  const Run ex = tdl_run({"congruences", fixture("ex24.json")});
  CHECK(ex.code == kExitOk);
  CHECK(contains(ex.out, "simple: yes; congruences: 2"));

  const Run b4 = tdl_run({"congruences", fixture("boolean4_identity.json")});
  CHECK(contains(b4.out, "simple: no; SI: no; congruences: 4"));

  const Run one = tdl_run({"congruences", fixture("trivial.json")});
  CHECK(contains(one.out, "congruences: 1"));

  CHECK(tdl_run({"simple", fixture("ex24.json")}).code == kExitOk);
  CHECK(tdl_run({"simple", fixture("boolean4_identity.json")}).code == kExitFailed);
  CHECK(tdl_run({"si", fixture("ex24.json")}).code == kExitOk);
  CHECK(tdl_run({"si", fixture("boolean4_identity.json")}).code == kExitFailed);
}

TEST_CASE("dual, frame, complex and roundtrip") {
  const Run dual = tdl_run({"dual", fixture("ex24.json")});
  REQUIRE(dual.code == kExitOk);
  const TdlFrame x = frame_from_json(json::parse(dual.out));
  CHECK(x.size() == 3);
  CHECK(x.R.pair_count() == 4);
  CHECK(x == canonical_frame(fixtures::ex_algebra()));

  const Run frame = tdl_run({"frame", fixture("ex24.json")});
  CHECK(frame_from_json(json::parse(frame.out)) == x);
  CHECK(tdl_run({"roundtrip", fixture("ex24.json")}).code == kExitOk);

  const Run complex = tdl_run({"complex", fixture("chain2_frame.json")});
  REQUIRE(complex.code == kExitOk);
  const TdlAlgebra c3 = algebra_document_from_json(json::parse(complex.out)).build();
  CHECK(c3.size() == 3);
  CHECK(c3.lattice().order().covers().size() == 2);

  const TdlAlgebra c2 =
      algebra_document_from_json(json::parse(tdl_run({"complex", fixture("point_frame.json")}).out)).build();
  CHECK(c2.size() == 2);

  CHECK(tdl_run({"roundtrip", fixture("chain2_frame.json")}).code == kExitOk);
  CHECK(contains(tdl_run({"dual", fixture("ex24.json"), "--format", "text"}).out, "points:"));
}

TEST_CASE("emitted documents re-parse to the same structure") {
  for (const TdlAlgebra& a : fixtures::sweep(5)) {
    const json doc = to_json(a);
    const TdlAlgebra back = algebra_document_from_json(doc).build();
    REQUIRE(back == a);
    REQUIRE(to_json(back).dump() == doc.dump());
  }
  int frames = 0;
  for (const TdlFrame& x : enumerate_frames(3)) {
    const json doc = to_json(x);
    const TdlFrame back = frame_from_json(doc);
    REQUIRE(back == x);
    REQUIRE(to_json(back).dump() == doc.dump());
    const TdlAlgebra c = upset_algebra(x).algebra;
    REQUIRE(algebra_document_from_json(to_json(c)).build() == c);
    ++frames;
  }
  CHECK(frames == 1 + 2 + 15 + 216);

  const KripkeModel m = model_from_json(json::parse(std::ifstream(fixture("chain2_model.json"))));
  const KripkeModel back = model_from_json(to_json(m));
  CHECK(back.frame() == m.frame());
  CHECK(back.meaning() == m.meaning());
}

TEST_CASE("prove, valid and countermodel") {
  const Run gp = tdl_run({"prove", "--system", "lt", "p => G P p"});
  CHECK(gp.code == kExitOk);
  CHECK(contains(gp.out, "[GP] p => G P p"));

  const Run fp = tdl_run({"countermodel", "--max-size", "6", "F p => p"});
  CHECK(fp.code == kExitFailed);
  const json witness = json::parse(tdl_run({"countermodel", "--max-size", "6", "F p => p", "--format", "json"}).out);
  const TdlAlgebra a = algebra_document_from_json(witness["algebra"]).build();
  Assignment v;
  for (Element e = 0; e < a.size(); ++e)
    if (a.label(e) == witness["valuation"]["p"]) v["p"] = e;
  REQUIRE(v.size() == 1);
  CHECK(failing_assignment(a, parse_sequent("F p => p")).has_value());
  CHECK(evaluate(a, v, parse_formula("F p")) != evaluate(a, v, parse_formula("p")));

  CHECK(tdl_run({"countermodel", "--max-size", "6", "p => G P p"}).code == kExitOk);
  CHECK(tdl_run({"valid", "--algebra", fixture("ex24.json"), "p => p"}).code == kExitOk);
  CHECK(tdl_run({"valid", "--algebra", fixture("ex24.json"), "G p => p"}).code == kExitFailed);
  CHECK(tdl_run({"valid", "G p & F q => F (p & q)"}).code == kExitOk);
  CHECK(tdl_run({"valid", "p | ~p"}).code == kExitInput);  // negation is not in the base language
  CHECK(tdl_run({"valid", "--system", "ltc", "=> p | ~p"}).code == kExitOk);
  CHECK(tdl_run({"valid", "--system", "lti", "=> p | ~p"}).code == kExitFailed);

  // Valid, but the search is cut off before the first rule.
  CHECK(tdl_run({"prove", "--depth", "0", "G (p & q) => G p & G q"}).code == kExitUnknown);
  CHECK(tdl_run({"prove", "F p => p"}).code == kExitFailed);
  CHECK(tdl_run({"prove", "p & => q"}).code == kExitInput);
}

TEST_CASE("kripke evaluation and frame countermodels") {
  const Run ext = tdl_run({"kripke", "--model", fixture("chain2_model.json"), "G p"});
  CHECK(ext.code == kExitOk);
  CHECK(contains(ext.out, "extension: {y}"));
  CHECK(tdl_run({"kripke", "--model", fixture("chain2_model.json"), "q => G p"}).code == kExitFailed);
  CHECK(tdl_run({"kripke", "--model", fixture("chain2_model.json"), "p => q"}).code == kExitOk);
  CHECK(tdl_run({"kripke", "--frame", fixture("chain2_frame.json"), "G p => p"}).code == kExitOk);
  CHECK(tdl_run({"kripke", "p"}).code == kExitInput);
  CHECK(tdl_run({"kripke", "--model", fixture("chain2_model.json"), "p -> q"}).code == kExitInput);

  const Run fc = tdl_run({"countermodel", "--frames", "G p => p", "--format", "json"});
  CHECK(fc.code == kExitFailed);
  const KripkeModel m = model_from_json(json::parse(fc.out)["model"]);
  CHECK_FALSE(valid_in_model(m, parse_sequent("G p => p")));
  CHECK(tdl_run({"countermodel", "--frames", "--max-size", "5", "G p => p"}).code == kExitInput);
}

TEST_CASE("scripts, output files, determinism and the size override") {
  CHECK(tdl_run({"scripts", "--system", "lti"}).code == kExitOk);
  CHECK(tdl_run({"scripts", "--system", "ltdm"}).code == kExitOk);
  CHECK(tdl_run({"scripts", "--system", "xx"}).code == kExitInput);

  const std::string out = (std::filesystem::temp_directory_path() / "tdl_test_dual.json").string();
  const Run written = tdl_run({"dual", fixture("ex24.json"), "--out", out});
  CHECK(written.code == kExitOk);
  CHECK(written.out.empty());
  CHECK(frame_from_json(read_json_file(out)).size() == 3);

  for (std::vector<std::string> args :
       {std::vector<std::string>{"congruences", fixture("ex24.json"), "--format", "json"},
        {"countermodel", "G p => p"},
        {"prove", "G (p & q) => G p & G q"}}) {
    CHECK(tdl_run(args).out == tdl_run(args).out);
  }

  const std::string broken = temp_file("script.json", R"({"type": "proof-script", "system": "lt", "proofs": 3})");
  CHECK(tdl_run({"scripts", "--file", broken}).code == kExitInput);

  // G p => p fails on the two-element chain, so a bound of 1 finds nothing.
  setenv("TDL_MAX_SIZE", "1", 1);
  CHECK(tdl_run({"valid", "G p => p"}).code == kExitOk);
  CHECK(tdl_run({"valid", "--max-size", "2", "G p => p"}).code == kExitFailed);
  setenv("TDL_MAX_SIZE", "x", 1);
  CHECK(tdl_run({"valid", "G p => p"}).code == kExitInput);
  unsetenv("TDL_MAX_SIZE");
  CHECK(tdl_run({"valid", "G p => p"}).code == kExitFailed);
}
