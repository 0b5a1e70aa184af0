// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#include "tdl/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "tdl/calculus.hpp"
#include "tdl/congruence.hpp"
#include "tdl/documents.hpp"
#include "tdl/duality.hpp"
#include "tdl/proof_script.hpp"

namespace tdl {

namespace {

using json = nlohmann::ordered_json;

// Bound used by the class sweeps when neither --max-size nor TDL_MAX_SIZE is
// given. Every class is enumerated in well under a second at this size.
constexpr int kDefaultMaxSize = 5;
constexpr int kDefaultDepth = 6;

struct Outcome {
  int code = kExitOk;
  std::string text;
  json data;
};

struct Common {
  std::string out;
  std::string format = "text";
};

// An explicit --max-size wins over TDL_MAX_SIZE, which wins over fallback.
int size_bound(int flag, int fallback) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("TDL_MAX_SIZE"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > kMaxCarrier) throw InputError("TDL_MAX_SIZE must be a positive integer");
    return static_cast<int>(v);
  }
  return fallback;
}

std::string subset_text(const Poset& p, Subset s) {
  std::string out = "{";
  bool first = true;
  for (Element x : s) {
    out += (first ? "" : ",") + p.label(x);
    first = false;
  }
  return out + "}";
}

json subset_json(const Poset& p, Subset s) {
  json out = json::array();
  for (Element x : s) out.push_back(p.label(x));
  return out;
}

std::vector<Subset> blocks(const Congruence& c) {
  std::vector<Subset> out(static_cast<std::size_t>(c.block_count()));
  for (Element x = 0; x < c.size(); ++x) out[c.block[x]] = out[c.block[x]].with(x);
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) { return a.first() < b.first(); });
  return out;
}

std::string partition_text(const Poset& p, const Congruence& c) {
  std::string out;
  for (Subset b : blocks(c)) out += subset_text(p, b);
  return out;
}

json partition_json(const Poset& p, const Congruence& c) {
  json out = json::array();
  for (Subset b : blocks(c)) out.push_back(subset_json(p, b));
  return out;
}

std::string table_text(const Lattice& l, const OperatorTable& t) {
  std::string out;
  for (Element x = 0; x < l.size(); ++x) out += " " + l.label(x) + "->" + l.label(t[x]);
  return out;
}

std::string describe(const TdlAlgebra& a) {
  const Poset& p = a.lattice().order();
  std::string out = "elements:";
  for (Element x = 0; x < a.size(); ++x) out += " " + p.label(x);
  out += "\ncovers:";
  for (auto [x, y] : p.covers()) out += " " + p.label(x) + "<" + p.label(y);
  out += "\nG:" + table_text(a.lattice(), a.G_table());
  out += "\nH:" + table_text(a.lattice(), a.H_table());
  out += "\nF:" + table_text(a.lattice(), a.F_table());
  out += "\nP:" + table_text(a.lattice(), a.P_table());
  if (a.neg()) out += "\n~:" + table_text(a.lattice(), *a.neg());
  return out + "\n";
}

std::string describe(const TdlFrame& x) {
  const Poset& p = x.order;
  std::string out = "points:";
  for (Element e = 0; e < x.size(); ++e) out += " " + p.label(e);
  out += "\ncovers:";
  for (auto [u, v] : p.covers()) out += " " + p.label(u) + "<" + p.label(v);
  out += "\nR:";
  for (auto [u, v] : x.R.pairs()) out += " " + p.label(u) + "R" + p.label(v);
  return out + "\n";
}

std::string describe(const KripkeModel& m) {
  std::string out = describe(m.frame());
  for (const auto& [var, s] : m.meaning()) out += "meaning " + var + ": " + subset_text(m.frame().order, s) + "\n";
  return out;
}

std::string assignment_text(const TdlAlgebra& a, const Assignment& v) {
  std::string out;
  for (const auto& [var, e] : v) out += (out.empty() ? "" : ", ") + var + " = " + a.label(e);
  return out;
}

TdlAlgebra load_algebra(const std::string& path) {
  return algebra_document_from_json(read_json_file(path)).build();
}

TdlFrame load_frame(const std::string& path) { return frame_from_json(read_json_file(path)); }

Outcome document_outcome(const json& doc, std::string text) {
  return {kExitOk, std::move(text), doc};
}

Outcome cmd_check(const std::string& path) {
  const AlgebraDocument doc = algebra_document_from_json(read_json_file(path));
  Outcome o;
  json violations = json::array();
  auto add = [&](const Violation& v) {
    json w = json::array();
    for (Element e : v.witness) w.push_back(doc.lattice.label(e));
    violations.push_back({{"axiom", v.axiom}, {"witness", w}, {"detail", v.detail}});
    o.text += v.detail + "\n";
  };
  const AxiomReport axioms = check_tdl_axioms(doc.lattice, doc.G, doc.H, doc.F, doc.P);
  for (const Violation& v : axioms.violations) add(v);
  std::optional<std::string> dm;
  if (axioms.passed() && doc.neg) dm = de_morgan_failure(doc.lattice, *doc.neg, doc.G, doc.H, doc.F, doc.P);
  if (dm) {
    o.text += *dm + "\n";
    violations.push_back({{"axiom", "de-morgan"}, {"witness", json::array()}, {"detail", *dm}});
  }
  o.data = {{"valid", violations.empty()}, {"elements", doc.lattice.size()}, {"violations", violations}};
  if (!violations.empty()) {
    o.code = kExitFailed;
    o.text = "invalid: " + std::to_string(violations.size()) + " violation(s)\n" + o.text;
    return o;
  }
  const TdlAlgebra a = doc.build();
  const AxiomReport derived = check_derived_properties(a);
  if (!derived.passed()) throw InternalError("derived property fails on a valid algebra: " + derived.violations[0].detail);
  const ClassReport cls = classify(a);
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  o.text = "valid: " + std::to_string(a.size()) + " elements, t1-t8 hold\n" +
           "derived properties t9-t18: hold\n" + "boolean: " + yn(cls.boolean) +
           "; heyting: " + yn(cls.heyting) + "; de morgan: " + yn(cls.demorgan) + "\n";
  o.data["class"] = {{"boolean", cls.boolean}, {"heyting", cls.heyting}, {"demorgan", cls.demorgan}};
  return o;
}

Outcome cmd_dual(const std::string& path) {
  const TdlAlgebra a = load_algebra(path);
  const DualSpace d = dual_space(a);
  std::string text = describe(d.space);
  for (std::size_t i = 0; i < d.filters.size(); ++i)
    text += "point " + d.space.order.label(static_cast<Element>(i)) + " = " +
            subset_text(a.lattice().order(), d.filters[i]) + "\n";
  return document_outcome(to_json(d.space), text);
}

Outcome cmd_frame(const std::string& path) {
  const TdlFrame x = canonical_frame(load_algebra(path));
  return document_outcome(to_json(x), describe(x));
}

Outcome cmd_complex(const std::string& path) {
  const TdlAlgebra a = upset_algebra(load_frame(path)).algebra;
  return document_outcome(to_json(a), describe(a));
}

Outcome cmd_roundtrip(const std::string& path) {
  const json doc = read_json_file(path);
  Outcome o;
  std::vector<std::pair<std::string, std::optional<std::string>>> checks;
  auto run = [&](const std::string& name, const std::function<std::optional<std::string>()>& f) {
    try {
      checks.emplace_back(name, f());
    } catch (const InternalError& e) {
      checks.emplace_back(name, std::string(e.what()));
    }
  };
  if (document_type(doc) == "tdl-algebra") {
    const TdlAlgebra a = algebra_document_from_json(doc).build();
    auto iso = [](const AlgebraMap& m) -> std::optional<std::string> {
      const MapReport r = is_tdl_homomorphism(m);
      if (!r.ok()) return r.failure;
      if (!is_bijective(m.table, m.target.size())) return std::string("not a bijection");
      return std::nullopt;
    };
    run("sigma", [&] { return iso(sigma_map(a)); });
    run("h", [&] { return iso(h_embedding(a)); });
  } else {
    const TdlFrame x = frame_from_json(doc);
    const TdlAlgebra c = upset_algebra(x).algebra;
    auto iso = [&](const PointMap& g, const TdlFrame& target) -> std::optional<std::string> {
      if (!is_frame_isomorphism(g, x, target)) return std::string("not a frame isomorphism");
      return std::nullopt;
    };
    run("epsilon", [&] { return iso(epsilon_map(x), dual_space(c).space); });
    run("k", [&] { return iso(k_embedding(x), canonical_frame(c)); });
  }
  o.data = json::object();
  for (const auto& [name, failure] : checks) {
    o.text += name + ": " + (failure ? "fails: " + *failure : std::string("isomorphism")) + "\n";
    o.data[name] = failure ? json(*failure) : json("isomorphism");
    if (failure) o.code = kExitFailed;
  }
  return o;
}

// The summary names SI only when the algebra is not simple, since every
// simple algebra is subdirectly irreducible.
std::string congruence_summary(bool simple, bool si, std::size_t count) {
  std::string out = std::string("simple: ") + (simple ? "yes" : "no");
  if (!simple) out += std::string("; SI: ") + (si ? "yes" : "no");
  return out + "; congruences: " + std::to_string(count) + "\n";
}

enum class CongruenceCommand { list, simple, si };

Outcome cmd_congruences(const std::string& path, CongruenceCommand which) {
  const TdlAlgebra a = load_algebra(path);
  const Poset& p = a.lattice().order();
  const CongruenceLattice cl = congruence_lattice(a);
  const SimplicityReport simple = is_simple(a);
  const SiReport si = is_subdirectly_irreducible(a);
  const DualSpace d = dual_space(a);
  Outcome o;
  o.text = congruence_summary(simple.simple, si.si, cl.members.size());
  o.data = {{"simple", simple.simple}, {"si", si.si}, {"congruences", cl.members.size()}};
  switch (which) {
    case CongruenceCommand::list: {
      json list = json::array();
      for (std::size_t i = 0; i < cl.members.size(); ++i) {
        o.text += partition_text(p, cl.members[i]) + " from " + subset_text(d.space.order, cl.dual[i]) + "\n";
        list.push_back({{"blocks", partition_json(p, cl.members[i])},
                        {"tps_set", subset_json(d.space.order, cl.dual[i])}});
      }
      o.data["members"] = list;
      break;
    }
    case CongruenceCommand::simple: {
      auto yn = [](bool b) { return b ? "yes" : "no"; };
      o.text += std::string("precheck: ") + (simple.precheck_fired ? "fired" : "inconclusive") +
                "\nclauses b, c, d: " + yn(simple.clause_b) + ", " + yn(simple.clause_c) + ", " +
                yn(simple.clause_d) + "\n";
      o.data["precheck_fired"] = simple.precheck_fired;
      o.data["clauses"] = {{"b", simple.clause_b}, {"c", simple.clause_c}, {"d", simple.clause_d}};
      o.code = simple.simple ? kExitOk : kExitFailed;
      break;
    }
    case CongruenceCommand::si: {
      if (si.monolith) {
        o.text += "monolith: " + partition_text(p, *si.monolith) + " from " +
                  subset_text(d.space.order, *si.monolith_set) + "\n";
        o.data["monolith"] = partition_json(p, *si.monolith);
      }
      o.code = si.si ? kExitOk : kExitFailed;
      break;
    }
  }
  return o;
}

TdlAlgebra with_connectives(TdlAlgebra a, Calculus c) {
  if (c == Calculus::ltc || c == Calculus::lti) return a.with_implication();
  return a;
}

Outcome countermodel_outcome(const Sequent& s, const Valuation& v, int max_size) {
  Outcome o;
  o.code = kExitFailed;
  o.text = "countermodel for " + render(s) + " (" + std::to_string(v.algebra.size()) +
           " elements, bound " + std::to_string(max_size) + ")\n" + describe(v.algebra) +
           "valuation: " + assignment_text(v.algebra, v.assignment) + "\n";
  o.data = {{"sequent", render(s)},
            {"countermodel", true},
            {"algebra", to_json(v.algebra)},
            {"valuation", assignment_to_json(v.algebra, v.assignment)}};
  return o;
}

Outcome frame_countermodel_outcome(const Sequent& s, const KripkeModel& m) {
  Outcome o;
  o.code = kExitFailed;
  o.text = "frame countermodel for " + render(s) + " (" + std::to_string(m.frame().size()) +
           " points)\n" + describe(m);
  o.data = {{"sequent", render(s)}, {"countermodel", true}, {"model", to_json(m)}};
  return o;
}

Outcome cmd_countermodel(const std::string& text, Calculus c, int max_size, bool frames) {
  const Sequent s = parse_sequent(text, c);
  if (frames) {
    if (auto w = frame_countermodel(s, max_size)) return frame_countermodel_outcome(s, KripkeModel(w->frame, w->meaning));
  } else if (auto v = countermodel(s, max_size, c)) {
    return countermodel_outcome(s, *v, max_size);
  }
  const std::string what = frames ? " points" : " elements";
  return {kExitOk, "no countermodel with at most " + std::to_string(max_size) + what + "\n",
          {{"sequent", render(s)}, {"countermodel", false}, {"max_size", max_size}}};
}

Outcome cmd_prove(const std::string& text, Calculus c, int depth, int max_size) {
  const Sequent s = parse_sequent(text, c);
  if (auto t = prove(s, c, depth)) {
    json doc = to_json(ProofScript{c, {ScriptProof{render(s), {}, *t}}});
    return {kExitOk, render(*t), {{"sequent", render(s)}, {"proved", true}, {"proof", doc}}};
  }
  // Search failure alone decides nothing; a small countermodel settles it.
  if (auto v = countermodel(s, max_size, c)) {
    Outcome o = countermodel_outcome(s, *v, max_size);
    o.text = "not provable: " + o.text;
    o.data["proved"] = false;
    return o;
  }
  return {kExitUnknown,
          "unknown: no proof within depth " + std::to_string(depth) + " and no countermodel with at most " +
              std::to_string(max_size) + " elements\n",
          {{"sequent", render(s)}, {"proved", nullptr}, {"depth", depth}, {"max_size", max_size}}};
}

Outcome cmd_valid(const std::string& text, Calculus c, const std::string& algebra, int max_size) {
  const Sequent s = parse_sequent(text, c);
  if (algebra.empty()) {
    if (auto v = countermodel(s, max_size, c)) return countermodel_outcome(s, *v, max_size);
    return {kExitOk, "valid in every " + std::string(calculus_name(c)) + " algebra with at most " +
                         std::to_string(max_size) + " elements\n",
            {{"sequent", render(s)}, {"valid", true}, {"max_size", max_size}}};
  }
  const TdlAlgebra a = with_connectives(load_algebra(algebra), c);
  if (auto v = failing_assignment(a, s)) {
    return {kExitFailed, "fails at " + assignment_text(a, *v) + "\n",
            {{"sequent", render(s)}, {"valid", false}, {"valuation", assignment_to_json(a, *v)}}};
  }
  return {kExitOk, "valid\n", {{"sequent", render(s)}, {"valid", true}}};
}

Outcome cmd_kripke(const std::string& text, const std::string& frame_path, const std::string& model_path) {
  const bool is_sequent = text.find("=>") != std::string::npos;
  if (!model_path.empty()) {
    const KripkeModel m = model_from_json(read_json_file(model_path));
    if (!is_sequent) {
      const Formula f = parse_formula(text);
      const Subset e = extension(m, f);
      return {kExitOk, "extension: " + subset_text(m.frame().order, e) + "\n",
              {{"formula", render(f)}, {"extension", subset_json(m.frame().order, e)}}};
    }
    const Sequent s = parse_sequent(text);
    const bool ok = valid_in_model(m, s);
    return {ok ? kExitOk : kExitFailed, ok ? "valid in the model\n" : "fails in the model\n",
            {{"sequent", render(s)}, {"valid", ok}}};
  }
  const TdlFrame x = load_frame(frame_path);
  const Sequent s = is_sequent ? parse_sequent(text) : Sequent{{}, {parse_formula(text)}};
  if (auto m = failing_meaning(x, s)) return frame_countermodel_outcome(s, KripkeModel(x, *m));
  return {kExitOk, "valid in the frame\n", {{"sequent", render(s)}, {"valid", true}}};
}

Outcome cmd_scripts(Calculus c, const std::string& file, int max_size) {
  const ScriptReport r = file.empty() ? run_bundled_proofs(c, max_size)
                                      : run_proof_script(load_proof_script(file), max_size);
  Outcome o;
  json items = json::array();
  for (const ScriptItemReport& i : r.items) {
    std::string status = "ok";
    if (i.mismatch) status = "mismatch at " + i.mismatch->node + " (" + i.mismatch->rule + "): " + i.mismatch->reason;
    else if (i.expanded_mismatch) status = "expansion mismatch at " + i.expanded_mismatch->node;
    else if (!i.valid) status = "conclusion not valid";
    o.text += i.name + ": " + status + "\n";
    items.push_back({{"name", i.name}, {"nodes", i.nodes}, {"status", status}});
  }
  o.text = std::string(calculus_name(r.calc)) + ": " + std::to_string(r.items.size()) + " proofs, " +
           std::to_string(r.algebras) + " algebras with at most " + std::to_string(r.max_size) +
           " elements\n" + o.text;
  o.data = {{"system", calculus_name(r.calc)}, {"max_size", r.max_size}, {"algebras", r.algebras},
            {"items", items}, {"ok", r.ok()}};
  o.code = r.ok() ? kExitOk : kExitFailed;
  return o;
}

void emit(const Outcome& o, const Common& common, std::ostream& out) {
  std::string body = common.format == "json" ? o.data.dump(2) + "\n" : o.text;
  if (common.out.empty()) {
    out << body;
    return;
  }
  std::ofstream file(common.out);
  if (!file) throw InputError("cannot write " + common.out);
  file << body;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite tense distributive lattices: algebras, frames, congruences and sequent calculi", "tdl"};
  app.require_subcommand(1);
  Common common;
  std::string file, text, system = "lt", algebra, frame, model;
  int depth = kDefaultDepth;
  int max_size = 0;
  bool frames = false;
  std::function<Outcome()> action;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", common.out, "Write the report or document to this file");
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto file_command = [&](const char* name, const char* help, std::function<Outcome()> f) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Input document")->required();
    add_common(sub);
    sub->callback([&action, f] { action = f; });
    return sub;
  };
  auto system_option = [&](CLI::App* sub) {
    sub->add_option("--system", system, "Calculus: lt, ltc, lti or ltdm")
        ->check(CLI::IsMember({"lt", "ltc", "lti", "ltdm"}));
  };

  // dual, frame and complex emit documents and default to JSON output.
  file_command("check", "Validate an algebra against t1-t8", [&] { return cmd_check(file); });
  CLI::App* dual = file_command("dual", "Dual space of an algebra", [&] { return cmd_dual(file); });
  CLI::App* frm = file_command("frame", "Canonical frame of an algebra", [&] { return cmd_frame(file); });
  CLI::App* cpx = file_command("complex", "Complex algebra of a frame", [&] { return cmd_complex(file); });
  file_command("roundtrip", "Check the duality maps for an algebra or frame",
               [&] { return cmd_roundtrip(file); });
  file_command("congruences", "List the congruences of an algebra",
               [&] { return cmd_congruences(file, CongruenceCommand::list); });
  file_command("simple", "Decide simplicity", [&] { return cmd_congruences(file, CongruenceCommand::simple); });
  file_command("si", "Decide subdirect irreducibility",
               [&] { return cmd_congruences(file, CongruenceCommand::si); });

  CLI::App* prove_cmd = app.add_subcommand("prove", "Search for a proof");
  prove_cmd->add_option("sequent", text)->required();
  prove_cmd->add_option("--depth", depth, "Search depth")->check(CLI::Range(0, 64));
  prove_cmd->add_option("--max-size", max_size, "Countermodel bound when the search fails")->check(CLI::Range(1, 64));
  system_option(prove_cmd);
  add_common(prove_cmd);
  prove_cmd->callback([&] {
    action = [&] { return cmd_prove(text, parse_calculus(system), depth, size_bound(max_size, kDefaultMaxSize)); };
  });

  CLI::App* valid_cmd = app.add_subcommand("valid", "Check validity in one algebra or a class");
  valid_cmd->add_option("sequent", text)->required();
  valid_cmd->add_option("--algebra", algebra, "Algebra document");
  valid_cmd->add_option("--max-size", max_size, "Class bound without --algebra")->check(CLI::Range(1, 64));
  system_option(valid_cmd);
  add_common(valid_cmd);
  valid_cmd->callback([&] {
    action = [&] { return cmd_valid(text, parse_calculus(system), algebra, size_bound(max_size, kDefaultMaxSize)); };
  });

  CLI::App* cm_cmd = app.add_subcommand("countermodel", "Search for a countermodel");
  cm_cmd->add_option("sequent", text)->required();
  cm_cmd->add_option("--max-size", max_size, "Largest algebra (or frame with --frames)")->check(CLI::Range(1, 64));
  cm_cmd->add_flag("--frames", frames, "Search frames instead of algebras");
  system_option(cm_cmd);
  add_common(cm_cmd);
  cm_cmd->callback([&] {
    action = [&] {
      const int fallback = frames ? kMaxCountermodelPoints : kDefaultMaxSize;
      return cmd_countermodel(text, parse_calculus(system), size_bound(max_size, fallback), frames);
    };
  });

  CLI::App* kripke_cmd = app.add_subcommand("kripke", "Evaluate in a Kripke model or frame");
  kripke_cmd->add_option("formula", text, "Formula or sequent")->required();
  auto* frame_opt = kripke_cmd->add_option("--frame", frame, "Frame document");
  auto* model_opt = kripke_cmd->add_option("--model", model, "Model document");
  frame_opt->excludes(model_opt);
  add_common(kripke_cmd);
  kripke_cmd->callback([&] {
    if (frame.empty() && model.empty()) throw CLI::ValidationError("kripke", "one of --frame or --model is required");
    action = [&] { return cmd_kripke(text, frame, model); };
  });

  CLI::App* scripts_cmd = app.add_subcommand("scripts", "Replay proof scripts");
  scripts_cmd->add_option("--file", file, "Proof script (default: the bundled one)");
  scripts_cmd->add_option("--max-size", max_size, "Class bound for validity")->check(CLI::Range(1, 64));
  system_option(scripts_cmd);
  add_common(scripts_cmd);
  scripts_cmd->callback([&] {
    action = [&] {
      const Calculus c = parse_calculus(system);
      return cmd_scripts(c, file, size_bound(max_size, default_script_bound(c)));
    };
  });

  // CLI11 wants argv with a program name in front.
  std::vector<std::string> owned{"tdl"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : owned) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "tdl: " << e.what() << "\n";
    return kExitInput;
  }
  for (CLI::App* sub : {dual, frm, cpx})
    if (sub->parsed() && sub->get_option("--format")->count() == 0) common.format = "json";

  try {
    const Outcome o = action();
    emit(o, common, out);
    return o.code;
  } catch (const InternalError& e) {
    err << "tdl: internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "tdl: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::ordered_json::exception& e) {
    err << "tdl: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace tdl
