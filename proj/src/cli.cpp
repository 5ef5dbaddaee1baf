#include "hop/cli.hpp"

#include "hop/demos.hpp"
#include "hop/extensionality.hpp"
#include "hop/grounder.hpp"
#include "hop/interp.hpp"
#include "hop/perfect.hpp"
#include "hop/typecheck.hpp"
#include "hop/wfs.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace hop {

namespace {

using Json = nlohmann::ordered_json;

std::string read_input(const std::string &path) {
  if (path.empty())
    throw Error(ErrorKind::Usage, "no input file given");
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::Io, "cannot read '" + path + "'");
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Expr> parse_roots(const Program &p,
                              const std::vector<std::string> &roots) {
  std::vector<Expr> out;
  for (const std::string &r : roots)
    out.push_back(parse_ground_atom(r, p.signature));
  return out;
}

std::size_t budget_for(const RunConfig &c) {
  return c.budget ? c.budget : default_budget(c.depth);
}

GroundProgram make_grounding(const Program &p, const RunConfig &c) {
  if (!c.roots.empty())
    return relevant_grounding(p, parse_roots(p, c.roots), c.depth,
                              budget_for(c));
  return ground_instantiation(p, c.depth);
}

Exec exec_of(const RunConfig &c) {
  return c.parallel ? Exec::Parallel : Exec::Serial;
}

bool has_function_symbols(const Program &p) {
  return !p.signature.of_kind(SymbolKind::FunctionSymbol).empty();
}

void add_bounds(Json &j, const Program &p, const GroundProgram &gp) {
  std::vector<std::string> frontier;
  for (AtomId a = 0; a < gp.atom_count(); ++a)
    if (gp.frontier[a])
      frontier.push_back(gp.atoms->key(a));
  std::sort(frontier.begin(), frontier.end());
  if (!frontier.empty())
    j["frontier"] = frontier;
  if (has_function_symbols(p))
    j["truncated"] = true;
}

void emit(std::ostream &out, const Json &j) { out << j.dump(2) << "\n"; }

void emit_model_text(std::ostream &out, const PartialInterpretation &m) {
  std::vector<std::pair<std::string, TruthValue>> rows;
  for (AtomId a = 0; a < m.size(); ++a)
    rows.emplace_back(m.atoms()->key(a), m[a]);
  std::sort(rows.begin(), rows.end());
  for (const auto &[k, v] : rows)
    out << k << " = " << to_string(v) << "\n";
}

int cmd_check(const RunConfig &c, std::ostream &out) {
  Program p = load_program(read_input(c.input));
  if (c.format == "text") {
    out << print_program(p);
    return kExitOk;
  }
  Json j;
  j["ok"] = true;
  j["symbols"] = p.signature.symbols().size();
  j["clauses"] = p.clauses.size();
  std::vector<std::string> lines;
  for (const Clause &cl : p.clauses)
    lines.push_back(cl.to_string());
  j["program"] = lines;
  emit(out, j);
  return kExitOk;
}

int cmd_ground(const RunConfig &c, std::ostream &out) {
  Program p = load_program(read_input(c.input));
  GroundProgram gp = make_grounding(p, c);
  if (c.format == "text") {
    out << gp.dump();
    return kExitOk;
  }
  Json j;
  j["depth"] = c.depth;
  j["atoms"] = gp.atom_count();
  std::vector<std::string> lines;
  for (const GroundClause &g : gp.clauses)
    lines.push_back(gp.clause_text(g));
  j["clauses"] = lines;
  add_bounds(j, p, gp);
  emit(out, j);
  return kExitOk;
}

int cmd_wfs(const RunConfig &c, std::ostream &out) {
  Program p = load_program(read_input(c.input));
  GroundProgram gp = make_grounding(p, c);
  WfsOptions wo;
  wo.exec = exec_of(c);
  WfsResult r = well_founded_model(gp, wo);
  if (c.format == "text") {
    emit_model_text(out, r.model);
    out << "stages: " << r.trace.lambda << "\n";
    return kExitOk;
  }
  Json j = model_json(r.model);
  j["stages"] = r.trace.lambda;
  add_bounds(j, p, gp);
  if (c.trace)
    j["trace"] = trace_json(r.trace);
  emit(out, j);
  return kExitOk;
}

int cmd_stratify(const RunConfig &c, std::ostream &out) {
  Program p = load_program(read_input(c.input));
  StratifyResult s = stratify(p);
  if (c.format == "text") {
    if (s.ok()) {
      for (std::size_t i = 0; i < s.stratification->size(); ++i) {
        out << "S" << i + 1 << ":";
        for (const std::string &q : s.stratification->strata[i])
          out << " " << q;
        out << "\n";
      }
    } else {
      out << "unstratifiable:\n";
      for (const DependencyEdge &e : s.cycle)
        out << "  " << e.from << (e.strict ? " < " : " <= ") << e.to
            << (e.via.empty() ? "" : " (via " + e.via + ")") << "\n";
    }
  } else {
    emit(out, stratify_json(p, s));
  }
  return s.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_perfect(const RunConfig &c, std::ostream &out, std::ostream &err) {
  Program p = load_program(read_input(c.input));
  StratifyResult s = stratify(p);
  if (!s.ok()) {
    err << "perfect model unavailable: the program is not stratified; use "
           "`wfs` instead\n";
    emit(out, stratify_json(p, s));
    return kExitCheckFailed;
  }
  GroundProgram gp = make_grounding(p, c);
  LocalStratification ls = localize(*s.stratification, gp);
  PerfectResult r = perfect_model(gp, ls, exec_of(c));
  if (c.format == "text") {
    emit_model_text(out, r.model);
    out << "strata_used: " << r.strata_used << "\n";
    return kExitOk;
  }
  Json j = model_json(r.model);
  j["strata_used"] = r.strata_used;
  add_bounds(j, p, gp);
  emit(out, j);
  return kExitOk;
}

int cmd_extcheck(const RunConfig &c, std::ostream &out) {
  Program p = load_program(read_input(c.input));
  ExtOptions o;
  o.depth = c.depth;
  o.budget = c.budget;
  o.model = c.model == "perfect" ? ModelKind::Perfect : ModelKind::WellFounded;
  o.exec = exec_of(c);
  o.relations = true;
  o.extra_roots = parse_roots(p, c.roots);
  ExtChecker checker(p, o);
  ExtReport r = checker.reflexivity_check();
  if (c.format == "text") {
    out << verdict_text(r) << "\n";
    for (const ExtWitness &w : r.witnesses)
      out << "witness: " << w.term.key() << " : " << w.type.to_string()
          << " on (" << w.left.key() << ", " << w.right.key() << "): "
          << w.lhs_atom.key() << " = " << to_string(w.lhs_value) << " but "
          << w.rhs_atom.key() << " = " << to_string(w.rhs_value) << "\n";
    for (const auto &[t, e] : r.unknown)
      out << "unknown: " << e.key() << " : " << t.to_string() << "\n";
  } else {
    emit(out, report_json(r, o.model));
  }
  return r.verdict == ExtReport::Verdict::NonExtensional ? kExitCheckFailed
                                                          : kExitOk;
}

int cmd_minimal(const RunConfig &c, std::ostream &out) {
  Program p = load_program(read_input(c.input));
  GroundProgram gp = make_grounding(p, c);
  Ordering ord = c.ordering == "truth" ? Ordering::Truth : Ordering::Fitting;
  std::vector<PartialInterpretation> ms =
      minimal_models_bruteforce(gp, ord, c.oracle_limit);
  PartialInterpretation w = well_founded_model(gp).model;
  bool contains = std::find(ms.begin(), ms.end(), w) != ms.end();
  if (c.format == "text") {
    out << ms.size() << " " << c.ordering << "-minimal model(s)\n";
    for (const PartialInterpretation &m : ms) {
      out << "--\n";
      emit_model_text(out, m);
    }
    out << "well-founded model minimal: " << (contains ? "yes" : "no") << "\n";
    return kExitOk;
  }
  Json j;
  j["ordering"] = c.ordering;
  j["atoms"] = gp.atom_count();
  Json arr = Json::array();
  for (const PartialInterpretation &m : ms)
    arr.push_back(model_json(m));
  j["models"] = std::move(arr);
  j["contains_well_founded"] = contains;
  emit(out, j);
  return kExitOk;
}

// Demo checks: each compares an expected value with the computed one.
struct DemoLog {
  Json checks = Json::array();
  bool ok = true;

  void expect(const std::string &what, const std::string &expected,
              const std::string &actual) {
    bool pass = expected == actual;
    ok = ok && pass;
    checks.push_back({{"check", what},
                      {"expected", expected},
                      {"actual", actual},
                      {"ok", pass}});
  }
};

std::string value_text(const PartialInterpretation &m, const std::string &key) {
  return std::string(to_string(m.value_of(key)));
}

void demo_nonext(DemoLog &log, Json &extra) {
  Program p = load_program(demo_program("nonext").text);
  std::vector<Expr> roots =
      parse_roots(p, {"s p", "s q"});
  GroundProgram gp = relevant_grounding(p, roots, 3);
  PartialInterpretation m = well_founded_model(gp).model;
  log.expect("v(s p)", "false", value_text(m, "s p"));
  log.expect("v(s q)", "0", value_text(m, "s q"));
  log.expect("v(q (s q))", "0", value_text(m, "q (s q)"));
  log.expect("v(w (s q))", "0", value_text(m, "w (s q)"));

  ExtOptions o;
  o.depth = 3;
  o.relations = true;
  ExtChecker checker(p, o);
  Type oo = parse_type("o -> o");
  Expr pe = Expr::constant("p", oo), qe = Expr::constant("q", oo);
  log.expect("p =~ q at o -> o", "equal",
             std::string(to_string(checker.equal(oo, pe, qe))));
  ExtReport r = checker.reflexivity_check();
  log.expect("verdict", "non-extensional", verdict_text(r));
  std::string first = "none";
  if (!r.witnesses.empty()) {
    const ExtWitness &w = r.witnesses.front();
    first = w.term.key() + " : " + w.type.to_string() + " on (" +
            w.left.key() + ", " + w.right.key() + "), " +
            std::string(to_string(w.lhs_value)) + " vs " +
            std::string(to_string(w.rhs_value)) +
            (w.replayed ? ", replayed" : ", not replayed");
  }
  log.expect("first witness", "s : (o -> o) -> o on (p, q), false vs 0, replayed",
             first);
  extra["extcheck"] = report_json(r, ModelKind::WellFounded);
}

void demo_positive(DemoLog &log, Json &extra) {
  Program p = load_program(demo_program("positive").text);
  std::vector<std::string> keys = {"q a",    "q b",    "p q",
                                   "id q a", "id q b", "p (id q)"};
  GroundProgram gp = relevant_grounding(p, parse_roots(p, keys), 2);
  PartialInterpretation m = well_founded_model(gp).model;
  for (const std::string &k : keys)
    log.expect("v(" + k + ")", "true", value_text(m, k));
  log.expect("total on relevant atoms", "yes", m.is_total() ? "yes" : "no");
  extra["model"] = model_json(m);
}

void demo_stratified(DemoLog &log, Json &extra) {
  Program good = load_program(demo_program("stratified").text);
  StratifyResult s = stratify(good);
  log.expect("first program strata", R"([["q"],["p"]])",
             s.ok() ? Json(s.stratification->strata).dump() : "unstratifiable");
  Program bad = load_program(demo_program("unstratified").text);
  StratifyResult b = stratify(bad);
  std::string cycle = "stratified";
  if (!b.ok()) {
    const DependencyEdge &e = b.cycle.front();
    cycle = e.from + (e.strict ? " < " : " <= ") + e.to +
            (e.via.empty() ? "" : " via " + e.via);
  }
  log.expect("second program cycle edge", "q < p via Q", cycle);

  GroundProgram gp = ground_instantiation(good, 3);
  PartialInterpretation w = well_founded_model(gp).model;
  if (s.ok()) {
    PartialInterpretation n =
        perfect_model(gp, localize(*s.stratification, gp)).model;
    log.expect("perfect model = well-founded model", "yes",
               n == w ? "yes" : "no");
  }
  ExtOptions o;
  o.depth = 3;
  log.expect("extcheck", "extensional-at-depth-3",
             verdict_text(reflexivity_check(good, o)));
  extra["strata"] = stratify_json(good, s);
  extra["unstratifiable"] = stratify_json(bad, b);
}

void demo_subset(DemoLog &log, Json &extra) {
  Program p = load_program(demo_program("subset").text);
  GroundProgram gp =
      relevant_grounding(p, parse_roots(p, {"subset p q", "subset q p"}), 3);
  PartialInterpretation m = well_founded_model(gp).model;
  log.expect("v(subset p q)", "true", value_text(m, "subset p q"));
  log.expect("v(subset q p)", "false", value_text(m, "subset q p"));
  extra["model"] = model_json(m);
}

void demo_winnow(DemoLog &log, Json &extra) {
  Program p = load_program(demo_program("winnow").text);
  std::vector<std::string> keys = {"winnow prefer movie heat",
                                   "winnow prefer movie ronin",
                                   "winnow prefer movie tenet"};
  GroundProgram gp = relevant_grounding(p, parse_roots(p, keys), 3);
  PartialInterpretation m = well_founded_model(gp).model;
  log.expect("v(" + keys[0] + ")", "true", value_text(m, keys[0]));
  log.expect("v(" + keys[1] + ")", "false", value_text(m, keys[1]));
  log.expect("v(" + keys[2] + ")", "false", value_text(m, keys[2]));
  extra["model"] = model_json(m);
}

int cmd_demo(const RunConfig &c, std::ostream &out) {
  DemoLog log;
  Json extra;
  if (c.demo == "nonext")
    demo_nonext(log, extra);
  else if (c.demo == "positive")
    demo_positive(log, extra);
  else if (c.demo == "stratified")
    demo_stratified(log, extra);
  else if (c.demo == "subset")
    demo_subset(log, extra);
  else if (c.demo == "winnow")
    demo_winnow(log, extra);
  else
    throw Error(ErrorKind::Usage,
                "unknown demo '" + c.demo +
                    "' (nonext, positive, stratified, subset, winnow)");
  if (c.format == "text") {
    out << "demo " << c.demo << "\n";
    for (const auto &ch : log.checks)
      out << (ch["ok"].get<bool>() ? "  ok    " : "  FAIL  ")
          << ch["check"].get<std::string>() << ": "
          << ch["actual"].get<std::string>()
          << (ch["ok"].get<bool>()
                  ? ""
                  : " (expected " + ch["expected"].get<std::string>() + ")")
          << "\n";
    out << (log.ok ? "all checks passed" : "some checks failed") << "\n";
  } else {
    Json j;
    j["demo"] = c.demo;
    j["ok"] = log.ok;
    j["checks"] = log.checks;
    for (auto it = extra.begin(); it != extra.end(); ++it)
      j[it.key()] = it.value();
    emit(out, j);
  }
  return log.ok ? kExitOk : kExitCheckFailed;
}

void report_error(std::ostream &err, const Error &e) {
  err << "error: " << e.what() << "\n";
  for (const Diagnostic &d : e.notes()) {
    err << "  note: ";
    if (d.pos.known())
      err << d.pos.line << ":" << d.pos.column << ": ";
    err << d.message << "\n";
  }
}

} // namespace

int run(const RunConfig &c, std::ostream &out, std::ostream &err) {
  try {
    if (c.depth < 1)
      throw Error(ErrorKind::Usage, "--depth must be at least 1");
    if (c.format != "json" && c.format != "text")
      throw Error(ErrorKind::Usage, "--format must be json or text");
    if (c.command == "check")
      return cmd_check(c, out);
    if (c.command == "ground")
      return cmd_ground(c, out);
    if (c.command == "wfs")
      return cmd_wfs(c, out);
    if (c.command == "perfect")
      return cmd_perfect(c, out, err);
    if (c.command == "stratify")
      return cmd_stratify(c, out);
    if (c.command == "extcheck")
      return cmd_extcheck(c, out);
    if (c.command == "minimal")
      return cmd_minimal(c, out);
    if (c.command == "demo")
      return cmd_demo(c, out);
    throw Error(ErrorKind::Usage, "unknown command '" + c.command + "'");
  } catch (const Error &e) {
    report_error(err, e);
    return kExitError;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Parse, ground and evaluate higher-order logic programs with "
               "negation"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App *sub, bool with_input) {
    if (with_input)
      sub->add_option("input", c.input, "program file (.hop), or - for stdin")
          ->required();
    sub->add_option("--depth,-k", c.depth, "symbol bound k for universes")
        ->check(CLI::PositiveNumber);
    sub->add_option("--roots", c.roots,
                    "comma-separated root atoms for demand grounding")
        ->delimiter(',');
    sub->add_option("--format", c.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--budget", c.budget,
                    "atom-size budget for demand grounding (default 4k)");
    sub->add_flag("--parallel", c.parallel, "use the OpenMP kernels");
  };

  struct Spec {
    const char *name;
    const char *help;
  };
  const Spec specs[] = {
      {"check", "parse and type-check"},
      {"ground", "dump a ground instantiation"},
      {"wfs", "well-founded model"},
      {"perfect", "perfect model of a stratified program"},
      {"stratify", "least stratification or a negative cycle"},
      {"extcheck", "bounded extensionality check with witnesses"},
      {"minimal", "brute-force minimal models"},
  };
  for (const Spec &s : specs) {
    CLI::App *sub = app.add_subcommand(s.name, s.help);
    common(sub, true);
    sub->callback([&c, name = std::string(s.name)] { c.command = name; });
    if (std::string(s.name) == "wfs")
      sub->add_flag("--trace", c.trace, "include the stage trace");
    if (std::string(s.name) == "extcheck")
      sub->add_option("--model", c.model, "wfs or perfect")
          ->check(CLI::IsMember({"wfs", "perfect"}));
    if (std::string(s.name) == "minimal") {
      sub->add_option("--oracle-limit", c.oracle_limit,
                      "largest number of atoms to enumerate");
      sub->add_option("--ordering", c.ordering, "fitting or truth")
          ->check(CLI::IsMember({"fitting", "truth"}));
    }
  }
  CLI::App *demo = app.add_subcommand("demo", "bundled example programs");
  demo->add_option("name", c.demo, "nonext, positive, stratified, subset, winnow")
      ->required();
  demo->add_option("--format", c.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  demo->callback([&c] { c.command = "demo"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }
  return run(c, out, err);
}

} // namespace hop
