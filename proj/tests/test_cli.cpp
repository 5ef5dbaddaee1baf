#include "support.hpp"

#include "hop/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace hop;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "hop");
  std::vector<const char *> argv;
  for (const std::string &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_program(const std::string &name, const std::string &text) {
  auto path = std::filesystem::temp_directory_path() / ("hop_cli_" + name + ".hop");
  std::ofstream(path) << text;
  return path.string();
}

std::string corpus(const char *name) {
  return std::string(HOP_CORPUS_DIR "/") + name + ".hop";
}

// Subset of JSON Schema: type, required, properties, items, enum, oneOf.
bool conforms(const json &v, const json &schema, std::string &why) {
  if (schema.contains("oneOf")) {
    int matches = 0;
    for (const json &alt : schema["oneOf"]) {
      std::string ignored;
      matches += conforms(v, alt, ignored);
    }
    if (matches != 1)
      why = "oneOf matched " + std::to_string(matches);
    return matches == 1;
  }
  if (schema.contains("enum")) {
    for (const json &e : schema["enum"])
      if (e == v)
        return true;
    why = "not in enum: " + v.dump();
    return false;
  }
  if (schema.contains("type")) {
    std::string t = schema["type"];
    bool ok = (t == "object" && v.is_object()) || (t == "array" && v.is_array()) ||
              (t == "string" && v.is_string()) ||
              (t == "integer" && v.is_number_integer()) ||
              (t == "boolean" && v.is_boolean());
    if (!ok) {
      why = "expected " + t + ", got " + v.dump();
      return false;
    }
  }
  if (schema.contains("required"))
    for (const json &k : schema["required"])
      if (!v.contains(k.get<std::string>())) {
        why = "missing " + k.get<std::string>();
        return false;
      }
  if (schema.contains("properties") && v.is_object())
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!schema["properties"].contains(it.key())) {
        why = "unexpected key " + it.key();
        return false;
      }
      if (!conforms(it.value(), schema["properties"][it.key()], why))
        return false;
    }
  if (schema.contains("items") && v.is_array())
    for (const json &item : v)
      if (!conforms(item, schema["items"], why))
        return false;
  return true;
}

void check_schema(const std::string &output, const char *schema_name) {
  json schema = json::parse(hoptest::read_file(
      std::string(HOP_CORPUS_DIR "/../docs/schemas/") + schema_name + ".schema.json"));
  json value = json::parse(output);
  std::string why;
  CHECK_MESSAGE(conforms(value, schema, why), std::string(schema_name) << ": " << why);
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("check rejects a non-variable predicate argument") {
  std::string path = temp_program(
      "illegal", "type q : i -> o.\ntype r : (i -> o) -> o.\nq a.\nr q.\n");
  Outcome o = run_args({"check", path});
  CHECK(o.code == kExitError);
  CHECK(o.err.find("NonVariableHeadArgument") != std::string::npos);
  CHECK(o.err.find("4:") != std::string::npos);
}

TEST_CASE("wfs on the empty program") {
  Outcome o = run_args({"wfs", temp_program("empty", "")});
  CHECK(o.code == kExitOk);
  json j = json::parse(o.out);
  CHECK(j["true"].empty());
  CHECK(j["false"].empty());
  CHECK(j["undefined"].empty());
  CHECK(j["stages"] == 0);
  check_schema(o.out, "model");
}

TEST_CASE("exit codes") {
  CHECK(run_args({"extcheck", corpus("nonext"), "--depth", "3"}).code == kExitCheckFailed);
  CHECK(run_args({"extcheck", corpus("stratified_ho")}).code == kExitOk);
  CHECK(run_args({"stratify", corpus("unstratified_ho")}).code == kExitCheckFailed);
  CHECK(run_args({"stratify", corpus("stratified_ho")}).code == kExitOk);
  Outcome perfect = run_args({"perfect", corpus("liar")});
  CHECK(perfect.code == kExitCheckFailed);
  CHECK(perfect.err.find("wfs") != std::string::npos);
  CHECK(run_args({"wfs", "/nonexistent/x.hop"}).code == kExitError);
  CHECK(run_args({"wfs", corpus("liar"), "--depth", "0"}).code == kExitError);
  CHECK(run_args({"wfs", corpus("liar"), "--bogus"}).code == kExitError);
  CHECK(run_args({"wfs", corpus("nonext"), "--roots", "s a"}).code == kExitError);
  CHECK(run_args({"nothing"}).code == kExitError);
  CHECK(run_args({}).code == kExitError);
  CHECK(run_args({"--help"}).code == kExitOk);
  Outcome big = run_args({"minimal", corpus("win_move"), "--oracle-limit", "4"});
  CHECK(big.code == kExitError);
  CHECK(big.err.find("TooLarge") != std::string::npos);
}

TEST_CASE("demos pass") {
  for (const char *d : {"nonext", "positive", "stratified", "subset", "winnow"}) {
    Outcome o = run_args({"demo", d});
    CHECK_MESSAGE(o.code == kExitOk, d << "\n" << o.out);
    check_schema(o.out, "demo");
  }
  CHECK(run_args({"demo", "missing"}).code == kExitError);
  Outcome text = run_args({"demo", "nonext", "--format", "text"});
  CHECK(text.out.find("s : (o -> o) -> o on (p, q)") != std::string::npos);
}

TEST_CASE("outputs conform to the documented schemas") {
  check_schema(run_args({"check", corpus("subset")}).out, "check");
  check_schema(run_args({"ground", corpus("subset"), "--depth", "2"}).out, "ground");
  check_schema(run_args({"ground", corpus("nonext"), "--roots", "s p,s q"}).out, "ground");
  check_schema(run_args({"wfs", corpus("nonext"), "--roots", "s p,s q", "--trace"}).out,
               "model");
  check_schema(run_args({"perfect", corpus("complement")}).out, "model");
  check_schema(run_args({"stratify", corpus("stratified_ho")}).out, "stratify");
  check_schema(run_args({"stratify", corpus("unstratified_ho")}).out, "stratify");
  check_schema(run_args({"extcheck", corpus("nonext")}).out, "extcheck");
  check_schema(run_args({"extcheck", corpus("stratified_ho"), "--model", "perfect"}).out,
               "extcheck");
  check_schema(run_args({"minimal", corpus("two_cycle"), "--ordering", "truth"}).out,
               "minimal");
  std::string fn = temp_program("fn", "type n : i -> o.\ntype f : i -> i.\nn z.\nn (f X) <- n X.\n");
  Outcome g = run_args({"wfs", fn, "--depth", "2"});
  check_schema(g.out, "model");
  CHECK(json::parse(g.out)["truncated"] == true);
}

TEST_CASE("values through the command line") {
  json w = json::parse(run_args({"wfs", corpus("nonext"), "--roots", "s p,s q"}).out);
  CHECK(w["false"] == json::array({"p (s p)", "s p"}));
  CHECK(w["undefined"] == json::array({"q (s q)", "s q", "w (s q)"}));
  json m = json::parse(run_args({"minimal", corpus("two_cycle"), "--ordering", "truth"}).out);
  CHECK(m["contains_well_founded"] == true);
  json s = json::parse(run_args({"stratify", corpus("stratified_ho")}).out);
  CHECK(s["strata"] == json::array({json::array({"q"}), json::array({"p"})}));
  json p = json::parse(run_args({"perfect", corpus("complement")}).out);
  CHECK(p["true"] == json::array({"r a", "s b"}));
  CHECK(p["strata_used"] == 2);
}

TEST_CASE("stdin input") {
  // `-` reads standard input; redirect it from a file.
  std::string path = temp_program("stdin", "type p : o.\np.\n");
  std::ifstream in(path);
  auto *old = std::cin.rdbuf(in.rdbuf());
  Outcome o = run_args({"wfs", "-"});
  std::cin.rdbuf(old);
  CHECK(o.code == kExitOk);
  CHECK(json::parse(o.out)["true"] == json::array({"p"}));
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string> &args :
       std::vector<std::vector<std::string>>{
           {"wfs", corpus("win_move"), "--trace"},
           {"wfs", corpus("win_move"), "--parallel"},
           {"extcheck", corpus("subset")},
           {"ground", corpus("positive"), "--depth", "3", "--format", "text"},
           {"minimal", corpus("mixed")}}) {
    Outcome a = run_args(args), b = run_args(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
  auto serial = run_args({"wfs", corpus("win_move")}).out;
  auto parallel = run_args({"wfs", corpus("win_move"), "--parallel"}).out;
  CHECK(serial == parallel);
}

TEST_CASE("malformed input never crashes the driver") {
  hoptest::Rng rng(91);
  std::string path = (std::filesystem::temp_directory_path() / "hop_cli_fuzz.hop").string();
  for (int n = 0; n < 300; ++n) {
    std::ofstream(path, std::ios::binary) << hoptest::random_noise(rng);
    for (const char *cmd : {"check", "wfs", "stratify"}) {
      int code = run_args({cmd, path}).code;
      CHECK((code == kExitOk || code == kExitError || code == kExitCheckFailed));
    }
  }
}

} // TEST_SUITE
