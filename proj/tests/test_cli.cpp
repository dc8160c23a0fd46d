#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sepmatch/canonical.hpp"
#include "sepmatch/graph6.hpp"
#include "sepmatch/named_graphs.hpp"

using nlohmann::json;

namespace {

struct Run {
  std::string out;
  int code = -1;
};

Run run(const std::string& args, const std::string& stdin_text = "") {
  std::string cmd = std::string(SEPMATCH_CLI_PATH) + " " + args + " 2>/dev/null";
  if (!stdin_text.empty()) cmd = "printf '" + stdin_text + "' | " + cmd;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(json::parse(line));
  }
  return out;
}

std::vector<std::string> raw_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

// graph6 bytes lie in 63..126, so single quotes are always safe.
std::string q(const std::string& g6) { return "'" + g6 + "'"; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("sepmatch_cli_" + name)).string();
}

}  // namespace

TEST_CASE("mms") {
  Run r = run("mms C~");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"mms\":0,\"certificate\":null}\n");

  const std::string heawood = sepmatch::emit_graph6(sepmatch::named::heawood());
  r = run("mms " + q(heawood));
  CHECK(r.code == 0);
  json j = lines(r.out).at(0);
  CHECK(j["mms"] == 6);
  CHECK(j["certificate"]["type"] == "matching");
  CHECK(j["certificate"]["size"] == 6);
  CHECK(j["certificate"]["edges"].size() == 6);
}

TEST_CASE("one document per input, stdin fallback") {
  Run r = run("mms", "C~\\nEFz_\\nEhEG\\n");
  CHECK(r.code == 0);
  auto docs = lines(r.out);
  REQUIRE(docs.size() == 3);
  CHECK(docs[0]["mms"] == 0);
  CHECK(docs[1]["mms"] == 0);
  CHECK(docs[2]["mms"] == 3);
}

TEST_CASE("exit codes") {
  Run bad = run("mms C~x");
  CHECK(bad.code == 1);
  json e = lines(bad.out).at(0);
  CHECK(e["error"] == "parse_error");
  CHECK(e["offset"] == 2);
  CHECK(e["input"] == "C~x");

  Run pre = run("clawfree-pm C~");
  CHECK(pre.code == 2);
  CHECK(lines(pre.out).at(0)["reason"] == "is_k4");

  // The worst code across inputs wins, and later inputs still run.
  Run mixed = run("mms C~x C~ B?");
  CHECK(mixed.code == 2);
  CHECK(lines(mixed.out).size() == 3);

  CHECK(run("").code == 1);
  CHECK(run("no-such-command").code == 1);
  CHECK(run("verify thm9").code == 2);
}

TEST_CASE("decomposable and certify") {
  Run r = run("decomposable EFz_ EhEG");
  CHECK(r.code == 0);
  auto docs = lines(r.out);
  REQUIRE(docs.size() == 2);
  CHECK(docs[0]["decomposable"] == false);
  CHECK(docs[1]["decomposable"] == true);
  CHECK(docs[1]["certificate"]["witness_side"].is_array());

  json c = lines(run("certify DFw").out).at(0);
  CHECK(c["n"] == 5);
  CHECK(c["mms"] == 0);
  CHECK(c["exceptional_index"] == 2);
}

TEST_CASE("clawfree-pm") {
  Run r = run("clawfree-pm " + q(sepmatch::emit_graph6(sepmatch::named::prism())));
  CHECK(r.code == 0);
  json j = lines(r.out).at(0);
  CHECK(j["structure"] == "triangle_string_structure");
  CHECK(j["certificate"]["perfect"] == true);
  CHECK(j["certificate"]["separating"] == true);
  CHECK(j["certificate"]["size"] == 3);
}

TEST_CASE("contract") {
  Run text = run("contract DFw");
  CHECK(text.code == 0);
  CHECK(text.out == "multigraph n=2\n0 1 \xC3\x97" "3\n");
  Run js = run("contract DFw --format json");
  json j = lines(js.out).at(0);
  CHECK(j["type"] == "multigraph");
  CHECK(j["n"] == 2);
  CHECK(j["edges"].size() == 3);
  CHECK(run("contract " + q(sepmatch::emit_graph6(sepmatch::named::cycle(5)))).code == 2);
}

TEST_CASE("generate") {
  Run r = run("generate --class cubic --n 8");
  CHECK(r.code == 0);
  auto g6 = raw_lines(r.out);
  CHECK(g6.size() == 5);
  for (const auto& s : g6) CHECK(sepmatch::parse_graph6(s).order() == 8);

  Run js = run("generate --class bicubic --n 10 --format json");
  auto docs = lines(js.out);
  CHECK(docs.size() == 2);
  CHECK(docs[0]["n"] == 10);
  CHECK(docs[0]["m"] == 15);

  Run rnd1 = run("generate --random --n 12 --count 5 --seed 3");
  Run rnd2 = run("generate --random --n 12 --count 5 --seed 3");
  CHECK(rnd1.out == rnd2.out);
  CHECK(raw_lines(rnd1.out).size() == 5);

  const std::string path = temp_path("gen.g6");
  CHECK(run("generate --class subcubic --n 4 --out " + path).out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(raw_lines(ss.str()).size() == 6);

  CHECK(run("generate --class cubic --n 7").code == 2);
  CHECK(run("generate --class quartic --n 8").code == 2);
}

TEST_CASE("family-f") {
  Run gen = run("family-f generate --max-n 14");
  CHECK(gen.code == 0);
  CHECK(raw_lines(gen.out).size() == 5);
  Run gj = run("family-f generate --max-n 10 --format json");
  auto docs = lines(gj.out);
  REQUIRE(docs.size() == 2);
  CHECK(docs[0]["trace"]["base"] == "K33");
  CHECK(docs[1]["exceptional_index"] == 1);

  const std::string heawood = sepmatch::emit_graph6(sepmatch::named::heawood());
  json h = lines(run("family-f check " + q(heawood)).out).at(0);
  CHECK(h["member"] == true);
  CHECK(h["trace"]["base"] == "H0");
  CHECK(h["almost_two_factor"]["type"] == "spanning");
  CHECK(h["exceptional_index"].is_null());

  json k = lines(run("family-f check EFz_").out).at(0);
  CHECK(k["exceptional_index"] == 0);
  CHECK(k["almost_two_factor"].is_null());

  json cube = lines(run("family-f check " + q(sepmatch::emit_graph6(sepmatch::named::cube()))).out).at(0);
  CHECK(cube["member"] == false);
  CHECK(run("family-f check C~").code == 2);
  CHECK(run("family-f generate --max-n 34").code == 2);
}

TEST_CASE("funk-scan") {
  Run r = run("funk-scan --max-n 10");
  CHECK(r.code == 0);
  json j = lines(r.out).at(0);
  CHECK(j["theorem_id"] == "conj-funk");
  CHECK(j["status"] == "verified");
  CHECK(j["graphs_checked"] == 4);

  const std::string path = temp_path("funk.json");
  CHECK(run("funk-scan --max-n 8 --report " + path).code == 0);
  std::ifstream in(path);
  json f = json::parse(in);
  CHECK(f["graphs_checked"] == 2);
  CHECK(f["artifact_version"].is_string());
}

TEST_CASE("verify") {
  Run r = run("verify thm2 --max-n 10 --workers 2");
  CHECK(r.code == 0);
  json j = lines(r.out).at(0);
  CHECK(j["theorem_id"] == "thm2");
  CHECK(j["status"] == "verified");
  CHECK(j["graphs_checked"] == 1 + 2 + 5 + 19);
  CHECK(j["failures"].empty());
  CHECK(j["class_scanned"]["max_n"] == 10);
  for (const char* key : {"theorem_id", "class_scanned", "graphs_checked", "failures", "runtime_ms",
                          "artifact_version", "status"}) {
    CHECK(j.contains(key));
  }

  const std::string path = temp_path("thm6.json");
  Run six = run("verify thm6 --max-n 10 --out " + path);
  CHECK(six.code == 0);
  std::ifstream in(path);
  CHECK(json::parse(in)["status"] == "verified");

  CHECK(run("verify thm2 --max-n 16").code == 2);
}
