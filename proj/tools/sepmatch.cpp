// Command-line front end: one JSON document per input graph, or graph6 lines
// for corpus output. Exit codes: 0 ok, 1 input error, 2 precondition error,
// 3 theorem violation.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sepmatch/clawfree.hpp"
#include "sepmatch/contraction.hpp"
#include "sepmatch/errors.hpp"
#include "sepmatch/exceptional.hpp"
#include "sepmatch/family_f.hpp"
#include "sepmatch/generator.hpp"
#include "sepmatch/graph6.hpp"
#include "sepmatch/json_io.hpp"
#include "sepmatch/matching.hpp"
#include "sepmatch/separation.hpp"
#include "sepmatch/structure.hpp"
#include "sepmatch/verify.hpp"

using namespace sepmatch;

namespace {

enum Exit { kOk = 0, kInputError = 1, kPrecondition = 2, kViolation = 3 };

// Positional arguments, or stdin lines when none were given.
std::vector<std::string> gather_inputs(const std::vector<std::string>& args) {
  if (!args.empty()) return args;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  return lines;
}

int emit_error(const std::string& input, const std::exception& e, int code, Json extra) {
  Json out;
  out["input"] = input;
  for (auto& [k, v] : extra.items()) out[k] = v;
  out["message"] = e.what();
  std::cout << out.dump() << '\n';
  return code;
}

// Runs `fn` on each parsed input and prints its JSON; returns the worst exit
// code seen.
int for_each_graph(const std::vector<std::string>& args, const std::function<Json(const Graph&)>& fn) {
  int code = kOk;
  for (const std::string& input : gather_inputs(args)) {
    try {
      std::cout << fn(parse_graph6(input)).dump() << '\n';
    } catch (const ParseError& e) {
      code = std::max(code, emit_error(input, e, kInputError,
                                       {{"error", "parse_error"}, {"offset", e.offset()}}));
    } catch (const PreconditionError& e) {
      code = std::max(code, emit_error(input, e, kPrecondition,
                                       {{"error", "precondition"}, {"reason", e.reason()}}));
    } catch (const InternalError& e) {
      code = std::max(code, emit_error(input, e, kViolation, {{"error", "internal"}}));
    }
  }
  std::cout.flush();
  return code;
}

Json mms_json(const Graph& g) {
  MmsResult r = mms_exact(g);
  Json out;
  out["mms"] = r.value;
  out["certificate"] = r.certificate ? certificate_json(*r.certificate) : Json();
  return out;
}

Json decomposable_json(const Graph& g) {
  Decomposability d = is_decomposable(g);
  Json out;
  out["decomposable"] = d.decomposable;
  out["certificate"] = d.certificate ? certificate_json(*d.certificate) : Json();
  return out;
}

Json certify_json(const Graph& g) {
  MmsResult r = mms_exact(g);
  Json out;
  out["graph6"] = emit_graph6(g);
  out["n"] = g.order();
  out["m"] = g.size();
  out["nu"] = matching_number(g);
  out["mms"] = r.value;
  out["decomposable"] = r.value > 0;
  if (r.certificate) {
    Validation v = validate_certificate(g, *r.certificate);
    out["certificate"] = certificate_json(*r.certificate);
    out["valid"] = v.ok;
  } else {
    out["certificate"] = nullptr;
  }
  const DegreeClass dc = classify_degrees(g);
  if (dc.is_subcubic) {
    std::optional<int> ex = recognize_exceptional_subcubic(g);
    out["exceptional_index"] = ex ? Json(*ex) : Json();
  }
  if (dc.is_cubic) out["bridges"] = edges_json(bridges(g));
  return out;
}

Json clawfree_json(const Graph& g) {
  Matching m = disconnecting_pm_clawfree(g);
  Json cert = matching_json(m);
  cert["perfect"] = is_perfect_matching(g, m);
  cert["separating"] = is_separating(g, m);
  Json out;
  out["structure"] = clawfree_structure(g);
  out["certificate"] = std::move(cert);
  return out;
}

Json trace_json(const FamilyFMember& m) {
  Json steps = Json::array();
  for (const StarStep& s : m.steps) {
    steps.push_back({{"u", s.u},
                     {"factor", to_string(s.factor)},
                     {"v", s.v},
                     {"pairing", std::vector<int>(s.pairing.begin(), s.pairing.end())}});
  }
  return {{"base", to_string(m.base)}, {"steps", std::move(steps)}};
}

Json member_json(const FamilyFMember& m) {
  Json out;
  out["graph6"] = emit_graph6(m.graph);
  out["n"] = m.graph.order();
  out["trace"] = trace_json(m);
  std::optional<int> ex = recognize_exceptional_f(m.graph);
  out["exceptional_index"] = ex ? Json(*ex) : Json();
  return out;
}

Json family_check_json(const Graph& g) {
  std::optional<FamilyFMember> m = is_in_family_f(g);
  Json out;
  out["member"] = m.has_value();
  if (!m) return out;
  out["canonical"] = m->canonical;
  out["trace"] = trace_json(*m);
  AlmostTwoFactorResult a = almost_two_factor(*m);
  out["exceptional_index"] = a.exceptional_index ? Json(*a.exceptional_index) : Json();
  out["almost_two_factor"] = a.certificate ? spanning_json(*a.certificate) : Json();
  out["method"] = a.method;
  return out;
}

// Output stream: the file named by `path`, or stdout when empty.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw PreconditionError("io", "cannot open " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cout << Json{{"error", "precondition"}, {"reason", e.reason()}, {"message", e.what()}}.dump()
              << '\n';
    return kPrecondition;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kViolation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separating matchings in subcubic graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(artifact_version()));

  std::vector<std::string> graphs;
  std::string out_path;
  std::string format = "g6";
  int max_n = -1;
  int workers = 1;
  std::uint64_t seed = 1;

  auto add_graph_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("graph6", graphs, "graph6 strings (default: one per stdin line)");
    return sub;
  };
  CLI::App* mms_cmd = add_graph_command("mms", "maximum separating matching with certificate");
  CLI::App* dec_cmd = add_graph_command("decomposable", "matching cut existence with certificate");
  CLI::App* certify_cmd = add_graph_command("certify", "full separation summary with validation");
  CLI::App* claw_cmd =
      add_graph_command("clawfree-pm", "disconnecting perfect matching of a claw-free cubic graph");
  CLI::App* contract_cmd = add_graph_command("contract", "contract every subdivided path");
  contract_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json", "g6"}));

  CLI::App* family_cmd = app.add_subcommand("family-f", "star-product family");
  family_cmd->require_subcommand(1);
  CLI::App* fgen_cmd = family_cmd->add_subcommand("generate", "list all members up to --max-n");
  fgen_cmd->add_option("--max-n", max_n, "largest order")->required();
  fgen_cmd->add_option("--out", out_path, "output file (default stdout)");
  fgen_cmd->add_option("--format", format, "g6 or json")->check(CLI::IsMember({"g6", "json"}));
  CLI::App* fcheck_cmd = family_cmd->add_subcommand("check", "membership and almost 2-factor");
  fcheck_cmd->add_option("graph6", graphs, "graph6 strings (default: one per stdin line)");

  CLI::App* funk_cmd = app.add_subcommand("funk-scan", "2-factor Hamiltonicity vs. membership");
  funk_cmd->add_option("--max-n", max_n, "largest order")->required();
  funk_cmd->add_option("--report,--out", out_path, "report file (default stdout)");

  CLI::App* gen_cmd = app.add_subcommand("generate", "enumerate a graph class");
  std::string class_name = "cubic";
  int n = 0;
  bool all = false;
  bool random = false;
  int count = 1;
  gen_cmd->add_option("--class", class_name, "cubic, subcubic, bicubic or clawfree_cubic");
  gen_cmd->add_option("--n", n, "vertex count")->required();
  gen_cmd->add_flag("--all", all, "include disconnected graphs");
  gen_cmd->add_flag("--random", random, "seeded random connected cubic graphs instead");
  gen_cmd->add_option("--count", count, "number of random graphs");
  gen_cmd->add_option("--seed", seed, "random seed");
  gen_cmd->add_option("--out", out_path, "output file (default stdout)");
  gen_cmd->add_option("--format", format, "g6 or json")->check(CLI::IsMember({"g6", "json"}));

  CLI::App* verify_cmd = app.add_subcommand("verify", "exhaustive theorem scan");
  std::string theorem;
  verify_cmd->add_option("theorem", theorem, "thm1 .. thm6, thm-moshi, conj-funk, oracle")->required();
  verify_cmd->add_option("--max-n", max_n, "largest order");
  verify_cmd->add_option("--workers", workers, "worker threads");
  verify_cmd->add_option("--seed", seed, "seed for random instances");
  verify_cmd->add_option("--out", out_path, "report file (the report is also printed)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  if (*mms_cmd) return for_each_graph(graphs, mms_json);
  if (*dec_cmd) return for_each_graph(graphs, decomposable_json);
  if (*certify_cmd) return for_each_graph(graphs, certify_json);
  if (*claw_cmd) return for_each_graph(graphs, clawfree_json);
  if (*contract_cmd) {
    if (format == "json") {
      return for_each_graph(graphs, [](const Graph& g) {
        return contraction_json(contract_subdivided_paths(g));
      });
    }
    return guarded([&] {
      for (const std::string& input : gather_inputs(graphs)) {
        std::cout << emit_multigraph(contract_subdivided_paths(parse_graph6(input)).contracted);
      }
      return kOk;
    });
  }
  if (*fcheck_cmd) return for_each_graph(graphs, family_check_json);
  if (*fgen_cmd) {
    return guarded([&] {
      Sink sink(out_path);
      for (const FamilyFMember& m : generate_family_f(max_n)) {
        sink.out() << (format == "json" ? member_json(m).dump() : emit_graph6(m.graph)) << '\n';
      }
      return kOk;
    });
  }
  if (*funk_cmd) {
    return guarded([&] {
      VerificationReport r = funk_scan(max_n);
      Sink sink(out_path);
      sink.out() << to_json(r).dump(out_path.empty() ? -1 : 2) << '\n';
      return r.verified() ? kOk : kViolation;
    });
  }
  if (*gen_cmd) {
    return guarded([&] {
      std::vector<Graph> list;
      if (random) {
        for (int i = 0; i < count; ++i) list.push_back(random_cubic(n, seed + i));
      } else {
        std::optional<GraphClass> c = parse_graph_class(class_name);
        if (!c) throw PreconditionError("unknown_class", "unknown graph class " + class_name);
        list = enumerate_graphs({n, *c, !all});
      }
      Sink sink(out_path);
      for (const Graph& g : list) {
        if (format == "json") {
          sink.out() << Json{{"graph6", emit_graph6(g)}, {"n", g.order()}, {"m", g.size()}}.dump()
                     << '\n';
        } else {
          sink.out() << emit_graph6(g) << '\n';
        }
      }
      return kOk;
    });
  }
  if (*verify_cmd) {
    return guarded([&] {
      VerificationReport r = run_verify(theorem, {max_n, workers, seed});
      const Json j = to_json(r);
      if (!out_path.empty()) {
        Sink sink(out_path);
        sink.out() << j.dump(2) << '\n';
      }
      std::cout << j.dump() << '\n';
      return r.verified() ? kOk : kViolation;
    });
  }
  return kInputError;
}
