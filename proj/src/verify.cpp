#include "sepmatch/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "sepmatch/canonical.hpp"
#include "sepmatch/clawfree.hpp"
#include "sepmatch/errors.hpp"
#include "sepmatch/exceptional.hpp"
#include "sepmatch/family_f.hpp"
#include "sepmatch/generator.hpp"
#include "sepmatch/graph6.hpp"
#include "sepmatch/json_io.hpp"
#include "sepmatch/matching.hpp"
#include "sepmatch/named_graphs.hpp"
#include "sepmatch/separation.hpp"
#include "sepmatch/structure.hpp"

namespace sepmatch {

const std::vector<std::string>& known_theorem_ids() {
  static const std::vector<std::string> ids = {"thm1", "thm2", "thm-moshi", "thm3", "thm4",
                                               "thm5", "thm6", "conj-funk", "oracle"};
  return ids;
}

int default_max_n(const std::string& id) {
  if (id == "thm1") return kMaxSubcubicOrder;
  if (id == "thm5") return 22;
  if (id == "thm6") return 12;
  if (id == "oracle") return 8;
  return kMaxCubicOrder;
}

std::vector<ReportFailure> parallel_check(
    const std::vector<Graph>& graphs, int workers,
    const std::function<std::vector<ReportFailure>(const Graph&)>& check) {
  std::vector<std::vector<ReportFailure>> per_graph(graphs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      try {
        per_graph[i] = check(graphs[i]);
      } catch (const std::exception& e) {
        per_graph[i] = {{emit_graph6(graphs[i]), "check completes", e.what()}};
      }
    }
  };
  const int count = std::clamp(workers, 1, 64);
  if (count == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < count; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::vector<ReportFailure> out;
  for (auto& rows : per_graph) out.insert(out.end(), rows.begin(), rows.end());
  return out;
}

namespace {

std::string str(int x) { return std::to_string(x); }

// {"4": 1, "6": 2, ...} in numeric key order.
Json histogram_json(const std::map<int, int>& counts) {
  Json out = Json::object();
  for (const auto& [key, count] : counts) out[str(key)] = count;
  return out;
}

void check_bound(const std::string& id, int max_n, int bound) {
  if (max_n > bound) {
    throw PreconditionError("bound_exceeded", id + " scans up to n = " + str(bound));
  }
}

// Rows gathered from workers, emitted sorted by key.
struct Collector {
  std::mutex mutex;
  std::vector<std::pair<std::string, Json>> rows;
  void add(const std::string& key, Json value) {
    std::lock_guard lock(mutex);
    rows.emplace_back(key, std::move(value));
  }
  nlohmann::ordered_json sorted() {
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (auto& [k, v] : rows) out.push_back(v);
    return out;
  }
};

void verify_thm1(VerificationReport& r, int max_n, int workers) {
  check_bound("thm1", max_n, kMaxSubcubicOrder);
  // K1 has no edges to cut; the scan starts with the single edge.
  r.class_scanned = {"subcubic", 2, max_n, true};
  const auto graphs = enumerate_range(GraphClass::kSubcubic, 2, max_n);
  Collector hits;
  r.failures = parallel_check(graphs, workers, [&](const Graph& g) {
    std::vector<ReportFailure> out;
    Decomposability d = is_decomposable(g);
    std::optional<int> rec = recognize_exceptional_subcubic(g);
    if (d.decomposable == rec.has_value()) {
      out.push_back({emit_graph6(g), rec ? "nondecomposable" : "decomposable",
                     d.decomposable ? "decomposable" : "nondecomposable"});
    }
    if (d.certificate && !validate_certificate(g, *d.certificate)) {
      out.push_back({emit_graph6(g), "valid certificate", "invalid certificate"});
    }
    if (!d.decomposable) {
      hits.add(canonical_form(g), {{"graph6", emit_graph6(g)},
                                   {"index", rec ? Json(*rec) : Json()},
                                   {"name", rec ? exceptional_subcubic_graphs()[*rec].name : ""}});
    }
    return out;
  });
  r.graphs_checked = static_cast<long>(graphs.size());
  std::set<int> found;
  for (const auto& [form, row] : hits.rows) {
    if (!row["index"].is_null()) found.insert(row["index"].get<int>());
  }
  for (const auto& ex : exceptional_subcubic_graphs()) {
    if (ex.graph.order() <= max_n && !found.count(ex.index)) {
      r.failures.push_back({emit_graph6(ex.graph), "nondecomposable graph in scan", "not found"});
    }
  }
  r.details["nondecomposable"] = hits.sorted();
}

void verify_thm2(VerificationReport& r, int max_n, int workers) {
  check_bound(r.theorem_id, max_n, kMaxCubicOrder);
  r.class_scanned = {"cubic", 4, max_n, true};
  const auto graphs = enumerate_range(GraphClass::kCubic, 4, max_n);
  const std::set<std::string> expected = {canonical_form(named::complete(4)),
                                          canonical_form(named::complete_bipartite(3, 3))};
  Collector hits;
  std::map<int, int> per_order;
  for (const Graph& g : graphs) ++per_order[g.order()];
  r.failures = parallel_check(graphs, workers, [&](const Graph& g) {
    std::vector<ReportFailure> out;
    Decomposability d = is_decomposable(g);
    const bool exceptional = expected.count(canonical_form(g)) > 0;
    if (d.decomposable == exceptional) {
      out.push_back({emit_graph6(g), exceptional ? "nondecomposable" : "decomposable",
                     d.decomposable ? "decomposable" : "nondecomposable"});
    }
    if (d.certificate && !validate_certificate(g, *d.certificate)) {
      out.push_back({emit_graph6(g), "valid certificate", "invalid certificate"});
    }
    if (!d.decomposable) hits.add(canonical_form(g), emit_graph6(g));
    return out;
  });
  r.graphs_checked = static_cast<long>(graphs.size());
  r.details["graphs_per_order"] = histogram_json(per_order);
  r.details["nondecomposable"] = hits.sorted();
}

void verify_thm3(VerificationReport& r, int max_n, int workers) {
  check_bound("thm3", max_n, kMaxCubicOrder);
  r.class_scanned = {"cubic", 4, max_n, true};
  std::vector<Graph> graphs;
  for (const Graph& g : enumerate_range(GraphClass::kCubic, 4, max_n)) {
    if (!bridges(g).empty()) graphs.push_back(g);
  }
  r.failures = parallel_check(graphs, workers, [](const Graph& g) {
    std::vector<ReportFailure> out;
    const std::string g6 = emit_graph6(g);
    const int nu = matching_number(g);
    const int value = mms_exact(g).value;
    if (value < nu - 1) out.push_back({g6, "mms >= " + str(nu - 1), "mms = " + str(value)});
    for (const Edge& b : bridges(g)) {
      SeparationCertificate c = bridge_separating_matching(g, b);
      if (!validate_certificate(g, c) || !c.matching.contains(b)) {
        out.push_back({g6, "valid certificate containing " + to_string(b), "invalid"});
      } else if (c.matching.size() < nu - 1) {
        out.push_back({g6, "certificate size >= " + str(nu - 1),
                       "size " + str(c.matching.size())});
      }
    }
    return out;
  });
  r.graphs_checked = static_cast<long>(graphs.size());
}

void verify_thm4(VerificationReport& r, int max_n, int workers) {
  check_bound("thm4", max_n, kMaxCubicOrder);
  r.class_scanned = {"cubic", 4, max_n, true};
  std::vector<Graph> graphs;
  for (const Graph& g : enumerate_range(GraphClass::kCubic, 4, max_n)) {
    if (is_two_edge_connected(g)) graphs.push_back(g);
  }
  std::mutex mutex;
  std::map<int, int> deficit;  // n/2 - mms over decomposable graphs
  long decomposable = 0;
  r.failures = parallel_check(graphs, workers, [&](const Graph& g) {
    std::vector<ReportFailure> out;
    MmsResult m = mms_exact(g);
    if (m.value == 0) return out;
    {
      std::lock_guard lock(mutex);
      ++decomposable;
      ++deficit[g.order() / 2 - m.value];
    }
    if (m.value < g.order() / 2 - 2) {
      out.push_back({emit_graph6(g), "mms >= " + str(g.order() / 2 - 2), "mms = " + str(m.value)});
    }
    return out;
  });
  r.graphs_checked = decomposable;
  r.details["two_edge_connected"] = graphs.size();
  r.details["deficit_histogram"] = histogram_json(deficit);
}

void verify_thm5(VerificationReport& r, int max_n, int workers) {
  check_bound("thm5", max_n, kMaxFamilyOrder);
  r.class_scanned = {"family_f", 6, max_n, true};
  const auto& members = generate_family_f(max_n);
  std::vector<Graph> graphs;
  for (const auto& m : members) graphs.push_back(m.graph);
  std::map<std::string, const FamilyFMember*> by_form;
  for (const auto& m : members) by_form[m.canonical] = &m;
  r.failures = parallel_check(graphs, workers, [&](const Graph& g) {
    std::vector<ReportFailure> out;
    const std::string g6 = emit_graph6(g);
    const int n = g.order();
    const int value = mms_exact(g).value;
    const std::optional<int> ex = recognize_exceptional_f(g);
    if (!ex) {
      if (value != n / 2 - 1) out.push_back({g6, "mms = " + str(n / 2 - 1), "mms = " + str(value)});
      AlmostTwoFactorResult a = almost_two_factor(*by_form.at(canonical_form(g)));
      if (!a.certificate || !validate_almost_two_factor(g, *a.certificate)) {
        out.push_back({g6, "almost 2-factor", "none"});
      }
    } else {
      const int bound = *ex == 0 ? 0 : n / 2 - 2;
      if (value > bound) out.push_back({g6, "mms <= " + str(bound), "mms = " + str(value)});
      if (*ex == 1 && value != 3) out.push_back({g6, "mms = 3", "mms = " + str(value)});
    }
    return out;
  });
  r.graphs_checked = static_cast<long>(graphs.size());
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (const auto& v : exceptional_f_values()) {
    table.push_back({{"index", v.index},
                     {"n", v.order},
                     {"mms", v.mms},
                     {"upper_bound", v.upper_bound},
                     {"graph6", emit_graph6(exceptional_f_graphs()[v.index].graph)}});
  }
  r.details["exceptional"] = std::move(table);
}

void verify_oracle(VerificationReport& r, int max_n, int workers, std::uint64_t seed) {
  check_bound("oracle", max_n, 8);
  r.class_scanned = {"subcubic", 2, max_n, true};
  std::vector<Graph> graphs = enumerate_range(GraphClass::kSubcubic, 2, max_n);
  const std::size_t exhaustive = graphs.size();
  for (int i = 0; i < 500; ++i) graphs.push_back(random_cubic(4 + 2 * (i % 5), seed + i));
  r.failures = parallel_check(graphs, workers, [](const Graph& g) {
    std::vector<ReportFailure> out;
    const int exact = mms_exact(g).value;
    const int oracle = mms_oracle(g);
    if (exact != oracle) {
      out.push_back({emit_graph6(g), "mms_exact = " + str(oracle), "mms_exact = " + str(exact)});
    }
    return out;
  });
  r.graphs_checked = static_cast<long>(graphs.size());
  r.details["exhaustive"] = exhaustive;
  r.details["random_cubic"] = graphs.size() - exhaustive;
  r.details["seed"] = seed;
}

}  // namespace

VerificationReport run_verify(const std::string& id, const VerifyOptions& options) {
  const auto& ids = known_theorem_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    throw PreconditionError("unknown_theorem", "no verification named '" + id + "'");
  }
  const int max_n = options.max_n < 0 ? default_max_n(id) : options.max_n;
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  if (id == "thm6") {
    r = verify_clawfree_theorem(max_n);
  } else if (id == "conj-funk") {
    check_bound(id, max_n, kMaxCubicOrder);
    r = funk_scan(max_n);
  } else {
    r.theorem_id = id;
    r.artifact_version = artifact_version();
    if (id == "thm1") verify_thm1(r, max_n, options.workers);
    if (id == "thm2" || id == "thm-moshi") verify_thm2(r, max_n, options.workers);
    if (id == "thm3") verify_thm3(r, max_n, options.workers);
    if (id == "thm4") verify_thm4(r, max_n, options.workers);
    if (id == "thm5") verify_thm5(r, max_n, options.workers);
    if (id == "oracle") verify_oracle(r, max_n, options.workers, options.seed);
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace sepmatch
