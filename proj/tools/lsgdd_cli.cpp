#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lsg/catalog.hpp"
#include "lsg/document.hpp"
#include "lsg/planner.hpp"
#include "lsg/search.hpp"

namespace {

using nlohmann::json;
using namespace lsg;

enum Exit { ok = 0, nonexistent = 1, blocked = 2, failed = 3, usage = 4 };

struct Globals {
  std::string cache;
  std::string report;
  int threads = 1;
};

std::optional<CertificateStore> open_store(const Globals& g) {
  if (!g.cache.empty()) return CertificateStore(g.cache);
  if (auto d = CertificateStore::default_dir()) return CertificateStore(*d);
  return std::nullopt;
}

void write_report(const Globals& g, const json& j) {
  if (g.report.empty()) return;
  std::ofstream(g.report) << canonical_dump(j);
}

json report_json(const VerificationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"law", x.law}, {"witness", x.witness}});
  return {{"passed", r.passed}, {"total", r.total}, {"violations", v}};
}

bool write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream f(path);
  f << text;
  return static_cast<bool>(f);
}

ConstructionPlan make(int lambda, int g, int u, bool simple) {
  const DesignParams p{lambda, g, u};
  return simple ? plan_simple_gdd(p) : plan_lgdd(p);
}

int outcome_exit(const ConstructionPlan& plan) {
  switch (plan.outcome) {
    case PlanOutcome::plan: return ok;
    case PlanOutcome::nonexistent: return nonexistent;
    case PlanOutcome::blocked: return blocked;
  }
  return failed;
}

json plan_json(const ConstructionPlan& plan) {
  return {{"family", plan.family == Family::lgdd ? "lgdd" : "simple_gdd"},
          {"params", {{"lambda", plan.target.lambda}, {"g", plan.target.g}, {"u", plan.target.u}}},
          {"outcome", to_string(plan.outcome)},
          {"violated", plan.violated},
          {"blocked_leaf", plan.blocked_leaf},
          {"nodes", plan.nodes.size()}};
}

int cmd_plan(const Globals& g, int lambda, int gs, int u, bool simple) {
  const ConstructionPlan plan = make(lambda, gs, u, simple);
  std::cout << plan.render();
  write_report(g, plan_json(plan));
  return outcome_exit(plan);
}

int cmd_build(const Globals& g, int lambda, int gs, int u, bool simple, const std::string& out) {
  const ConstructionPlan plan = make(lambda, gs, u, simple);
  std::cout << plan.render();
  json rep = plan_json(plan);
  if (plan.outcome != PlanOutcome::plan) {
    write_report(g, rep);
    return outcome_exit(plan);
  }
  auto store = open_store(g);
  ExecuteOptions o;
  o.store = store ? &*store : nullptr;
  o.verify.threads = g.threads;
  const ExecutionResult res = execute(plan, o);
  json tr = json::array();
  for (const auto& e : res.transcript) {
    std::cout << "  #" << e.node << " " << e.check << ": " << (e.passed ? "pass" : "FAIL") << " - " << e.summary
              << "\n";
    tr.push_back({{"node", e.node}, {"label", e.label}, {"check", e.check}, {"passed", e.passed},
                  {"summary", e.summary}, {"seconds", e.seconds}});
  }
  rep["transcript"] = tr;
  rep["ok"] = res.ok;
  if (!res.ok) {
    std::cerr << "build failed at " << res.failure << "\n";
    rep["failure"] = res.failure;
    write_report(g, rep);
    return failed;
  }
  rep["provenance"] = res.root->provenance;
  write_report(g, rep);
  if (!out.empty() && !write_text(out, export_document(*res.root))) {
    std::cerr << "cannot write " << out << "\n";
    return usage;
  }
  std::cout << "verified " << kind_name(res.root->design) << " " << to_string(plan.target) << "\n";
  return ok;
}

int cmd_verify(const Globals& g, const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    std::cerr << "cannot read " << path << "\n";
    return usage;
  }
  std::stringstream ss;
  ss << f.rdbuf();
  DesignDocument doc;
  try {
    doc = import_document(ss.str());
  } catch (const std::exception& e) {
    std::cerr << "malformed document: " << e.what() << "\n";
    write_report(g, {{"passed", false}, {"structure", e.what()}});
    return failed;
  }
  VerifyOptions vo;
  vo.threads = g.threads;
  const VerificationReport r = verify_document(doc, vo);
  std::cout << kind_name(doc.design) << ": " << r.summary() << "\n";
  if (r.passed != doc.recorded_pass || r.total != doc.recorded_violations)
    std::cout << "note: recorded report was " << (doc.recorded_pass ? "pass" : "fail") << " with "
              << doc.recorded_violations << " violations\n";
  write_report(g, report_json(r));
  return r.passed ? ok : failed;
}

int cmd_search(const Globals& g, const std::string& kind_s, const std::vector<int>& a, std::uint64_t seed,
               double seconds, long long nodes, const std::string& out) {
  const auto kind = parse_search_kind(kind_s);
  auto arity = [&](std::size_t n, const char* shape) {
    if (a.size() == n) return true;
    std::cerr << kind_s << " takes " << shape << "\n";
    return false;
  };
  if (!kind) {
    std::cerr << "unknown search kind " << kind_s << " (lgdd, frame, lr, simple_gdd, ls_plain)\n";
    return usage;
  }
  SearchTask t;
  switch (*kind) {
    case SearchKind::lgdd:
      if (!arity(3, "LAMBDA G U")) return usage;
      t = lgdd_task(a[1], a[2], a[0], seed);
      break;
    case SearchKind::simple_gdd:
      if (!arity(3, "LAMBDA G U")) return usage;
      t = simple_gdd_task(a[0], a[1], a[2], seed);
      break;
    case SearchKind::frame:
      if (!arity(2, "M K")) return usage;
      t = frame_task(a[0], a[1], seed);
      break;
    case SearchKind::lr:
      if (!arity(1, "V")) return usage;
      t = lr_task(a[0], seed);
      break;
    case SearchKind::ls_plain:
      if (!arity(2, "LAMBDA V")) return usage;
      t.kind = SearchKind::ls_plain;
      t.lambda = a[0];
      t.v = a[1];
      t.seed = seed;
      break;
  }
  if (seconds > 0) t.budget.seconds = seconds;
  if (nodes > 0) t.budget.nodes = nodes;
  auto store = open_store(g);
  std::vector<std::string> warnings;
  const SearchResult r = search_cached(t, store ? &*store : nullptr, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  const char* status = r.status == SearchStatus::found ? "found" : r.status == SearchStatus::timeout ? "timeout" : "exhausted";
  std::cout << fingerprint(t) << ": " << status << (r.from_certificate ? " (certificate)" : "") << ", "
            << r.stats.nodes << " nodes, " << r.stats.seconds << " s";
  if (!r.message.empty()) std::cout << ", " << r.message;
  std::cout << "\n";
  write_report(g, {{"fingerprint", fingerprint(t)}, {"status", status}, {"nodes", r.stats.nodes},
                   {"seconds", r.stats.seconds}, {"from_certificate", r.from_certificate}});
  if (r.status != SearchStatus::found) return blocked;
  if (!out.empty()) {
    DesignDocument doc;
    std::visit([&](auto&& obj) { doc.design = obj; }, *r.object);
    doc.params = {t.lambda, t.g, t.u};
    doc.simple = *kind == SearchKind::simple_gdd;
    doc.provenance = "search " + fingerprint(t);
    stamp_report(doc);
    if (!write_text(out, export_document(doc))) return usage;
  }
  return ok;
}

int cmd_catalog(const Globals& g, const std::string& name, const std::string& out) {
  DesignDocument doc;
  doc.provenance = "catalog " + name;
  try {
    if (name == "v5" || name == "v6" || name == "v10" || name == "v11") {
      doc.design = base_gls(name);
      doc.star = base_gls_is_star(name);
    } else if (name == "lgdd_3_8") {
      LargeSet ls = develop_cyclic(lgdd_3_8_seed());
      doc.params = ls.params;
      doc.design = std::move(ls);
    } else if (name == "sqs8_fan") {
      doc.design = sqs8_fan();
    } else if (name.rfind("cube:", 0) == 0) {
      LargeSet ls = lgdd_cube(std::stoi(name.substr(5)));
      doc.params = ls.params;
      doc.design = std::move(ls);
    } else {
      std::cerr << "unknown catalog object " << name << " (v5, v6, v10, v11, lgdd_3_8, sqs8_fan, cube:G)\n";
      return usage;
    }
  } catch (const std::exception& e) {
    std::cerr << name << ": " << e.what() << "\n";
    return failed;
  }
  VerifyOptions vo;
  vo.threads = g.threads;
  const VerificationReport r = stamp_report(doc, vo);
  std::cerr << name << ": " << r.summary() << "\n";
  write_report(g, report_json(r));
  if (!write_text(out.empty() ? "-" : out, export_document(doc))) return usage;
  return r.passed ? ok : failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Large sets of (3,λ)-GDDs: plan, build, verify, search and export designs"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--cache", g.cache, "certificate directory (default: $LSGDD_CACHE)");
  app.add_option("--report", g.report, "write a machine-readable JSON report");
  app.add_option("--threads", g.threads, "verifier worker threads")->check(CLI::PositiveNumber);

  int lambda = 0, gs = 0, u = 0;
  bool simple = false;
  std::string out, file, kind, name;
  std::vector<int> params;
  std::uint64_t seed = 0;
  double seconds = 0;
  long long nodes = 0;

  auto* plan = app.add_subcommand("plan", "print the construction plan or the violated conditions");
  auto* build = app.add_subcommand("build", "execute a plan, verifying every node, and export the result");
  for (auto* sc : {plan, build}) {
    sc->add_option("lambda", lambda)->required();
    sc->add_option("g", gs)->required();
    sc->add_option("u", u)->required();
    sc->add_flag("--simple", simple, "simple (3,λ)-GDD instead of a large set");
  }
  build->add_option("--out", out, "output file ('-' for stdout)");

  auto* verify = app.add_subcommand("verify", "re-check a design document");
  verify->add_option("file", file)->required();

  auto* search = app.add_subcommand("search", "run an ingredient search");
  search->add_option("kind", kind, "lgdd | simple_gdd | frame | lr | ls_plain")->required();
  search->add_option("params", params, "lgdd/simple_gdd: LAMBDA G U; frame: M K; lr: V; ls_plain: LAMBDA V")
      ->required();
  search->add_option("--seed", seed, "search seed");
  search->add_option("--seconds", seconds, "time budget");
  search->add_option("--nodes", nodes, "node budget");
  search->add_option("--out", out, "export the object found");

  auto* catalog = app.add_subcommand("catalog", "dump a built-in object as a design document");
  catalog->add_option("name", name, "v5 | v6 | v10 | v11 | lgdd_3_8 | sqs8_fan | cube:G")->required();
  catalog->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }
  try {
    if (*plan) return cmd_plan(g, lambda, gs, u, simple);
    if (*build) return cmd_build(g, lambda, gs, u, simple, out);
    if (*verify) return cmd_verify(g, file);
    if (*search) return cmd_search(g, kind, params, seed, seconds, nodes, out);
    if (*catalog) return cmd_catalog(g, name, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failed;
  }
  return usage;
}
