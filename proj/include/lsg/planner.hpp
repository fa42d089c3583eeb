#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lsg/core.hpp"
#include "lsg/document.hpp"
#include "lsg/search.hpp"
#include "lsg/verifier.hpp"

namespace lsg {

enum class Family { lgdd, simple_gdd };
enum class PlanOutcome { plan, nonexistent, blocked };

std::string to_string(PlanOutcome o);

struct PlanInput {
  std::string role;  // "base", "k0:4", "k2:14", "k:5", "gls:3", "frame:4", "lr", "fan", ...
  int node = -1;
};

struct PlanNode {
  std::string op;
  std::string name;               // table or variant name where the op needs one
  std::map<std::string, int> args;
  std::optional<SearchTask> task;  // op == "search"
  std::vector<PlanInput> inputs;
  std::string label;  // what the node produces
  int points = 0;
  std::string key;  // canonical identity, shared sub-plans get one node
};

struct ConstructionPlan {
  Family family = Family::lgdd;
  DesignParams target;
  PlanOutcome outcome = PlanOutcome::plan;
  std::vector<std::string> violated;
  std::string blocked_leaf;
  std::vector<PlanNode> nodes;  // children precede parents; the root is last

  std::string render() const;
};

struct PlannerOptions {
  int max_points = 120;
};

ConstructionPlan plan_lgdd(const DesignParams& p, const PlannerOptions& o = {});
ConstructionPlan plan_simple_gdd(const DesignParams& p, const PlannerOptions& o = {});

// Searches the planner may schedule; anything else is reported as ingredient-blocked.
bool desk_searchable(const SearchTask& t);

struct TranscriptEntry {
  int node = -1;
  std::string label;
  std::string check;
  bool passed = false;
  std::string summary;
  double seconds = 0.0;
};

struct NodeValue {
  AnyDesign design;
  bool star = false;
  int lambda = 0;  // for plain GDDs
};

// Built nodes keyed by PlanNode::key; reuse across executions in one process.
using ExecutionMemo = std::map<std::string, std::shared_ptr<const NodeValue>>;

struct ExecuteOptions {
  const CertificateStore* store = nullptr;
  VerifyOptions verify;
  ExecutionMemo* memo = nullptr;
};

struct ExecutionResult {
  bool ok = false;
  std::optional<DesignDocument> root;
  std::vector<TranscriptEntry> transcript;
  int failed_node = -1;
  std::string failure;
};

// Leaves first; every node is verified and a failure stops the run.
ExecutionResult execute(const ConstructionPlan& plan, const ExecuteOptions& o = {});

}  // namespace lsg
