#include <optional>

#include "doctest.h"
#include "lsg/planner.hpp"

using namespace lsg;

namespace {

ExecuteOptions with_store(std::optional<CertificateStore>& holder) {
  if (auto d = CertificateStore::default_dir()) holder.emplace(*d);
  ExecuteOptions o;
  o.store = holder ? &*holder : nullptr;
  return o;
}

std::vector<std::string> ops(const ConstructionPlan& p) {
  std::vector<std::string> out;
  for (const auto& n : p.nodes) out.push_back(n.op);
  return out;
}

bool acyclic_and_ordered(const ConstructionPlan& p) {
  for (std::size_t i = 0; i < p.nodes.size(); ++i)
    for (const auto& in : p.nodes[i].inputs)
      if (in.node < 0 || static_cast<std::size_t>(in.node) >= i) return false;
  return true;
}

}  // namespace

TEST_CASE("(2,3,8) is the cyclic development") {
  const ConstructionPlan p = plan_lgdd({2, 3, 8});
  REQUIRE(p.outcome == PlanOutcome::plan);
  CHECK(ops(p) == std::vector<std::string>{"develop_cyclic"});
  std::optional<CertificateStore> s;
  const ExecutionResult r = execute(p, with_store(s));
  REQUIRE(r.ok);
  CHECK(std::get<LargeSet>(r.root->design).members.size() == 9);
  CHECK(verify_document(*r.root).passed);
}

TEST_CASE("(3,2,8) doubles v5 once and breaks up") {
  const ConstructionPlan p = plan_lgdd({3, 2, 8});
  REQUIRE(p.outcome == PlanOutcome::plan);
  CHECK(acyclic_and_ordered(p));
  CHECK(p.nodes.back().op == "breakup");
  int doubles = 0;
  bool v5 = false;
  for (const auto& n : p.nodes) {
    doubles += n.op == "double";
    v5 = v5 || (n.op == "base_gls" && n.name == "v5");
  }
  CHECK(doubles == 1);
  CHECK(v5);
  std::optional<CertificateStore> s;
  const ExecutionResult r = execute(p, with_store(s));
  REQUIRE(r.ok);
  const auto& ls = std::get<LargeSet>(r.root->design);
  CHECK(ls.members.size() == 4);
  for (const auto& m : ls.members) CHECK(total_blocks(m) == 112);
  CHECK(r.transcript.size() == p.nodes.size());
  for (const auto& e : r.transcript) CHECK(e.passed);
}

TEST_CASE("(6,3,8) merges the 3^8 set") {
  const ConstructionPlan p = plan_lgdd({6, 3, 8});
  REQUIRE(p.outcome == PlanOutcome::plan);
  CHECK(ops(p) == std::vector<std::string>{"develop_cyclic", "merge"});
  CHECK(p.nodes.back().args.at("t") == 3);
}

TEST_CASE("simple designs") {
  std::optional<CertificateStore> s;
  const ConstructionPlan a = plan_simple_gdd({4, 3, 8});
  REQUIRE(a.outcome == PlanOutcome::plan);
  CHECK(ops(a) == std::vector<std::string>{"develop_cyclic", "union"});
  const ExecutionResult ra = execute(a, with_store(s));
  REQUIRE(ra.ok);
  const auto& d = std::get<GroupedDesign>(ra.root->design);
  CHECK(total_blocks(d.blocks) == 336);
  CHECK(verify_gdd(d, 4).passed);
  CHECK(verify_simple(d).passed);

  const ConstructionPlan b = plan_simple_gdd({4, 2, 4});
  const ExecutionResult rb = execute(b, with_store(s));
  REQUIRE(rb.ok);
  CHECK(total_blocks(std::get<GroupedDesign>(rb.root->design).blocks) == 32);

  const ConstructionPlan sts = plan_simple_gdd({1, 1, 7});
  REQUIRE(sts.outcome == PlanOutcome::plan);
  CHECK(execute(sts, with_store(s)).ok);
  CHECK(plan_lgdd({1, 1, 7}).outcome == PlanOutcome::nonexistent);

  const ConstructionPlan five = plan_simple_gdd({5, 1, 7});
  REQUIRE(five.outcome == PlanOutcome::plan);
  REQUIRE(five.nodes.size() == 1);
  CHECK(five.nodes[0].op == "search");
  CHECK(execute(five, with_store(s)).ok);
}

TEST_CASE("nonexistence exactly when inadmissible") {
  int blocked = 0;
  for (int l = 1; l <= 12; ++l)
    for (int g = 1; g <= 6; ++g)
      for (int u = 1; u <= 12; ++u) {
        const DesignParams p{l, g, u};
        const ConstructionPlan a = plan_lgdd(p);
        CHECK((a.outcome == PlanOutcome::nonexistent) == !admissible_lgdd(p).ok);
        if (a.outcome == PlanOutcome::nonexistent) CHECK_FALSE(a.violated.empty());
        if (a.outcome == PlanOutcome::blocked) {
          ++blocked;
          CHECK_FALSE(a.blocked_leaf.empty());
        }
        if (a.outcome == PlanOutcome::plan) CHECK(acyclic_and_ordered(a));
        const ConstructionPlan b = plan_simple_gdd(p);
        CHECK((b.outcome == PlanOutcome::nonexistent) == !admissible_simple_gdd(p).ok);
      }
  MESSAGE("ingredient-blocked cases in the box: " << blocked);
}

TEST_CASE("planning is repeatable") {
  for (const DesignParams p : {DesignParams{2, 3, 14}, DesignParams{3, 2, 14}, DesignParams{3, 1, 23}}) {
    const ConstructionPlan a = plan_lgdd(p), b = plan_lgdd(p);
    CHECK(a.render() == b.render());
    REQUIRE(a.nodes.size() == b.nodes.size());
    for (std::size_t i = 0; i < a.nodes.size(); ++i) CHECK(a.nodes[i].key == b.nodes[i].key);
  }
}

TEST_CASE("shared sub-plans appear once") {
  const ConstructionPlan p = plan_lgdd({3, 2, 14});
  REQUIRE(p.outcome == PlanOutcome::plan);
  std::set<std::string> keys;
  for (const auto& n : p.nodes) CHECK(keys.insert(n.key).second);
  CHECK(p.render().find("(see above)") != std::string::npos);
}

TEST_CASE("desk-scale guard") {
  PlannerOptions o;
  o.max_points = 20;
  const ConstructionPlan p = plan_lgdd({2, 3, 8}, o);
  CHECK(p.outcome == PlanOutcome::blocked);
  CHECK(p.blocked_leaf.find("24 points") != std::string::npos);
  CHECK(plan_lgdd({2, 3, 50}).outcome == PlanOutcome::blocked);
}

TEST_CASE("missing ingredients name the leaf") {
  const ConstructionPlan p = plan_lgdd({1, 2, 7});
  CHECK(p.outcome == PlanOutcome::blocked);
  CHECK(p.blocked_leaf.find("LGDD(2^7)") != std::string::npos);
  CHECK(desk_searchable(lgdd_task(2, 4, 1)));
  CHECK_FALSE(desk_searchable(lgdd_task(2, 7, 1)));
  CHECK_FALSE(desk_searchable(lgdd_task(2, 4, 1, 9)));
}

TEST_CASE("execution stops at a failing node") {
  ConstructionPlan p = plan_lgdd({6, 3, 8});
  REQUIRE(p.nodes.size() == 2);
  p.nodes[0].op = "no_such_op";
  const ExecutionResult r = execute(p);
  CHECK_FALSE(r.ok);
  CHECK(r.failed_node == 0);
  CHECK_FALSE(r.root);
  CHECK(r.transcript.size() == 1);

  ConstructionPlan q = plan_lgdd({6, 3, 8});
  q.nodes[1].args["t"] = 2;  // 9 members do not split into pairs
  const ExecutionResult rq = execute(q);
  CHECK_FALSE(rq.ok);
  CHECK(rq.failed_node == 1);

  CHECK_FALSE(execute(plan_lgdd({1, 1, 7})).ok);
}

TEST_CASE("memo reuses verified nodes") {
  std::optional<CertificateStore> s;
  ExecuteOptions o = with_store(s);
  ExecutionMemo memo;
  o.memo = &memo;
  REQUIRE(execute(plan_lgdd({2, 3, 8}), o).ok);
  const ExecutionResult r = execute(plan_lgdd({6, 3, 8}), o);
  REQUIRE(r.ok);
  CHECK(r.transcript[0].check == "memo");
  CHECK(r.transcript[1].check == "verify_large_set");
}

TEST_CASE("provenance digests the plan") {
  std::optional<CertificateStore> s;
  const ConstructionPlan p = plan_lgdd({2, 3, 8});
  const ExecutionResult a = execute(p, with_store(s)), b = execute(p, with_store(s));
  REQUIRE(a.ok);
  CHECK(a.root->provenance == b.root->provenance);
  CHECK(a.root->provenance != execute(plan_lgdd({6, 3, 8}), with_store(s)).root->provenance);
}
