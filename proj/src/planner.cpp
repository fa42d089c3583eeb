#include "lsg/planner.hpp"

#include <chrono>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lsg/catalog.hpp"
#include "lsg/constructions.hpp"

namespace lsg {

std::string to_string(PlanOutcome o) {
  switch (o) {
    case PlanOutcome::plan: return "plan";
    case PlanOutcome::nonexistent: return "nonexistent";
    case PlanOutcome::blocked: return "ingredient-blocked";
  }
  return "?";
}

bool desk_searchable(const SearchTask& t) {
  const std::string fp = fingerprint(t);
  for (const auto& e : required_ingredients())
    if (e.provider == "searched" && e.source == fp) return true;
  return false;
}

namespace {

struct Blocked {
  std::string leaf;
};

std::string lgdd_label(int lambda, int g, int u) {
  return "(3," + std::to_string(lambda) + ")-LGDD(" + std::to_string(g) + "^" + std::to_string(u) + ")";
}

// Symbolic shape of a node's output, used for labels and ingredient selection.
struct Shape {
  DesignParams params;  // large sets and simple GDDs
  int v = 0;
  int lambda = 1;
  HoleProfile profile;
  bool star = false;
  bool good = false;
};

std::string ls_label(const Shape& s) {
  std::string name = s.good ? (s.star ? "GLS*" : "GLS") : (s.star ? "LS*" : "LS");
  return name + "(1," + std::to_string(s.lambda) + ";2," + to_string(s.profile) + "," + std::to_string(s.v) + ")";
}

class Planner {
 public:
  explicit Planner(const PlannerOptions& o) : opt_(o) {}

  std::vector<PlanNode> nodes;
  std::vector<Shape> shapes;

  int add(PlanNode n, Shape s) {
    std::ostringstream key;
    key << n.op << "(" << n.name;
    for (const auto& [k, v] : n.args) key << "," << k << "=" << v;
    if (n.task) key << "," << fingerprint(*n.task);
    key << ")[";
    for (const auto& in : n.inputs) key << in.role << "=" << nodes[in.node].key << ";";
    key << "]";
    n.key = key.str();
    auto it = index_.find(n.key);
    if (it != index_.end()) return it->second;
    if (n.points > opt_.max_points)
      throw Blocked{n.label + " on " + std::to_string(n.points) + " points exceeds the desk-scale bound of " +
                    std::to_string(opt_.max_points)};
    nodes.push_back(std::move(n));
    shapes.push_back(s);
    const int id = static_cast<int>(nodes.size()) - 1;
    index_[nodes.back().key] = id;
    return id;
  }

  int lgdd_node(const std::string& op, std::map<std::string, int> args, std::vector<PlanInput> in, DesignParams p,
                const std::string& name = "") {
    PlanNode n;
    n.op = op;
    n.name = name;
    n.args = std::move(args);
    n.inputs = std::move(in);
    n.label = lgdd_label(p.lambda, p.g, p.u);
    n.points = p.g * p.u;
    Shape s;
    s.params = p;
    return add(std::move(n), s);
  }

  int holed_node(const std::string& op, std::map<std::string, int> args, std::vector<PlanInput> in, Shape s,
                 const std::string& name = "") {
    PlanNode n;
    n.op = op;
    n.name = name;
    n.args = std::move(args);
    n.inputs = std::move(in);
    n.label = ls_label(s);
    n.points = s.v;
    return add(std::move(n), s);
  }

  // Closed forms and tables.
  int cube(int g) { return lgdd_node("cube", {{"g", g}}, {}, {1, g, 3}); }
  int complete(int g, int u) { return lgdd_node("complete", {{"g", g}, {"u", u}}, {}, {g * (u - 2), g, u}); }
  int develop38() { return lgdd_node("develop_cyclic", {}, {}, {2, 3, 8}, "lgdd_3_8"); }

  int table(const std::string& name) {
    const GoodLargeSet g = base_gls(name);
    Shape s;
    s.v = g.base.v;
    s.lambda = g.base.lambda;
    s.profile = g.base.profile;
    s.star = base_gls_is_star(name);
    s.good = true;
    return holed_node("base_gls", {}, {}, s, name);
  }

  int trivial(int v) {
    Shape s;
    s.v = v;
    s.lambda = 1;
    s.profile = {{3}, {3}, {v}};
    s.star = true;
    s.good = true;
    return holed_node("trivial_gls", {{"v", v}}, {}, s);
  }

  int search(const SearchTask& t, const std::string& label) {
    if (!desk_searchable(t)) throw Blocked{label + " (no desk-scale provider)"};
    PlanNode n;
    n.op = "search";
    n.task = t;
    n.label = label;
    Shape s;
    switch (t.kind) {
      case SearchKind::lgdd:
        n.points = t.g * t.u;
        s.params = {t.lambda, t.g, t.u};
        break;
      case SearchKind::simple_gdd:
        n.points = t.g * t.u;
        s.params = {t.lambda, t.g, t.u};
        break;
      case SearchKind::frame: n.points = t.m * t.k; break;
      case SearchKind::lr: n.points = t.v; break;
      case SearchKind::ls_plain:
        n.points = t.v;
        s.params = {t.lambda, 1, t.v};
        break;
    }
    return add(std::move(n), s);
  }

  int fan(int k) {
    PlanNode n;
    n.op = "sqs_fan";
    n.args = {{"k", k}};
    n.points = (1 << k) - 1;
    n.label = "1-FG(3,({3},{4})," + std::to_string(n.points) + ")";
    return add(std::move(n), {});
  }

  // Derived large sets.
  int inflate(int in, int m) {
    if (m == 1) return in;
    const DesignParams p = shapes[in].params;
    return lgdd_node("inflate", {{"m", m}}, {{"base", in}}, {p.lambda, p.g * m, p.u});
  }

  int merge(int in, int t) {
    if (t == 1) return in;
    const DesignParams p = shapes[in].params;
    return lgdd_node("merge", {{"t", t}}, {{"base", in}}, {p.lambda * t, p.g, p.u});
  }

  int union_members(int in, int t) {
    const DesignParams p = shapes[in].params;
    PlanNode n;
    n.op = "union";
    n.args = {{"t", t}};
    n.inputs = {{"base", in}};
    n.points = p.g * p.u;
    n.label = "simple (3," + std::to_string(p.lambda * t) + ")-GDD(" + std::to_string(p.g) + "^" +
              std::to_string(p.u) + ")";
    Shape s;
    s.params = {p.lambda * t, p.g, p.u};
    return add(std::move(n), s);
  }

  int forget(int in) {
    Shape s = shapes[in];
    if (!s.good) return in;
    s.good = false;
    return holed_node("forget", {}, {{"base", in}}, s);
  }

  int as_large_set(int in) {
    const Shape& s = shapes[in];
    return lgdd_node("as_large_set", {}, {{"base", in}}, {s.lambda, 1, s.v});
  }

  int as_holed(int in) {
    const DesignParams p = shapes[in].params;
    Shape s;
    s.v = p.u;
    s.lambda = p.lambda;
    s.star = true;  // only triples
    return holed_node("as_holed", {}, {{"base", in}}, s);
  }

  int fill(int base, const std::map<int, int>& k0, const std::map<int, int>& k2, bool star) {
    Shape s = shapes[base];
    std::vector<PlanInput> in{{"base", base}};
    HoleProfile p;
    p.K0.clear();
    p.K1 = s.profile.K1;
    p.K2.clear();
    for (int k : s.profile.K0) {
      auto it = k0.find(k);
      if (it == k0.end()) {
        p.K0.insert(k);
        continue;
      }
      in.push_back({"k0:" + std::to_string(k), it->second});
      const HoleProfile& f = shapes[it->second].profile;
      for (const auto* set : {&f.K0, &f.K1, &f.K2}) p.K0.insert(set->begin(), set->end());
    }
    for (int k : s.profile.K2) {
      auto it = k2.find(k);
      if (it == k2.end()) {
        p.K2.insert(k);
        continue;
      }
      in.push_back({"k2:" + std::to_string(k), it->second});
      const HoleProfile& f = shapes[it->second].profile;
      p.K0.insert(f.K0.begin(), f.K0.end());
      p.K1.insert(f.K1.begin(), f.K1.end());
      p.K2.insert(f.K2.begin(), f.K2.end());
    }
    if (in.size() == 1) return base;
    s.profile = p;
    s.star = star;
    if (s.good)
      for (const auto& [k, id] : k2) {
        (void)k;
        if (!shapes[id].good) s.good = false;
      }
    if (!s.good && shapes[base].good) base = forget(base), in[0].node = base;
    return holed_node("fill", {{"star", star ? 1 : 0}}, in, s);
  }

  std::map<int, int> doubling_ingredients(const Shape& s) {
    std::map<int, int> ing;
    std::set<int> sizes = s.profile.K0;
    sizes.insert(3);
    for (int k : sizes) ing[k] = lgdd1(2, k);
    return ing;
  }

  int doubled(int in, bool star) {
    const Shape& src = shapes[in];
    Shape s;
    s.v = 2 * src.v - 2;
    s.lambda = star ? 2 : src.lambda;
    s.star = star;
    s.profile.K0 = {3, 4};
    s.profile.K1 = {3};
    s.profile.K2.clear();
    for (int k : src.profile.K2) s.profile.K2.insert(2 * k - 2);
    std::vector<PlanInput> inputs{{"base", forget(in)}};
    for (const auto& [k, id] : doubling_ingredients(src)) inputs.push_back({"lgdd2:" + std::to_string(k), id});
    return holed_node("double", {{"star", star ? 1 : 0}}, inputs, s);
  }

  int breakup(int in, int g, const std::map<int, int>& ing) {
    const Shape& src = shapes[in];
    std::vector<PlanInput> inputs{{"base", forget(in)}};
    for (const auto& [k, id] : ing) inputs.push_back({"k:" + std::to_string(k), id});
    return lgdd_node("breakup", {{"g", g}}, inputs, {src.lambda, g, src.v});
  }

  int expand(int in, int w, bool star) {
    const Shape& src = shapes[in];
    Shape s;
    s.v = w * (src.v - 2) + 2;
    s.lambda = src.lambda;
    s.star = star;
    s.good = !star;
    s.profile.K0 = {3};
    s.profile.K1 = {3};
    s.profile.K2.clear();
    for (int k : src.profile.K2) s.profile.K2.insert(w * (k - 2) + 2);
    return holed_node(star ? "expand_w_star" : "expand_w", {{"w", w}}, {{"base", in}}, s);
  }

  int clr(bool star) {
    const int lr = search(lr_task(9), "LR(9)");
    Shape s;
    s.v = 18;
    s.lambda = star ? 2 : 1;
    s.profile = {{3, 6}, {3}, {6}};
    s.star = star;
    s.good = true;
    return holed_node("clr", {{"star", star ? 1 : 0}}, {{"lr", lr}}, s);
  }

  // Every admissible (λ,g,u) routed through the gcd splits.
  int lgdd1(int g, int u) {
    if (u == 3) return cube(g);
    for (int d = g; d >= 1; --d) {
      if (g % d != 0) continue;
      const SearchTask t = lgdd_task(d, u, 1);
      if (desk_searchable(t)) return inflate(search(t, lgdd_label(1, d, u)), g / d);
    }
    throw Blocked{lgdd_label(1, g, u) + " (no desk-scale provider)"};
  }

  int lgdd_unit(int lambda0, int u) {
    switch (lambda0) {
      case 1: return lgdd1(1, u);
      case 2:
        if (u == 4) return complete(1, 4);
        if (u == 6) return as_large_set(forget(table("v6")));
        if (u == 10) return as_large_set(forget(table("v10")));
        return search(lgdd_task(1, u, 2), lgdd_label(2, 1, u));
      case 3:
        if (u == 5) return complete(1, 5);
        if ((u - 2) % 3 == 0 && ((u - 2) / 3 % 6 == 1 || (u - 2) / 3 % 6 == 3))
          return as_large_set(forget(w3u(( u - 2) / 3)));
        throw Blocked{lgdd_label(3, 1, u) + " (no desk-scale provider)"};
      case 6:
        if (u == 8) return complete(1, 8);
        throw Blocked{lgdd_label(6, 1, u) + " (no desk-scale provider)"};
    }
    throw std::logic_error("lgdd_unit: λ0 outside {1,2,3,6}");
  }

  // GLS(1,3;2,(3,{3},{3},{3}),3u'+2) for u' ≡ 1,3 (mod 6).
  int w3u(int up) {
    if (up == 1) return table("v5");
    int k = 0;
    while ((1 << k) < up + 1) ++k;
    if ((1 << k) != up + 1) throw Blocked{"S(3,4," + std::to_string(up + 1) + ") (no desk-scale provider)"};
    const int f = fan(k);
    std::vector<PlanInput> in{{"fan", f}, {"gls:3", table("v11")}};
    if (up > 3) in.push_back({"frame:4", search(frame_task(3, 4), "F(3,3,3^4)")});
    Shape s;
    s.v = 3 * up + 2;
    s.lambda = 3;
    s.profile = {{3}, {3}, {5}};
    s.star = true;
    s.good = true;
    const int p = holed_node("pcs", {{"m", 3}}, in, s);
    return fill(p, {}, {{5, table("v5")}}, true);
  }

  int ls50() {
    const int f = fill(clr(true), {{6, table("v6")}}, {}, true);
    return expand(f, 3, true);
  }

  int ls98() {
    const int c = clr(false);
    Shape s;
    s.v = 98;
    s.lambda = 2;
    s.profile = {{3, 4}, {3}, {26}};
    s.star = true;
    const int b = holed_node("build_ls98", {}, {{"gls", c}, {"lgdd63", cube(6)}, {"lgdd66", lgdd1(6, 6)}}, s,
                             to_string(Ls98Rule::same_infinity));
    return fill(b, {{4, as_holed(complete(1, 4))}}, {}, true);
  }

  // (3,2)-LGDD(3^u), u ≡ 2 (mod 6).
  int lgdd_3u(int u) {
    if (u == 8) return develop38();
    const int N = (u + 2) / 2;
    if (u % 12 == 8) throw Blocked{"GLS(2,(3,{3},{3},{5})," + std::to_string(N) + ") (no desk-scale provider)"};
    if (N != 8 && N != 14 && N != 26 && N != 50)
      throw Blocked{"GLS(2,(3,{3,4},{3},{8,14,26,50})," + std::to_string(N) + ") (no desk-scale provider)"};
    int h = doubled(trivial(N), true);
    std::map<int, int> star_k2;
    if (shapes[h].profile.K2.count(50)) star_k2[50] = ls50();
    if (shapes[h].profile.K2.count(98)) star_k2[98] = ls98();
    h = fill(h, {{4, as_holed(complete(1, 4))}}, star_k2, true);
    std::map<int, int> plain_k2;
    if (shapes[h].profile.K2.count(14)) plain_k2[14] = forget(expand(table("v6"), 3, false));
    if (shapes[h].profile.K2.count(26)) plain_k2[26] = forget(expand(table("v10"), 3, false));
    h = fill(h, {}, plain_k2, false);
    return breakup(h, 3, {{3, cube(3)}, {5, lgdd1(3, 5)}});
  }

  // (3,3)-LGDD(2^u), u ≡ 2 (mod 6).
  int lgdd_2u(int u) {
    int n = 0, v = u - 2;
    while (v % 2 == 0) v /= 2, ++n;
    int h;
    if (v % 18 == 3 || v % 18 == 9) {
      h = w3u(v / 3);
    } else {
      h = expand(table("v5"), v / 3, false);
    }
    for (int i = 0; i < n; ++i) h = doubled(h, false);
    const Shape& s = shapes[h];
    std::set<int> sizes = s.profile.K0;
    sizes.insert(s.profile.K1.begin(), s.profile.K1.end());
    sizes.insert(s.profile.K2.begin(), s.profile.K2.end());
    std::map<int, int> ing;
    for (int k : sizes) ing[k] = lgdd1(2, k);
    return breakup(h, 2, ing);
  }

  int lgdd(const DesignParams& p) {
    const int lam = p.lambda, g = p.g, u = p.u;
    const int a = std::gcd(lam, 6), b = std::gcd(g, 6);
    switch (a) {
      case 1:
        if (lam == 1) return lgdd1(g, u);
        if (g == 1 && u == 7) {
          const int s = search(simple_gdd_task(lam, 1, 7), "simple (3," + std::to_string(lam) + ")-GDD(1^7)");
          return lgdd_node("single_member", {}, {{"base", s}}, {lam, 1, 7});
        }
        return merge(lgdd1(g, u), lam);
      case 2: {
        const int l = lam / 2;
        if (b == 1) return merge(inflate(lgdd_unit(2, u), g), l);
        if (b == 2 || b == 6) return merge(lgdd1(g, u), 2 * l);
        if (u % 6 == 2) return merge(inflate(lgdd_3u(u), g / 3), l);
        return merge(inflate(lgdd_unit(2, u), g), l);
      }
      case 3: {
        const int l = lam / 3;
        if (b == 1) return merge(inflate(lgdd_unit(3, u), g), l);
        if (b == 2) {
          if (u % 6 == 2) return merge(inflate(lgdd_2u(u), g / 2), l);
          return merge(inflate(lgdd_unit(3, u), g), l);
        }
        return merge(lgdd1(g, u), 3 * l);
      }
      default: {
        const int l = lam / 6;
        if (b == 1) return merge(inflate(lgdd_unit(6, u), g), l);
        if (b == 2) return merge(lgdd({3, g, u}), 2 * l);
        if (b == 3) return merge(lgdd({2, g, u}), 3 * l);
        return merge(lgdd1(g, u), 6 * l);
      }
    }
  }

  int simple(const DesignParams& p) {
    const int lam = p.lambda, g = p.g, u = p.u;
    if (g == 1 && u == 7)
      return search(simple_gdd_task(lam, 1, 7), "simple (3," + std::to_string(lam) + ")-GDD(1^7)");
    const bool even = (g * (u - 1)) % 2 == 0;
    const bool six = (static_cast<long long>(g) * g * u * (u - 1)) % 6 == 0;
    int base = 1;
    switch (std::gcd(lam, 6)) {
      case 1: base = 1; break;
      case 2: base = even ? 1 : 2; break;
      case 3: base = six ? 1 : 3; break;
      default:
        if (even && six) base = 1;
        else if (even) base = 3;
        else if (six) base = 2;
        else base = 6;
    }
    return union_members(lgdd({base, g, u}), lam / base);
  }

 private:
  PlannerOptions opt_;
  std::map<std::string, int> index_;
};

// Keeps the nodes reachable from root, in creation order, so the root ends up last.
std::vector<PlanNode> prune(std::vector<PlanNode> nodes, int root) {
  std::vector<char> keep(nodes.size(), 0);
  keep[root] = 1;
  for (int i = root; i >= 0; --i)
    if (keep[i])
      for (const auto& in : nodes[i].inputs) keep[in.node] = 1;
  std::vector<int> remap(nodes.size(), -1);
  std::vector<PlanNode> out;
  for (int i = 0; i <= root; ++i) {
    if (!keep[i]) continue;
    remap[i] = static_cast<int>(out.size());
    out.push_back(std::move(nodes[i]));
    for (auto& in : out.back().inputs) in.node = remap[in.node];
  }
  return out;
}

template <class F>
ConstructionPlan make_plan(Family fam, const DesignParams& p, const Decision& d, const PlannerOptions& o, F&& body) {
  ConstructionPlan plan;
  plan.family = fam;
  plan.target = p;
  if (!d.ok) {
    plan.outcome = PlanOutcome::nonexistent;
    plan.violated = d.violated;
    return plan;
  }
  Planner pl(o);
  try {
    const int root = body(pl);
    plan.nodes = prune(std::move(pl.nodes), root);
  } catch (const Blocked& b) {
    plan.outcome = PlanOutcome::blocked;
    plan.blocked_leaf = b.leaf;
  }
  return plan;
}

}  // namespace

ConstructionPlan plan_lgdd(const DesignParams& p, const PlannerOptions& o) {
  return make_plan(Family::lgdd, p, admissible_lgdd(p), o, [&](Planner& pl) { return pl.lgdd(p); });
}

ConstructionPlan plan_simple_gdd(const DesignParams& p, const PlannerOptions& o) {
  return make_plan(Family::simple_gdd, p, admissible_simple_gdd(p), o, [&](Planner& pl) { return pl.simple(p); });
}

std::string ConstructionPlan::render() const {
  std::ostringstream os;
  const std::string fam = family == Family::lgdd ? "LGDD" : "simple GDD";
  os << fam << " " << to_string(target) << ": " << to_string(outcome) << "\n";
  if (outcome == PlanOutcome::nonexistent) {
    for (const auto& v : violated) os << "  violated: " << v << "\n";
    return os.str();
  }
  if (outcome == PlanOutcome::blocked) {
    os << "  missing: " << blocked_leaf << "\n";
    return os.str();
  }
  std::vector<char> shown(nodes.size(), 0);
  auto rec = [&](auto&& self, int id, int depth, const std::string& role) -> void {
    const PlanNode& n = nodes[id];
    os << std::string(static_cast<std::size_t>(2 + 2 * depth), ' ') << "#" << id << " ";
    if (!role.empty() && role != "base") os << role << " <- ";
    os << n.op;
    if (!n.name.empty() || !n.args.empty() || n.task) {
      os << "[";
      bool first = true;
      auto sep = [&] {
        if (!first) os << ",";
        first = false;
      };
      if (!n.name.empty()) sep(), os << n.name;
      for (const auto& [k, v] : n.args) sep(), os << k << "=" << v;
      if (n.task) sep(), os << fingerprint(*n.task);
      os << "]";
    }
    os << " -> " << n.label << " on " << n.points << " points";
    if (shown[id]) {
      os << " (see above)\n";
      return;
    }
    shown[id] = 1;
    os << "\n";
    for (const auto& in : n.inputs) self(self, in.node, depth + 1, in.role);
  };
  if (!nodes.empty()) rec(rec, static_cast<int>(nodes.size()) - 1, 0, "");
  return os.str();
}

namespace {

using ValuePtr = std::shared_ptr<const NodeValue>;

template <class T>
const T& as(const NodeValue& v, const char* what) {
  if (const T* p = std::get_if<T>(&v.design)) return *p;
  throw ConstructionError(std::string("input is not a ") + what);
}

HoledLargeSet holed_of(const NodeValue& v) {
  if (const auto* g = std::get_if<GoodLargeSet>(&v.design)) return g->base;
  return as<HoledLargeSet>(v, "holed large set");
}

GoodLargeSet good_of(const NodeValue& v) {
  if (const auto* g = std::get_if<GoodLargeSet>(&v.design)) return *g;
  GoodLargeSet g;
  g.base = as<HoledLargeSet>(v, "holed large set");
  return g;
}

std::map<int, const NodeValue*> sized(const std::map<std::string, const NodeValue*>& in, const std::string& prefix) {
  std::map<int, const NodeValue*> out;
  for (const auto& [role, v] : in)
    if (role.rfind(prefix, 0) == 0) out[std::stoi(role.substr(prefix.size()))] = v;
  return out;
}

NodeValue evaluate(const PlanNode& n, const std::map<std::string, const NodeValue*>& in, const ExecuteOptions& o,
                   std::string& note) {
  auto arg = [&](const char* k) { return n.args.at(k); };
  auto input = [&](const char* role) -> const NodeValue& {
    auto it = in.find(role);
    if (it == in.end()) throw ConstructionError(std::string("missing input ") + role);
    return *it->second;
  };
  NodeValue out;
  const std::string& op = n.op;
  if (op == "cube") {
    out.design = lgdd_cube(arg("g"));
  } else if (op == "complete") {
    out.design = complete_lgdd(arg("g"), arg("u"));
  } else if (op == "develop_cyclic") {
    out.design = develop_cyclic(lgdd_3_8_seed());
  } else if (op == "base_gls") {
    out.design = base_gls(n.name);
    out.star = base_gls_is_star(n.name);
  } else if (op == "trivial_gls") {
    out.design = trivial_gls(arg("v"));
    out.star = true;
  } else if (op == "sqs_fan") {
    out.design = boolean_sqs_fan(arg("k"));
  } else if (op == "search") {
    std::vector<std::string> warnings;
    SearchResult r = search_cached(*n.task, o.store, &warnings);
    for (const auto& w : warnings) note += (note.empty() ? "" : "; ") + w;
    if (r.status != SearchStatus::found || !r.object)
      throw ConstructionError("search " + fingerprint(*n.task) + " ended " +
                              (r.status == SearchStatus::timeout ? "by timeout" : "exhausted"));
    note += std::string(note.empty() ? "" : "; ") + (r.from_certificate ? "certificate" : "fresh search");
    std::visit([&](auto&& obj) { out.design = obj; }, *r.object);
    out.lambda = n.task->lambda;
  } else if (op == "single_member") {
    const auto& d = as<GroupedDesign>(input("base"), "GDD");
    const int lam = input("base").lambda;
    out.design = make_large_set({lam, 1, d.v}, {d.blocks});
  } else if (op == "inflate") {
    out.design = inflate(as<LargeSet>(input("base"), "large set"), arg("m"));
  } else if (op == "merge") {
    out.design = merge(as<LargeSet>(input("base"), "large set"), arg("t"));
  } else if (op == "union") {
    const auto& ls = as<LargeSet>(input("base"), "large set");
    out.design = union_members(ls, arg("t"));
    out.lambda = ls.params.lambda * arg("t");
  } else if (op == "forget") {
    out.design = holed_of(input("base"));
    out.star = input("base").star;
  } else if (op == "as_large_set") {
    out.design = as_large_set(holed_of(input("base")));
  } else if (op == "as_holed") {
    out.design = as_holed(as<LargeSet>(input("base"), "large set"));
    out.star = true;
  } else if (op == "fill") {
    FillerMap k0, k2;
    for (const auto& [k, v] : sized(in, "k0:")) k0[k] = good_of(*v);
    for (const auto& [k, v] : sized(in, "k2:")) k2[k] = good_of(*v);
    const NodeValue& base = input("base");
    if (std::holds_alternative<GoodLargeSet>(base.design)) out.design = fill(std::get<GoodLargeSet>(base.design), k0, k2);
    else out.design = fill(as<HoledLargeSet>(base, "holed large set"), k0, k2);
    out.star = arg("star") != 0;
  } else if (op == "double") {
    std::map<int, LargeSet> ing;
    for (const auto& [k, v] : sized(in, "lgdd2:")) ing[k] = as<LargeSet>(*v, "large set");
    out.design = double_ls(holed_of(input("base")), ing, arg("star") != 0);
    out.star = arg("star") != 0;
  } else if (op == "breakup") {
    std::map<int, LargeSet> ing;
    for (const auto& [k, v] : sized(in, "k:")) ing[k] = as<LargeSet>(*v, "large set");
    out.design = breakup(holed_of(input("base")), arg("g"), ing);
  } else if (op == "expand_w") {
    out.design = expand_w(good_of(input("base")), arg("w"));
  } else if (op == "expand_w_star") {
    out.design = expand_w_star(good_of(input("base")), arg("w"));
    out.star = true;
  } else if (op == "clr") {
    ClrResult c = clr(as<LRDesign>(input("lr"), "LR design"));
    out.star = arg("star") != 0;
    out.design = out.star ? c.gls_star : c.gls;
  } else if (op == "pcs") {
    std::map<int, GoodLargeSet> gls;
    std::map<int, Frame> frames;
    for (const auto& [k, v] : sized(in, "gls:")) gls[k] = good_of(*v);
    for (const auto& [k, v] : sized(in, "frame:")) frames[k] = as<Frame>(*v, "frame");
    out.design = pcs(as<FanDesign>(input("fan"), "fan design"), gls, frames, arg("m"));
    out.star = true;
  } else if (op == "build_ls98") {
    const Ls98Rule rule = n.name == to_string(Ls98Rule::first_infinity) ? Ls98Rule::first_infinity : Ls98Rule::same_infinity;
    out.design = build_ls98(good_of(input("gls")), as<LargeSet>(input("lgdd63"), "large set"),
                            as<LargeSet>(input("lgdd66"), "large set"), rule);
    out.star = true;
  } else {
    throw ConstructionError("unknown plan operation " + op);
  }
  return out;
}

VerificationReport check_value(const NodeValue& v, const VerifyOptions& o, std::string& check) {
  return std::visit(
      [&](auto&& d) -> VerificationReport {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, LargeSet>) {
          check = "verify_large_set";
          return verify_large_set(d, o);
        } else if constexpr (std::is_same_v<T, GroupedDesign>) {
          check = "verify_gdd+verify_simple";
          VerificationReport r = verify_gdd(d, v.lambda, o);
          r.absorb(verify_simple(d, o));
          return r;
        } else if constexpr (std::is_same_v<T, HoledLargeSet>) {
          check = v.star ? "verify_ls_star" : "verify_ls";
          return v.star ? verify_ls_star(d, o) : verify_ls(d, o);
        } else if constexpr (std::is_same_v<T, GoodLargeSet>) {
          check = v.star ? "verify_gls(star)" : "verify_gls";
          return verify_gls(d, v.star, o);
        } else {
          check = "verify_auxiliary";
          return verify_auxiliary(AuxObject(d), o);
        }
      },
      v.design);
}

}  // namespace

ExecutionResult execute(const ConstructionPlan& plan, const ExecuteOptions& o) {
  ExecutionResult res;
  if (plan.outcome != PlanOutcome::plan || plan.nodes.empty()) {
    res.failure = "plan is " + to_string(plan.outcome);
    return res;
  }
  std::vector<ValuePtr> values(plan.nodes.size());
  for (std::size_t i = 0; i < plan.nodes.size(); ++i) {
    const PlanNode& n = plan.nodes[i];
    TranscriptEntry e;
    e.node = static_cast<int>(i);
    e.label = n.label;
    const auto t0 = std::chrono::steady_clock::now();
    if (o.memo) {
      auto it = o.memo->find(n.key);
      if (it != o.memo->end()) {
        values[i] = it->second;
        e.check = "memo";
        e.passed = true;
        e.summary = "verified earlier in this process";
        res.transcript.push_back(e);
        continue;
      }
    }
    std::map<std::string, const NodeValue*> in;
    for (const auto& x : n.inputs) in[x.role] = values[x.node].get();
    std::string note;
    try {
      auto v = std::make_shared<NodeValue>(evaluate(n, in, o, note));
      VerificationReport rep = check_value(*v, o.verify, e.check);
      e.passed = rep.passed;
      e.summary = rep.passed ? "passed" : rep.summary();
      if (!note.empty()) e.summary += " (" + note + ")";
      values[i] = v;
    } catch (const std::exception& ex) {
      e.passed = false;
      e.check = "construction";
      e.summary = ex.what();
    }
    e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.transcript.push_back(e);
    if (!e.passed) {
      res.failed_node = static_cast<int>(i);
      res.failure = "node #" + std::to_string(i) + " (" + n.label + "): " + e.summary;
      return res;
    }
    if (o.memo) (*o.memo)[n.key] = values[i];
  }
  const NodeValue& root = *values.back();
  DesignDocument doc;
  doc.design = root.design;
  doc.params = plan.target;
  doc.star = root.star;
  doc.simple = plan.family == Family::simple_gdd;
  doc.provenance = "plan " + hex64(fnv1a64(plan.render()));
  doc.recorded_pass = true;
  doc.recorded_violations = 0;
  res.root = std::move(doc);
  res.ok = true;
  return res;
}

}  // namespace lsg
