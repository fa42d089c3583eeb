#include "lsg/constructions.hpp"

#include <algorithm>
#include <set>

#include "lsg/catalog.hpp"
#include "lsg/verifier.hpp"

namespace lsg {

namespace {

bool has_point(const Block& b, Point p) { return std::binary_search(b.begin(), b.end(), p); }

int inf_hits(const Block& b, Point i1, Point i2) { return has_point(b, i1) + has_point(b, i2); }

template <class F>
Block mapped(const Block& b, F&& f) {
  Block out;
  out.reserve(b.size());
  for (Point p : b) out.push_back(f(p));
  return normalize(std::move(out));
}

const LargeSet& ingredient(const std::map<int, LargeSet>& m, int k, const char* what) {
  auto it = m.find(k);
  if (it == m.end()) throw ConstructionError(std::string(what) + ": no ingredient for block size " + std::to_string(k));
  return it->second;
}

std::set<int> sizes_of(const HoleProfile& p) {
  std::set<int> s = p.K0;
  s.insert(p.K1.begin(), p.K1.end());
  s.insert(p.K2.begin(), p.K2.end());
  return s;
}

struct FillOut {
  HoledLargeSet h;
  std::vector<std::set<Arc>> arcs;
};

FillOut fill_impl(const HoledLargeSet& h, const FillerMap& k0, const FillerMap& k2, bool good) {
  const Point i1 = h.inf1(), i2 = h.inf2();
  FillOut out;
  out.h.v = h.v;
  out.h.lambda = h.lambda;
  out.h.members.resize(h.members.size());
  out.arcs.resize(h.members.size());

  HoleProfile prof;
  prof.K0.clear();
  prof.K1 = h.profile.K1;
  prof.K2.clear();
  for (int k : h.profile.K0) {
    auto it = k0.find(k);
    if (it == k0.end()) {
      prof.K0.insert(k);
    } else {
      auto s = sizes_of(it->second.base.profile);
      prof.K0.insert(s.begin(), s.end());
    }
  }
  for (int k : h.profile.K2) {
    auto it = k2.find(k);
    if (it == k2.end()) {
      prof.K2.insert(k);
    } else {
      const HoleProfile& f = it->second.base.profile;
      prof.K0.insert(f.K0.begin(), f.K0.end());
      prof.K1.insert(f.K1.begin(), f.K1.end());
      prof.K2.insert(f.K2.begin(), f.K2.end());
    }
  }
  out.h.profile = prof;

  std::map<Block, int> used;
  for (std::size_t r = 0; r < h.members.size(); ++r) {
    for (const auto& [b, c] : h.members[r]) {
      const int hits = inf_hits(b, i1, i2);
      const FillerMap* fm = hits == 0 ? &k0 : (hits == 2 ? &k2 : nullptr);
      const GoodLargeSet* f = nullptr;
      if (fm) {
        auto it = fm->find(static_cast<int>(b.size()));
        if (it != fm->end()) f = &it->second;
      }
      if (!f) {
        add_block(out.h.members[r], b, c);
        continue;
      }
      const HoledLargeSet& fb = f->base;
      if (fb.v != static_cast<int>(b.size()))
        throw ConstructionError("fill: filler on " + std::to_string(fb.v) + " points for block " + block_str(b));
      if (c % fb.lambda != 0)
        throw ConstructionError("fill: multiplicity " + std::to_string(c) + " of " + block_str(b) +
                                " not divisible by filler λ " + std::to_string(fb.lambda));
      Block s;
      for (Point p : b)
        if (p != i1 && p != i2) s.push_back(p);
      auto mp = [&](Point p) -> Point {
        if (hits == 0) return b[p];
        if (p < fb.v - 2) return s[p];
        return p == fb.v - 2 ? i1 : i2;
      };
      for (int rep = 0; rep < c / fb.lambda; ++rep) {
        const int j = used[b]++;
        if (j >= static_cast<int>(fb.members.size()))
          throw ConstructionError("fill: block " + block_str(b) + " occurs more often than the filler has members");
        for (const auto& [fbk, fc] : fb.members[j]) add_block(out.h.members[r], mapped(fbk, mp), fc);
        if (good && hits == 2) {
          if (f->digraphs.size() != fb.members.size())
            throw ConstructionError("fill: hole filler of size " + std::to_string(fb.v) + " has no digraphs");
          for (const auto& [x, y] : f->digraphs[j]) out.arcs[r].insert({mp(x), mp(y)});
        }
      }
    }
  }
  return out;
}

// Pairs each one-infinity triple of a member with an arc on the same pair.
struct Oriented {
  int l;  // 1 or 2
  Point x, y;
};

std::vector<Oriented> orient(const BlockMultiset& m, const ArcList& arcs, Point i1, Point i2) {
  std::map<std::pair<Point, Point>, std::vector<Arc>> by_pair;
  ArcList sorted = arcs;
  sort_arcs(sorted);
  for (const auto& a : sorted) by_pair[{std::min(a.first, a.second), std::max(a.first, a.second)}].push_back(a);
  std::map<std::pair<Point, Point>, std::size_t> next;
  std::vector<Oriented> out;
  for (const auto& [b, c] : m) {
    const int hits = inf_hits(b, i1, i2);
    if (hits != 1) continue;
    if (b.size() != 3) throw ConstructionError("orient: one-infinity block of size " + std::to_string(b.size()));
    const int l = has_point(b, i1) ? 1 : 2;
    const std::pair<Point, Point> key{b[0], b[1]};
    for (int rep = 0; rep < c; ++rep) {
      auto& lst = by_pair[key];
      std::size_t& k = next[key];
      if (k >= lst.size()) throw ConstructionError("orient: no arc left for " + block_str(b));
      out.push_back({l, lst[k].first, lst[k].second});
      ++k;
    }
  }
  return out;
}

struct ExpandOut {
  HoledLargeSet h;
  std::vector<ArcList> arcs;
};

ExpandOut expand_impl(const GoodLargeSet& g, int w, bool star) {
  if (w < 1 || w % 2 == 0) throw ConstructionError("expand: w must be odd and positive");
  const HoledLargeSet& h = g.base;
  if (g.digraphs.size() != h.members.size()) throw ConstructionError("expand: input has no digraphs");
  const int n = h.s_size();
  const Point i1 = h.inf1(), i2 = h.inf2();
  const Point n1 = w * n, n2 = w * n + 1;
  const Quasigroup q = quasigroup_icq(w);
  const LargeSet cube = lgdd_cube(w);
  auto pt = [w](Point x, int a) { return w * x + ((a % w) + w) % w; };

  ExpandOut out;
  out.h.v = w * n + 2;
  out.h.lambda = h.lambda;
  out.h.profile.K2.clear();
  for (int k : h.profile.K2) out.h.profile.K2.insert(w * (k - 2) + 2);
  out.h.profile.K0 = {3};
  out.h.profile.K1 = {3};
  const std::size_t R = h.members.size();
  out.h.members.resize(R * w);
  std::vector<std::set<Arc>> arcs(R * w);

  for (std::size_t r = 0; r < R; ++r) {
    for (const auto& [b, c] : h.members[r]) {
      const int hits = inf_hits(b, i1, i2);
      if (hits == 2) {
        Block nb{n1, n2};
        for (Point x : b)
          if (x < n)
            for (int a = 0; a < w; ++a) nb.push_back(pt(x, a));
        nb = normalize(std::move(nb));
        for (int i = 0; i < w; ++i) add_block(out.h.members[r * w + i], nb, c);
      } else if (hits == 0) {
        if (b.size() != 3) throw ConstructionError("expand: block " + block_str(b) + " avoiding ∞ is not a triple");
        for (int i = 0; i < w; ++i)
          for (const auto& [cb, cc] : cube.members[i])
            add_block(out.h.members[r * w + i], mapped(cb, [&](Point p) { return pt(b[p / w], p % w); }), cc * c);
      }
    }
    for (const auto& o : orient(h.members[r], g.digraphs[r], i1, i2)) {
      const Point inf = o.l == 1 ? n1 : n2;
      for (int i = 0; i < w; ++i) {
        BlockMultiset& m = out.h.members[r * w + i];
        for (int a = 0; a < w; ++a) {
          add_block(m, {inf, pt(o.x, a), pt(o.y, a + i)});
          arcs[r * w + i].insert({pt(o.x, a), pt(o.y, a + i)});
        }
        for (int a = 0; a < w; ++a)
          for (int bb = a + 1; bb < w; ++bb) add_block(m, {pt(o.x, a), pt(o.x, bb), pt(o.y, q.op(a, bb) + i)});
      }
    }
  }
  if (!star)
    for (auto& s : arcs) out.arcs.emplace_back(s.begin(), s.end());
  return out;
}

}  // namespace

HoledLargeSet fill(const HoledLargeSet& h, const FillerMap& k0, const FillerMap& k2) {
  return fill_impl(h, k0, k2, false).h;
}

GoodLargeSet fill(const GoodLargeSet& g, const FillerMap& k0, const FillerMap& k2) {
  if (g.digraphs.size() != g.base.members.size()) throw ConstructionError("fill: digraph count mismatch");
  FillOut f = fill_impl(g.base, k0, k2, true);
  GoodLargeSet out;
  out.base = std::move(f.h);
  out.digraphs.resize(g.digraphs.size());
  for (std::size_t r = 0; r < g.digraphs.size(); ++r) {
    std::set<Arc> all(g.digraphs[r].begin(), g.digraphs[r].end());
    all.insert(f.arcs[r].begin(), f.arcs[r].end());
    out.digraphs[r].assign(all.begin(), all.end());
  }
  return out;
}

HoledLargeSet double_ls(const HoledLargeSet& h, const std::map<int, LargeSet>& lgdd2, bool star) {
  if (star && h.lambda != 1) throw ConstructionError("double: the merged form needs λ = 1");
  const int n = h.s_size();
  const Point i1 = h.inf1(), i2 = h.inf2();
  auto fib = [&](Point p, int a) { return p == i2 ? 2 * n + a : 2 * p + a; };
  const std::size_t R = h.members.size();
  std::vector<BlockMultiset> members(R * 2);
  std::map<Block, int> used;
  for (std::size_t r = 0; r < R; ++r) {
    for (const auto& [b, c] : h.members[r]) {
      if (has_point(b, i1)) {
        Block nb;
        for (Point p : b)
          if (p != i1) {
            nb.push_back(fib(p, 0));
            nb.push_back(fib(p, 1));
          }
        nb = normalize(std::move(nb));
        for (int i = 0; i < 2; ++i) add_block(members[2 * r + i], nb, c);
        continue;
      }
      const LargeSet& L = ingredient(lgdd2, static_cast<int>(b.size()), "double");
      if (L.params.g != 2 || L.params.lambda != 1)
        throw ConstructionError("double: ingredient for size " + std::to_string(b.size()) + " is not a (3,1)-LGDD(2^k)");
      for (int rep = 0; rep < c; ++rep)
        for (int i = 0; i < 2; ++i) {
          const int j = used[b]++;
          if (j >= static_cast<int>(L.members.size()))
            throw ConstructionError("double: block " + block_str(b) + " exhausts its ingredient");
          for (const auto& [lb, lc] : L.members[j])
            add_block(members[2 * r + i], mapped(lb, [&](Point p) { return fib(b[p / 2], p % 2); }), lc);
        }
    }
  }
  HoledLargeSet out;
  out.v = 2 * n + 2;
  out.profile.K0 = {3, 4};
  out.profile.K1 = {3};
  out.profile.K2.clear();
  for (int k : h.profile.K2) out.profile.K2.insert(2 * k - 2);
  if (star) {
    out.lambda = 2;
    for (std::size_t r = 0; r < R; ++r) out.members.push_back(merge_multisets(members[2 * r], members[2 * r + 1]));
  } else {
    out.lambda = h.lambda;
    out.members = std::move(members);
  }
  return out;
}

LargeSet breakup(const HoledLargeSet& h, int g, const std::map<int, LargeSet>& ingredients) {
  if (g < 1) throw ConstructionError("breakup: g must be positive");
  const std::size_t R = h.members.size();
  std::vector<BlockMultiset> members(R * g);
  std::map<Block, int> used;
  for (std::size_t r = 0; r < R; ++r)
    for (const auto& [b, c] : h.members[r]) {
      const LargeSet& L = ingredient(ingredients, static_cast<int>(b.size()), "breakup");
      const int lp = L.params.lambda;
      if (L.params.g != g || L.params.u != static_cast<int>(b.size()))
        throw ConstructionError("breakup: ingredient shape mismatch for size " + std::to_string(b.size()));
      if (c % lp != 0)
        throw ConstructionError("breakup: multiplicity " + std::to_string(c) + " of " + block_str(b) +
                                " not divisible by λ' = " + std::to_string(lp));
      for (int rep = 0; rep < c / lp; ++rep)
        for (int i = 0; i < g; ++i) {
          const int j = used[b]++;
          if (j >= static_cast<int>(L.members.size()))
            throw ConstructionError("breakup: block " + block_str(b) + " exhausts its ingredient");
          for (const auto& [lb, lc] : L.members[j])
            add_block(members[r * g + i], mapped(lb, [&](Point p) { return g * b[p / g] + p % g; }), lc);
        }
    }
  return make_large_set({h.lambda, g, h.v}, std::move(members));
}

GoodLargeSet expand_w(const GoodLargeSet& g, int w) {
  ExpandOut e = expand_impl(g, w, false);
  return {std::move(e.h), std::move(e.arcs)};
}

HoledLargeSet expand_w_star(const GoodLargeSet& g, int w) {
  for (int k : g.base.profile.K2)
    if (k < 4) throw ConstructionError("expand_w_star: hole block size " + std::to_string(k) + " < 4");
  return expand_impl(g, w, true).h;
}

ClrResult clr(const LRDesign& lr) {
  VerificationReport rep = verify_lr(lr);
  if (!rep.passed) throw ConstructionError("clr: LR design fails verification: " + rep.summary());
  const int v = (lr.v - 1) / 2;
  const Point inf = lr.v - 1;
  const Point I1 = 4 * v, I2 = 4 * v + 1;
  auto pt = [&](Point x, int a) { return x == inf ? (a == 0 ? I1 : I2) : 2 * x + a; };
  const LargeSet c2 = lgdd_cube(2);

  auto build = [&](int i, int j, int k, BlockMultiset& m, std::set<Arc>& d) {
    const Resolution& res = lr.members[k][j];
    for (std::size_t h = 0; h < res.classes.size(); ++h)
      for (const Block& raw : res.classes[h]) {
        const Block B = normalize(raw);
        if (h == 0) {
          Block nb;
          for (Point x : B)
            for (int a = 0; a < 2; ++a) nb.push_back(pt(x, a));
          add_block(m, std::move(nb));
        } else if (!has_point(B, inf)) {
          for (const auto& [cb, cc] : c2.members[i])
            add_block(m, mapped(cb, [&](Point p) { return pt(B[p / 2], p % 2); }), cc);
        } else {
          Point x = -1, y = -1;
          for (Point p : B)
            if (p != inf) (x < 0 ? x : y) = p;
          std::vector<std::array<Point, 3>> bl;
          if (i == 0)
            bl = {{I1, pt(x, 0), pt(y, 0)}, {I1, pt(x, 1), pt(y, 1)}, {I2, pt(y, 1), pt(x, 0)}, {I2, pt(y, 0), pt(x, 1)}};
          else
            bl = {{I1, pt(x, 0), pt(y, 1)}, {I1, pt(x, 1), pt(y, 0)}, {I2, pt(y, 0), pt(x, 0)}, {I2, pt(y, 1), pt(x, 1)}};
          for (const auto& t : bl) {
            add_block(m, {t[0], t[1], t[2]});
            d.insert({t[1], t[2]});
          }
        }
      }
  };

  ClrResult out;
  for (auto* g : {&out.gls, &out.gls_star}) {
    g->base.v = 4 * v + 2;
    g->base.profile = {{3, 6}, {3}, {6}};
  }
  out.gls.base.lambda = 1;
  out.gls_star.base.lambda = 2;
  std::map<std::array<int, 3>, std::pair<BlockMultiset, std::set<Arc>>> parts;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < v; ++k) {
        auto& [m, d] = parts[{i, j, k}];
        build(i, j, k, m, d);
        out.gls.base.members.push_back(m);
        out.gls.digraphs.emplace_back(d.begin(), d.end());
      }
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < v; ++k) {
      const auto& [m0, d0] = parts[{0, j, k}];
      const auto& [m1, d1] = parts[{1, j, k}];
      out.gls_star.base.members.push_back(merge_multisets(m0, m1));
      std::set<Arc> d = d0;
      d.insert(d1.begin(), d1.end());
      out.gls_star.digraphs.emplace_back(d.begin(), d.end());
    }
  return out;
}

GoodLargeSet pcs(const FanDesign& fan, const std::map<int, GoodLargeSet>& gls, const std::map<int, Frame>& frames,
                 int m) {
  if (m < 1) throw ConstructionError("pcs: m must be positive");
  const int u = fan.v;
  const Point I1 = m * u, I2 = m * u + 1;
  auto pt = [m](Point x, int a) { return m * x + a; };
  GoodLargeSet out;
  out.base.v = m * u + 2;
  out.base.lambda = m;
  out.base.profile = {{3}, {3}, {m + 2}};
  out.base.members.resize(static_cast<std::size_t>(u));
  std::vector<std::set<Arc>> arcs(static_cast<std::size_t>(u));

  for (int x = 0; x < u; ++x) {
    Block hole{I1, I2};
    for (int a = 0; a < m; ++a) hole.push_back(pt(x, a));
    add_block(out.base.members[x], normalize(std::move(hole)), m);
  }

  for (const Block& raw : fan.a1) {
    const Block B = normalize(raw);
    auto it = gls.find(static_cast<int>(B.size()));
    if (it == gls.end()) throw ConstructionError("pcs: no GLS* ingredient for size " + std::to_string(B.size()));
    const GoodLargeSet& ing = it->second;
    const HoledLargeSet& h = ing.base;
    if (h.v != m * static_cast<int>(B.size()) + 2 || h.members.size() != B.size() || h.lambda != m ||
        ing.digraphs.size() != h.members.size())
      throw ConstructionError("pcs: ingredient shape mismatch for size " + std::to_string(B.size()));
    for (int k : h.profile.K0) out.base.profile.K0.insert(k);
    const Point j1 = h.inf1(), j2 = h.inf2();
    std::map<Point, Point> mp{{j1, I1}, {j2, I2}};
    for (std::size_t r = 0; r < h.members.size(); ++r) {
      std::vector<Block> holes;
      for (const auto& [b, c] : h.members[r])
        if (inf_hits(b, j1, j2) == 2) {
          if (c != m) throw ConstructionError("pcs: hole block multiplicity differs from m");
          holes.push_back(b);
        }
      if (holes.size() != 1 || static_cast<int>(holes[0].size()) != m + 2)
        throw ConstructionError("pcs: ingredient member " + std::to_string(r) + " lacks a unique hole block of size m+2");
      int a = 0;
      for (Point p : holes[0])
        if (p != j1 && p != j2) mp[p] = pt(B[r], a++);
    }
    if (static_cast<int>(mp.size()) != h.v) throw ConstructionError("pcs: ingredient hole blocks do not partition S");
    for (std::size_t r = 0; r < h.members.size(); ++r) {
      const Point x = B[r];
      for (const auto& [b, c] : h.members[r]) {
        if (inf_hits(b, j1, j2) == 2) continue;
        add_block(out.base.members[x], mapped(b, [&](Point p) { return mp.at(p); }), c);
      }
      for (const auto& [a, b] : ing.digraphs[r]) arcs[x].insert({mp.at(a), mp.at(b)});
    }
  }

  for (const Block& raw : fan.t) {
    const Block B = normalize(raw);
    auto it = frames.find(static_cast<int>(B.size()));
    if (it == frames.end()) throw ConstructionError("pcs: no frame for size " + std::to_string(B.size()));
    const Frame& fr = it->second;
    if (fr.g != m || fr.u != static_cast<int>(B.size()))
      throw ConstructionError("pcs: frame shape mismatch for size " + std::to_string(B.size()));
    for (std::size_t p = 0; p < fr.classes.size(); ++p) {
      const Point x = B[p / m];
      for (const Block& fb : fr.classes[p])
        add_block(out.base.members[x], mapped(fb, [&](Point q) { return pt(B[q / m], q % m); }));
    }
  }
  for (auto& s : arcs) out.digraphs.emplace_back(s.begin(), s.end());
  return out;
}

LargeSet inflate(const LargeSet& ls, int m) {
  if (m < 1) throw ConstructionError("inflate: m must be positive");
  const LargeSet cube = lgdd_cube(m);
  std::vector<BlockMultiset> members;
  for (const auto& mem : ls.members)
    for (int i = 0; i < m; ++i) {
      BlockMultiset out;
      for (const auto& [b, c] : mem) {
        if (b.size() != 3) throw ConstructionError("inflate: block of size " + std::to_string(b.size()));
        for (const auto& [cb, cc] : cube.members[i])
          add_block(out, mapped(cb, [&](Point p) { return b[p / m] * m + p % m; }), c * cc);
      }
      members.push_back(std::move(out));
    }
  return make_large_set({ls.params.lambda, ls.params.g * m, ls.params.u}, std::move(members));
}

LargeSet merge(const LargeSet& ls, int t) {
  if (t < 1 || ls.members.size() % static_cast<std::size_t>(t) != 0)
    throw ConstructionError("merge: t = " + std::to_string(t) + " does not divide the member count " +
                            std::to_string(ls.members.size()));
  std::vector<BlockMultiset> members;
  for (std::size_t r = 0; r < ls.members.size(); r += t) {
    BlockMultiset u;
    for (int s = 0; s < t; ++s) u = merge_multisets(u, ls.members[r + s]);
    members.push_back(std::move(u));
  }
  return make_large_set({ls.params.lambda * t, ls.params.g, ls.params.u}, std::move(members));
}

GroupedDesign union_members(const LargeSet& ls, int t) {
  if (t < 1 || t > static_cast<int>(ls.members.size()))
    throw ConstructionError("union_members: t = " + std::to_string(t) + " outside 1.." +
                            std::to_string(ls.members.size()));
  GroupedDesign d{ls.v(), ls.groups, {}};
  for (int s = 0; s < t; ++s) d.blocks = merge_multisets(d.blocks, ls.members[s]);
  return d;
}

LargeSet as_large_set(const HoledLargeSet& h) {
  for (const auto& m : h.members)
    for (const auto& [b, c] : m)
      if (b.size() != 3) throw ConstructionError("as_large_set: block " + block_str(b) + " is not a triple");
  return make_large_set({h.lambda, 1, h.v}, h.members);
}

HoledLargeSet as_holed(const LargeSet& ls) {
  if (ls.params.g != 1) throw ConstructionError("as_holed: groups must be singletons");
  HoledLargeSet h;
  h.v = ls.params.u;
  h.lambda = ls.params.lambda;
  h.members = ls.members;
  return h;
}

std::string to_string(Ls98Rule r) { return r == Ls98Rule::same_infinity ? "same-infinity" : "first-infinity"; }

HoledLargeSet build_ls98(const GoodLargeSet& gls18, const LargeSet& lgdd63, const LargeSet& lgdd66, Ls98Rule rule) {
  const HoledLargeSet& h = gls18.base;
  if (h.v != 18 || h.lambda != 1 || gls18.digraphs.size() != h.members.size())
    throw ConstructionError("build_ls98: needs a GLS(2,(3,{3,6},{3},{6}),18)");
  const std::map<int, LargeSet> ing{{3, lgdd63}, {6, lgdd66}};
  for (const auto& [k, L] : ing)
    if (L.params.g != 6 || L.params.u != k || L.params.lambda != 1)
      throw ConstructionError("build_ls98: ingredient for size " + std::to_string(k) + " is not a (3,1)-LGDD(6^k)");
  const auto tables = ls98_tables();
  const int n = h.s_size();
  const Point i1 = h.inf1(), i2 = h.inf2();
  const Point I1 = 6 * n, I2 = 6 * n + 1;
  auto pt = [](Point x, int a) { return 6 * x + ((a % 6) + 6) % 6; };

  HoledLargeSet out;
  out.v = 6 * n + 2;
  out.lambda = 2;
  out.profile = {{3, 4}, {3}, {26}};
  const std::size_t R = h.members.size();
  out.members.resize(R * 3);
  std::map<Block, int> used;
  for (std::size_t r = 0; r < R; ++r) {
    for (const auto& [b, c] : h.members[r]) {
      const int hits = inf_hits(b, i1, i2);
      if (hits == 2) {
        Block nb{I1, I2};
        for (Point x : b)
          if (x < n)
            for (int a = 0; a < 6; ++a) nb.push_back(pt(x, a));
        nb = normalize(std::move(nb));
        for (int i = 0; i < 6; ++i) add_block(out.members[r * 3 + i % 3], nb, c);
      } else if (hits == 0) {
        const LargeSet& L = ingredient(ing, static_cast<int>(b.size()), "build_ls98");
        for (int rep = 0; rep < c; ++rep)
          for (int i = 0; i < 6; ++i) {
            const int j = used[b]++;
            if (j >= static_cast<int>(L.members.size()))
              throw ConstructionError("build_ls98: block " + block_str(b) + " exhausts its ingredient");
            for (const auto& [lb, lc] : L.members[j])
              add_block(out.members[r * 3 + i % 3], mapped(lb, [&](Point p) { return pt(b[p / 6], p % 6); }), lc);
          }
      }
    }
    for (const auto& o : orient(h.members[r], gls18.digraphs[r], i1, i2)) {
      for (int i = 0; i < 3; ++i) {
        BlockMultiset& m = out.members[r * 3 + i];
        for (const auto& row : tables[i]) {
          add_block(m, {pt(o.x, row[0]), pt(o.y, row[1]), pt(o.y, row[2])});
          add_block(m, {pt(o.x, row[0]), pt(o.y, row[1]), pt(o.y, row[2] + 3)});
        }
        for (int a = 0; a < 6; ++a) {
          if (o.l == 1) {
            add_block(m, {pt(o.x, a), pt(o.x, a + 3), pt(o.y, a + i), pt(o.y, a + i + 3)});
          } else {
            for (Point inf : {I1, I2}) {
              add_block(m, {inf, pt(o.x, a), pt(o.y, a + i)});
              add_block(m, {rule == Ls98Rule::same_infinity ? inf : I1, pt(o.x, a), pt(o.y, a + i + 3)});
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace lsg
