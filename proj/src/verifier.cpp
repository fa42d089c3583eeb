#include "lsg/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace lsg {

void VerificationReport::fail(std::string law, std::string witness) {
  passed = false;
  ++total;
  if (violations.size() < cap) violations.push_back({std::move(law), std::move(witness)});
}

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix) {
  if (other.passed) return;
  passed = false;
  total += other.total;
  for (const auto& v : other.violations)
    if (violations.size() < cap) violations.push_back({prefix + v.law, v.witness});
}

bool VerificationReport::has_law(const std::string& law) const {
  for (const auto& v : violations)
    if (v.law.find(law) != std::string::npos) return true;
  return false;
}

std::string VerificationReport::summary() const {
  if (passed) return "pass";
  std::ostringstream os;
  os << "fail (" << total << " violations)";
  for (const auto& v : violations) os << "\n  " << v.law << ": " << v.witness;
  return os.str();
}

std::string block_str(const Block& b) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  os << "}";
  return os.str();
}

namespace {

std::string pair_str(int x, int y) { return "{" + std::to_string(x) + "," + std::to_string(y) + "}"; }
std::string arc_str(int x, int y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

class PairCount {
 public:
  explicit PairCount(int v) : v_(v), c_(static_cast<std::size_t>(v) * v, 0) {}
  int& at(int a, int b) { return c_[static_cast<std::size_t>(std::min(a, b)) * v_ + std::max(a, b)]; }

 private:
  int v_;
  std::vector<int> c_;
};

class TripleCount {
 public:
  explicit TripleCount(int v) : v_(v), c_(static_cast<std::size_t>(v) * v * v, 0) {}
  // Requires a < b < c.
  int& at(int a, int b, int c) { return c_[(static_cast<std::size_t>(a) * v_ + b) * v_ + c]; }

 private:
  int v_;
  std::vector<int> c_;
};

template <class F>
void for_pairs(const Block& b, F&& f) {
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) f(b[i], b[j]);
}

template <class F>
void for_triples(const Block& b, F&& f) {
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      for (std::size_t k = j + 1; k < b.size(); ++k) f(b[i], b[j], b[k]);
}

template <class F>
std::vector<VerificationReport> per_member(std::size_t n, int threads, F&& fn) {
  std::vector<VerificationReport> out(n);
  const std::size_t t = std::max(1, threads);
  if (t == 1 || n < 2) {
    for (std::size_t r = 0; r < n; ++r) out[r] = fn(r);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(t, n); ++w)
    pool.emplace_back([&, w] {
      for (std::size_t r = w; r < n; r += t) out[r] = fn(r);
    });
  for (auto& th : pool) th.join();
  return out;
}

bool well_formed_block(const Block& b, int v, VerificationReport& rep) {
  bool ok = !b.empty() && std::is_sorted(b.begin(), b.end()) &&
            std::adjacent_find(b.begin(), b.end()) == b.end() && b.front() >= 0 && b.back() < v;
  if (!ok) rep.fail("structure", "malformed block " + block_str(b));
  return ok;
}

// group index per point, or empty on a bad partition
std::vector<int> group_index(int v, const Groups& groups, VerificationReport& rep) {
  std::vector<int> gi(static_cast<std::size_t>(std::max(v, 0)), -1);
  bool ok = true;
  for (std::size_t j = 0; j < groups.size(); ++j)
    for (Point p : groups[j]) {
      if (p < 0 || p >= v || gi[p] != -1) {
        rep.fail("group partition", "point " + std::to_string(p) + " out of range or repeated");
        ok = false;
        continue;
      }
      gi[p] = static_cast<int>(j);
    }
  for (int p = 0; p < v; ++p)
    if (gi[p] == -1) {
      rep.fail("group partition", "point " + std::to_string(p) + " in no group");
      ok = false;
    }
  if (!ok) gi.clear();
  return gi;
}

}  // namespace

VerificationReport verify_gdd(const GroupedDesign& d, int lambda, const VerifyOptions& o) {
  VerificationReport rep;
  rep.cap = o.cap;
  auto gi = group_index(d.v, d.groups, rep);
  if (gi.empty()) return rep;
  PairCount pc(d.v);
  for (const auto& [b, c] : d.blocks) {
    if (!well_formed_block(b, d.v, rep)) continue;
    if (c <= 0) rep.fail("structure", "non-positive multiplicity on " + block_str(b));
    if (b.size() != 3) rep.fail("block size", block_str(b));
    bool transverse = true;
    for_pairs(b, [&](int x, int y) { transverse = transverse && gi[x] != gi[y]; });
    if (!transverse) rep.fail("group meets block twice", block_str(b));
    for_pairs(b, [&](int x, int y) { pc.at(x, y) += c; });
  }
  for (int x = 0; x < d.v; ++x)
    for (int y = x + 1; y < d.v; ++y) {
      const int c = pc.at(x, y);
      if (gi[x] != gi[y] && c != lambda)
        rep.fail("pair coverage", pair_str(x, y) + " covered " + std::to_string(c) + " times");
    }
  return rep;
}

VerificationReport verify_simple(const BlockMultiset& blocks, const VerifyOptions& o) {
  VerificationReport rep;
  rep.cap = o.cap;
  for (const auto& [b, c] : blocks)
    if (c != 1) rep.fail("simple", block_str(b) + " has multiplicity " + std::to_string(c));
  return rep;
}

VerificationReport verify_simple(const GroupedDesign& d, const VerifyOptions& o) {
  return verify_simple(d.blocks, o);
}

VerificationReport verify_large_set(const LargeSet& ls, const VerifyOptions& o) {
  VerificationReport rep;
  rep.cap = o.cap;
  const DesignParams& p = ls.params;
  const int v = ls.v();
  auto gi = group_index(v, ls.groups, rep);
  if (gi.empty()) return rep;
  if (ls.groups.size() != static_cast<std::size_t>(p.u))
    rep.fail("frame", "expected " + std::to_string(p.u) + " groups");
  for (const auto& grp : ls.groups)
    if (grp.size() != static_cast<std::size_t>(p.g)) rep.fail("frame", "group of wrong size");
  const long long need = p.lambda > 0 ? static_cast<long long>(p.g) * (p.u - 2) : -1;
  if (p.lambda <= 0 || need % p.lambda != 0 ||
      static_cast<long long>(ls.members.size()) != need / p.lambda)
    rep.fail("member count", std::to_string(ls.members.size()) + " members for " + to_string(p));

  auto subs = per_member(ls.members.size(), o.threads, [&](std::size_t r) {
    VerificationReport m = verify_gdd(ls.member(r), p.lambda, o);
    m.absorb(verify_simple(ls.members[r], o));
    return m;
  });
  for (std::size_t r = 0; r < subs.size(); ++r) rep.absorb(subs[r], "member " + std::to_string(r) + ": ");

  std::map<Block, std::size_t> owner;
  TripleCount tc(v);
  for (std::size_t r = 0; r < ls.members.size(); ++r)
    for (const auto& [b, c] : ls.members[r]) {
      if (b.size() != 3 || b.front() < 0 || b.back() >= v) continue;
      auto [it, fresh] = owner.emplace(b, r);
      if (!fresh)
        rep.fail("disjoint members", block_str(b) + " in members " + std::to_string(it->second) + " and " +
                                         std::to_string(r));
      tc.at(b[0], b[1], b[2]) += 1;
    }
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y) {
      if (gi[x] == gi[y]) continue;
      for (int z = y + 1; z < v; ++z) {
        if (gi[z] == gi[x] || gi[z] == gi[y]) continue;
        const int c = tc.at(x, y, z);
        if (c != 1)
          rep.fail("exact triple cover", block_str({x, y, z}) + " covered " + std::to_string(c) + " times");
      }
    }
  return rep;
}

VerificationReport verify_ls(const HoledLargeSet& h, const VerifyOptions& o) {
  VerificationReport rep;
  rep.cap = o.cap;
  const int v = h.v;
  if (v < 3 || h.lambda < 1) {
    rep.fail("structure", "v=" + std::to_string(v) + " λ=" + std::to_string(h.lambda));
    return rep;
  }
  if ((v - 2) % h.lambda != 0 || static_cast<int>(h.members.size()) != (v - 2) / h.lambda)
    rep.fail("member count", std::to_string(h.members.size()) + " members, expected (v−2)/λ");

  auto subs = per_member(h.members.size(), o.threads, [&](std::size_t r) {
    VerificationReport m;
    m.cap = o.cap;
    PairCount pc(v);
    for (const auto& [b, c] : h.members[r]) {
      if (!well_formed_block(b, v, m)) continue;
      if (c <= 0) m.fail("structure", "non-positive multiplicity on " + block_str(b));
      if (b.size() < 3) m.fail("structure", "block smaller than 3: " + block_str(b));
      int hits = 0;
      for (Point x : b) hits += (x == h.inf1() || x == h.inf2());
      const std::set<int>& k = hits == 0 ? h.profile.K0 : (hits == 1 ? h.profile.K1 : h.profile.K2);
      if (!k.count(static_cast<int>(b.size())))
        m.fail("hole profile", block_str(b) + " meets the distinguished points " + std::to_string(hits) +
                                   " times");
      for_pairs(b, [&](int x, int y) { pc.at(x, y) += c; });
    }
    for (int x = 0; x < v; ++x)
      for (int y = x + 1; y < v; ++y)
        if (pc.at(x, y) != h.lambda)
          m.fail("pair coverage", pair_str(x, y) + " covered " + std::to_string(pc.at(x, y)) + " times");
    return m;
  });
  for (std::size_t r = 0; r < subs.size(); ++r) rep.absorb(subs[r], "member " + std::to_string(r) + ": ");

  std::map<Block, int> occurrences;
  for (const auto& m : h.members)
    for (const auto& [b, c] : m) occurrences[b] += c;
  TripleCount tc(v);
  for (const auto& [b, c] : occurrences) {
    if (b.size() < 3 || b.front() < 0 || b.back() >= v) continue;
    if (c != static_cast<int>(b.size()) - 2)
      rep.fail("block multiplicity", block_str(b) + " appears " + std::to_string(c) + " times, expected " +
                                         std::to_string(b.size() - 2));
    for_triples(b, [&](int x, int y, int z) { tc.at(x, y, z) += 1; });
  }
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y)
      for (int z = y + 1; z < v; ++z) {
        const int c = tc.at(x, y, z);
        if (c != 1)
          rep.fail("triple cover", block_str({x, y, z}) + " in " + std::to_string(c) + " distinct blocks");
      }
  return rep;
}

VerificationReport verify_ls_star(const HoledLargeSet& h, const VerifyOptions& o) {
  VerificationReport rep = verify_ls(h, o);
  for (std::size_t r = 0; r < h.members.size(); ++r)
    for (const auto& [b, c] : h.members[r])
      if (b.size() >= 4 && c != h.lambda)
        rep.fail("star multiplicity", "member " + std::to_string(r) + ": " + block_str(b) + " occurs " +
                                          std::to_string(c) + " times");
  return rep;
}

VerificationReport verify_gls(const GoodLargeSet& g, bool star, const VerifyOptions& o) {
  const HoledLargeSet& h = g.base;
  VerificationReport rep = star ? verify_ls_star(h, o) : verify_ls(h, o);
  if (g.digraphs.size() != h.members.size()) {
    rep.fail("digraph count", std::to_string(g.digraphs.size()) + " digraphs for " +
                                  std::to_string(h.members.size()) + " members");
    return rep;
  }
  const int n = h.s_size();
  if (n <= 0) return rep;
  const Point i1 = h.inf1(), i2 = h.inf2();
  std::vector<int> ordered(static_cast<std::size_t>(n) * n, 0);
  std::vector<char> hole(static_cast<std::size_t>(n) * n, 0);

  for (std::size_t r = 0; r < h.members.size(); ++r) {
    const std::string tag = "member " + std::to_string(r) + ": ";
    std::vector<int> out(n, 0), in(n, 0), t(n, 0);
    std::set<std::pair<int, int>> edges;
    for (const auto& [b, c] : h.members[r]) {
      const bool has1 = std::binary_search(b.begin(), b.end(), i1);
      const bool has2 = std::binary_search(b.begin(), b.end(), i2);
      if (has1 && has2) {
        for (Point x : b)
          if (x < n) t[x] += c;
        for (Point x : b)
          for (Point y : b)
            if (x < n && y < n) hole[static_cast<std::size_t>(x) * n + y] = 1;
      } else if ((has1 || has2) && b.size() == 3) {
        edges.insert({b[0], b[1]});
      }
    }
    std::set<Arc> seen;
    std::set<std::pair<int, int>> underlying;
    for (const auto& [x, y] : g.digraphs[r]) {
      if (x < 0 || y < 0 || x >= n || y >= n || x == y) {
        rep.fail("arc range", tag + arc_str(x, y));
        continue;
      }
      if (!seen.insert({x, y}).second) rep.fail("arc multiplicity", tag + arc_str(x, y));
      ++out[x];
      ++in[y];
      underlying.insert({std::min(x, y), std::max(x, y)});
      ordered[static_cast<std::size_t>(x) * n + y] += 1;
    }
    for (int x = 0; x < n; ++x) {
      if (in[x] != out[x])
        rep.fail("eulerian", tag + "vertex " + std::to_string(x) + " in " + std::to_string(in[x]) + " out " +
                                 std::to_string(out[x]));
      if (out[x] != h.lambda - t[x])
        rep.fail("degree identity", tag + "vertex " + std::to_string(x) + " d+ " + std::to_string(out[x]) +
                                        " vs λ−t " + std::to_string(h.lambda - t[x]));
    }
    for (const auto& e : edges)
      if (!underlying.count(e)) rep.fail("edge law", tag + "missing edge " + pair_str(e.first, e.second));
    for (const auto& e : underlying)
      if (!edges.count(e)) rep.fail("edge law", tag + "extra edge " + pair_str(e.first, e.second));
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const std::size_t k = static_cast<std::size_t>(x) * n + y;
      const int want = hole[k] ? 0 : 1;
      if (ordered[k] != want)
        rep.fail("ordered pair cover", arc_str(x, y) + " in " + std::to_string(ordered[k]) + " digraphs");
    }
  return rep;
}

VerificationReport verify_resolution(const Resolution& r, const VerifyOptions& o) {
  VerificationReport rep;
  rep.cap = o.cap;
  for (std::size_t c = 0; c < r.classes.size(); ++c) {
    std::vector<int> hit(static_cast<std::size_t>(std::max(r.v, 0)), 0);
    for (const auto& b : r.classes[c]) {
      if (!well_formed_block(b, r.v, rep)) continue;
      for (Point x : b) ++hit[x];
    }
    for (int x = 0; x < r.v; ++x)
      if (hit[x] != 1)
        rep.fail("parallel class", "class " + std::to_string(c) + " covers point " + std::to_string(x) + " " +
                                       std::to_string(hit[x]) + " times");
  }
  return rep;
}

namespace {

void check_sts(const std::vector<Block>& blocks, int v, const std::string& tag, VerificationReport& rep) {
  PairCount pc(v);
  for (const auto& b : blocks) {
    if (!well_formed_block(b, v, rep)) continue;
    if (b.size() != 3) rep.fail("block size", tag + block_str(b));
    for_pairs(b, [&](int x, int y) { pc.at(x, y) += 1; });
  }
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y)
      if (pc.at(x, y) != 1)
        rep.fail("steiner pair", tag + pair_str(x, y) + " covered " + std::to_string(pc.at(x, y)) + " times");
}

}  // namespace

VerificationReport verify_lr(const LRDesign& lr, const VerifyOptions& o) {
  VerificationReport rep;
  rep.cap = o.cap;
  const int v = lr.v;
  if (v < 3 || v % 2 == 0 || static_cast<int>(lr.members.size()) != (v - 1) / 2) {
    rep.fail("structure", "LR order " + std::to_string(v) + " with " + std::to_string(lr.members.size()) +
                              " member pairs");
    return rep;
  }
  std::array<std::set<Block>, 2> distinguished;
  std::set<Block> all;
  for (std::size_t k = 0; k < lr.members.size(); ++k)
    for (int j = 0; j < 2; ++j) {
      const Resolution& res = lr.members[k][j];
      const std::string tag = "A(" + std::to_string(k) + "," + std::to_string(j) + "): ";
      if (res.v != v || static_cast<int>(res.classes.size()) != (v - 1) / 2) {
        rep.fail("structure", tag + "wrong class count");
        continue;
      }
      rep.absorb(verify_resolution(res, o), tag);
      std::vector<Block> blocks;
      for (const auto& cls : res.classes)
        for (const auto& b : cls) blocks.push_back(b);
      check_sts(blocks, v, tag, rep);
      all.insert(blocks.begin(), blocks.end());
      for (const auto& b : res.classes[0])
        if (!distinguished[j].insert(b).second) rep.fail("distinguished union", tag + "repeat " + block_str(b));
    }
  if (distinguished[0] != distinguished[1])
    rep.fail("distinguished union", "unions for j=0 and j=1 differ");
  check_sts({distinguished[0].begin(), distinguished[0].end()}, v, "distinguished union: ", rep);
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y)
      for (int z = y + 1; z < v; ++z)
        if (!all.count({x, y, z})) rep.fail("triple coverage", block_str({x, y, z}) + " in no member");
  return rep;
}

VerificationReport verify_frame(const Frame& f, const VerifyOptions& o) {
  VerificationReport rep;
  rep.cap = o.cap;
  const int v = f.g * f.u;
  if (f.g < 1 || f.u < 3 || static_cast<int>(f.classes.size()) != v) {
    rep.fail("structure", "frame needs one class per point");
    return rep;
  }
  TripleCount tc(v);
  for (int p = 0; p < v; ++p) {
    const int hole = p / f.g;
    const std::string tag = "class " + std::to_string(p) + ": ";
    PairCount pc(v);
    for (const auto& b : f.classes[p]) {
      if (!well_formed_block(b, v, rep)) continue;
      if (b.size() != 3) {
        rep.fail("block size", tag + block_str(b));
        continue;
      }
      bool ok = true;
      for_pairs(b, [&](int x, int y) { ok = ok && x / f.g != y / f.g; });
      for (Point x : b) ok = ok && x / f.g != hole;
      if (!ok) rep.fail("frame class", tag + "non-transverse or meets own group " + block_str(b));
      for_pairs(b, [&](int x, int y) { pc.at(x, y) += 1; });
      tc.at(b[0], b[1], b[2]) += 1;
    }
    for (int x = 0; x < v; ++x)
      for (int y = x + 1; y < v; ++y)
        if (x / f.g != y / f.g && x / f.g != hole && y / f.g != hole && pc.at(x, y) != 1)
          rep.fail("frame class", tag + pair_str(x, y) + " covered " + std::to_string(pc.at(x, y)) + " times");
  }
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y)
      for (int z = y + 1; z < v; ++z)
        if (x / f.g != y / f.g && y / f.g != z / f.g && x / f.g != z / f.g && tc.at(x, y, z) != 1)
          rep.fail("frame partition", block_str({x, y, z}) + " in " + std::to_string(tc.at(x, y, z)) + " classes");
  return rep;
}

VerificationReport verify_fan(const FanDesign& f, const VerifyOptions& o) {
  VerificationReport rep;
  rep.cap = o.cap;
  const int v = f.v;
  auto gi = group_index(v, f.groups, rep);
  if (gi.empty()) return rep;
  PairCount pc(v);
  TripleCount tc(v);
  auto add = [&](const Block& b, bool pairs) {
    if (!well_formed_block(b, v, rep)) return;
    if (pairs) for_pairs(b, [&](int x, int y) { pc.at(x, y) += 1; });
    for_triples(b, [&](int x, int y, int z) { tc.at(x, y, z) += 1; });
  };
  for (const auto& g : f.groups) add(normalize(g), true);
  for (const auto& b : f.a1) add(b, true);
  for (const auto& b : f.t) add(b, false);
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y) {
      if (pc.at(x, y) != 1) rep.fail("fan PBD", pair_str(x, y) + " covered " + std::to_string(pc.at(x, y)) + " times");
      for (int z = y + 1; z < v; ++z)
        if (tc.at(x, y, z) != 1)
          rep.fail("fan 3-wise", block_str({x, y, z}) + " covered " + std::to_string(tc.at(x, y, z)) + " times");
    }
  return rep;
}

VerificationReport verify_auxiliary(const AuxObject& obj, const VerifyOptions& o) {
  return std::visit(
      [&](const auto& x) -> VerificationReport {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Resolution>) return verify_resolution(x, o);
        else if constexpr (std::is_same_v<T, LRDesign>) return verify_lr(x, o);
        else if constexpr (std::is_same_v<T, Frame>) return verify_frame(x, o);
        else return verify_fan(x, o);
      },
      obj);
}

}  // namespace lsg
