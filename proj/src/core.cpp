#include "lsg/core.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lsg {

std::string to_string(const DesignParams& p) {
  std::ostringstream os;
  os << "(" << p.lambda << "," << p.g << "," << p.u << ")";
  return os.str();
}

namespace {

void necessary_clauses(const DesignParams& p, Decision& d) {
  auto fail = [&d](std::string s) {
    d.ok = false;
    d.violated.push_back(std::move(s));
  };
  const long long lam = p.lambda, g = p.g, u = p.u;
  if (u < 3) fail("u ≥ 3");
  if (lam < 1) fail("λ ≥ 1");
  if (g < 1) fail("g ≥ 1");
  if (lam > g * (u - 2)) {
    std::ostringstream os;
    os << "λ ≤ g(u−2): " << lam << " > " << g * (u - 2);
    fail(os.str());
  }
  const long long two = lam * g * (u - 1);
  if (two % 2 != 0) {
    std::ostringstream os;
    os << "λg(u−1) ≡ 0 (mod 2): " << two << " ≡ 1";
    fail(os.str());
  }
  const long long six = lam * g * g * u * (u - 1);
  if (six % 6 != 0) {
    std::ostringstream os;
    os << "λg²u(u−1) ≡ 0 (mod 6): " << six << " ≡ " << six % 6;
    fail(os.str());
  }
}

}  // namespace

Decision admissible_simple_gdd(const DesignParams& p) {
  Decision d;
  necessary_clauses(p, d);
  return d;
}

Decision admissible_lgdd(const DesignParams& p) {
  Decision d;
  necessary_clauses(p, d);
  if (p.lambda >= 1 && p.u >= 2 && (static_cast<long long>(p.g) * (p.u - 2)) % p.lambda != 0) {
    std::ostringstream os;
    os << "g(u−2) ≡ 0 (mod λ): " << p.g * (p.u - 2) << " mod " << p.lambda << " = "
       << (p.g * (p.u - 2)) % p.lambda;
    d.ok = false;
    d.violated.push_back(os.str());
  }
  if (p.lambda == 1 && p.g == 1 && p.u == 7) {
    d.ok = false;
    d.violated.push_back("(λ,g,u) ≠ (1,1,7)");
  }
  return d;
}

Counting counting(const DesignParams& p) {
  if (!admissible_lgdd(p).ok) throw std::invalid_argument("counting: inadmissible " + to_string(p));
  const long long lam = p.lambda, g = p.g, u = p.u;
  return {lam * g * g * u * (u - 1) / 6, g * (u - 2) / lam};
}

Block normalize(Block b) {
  std::sort(b.begin(), b.end());
  if (std::adjacent_find(b.begin(), b.end()) != b.end())
    throw std::invalid_argument("block repeats a point");
  return b;
}

void add_block(BlockMultiset& m, Block b, int mult) {
  if (mult == 0) return;
  m[normalize(std::move(b))] += mult;
}

long long total_blocks(const BlockMultiset& m) {
  long long n = 0;
  for (const auto& [b, c] : m) n += c;
  return n;
}

BlockMultiset merge_multisets(const BlockMultiset& a, const BlockMultiset& b) {
  BlockMultiset out = a;
  for (const auto& [blk, c] : b) out[blk] += c;
  return out;
}

Groups uniform_groups(int g, int u) {
  Groups gs(static_cast<std::size_t>(u));
  for (int j = 0; j < u; ++j)
    for (int a = 0; a < g; ++a) gs[j].push_back(j * g + a);
  return gs;
}

LargeSet make_large_set(const DesignParams& p, std::vector<BlockMultiset> members) {
  return {p, uniform_groups(p.g, p.u), std::move(members)};
}

std::string to_string(const HoleProfile& h) {
  auto set = [](const std::set<int>& s) {
    std::string out = "{";
    bool first = true;
    for (int k : s) {
      if (!first) out += ",";
      out += std::to_string(k);
      first = false;
    }
    return out + "}";
  };
  return "(3," + set(h.K0) + "," + set(h.K1) + "," + set(h.K2) + ")";
}

HoleProfile observed_profile(const HoledLargeSet& h) {
  HoleProfile p{{}, {}, {}};
  for (const auto& m : h.members)
    for (const auto& [b, c] : m) {
      int hits = 0;
      for (Point x : b) hits += (x == h.inf1() || x == h.inf2());
      std::set<int>& k = hits == 0 ? p.K0 : (hits == 1 ? p.K1 : p.K2);
      k.insert(static_cast<int>(b.size()));
    }
  return p;
}

void sort_arcs(ArcList& a) { std::sort(a.begin(), a.end()); }

}  // namespace lsg
