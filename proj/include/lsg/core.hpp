#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lsg {

using Point = int;
using Block = std::vector<Point>;
using BlockMultiset = std::map<Block, int>;
using Arc = std::pair<Point, Point>;
using ArcList = std::vector<Arc>;
using Groups = std::vector<std::vector<Point>>;

struct DesignParams {
  int lambda = 1;
  int g = 1;
  int u = 3;
  bool operator==(const DesignParams&) const = default;
};

std::string to_string(const DesignParams& p);

struct Decision {
  bool ok = true;
  std::vector<std::string> violated;
};

Decision admissible_lgdd(const DesignParams& p);
Decision admissible_simple_gdd(const DesignParams& p);

struct Counting {
  long long blocks_per_member = 0;
  long long member_count = 0;
};

// Throws std::invalid_argument when p is not admissible.
Counting counting(const DesignParams& p);

// Sorts; throws std::invalid_argument on a repeated point.
Block normalize(Block b);
void add_block(BlockMultiset& m, Block b, int mult = 1);
long long total_blocks(const BlockMultiset& m);
BlockMultiset merge_multisets(const BlockMultiset& a, const BlockMultiset& b);

// Point p lies in group p / g.
Groups uniform_groups(int g, int u);

struct GroupedDesign {
  int v = 0;
  Groups groups;
  BlockMultiset blocks;
};

struct LargeSet {
  DesignParams params;
  Groups groups;
  std::vector<BlockMultiset> members;

  int v() const { return params.g * params.u; }
  GroupedDesign member(std::size_t r) const { return {v(), groups, members.at(r)}; }
};

LargeSet make_large_set(const DesignParams& p, std::vector<BlockMultiset> members);

struct HoleProfile {
  std::set<int> K0{3};
  std::set<int> K1{3};
  std::set<int> K2{3};
  bool operator==(const HoleProfile&) const = default;
};

std::string to_string(const HoleProfile& h);

// Points 0..v-3 form S; v-2 and v-1 are the two distinguished points.
struct HoledLargeSet {
  int v = 0;
  int lambda = 1;
  HoleProfile profile;
  std::vector<BlockMultiset> members;

  Point inf1() const { return v - 2; }
  Point inf2() const { return v - 1; }
  int s_size() const { return v - 2; }
};

// Profile read off the blocks actually present.
HoleProfile observed_profile(const HoledLargeSet& h);

struct GoodLargeSet {
  HoledLargeSet base;
  std::vector<ArcList> digraphs;
};

void sort_arcs(ArcList& a);

struct Quasigroup {
  int w = 0;
  std::vector<int> table;
  int op(int a, int b) const { return table[static_cast<std::size_t>(a * w + b)]; }
};

// Blocks partitioned into parallel classes.
struct Resolution {
  int v = 0;
  std::vector<std::vector<Block>> classes;
};

// members[k][j] is a resolvable S(2,3,v); class 0 of each is the distinguished one.
struct LRDesign {
  int v = 0;
  std::vector<std::array<Resolution, 2>> members;
};

// Generalized frame F(3,3,g^u): classes[p] is the class indexed by point p.
struct Frame {
  int g = 0;
  int u = 0;
  std::vector<std::vector<Block>> classes;
};

// 1-fan design: groups, the pairwise family a1 and the triple-completing family t.
struct FanDesign {
  int v = 0;
  Groups groups;
  std::vector<Block> a1;
  std::vector<Block> t;
};

}  // namespace lsg
