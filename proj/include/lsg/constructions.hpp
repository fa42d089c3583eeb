#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "lsg/core.hpp"

namespace lsg {

struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fillers keyed by block size. A filler on k points is an LS (digraphs may be empty).
// For a block B avoiding both distinguished points, filler point p goes to B[p].
// For a block holding both, the filler's distinguished points go to ∞1, ∞2 and its
// S-points go to the S-points of B in increasing order.
using FillerMap = std::map<int, GoodLargeSet>;

// Blocks of a size absent from the map are kept. The j-th copy of a distinct block B
// (members in index order) receives filler member j.
HoledLargeSet fill(const HoledLargeSet& h, const FillerMap& k0, const FillerMap& k2);
// K2 fillers contribute their digraphs; K0 fillers must not touch edges of the digraphs.
GoodLargeSet fill(const GoodLargeSet& g, const FillerMap& k0, const FillerMap& k2);

// v -> 2v-2. lgdd2[k] is a (3,1)-LGDD(2^k) for every size k of a block avoiding ∞1.
// With star set the input must have λ = 1 and members 2r, 2r+1 are merged (λ = 2).
HoledLargeSet double_ls(const HoledLargeSet& h, const std::map<int, LargeSet>& lgdd2, bool star);

// LS(1,λ;2,(3,K),v) and a (3,λ')-LGDD(g^k) per block size k -> (3,λ)-LGDD(g^v).
// Output member g·r+i collects copy i of every block of member r.
LargeSet breakup(const HoledLargeSet& h, int g, const std::map<int, LargeSet>& ingredients);

// Quasigroup expansion by an odd w; point (x,a) is w·x+a.
GoodLargeSet expand_w(const GoodLargeSet& g, int w);
// Same expansion for a GLS* whose hole blocks all have size ≥ 4; digraphs are dropped.
HoledLargeSet expand_w_star(const GoodLargeSet& g, int w);

struct ClrResult {
  GoodLargeSet gls;       // members ordered (i, j, k), i outermost
  GoodLargeSet gls_star;  // members ordered (j, k)
};

// LR(2v+1) -> GLS and GLS* on 4v+2 points. Throws when the LR design fails verification.
ClrResult clr(const LRDesign& lr);

// gls[k]: GLS*(1,m;2,(3,K0,{3},{m+2}),mk+2) whose member r holds m copies of one hole block;
// frames[k]: F(3,3,m^k). Output member x is indexed by the fan point x.
GoodLargeSet pcs(const FanDesign& fan, const std::map<int, GoodLargeSet>& gls,
                 const std::map<int, Frame>& frames, int m);

LargeSet inflate(const LargeSet& ls, int m);
LargeSet merge(const LargeSet& ls, int t);
// Union of the first t members: a simple (3,tλ)-GDD.
GroupedDesign union_members(const LargeSet& ls, int t);

// An LS whose blocks are all triples viewed as a (3,λ)-LGDD(1^v), and back.
LargeSet as_large_set(const HoledLargeSet& h);
HoledLargeSet as_holed(const LargeSet& ls);

// Which distinguished point the second block of each ∞-edge pair uses.
enum class Ls98Rule { same_infinity, first_infinity };
std::string to_string(Ls98Rule r);

// GLS(2,(3,{3,6},{3},{6}),18) with a (3,1)-LGDD(6^3) and a (3,1)-LGDD(6^6)
// -> LS*(1,2;2,(3,{3,4},{3},{26}),98); the 4-blocks are left for fill.
HoledLargeSet build_ls98(const GoodLargeSet& gls18, const LargeSet& lgdd63, const LargeSet& lgdd66, Ls98Rule rule);

}  // namespace lsg
