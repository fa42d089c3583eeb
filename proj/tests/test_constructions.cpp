#include <optional>

#include "doctest.h"
#include "lsg/catalog.hpp"
#include "lsg/constructions.hpp"
#include "lsg/search.hpp"
#include "lsg/verifier.hpp"

using namespace lsg;

namespace {

template <class T>
T found(const SearchTask& t) {
  std::optional<CertificateStore> store;
  if (auto d = CertificateStore::default_dir()) store.emplace(*d);
  const SearchResult r = search_cached(t, store ? &*store : nullptr);
  REQUIRE(r.status == SearchStatus::found);
  return std::get<T>(*r.object);
}

const ClrResult& clr9() {
  static const ClrResult c = clr(found<LRDesign>(lr_task(9)));
  return c;
}

GoodLargeSet plain(const HoledLargeSet& h) { return {h, {}}; }

std::size_t count_size(const HoledLargeSet& h, std::size_t k) {
  std::size_t n = 0;
  for (const auto& m : h.members)
    for (const auto& [b, c] : m)
      if (b.size() == k) n += static_cast<std::size_t>(c);
  return n;
}

// 6-blocks avoiding both distinguished points
std::size_t count_k0_six(const HoledLargeSet& h) {
  std::size_t n = 0;
  for (const auto& m : h.members)
    for (const auto& [b, c] : m)
      if (b.size() == 6 && b.back() < h.inf1()) n += static_cast<std::size_t>(c);
  return n;
}

}  // namespace

TEST_CASE("fill with nothing to fill is the identity") {
  const GoodLargeSet v5 = base_gls("v5");
  const HoledLargeSet f = fill(v5.base, {}, {});
  CHECK(f.members == v5.base.members);
  CHECK(f.profile == v5.base.profile);
}

TEST_CASE("fill the 6-blocks of the CLR star output") {
  const GoodLargeSet& s = clr9().gls_star;
  const GoodLargeSet f = fill(s, {{6, base_gls("v6")}}, {});
  CHECK(f.base.profile == HoleProfile{{3}, {3}, {6}});
  CHECK(count_size(s.base, 6) > 0);
  CHECK(count_size(f.base, 6) == count_size(s.base, 6) - count_k0_six(s.base));
  CHECK(observed_profile(f.base).K0 == std::set<int>{3});
  CHECK(verify_gls(f, true).passed);
}

TEST_CASE("fill rejects a filler of the wrong size") {
  const GoodLargeSet& s = clr9().gls_star;
  CHECK_THROWS_AS(fill(s, {{6, base_gls("v5")}}, {}), ConstructionError);
}

TEST_CASE("double v5 without merging") {
  const HoledLargeSet d = double_ls(base_gls("v5").base, {{3, lgdd_cube(2)}}, false);
  CHECK(d.v == 8);
  CHECK(d.lambda == 3);
  CHECK(d.profile == HoleProfile{{3, 4}, {3}, {4}});
  CHECK(verify_ls(d).passed);
}

TEST_CASE("double a trivial GLS with merging") {
  const HoledLargeSet d = double_ls(trivial_gls(8).base, {{3, lgdd_cube(2)}}, true);
  CHECK(d.v == 14);
  CHECK(d.lambda == 2);
  CHECK(d.profile.K2 == std::set<int>{14});
  CHECK(verify_ls_star(d).passed);
  CHECK_THROWS_AS(double_ls(base_gls("v5").base, {}, false), ConstructionError);
}

TEST_CASE("breakup into (3,3)-LGDD(2^8)") {
  const HoledLargeSet d = double_ls(base_gls("v5").base, {{3, lgdd_cube(2)}}, false);
  const LargeSet ls = breakup(d, 2, {{3, lgdd_cube(2)}, {4, found<LargeSet>(lgdd_task(2, 4, 1))}});
  CHECK(ls.params == DesignParams{3, 2, 8});
  CHECK(ls.members.size() == 4);
  for (const auto& m : ls.members) CHECK(total_blocks(m) == 112);
  CHECK(verify_large_set(ls).passed);
}

TEST_CASE("breakup an LS* with the 3^8 set") {
  // trivial LS*(1,2;(3,{3},{3},{8}),8): pairs of trivial members merged
  const HoledLargeSet h = trivial_gls(8).base;
  HoledLargeSet m;
  m.v = 8;
  m.lambda = 2;
  m.profile = h.profile;
  for (std::size_t r = 0; r < h.members.size(); r += 2) m.members.push_back(merge_multisets(h.members[r], h.members[r + 1]));
  REQUIRE(verify_ls_star(m).passed);
  const LargeSet ls = breakup(m, 3, {{8, develop_cyclic(lgdd_3_8_seed())}});
  CHECK(ls.params == DesignParams{2, 3, 8});
  CHECK(verify_large_set(ls).passed);
}

TEST_CASE("expand_w") {
  const GoodLargeSet e5 = expand_w(base_gls("v5"), 3);
  CHECK(e5.base.v == 11);
  CHECK(e5.base.profile == HoleProfile{{3}, {3}, {5}});
  CHECK(verify_gls(e5, false).passed);
  const GoodLargeSet e6 = expand_w(base_gls("v6"), 3);
  CHECK(e6.base.v == 14);
  CHECK(verify_ls(e6.base).passed);
  CHECK(verify_gls(e6, false).passed);
  const GoodLargeSet one = expand_w(base_gls("v6"), 1);
  CHECK(one.base.v == 6);
  CHECK(one.base.profile == HoleProfile{{3}, {3}, {3}});
  CHECK(verify_gls(one, false).passed);
  CHECK(verify_gls(expand_w(base_gls("v10"), 5), false).passed);
  CHECK_THROWS_AS(expand_w(base_gls("v5"), 2), ConstructionError);
}

TEST_CASE("expand_w_star") {
  const HoledLargeSet e = expand_w_star(base_gls("v11"), 3);
  CHECK(e.v == 29);
  CHECK(e.lambda == 3);
  CHECK(e.profile == HoleProfile{{3}, {3}, {11}});
  CHECK(verify_ls_star(e).passed);
  CHECK(e.members.size() == 3 * base_gls("v11").base.members.size());
  CHECK_THROWS_AS(expand_w_star(base_gls("v5"), 3), ConstructionError);
}

TEST_CASE("clr on LR(9)") {
  const ClrResult& c = clr9();
  CHECK(c.gls.base.v == 18);
  CHECK(c.gls.base.members.size() == 16);
  CHECK(c.gls.base.profile == HoleProfile{{3, 6}, {3}, {6}});
  CHECK(verify_gls(c.gls, false).passed);
  CHECK(c.gls_star.base.members.size() == 8);
  CHECK(c.gls_star.base.lambda == 2);
  CHECK(verify_gls(c.gls_star, true).passed);
  std::map<Block, int> total;
  for (const auto& m : c.gls.base.members)
    for (const auto& [b, k] : m)
      if (b.size() == 6) total[b] += k;
  CHECK_FALSE(total.empty());
  for (const auto& [b, k] : total) CHECK(k == 4);
  LRDesign bad = found<LRDesign>(lr_task(9));
  bad.members[0][0].classes[0].pop_back();
  CHECK_THROWS_AS(clr(bad), ConstructionError);
}

TEST_CASE("v50 pipeline") {
  const GoodLargeSet f = fill(clr9().gls_star, {{6, base_gls("v6")}}, {});
  const HoledLargeSet e = expand_w_star(f, 3);
  CHECK(e.v == 50);
  CHECK(e.members.size() == 24);
  CHECK(e.profile == HoleProfile{{3}, {3}, {14}});
  CHECK(verify_ls_star(e).passed);
}

TEST_CASE("pcs at u = 7") {
  const GoodLargeSet p = pcs(sqs8_fan(), {{3, base_gls("v11")}}, {{4, found<Frame>(frame_task(3, 4))}}, 3);
  CHECK(p.base.v == 23);
  CHECK(p.base.members.size() == 7);
  CHECK(p.base.lambda == 3);
  CHECK(p.base.profile == HoleProfile{{3}, {3}, {5}});
  CHECK(verify_gls(p, true).passed);
  CHECK_THROWS_AS(pcs(sqs8_fan(), {{3, base_gls("v11")}}, {}, 3), ConstructionError);
}

TEST_CASE("inflate, merge and union") {
  const LargeSet l26 = found<LargeSet>(lgdd_task(2, 6, 1));
  const LargeSet l66 = inflate(l26, 3);
  CHECK(l66.params == DesignParams{1, 6, 6});
  CHECK(l66.members.size() == 24);
  CHECK(verify_large_set(l66).passed);
  CHECK(inflate(l26, 1).members == l26.members);
  const LargeSet c43 = inflate(lgdd_cube(2), 2);
  CHECK(c43.members.size() == 4);
  CHECK(verify_large_set(c43).passed);

  const LargeSet s38 = develop_cyclic(lgdd_3_8_seed());
  const LargeSet m = merge(s38, 3);
  CHECK(m.params == DesignParams{6, 3, 8});
  CHECK(m.members.size() == 3);
  CHECK(verify_large_set(m).passed);
  CHECK(merge(s38, 1).members == s38.members);
  CHECK_THROWS_AS(merge(s38, 2), ConstructionError);
  const LargeSet m24 = merge(found<LargeSet>(lgdd_task(2, 4, 1)), 2);
  CHECK(m24.members.size() == 2);
  CHECK(verify_large_set(m24).passed);

  const GroupedDesign u = union_members(s38, 2);
  CHECK(total_blocks(u.blocks) == 336);
  CHECK(verify_gdd(u, 4).passed);
  CHECK(verify_simple(u).passed);
}

TEST_CASE("as_large_set and as_holed") {
  const LargeSet v6 = as_large_set(base_gls("v6").base);
  CHECK(v6.params == DesignParams{2, 1, 6});
  CHECK(verify_large_set(v6).passed);
  const HoledLargeSet k4 = as_holed(complete_lgdd(1, 4));
  CHECK(k4.v == 4);
  CHECK(k4.lambda == 2);
  CHECK(verify_ls_star(k4).passed);
  CHECK_THROWS_AS(as_large_set(base_gls("v11").base), ConstructionError);
}

TEST_CASE("build_ls98 infinity rule") {
  const LargeSet l66 = inflate(found<LargeSet>(lgdd_task(2, 6, 1)), 3);
  const HoledLargeSet raw = build_ls98(clr9().gls, lgdd_cube(6), l66, Ls98Rule::same_infinity);
  CHECK(raw.v == 98);
  CHECK(raw.members.size() == 48);
  CHECK(raw.profile == HoleProfile{{3, 4}, {3}, {26}});
  for (const auto& m : raw.members)
    for (const auto& [b, c] : m)
      if (b.size() == 4) CHECK(c == 2);
  CHECK(verify_ls_star(raw).passed);
  const HoledLargeSet filled = fill(raw, {{4, plain(as_holed(complete_lgdd(1, 4)))}}, {});
  CHECK(filled.profile == HoleProfile{{3}, {3}, {26}});
  CHECK(verify_ls_star(filled).passed);

  const HoledLargeSet other = build_ls98(clr9().gls, lgdd_cube(6), l66, Ls98Rule::first_infinity);
  const VerificationReport r = verify_ls_star(other);
  CHECK_FALSE(r.passed);
  CHECK(r.has_law("pair coverage"));
  CHECK(to_string(Ls98Rule::same_infinity) == "same-infinity");
}
