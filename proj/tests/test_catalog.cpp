#include <set>

#include "doctest.h"
#include "lsg/catalog.hpp"
#include "lsg/verifier.hpp"

using namespace lsg;

namespace {
std::size_t arc_total(const GoodLargeSet& g) {
  std::size_t n = 0;
  for (const auto& d : g.digraphs) n += d.size();
  return n;
}
}  // namespace

TEST_CASE("3^8 seed develops into 9 members of 168 blocks") {
  const CyclicSeed seed = lgdd_3_8_seed();
  CHECK(seed.modulus == 24);
  REQUIRE(seed.base.size() == 9);
  for (const auto& list : seed.base) CHECK(list.size() == 7);
  CHECK(seed.base[0][0] == Block{0, 1, 2});
  const LargeSet ls = develop_cyclic(seed);
  REQUIRE(ls.members.size() == 9);
  std::set<Block> all;
  for (const auto& m : ls.members) {
    CHECK(m.size() == 168);
    for (const auto& [b, c] : m) all.insert(b);
  }
  CHECK(all.size() == 1512);
  CHECK(verify_large_set(ls).passed);
}

TEST_CASE("develop_cyclic rejects a short orbit") {
  CyclicSeed seed = lgdd_3_8_seed();
  seed.base[0][0] = {0, 8, 16};
  CHECK_THROWS(develop_cyclic(seed));
}

TEST_CASE("base GLS tables") {
  const GoodLargeSet v5 = base_gls("v5");
  CHECK(v5.base.members.size() == 1);
  CHECK(v5.base.members[0].size() == 10);
  CHECK(arc_total(v5) == 6);
  CHECK(v5.base.lambda == 3);
  CHECK(verify_gls(v5, false).passed);

  const GoodLargeSet v6 = base_gls("v6");
  CHECK(v6.base.members.size() == 2);
  CHECK(verify_gls(v6, false).passed);

  const GoodLargeSet v10 = base_gls("v10");
  REQUIRE(v10.base.members.size() == 4);
  for (std::size_t r = 0; r < 4; ++r) {
    CHECK(total_blocks(v10.base.members[r]) == 30);
    CHECK(v10.digraphs[r].size() == 14);
  }
  CHECK(verify_gls(v10, false).passed);

  const GoodLargeSet v11 = base_gls("v11");
  CHECK(base_gls_is_star("v11"));
  CHECK_FALSE(base_gls_is_star("v6"));
  REQUIRE(v11.base.members.size() == 3);
  for (std::size_t r = 0; r < 3; ++r) {
    CHECK(total_blocks(v11.base.members[r]) == 48);
    const Block g{static_cast<int>(r), static_cast<int>(r) + 3, static_cast<int>(r) + 6, 9, 10};
    CHECK(v11.base.members[r].at(g) == 3);
  }
  CHECK(verify_gls(v11, true).passed);
  CHECK(catalog_repairs().empty());
}

TEST_CASE("table checksum and repair path") {
  const std::string text(table_text("gls_v6"));
  CHECK_NOTHROW(parse_table(text));
  std::string tampered = text;
  const auto pos = tampered.rfind("inf1");
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, 4, "inf2");
  CHECK_THROWS(parse_table(tampered));
  // without the checksum the loader must notice and either repair or give up
  const GlsLoad l = load_gls_table("v6", tampered, false);
  if (l.verified) {
    CHECK(l.repairs.size() == 1);
    CHECK(verify_gls(l.gls, false).passed);
  }
}

TEST_CASE("cubes") {
  const LargeSet c1 = lgdd_cube(1);
  CHECK(c1.members.size() == 1);
  CHECK(total_blocks(c1.members[0]) == 1);
  const LargeSet c2 = lgdd_cube(2);
  CHECK(c2.members.size() == 2);
  CHECK(c2.members[0].size() == 4);
  for (int g = 1; g <= 8; ++g) CHECK(verify_large_set(lgdd_cube(g)).passed);
  const LargeSet c6 = lgdd_cube(6);
  CHECK(c6.members.size() == 6);
  CHECK(c6.members[5].size() == 36);
}

TEST_CASE("complete and trivial objects") {
  const LargeSet k = complete_lgdd(2, 4);
  CHECK(k.params.lambda == 4);
  CHECK(k.members.size() == 1);
  CHECK(verify_large_set(k).passed);
  const GoodLargeSet t = trivial_gls(8);
  CHECK(t.base.members.size() == 6);
  CHECK(verify_gls(t, true).passed);
}

TEST_CASE("idempotent commutative quasigroups") {
  CHECK(quasigroup_icq(1).op(0, 0) == 0);
  const Quasigroup q3 = quasigroup_icq(3);
  CHECK(q3.op(0, 1) == 2);
  CHECK(q3.op(1, 2) == 0);
  CHECK(q3.op(0, 0) == 0);
  const Quasigroup q5 = quasigroup_icq(5);
  const std::vector<int> row0{0, 3, 1, 4, 2};
  for (int b = 0; b < 5; ++b) CHECK(q5.op(0, b) == row0[b]);
  for (int w = 1; w <= 99; w += 2) CHECK(quasigroup_violations(quasigroup_icq(w)).empty());
  CHECK_THROWS(quasigroup_icq(4));
  Quasigroup bad = quasigroup_icq(5);
  bad.table[1] = 0;
  CHECK_FALSE(quasigroup_violations(bad).empty());
}

TEST_CASE("sqs8 fan") {
  const FanDesign f = sqs8_fan();
  CHECK(f.v == 7);
  CHECK(f.a1.size() == 7);
  CHECK(f.t.size() == 7);
  CHECK(f.a1.size() + f.t.size() == 14);
  CHECK(verify_fan(f).passed);
  for (int k = 2; k <= 5; ++k) CHECK(verify_fan(boolean_sqs_fan(k)).passed);
}

TEST_CASE("ls98 tables") {
  const auto t = ls98_tables();
  for (const auto& a : t) CHECK(a.size() == 12);
  CHECK(t[0][0] == Row3{0, 1, 2});
  CHECK(t[1][0] == Row3{0, 0, 2});
  CHECK(t[2].back() == Row3{5, 3, 2});
}

TEST_CASE("fnv1a64 is stable") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}
