#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lsg/search.hpp"

using namespace lsg;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("lsgdd_test_search_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exact cover with demands") {
  // items 0,1 need one cover, item 2 needs two
  ExactCover ec({1, 1, 2});
  ec.add_option({0, 2});
  ec.add_option({1, 2});
  ec.add_option({0, 1});
  std::vector<std::vector<int>> found;
  const SearchStatus s = ec.solve({}, {}, [&](const std::vector<int>& sol) {
    found.push_back(sol);
    return false;
  });
  CHECK(s == SearchStatus::found);
  REQUIRE(found.size() == 1);
  std::vector<int> sol = found[0];
  std::sort(sol.begin(), sol.end());
  CHECK(sol == std::vector<int>{0, 1});

  ExactCover none({1, 1});
  none.add_option({0});
  CHECK(none.solve({}, {}, [](const std::vector<int>&) { return true; }) == SearchStatus::exhausted);
}

TEST_CASE("seeded shuffle is reproducible") {
  std::vector<int> a{0, 1, 2, 3, 4, 5, 6, 7}, b = a;
  seeded_shuffle(a, 7);
  seeded_shuffle(b, 7);
  CHECK(a == b);
}

TEST_CASE("lgdd(2,4,1) search") {
  const SearchResult r = search(lgdd_task(2, 4, 1));
  REQUIRE(r.status == SearchStatus::found);
  const auto& ls = std::get<LargeSet>(*r.object);
  CHECK(ls.members.size() == 4);
  for (const auto& m : ls.members) CHECK(m.size() == 8);
  CHECK(verify_large_set(ls).passed);
}

TEST_CASE("frame(3,4) search") {
  const SearchResult r = search(frame_task(3, 4));
  REQUIRE(r.status == SearchStatus::found);
  const auto& f = std::get<Frame>(*r.object);
  CHECK(f.classes.size() == 12);
  std::size_t n = 0;
  for (const auto& c : f.classes) {
    CHECK(c.size() == 9);
    n += c.size();
  }
  CHECK(n == 108);
  CHECK(verify_frame(f).passed);
}

TEST_CASE("lr(9) search") {
  const SearchResult r = search(lr_task(9));
  REQUIRE(r.status == SearchStatus::found);
  const auto& lr = std::get<LRDesign>(*r.object);
  CHECK(lr.members.size() * 2 == 8);
  CHECK(verify_lr(lr).passed);
}

TEST_CASE("simple gdd search on 7 points") {
  for (int l = 1; l <= 5; ++l) {
    const SearchResult r = search(simple_gdd_task(l, 1, 7));
    REQUIRE(r.status == SearchStatus::found);
    const auto& d = std::get<GroupedDesign>(*r.object);
    CHECK(verify_gdd(d, l).passed);
    CHECK(verify_simple(d).passed);
  }
  CHECK(search(simple_gdd_task(6, 1, 7)).status == SearchStatus::exhausted);
}

TEST_CASE("lgdd(1,7,1) does not exist") {
  const SearchResult r = search(lgdd_task(1, 7, 1));
  CHECK(r.status != SearchStatus::found);
}

TEST_CASE("fixed seed gives identical objects") {
  for (std::uint64_t seed : {0ULL, 3ULL}) {
    const SearchResult a = search(lgdd_task(2, 4, 1, seed));
    const SearchResult b = search(lgdd_task(2, 4, 1, seed));
    REQUIRE(a.object);
    REQUIRE(b.object);
    CHECK(std::get<LargeSet>(*a.object).members == std::get<LargeSet>(*b.object).members);
    CHECK(a.stats.nodes == b.stats.nodes);
  }
}

TEST_CASE("certificate round trip") {
  const fs::path dir = scratch_dir("roundtrip");
  CertificateStore store(dir);
  const SearchTask t = lgdd_task(2, 4, 1);
  const SearchResult fresh = search_cached(t, &store);
  REQUIRE(fresh.status == SearchStatus::found);
  CHECK_FALSE(fresh.from_certificate);
  REQUIRE(fs::exists(store.path_for(t)));
  const SearchResult again = search_cached(t, &store);
  CHECK(again.from_certificate);
  CHECK(std::get<LargeSet>(*again.object).members == std::get<LargeSet>(*fresh.object).members);
  const auto c = store.load(t);
  REQUIRE(c);
  CHECK(c->fingerprint == fingerprint(t));
  CHECK(c->stats.nodes == fresh.stats.nodes);

  // a second store writes the same bytes
  const fs::path dir2 = scratch_dir("roundtrip2");
  CertificateStore store2(dir2);
  search_cached(t, &store2);
  CHECK(slurp(store.path_for(t)) == slurp(store2.path_for(t)));
}

TEST_CASE("stale fingerprint is absent") {
  const fs::path dir = scratch_dir("stale");
  CertificateStore store(dir);
  const SearchTask t = lgdd_task(2, 4, 1);
  search_cached(t, &store);
  const SearchTask other = lgdd_task(2, 4, 1, 5);
  fs::copy_file(store.path_for(t), store.path_for(other));
  CHECK_FALSE(store.load(other));
}

TEST_CASE("tampered certificate is absent with a warning") {
  const fs::path dir = scratch_dir("tamper");
  CertificateStore store(dir);
  const SearchTask t = lgdd_task(2, 4, 1);
  search_cached(t, &store);
  std::string text = slurp(store.path_for(t));
  const auto pos = text.find("[0,2,4]");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 7, "[0,2,5]");
  std::ofstream(store.path_for(t)) << text;
  std::vector<std::string> warnings;
  CHECK_FALSE(store.load(t, &warnings));
  CHECK_FALSE(warnings.empty());
  std::ofstream(store.path_for(t)) << "garbage";
  warnings.clear();
  CHECK_FALSE(store.load(t, &warnings));
  CHECK_FALSE(warnings.empty());
}

TEST_CASE("ingredient menu") {
  const auto menu = required_ingredients();
  auto find = [&](const std::string& name) -> const IngredientEntry* {
    for (const auto& e : menu)
      if (e.name == name) return &e;
    return nullptr;
  };
  REQUIRE(find("lgdd(2,3,1)"));
  CHECK(find("lgdd(2,3,1)")->provider == "closed-form");
  REQUIRE(find("lgdd(6,6,1)"));
  CHECK(find("lgdd(6,6,1)")->provider == "derived-by-inflation");
  REQUIRE(find("lr(9)"));
  CHECK(find("lr(9)")->provider == "searched");
  CHECK(find("lr(9)")->source == fingerprint(lr_task(9)));
  for (const char* n : {"lgdd(2,4,1)", "lgdd(2,6,1)", "lgdd(1,6,2)", "frame(3,4)"}) CHECK(find(n));
}

TEST_CASE("kind names") {
  for (auto k : {SearchKind::lgdd, SearchKind::frame, SearchKind::lr, SearchKind::simple_gdd, SearchKind::ls_plain})
    CHECK(parse_search_kind(to_string(k)) == k);
  CHECK_FALSE(parse_search_kind("sqs"));
}
