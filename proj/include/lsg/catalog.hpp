#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lsg/core.hpp"

namespace lsg {

std::uint64_t fnv1a64(std::string_view s);

// Embedded copy of data/<name>.txt.
std::string_view table_text(const std::string& name);
std::vector<std::string> table_names();

// Parsed table file. Sections are keyed by (directive, index); rows are label tokens.
struct TableFile {
  std::map<std::string, int> header;
  std::map<std::pair<std::string, int>, std::vector<std::vector<std::string>>> sections;
};

// Throws std::runtime_error on a checksum mismatch when check_sum is set.
TableFile parse_table(std::string_view text, bool check_sum = true);

struct CyclicSeed {
  int modulus = 0;
  int group_count = 0;  // groups are {i, i+group_count, ...}
  std::vector<std::vector<Block>> base;
  int lambda = 1;
};

CyclicSeed lgdd_3_8_seed();
// Develops and relabels so that groups become {3j,3j+1,3j+2}. Throws on a short orbit.
LargeSet develop_cyclic(const CyclicSeed& seed);

struct CatalogRepair {
  std::string table;
  std::string edit;
};

struct GlsLoad {
  GoodLargeSet gls;
  bool star = false;
  std::vector<CatalogRepair> repairs;
  bool verified = false;
};

// Loads a GLS table text; runs the single-entry repair search if verification fails.
GlsLoad load_gls_table(const std::string& name, std::string_view text, bool check_sum = true);

// name in {v5, v6, v10, v11}
GoodLargeSet base_gls(const std::string& name);
bool base_gls_is_star(const std::string& name);
std::vector<CatalogRepair> catalog_repairs();

LargeSet lgdd_cube(int g);
// One member holding every transverse triple: λ = g(u−2).
LargeSet complete_lgdd(int g, int u);
// A single block of size v repeated in each of the v−2 members.
GoodLargeSet trivial_gls(int v);

Quasigroup quasigroup_icq(int w);
std::vector<std::string> quasigroup_violations(const Quasigroup& q);

// Boolean SQS(2^k) with the last point deleted: punctured blocks form a1, the rest t.
FanDesign boolean_sqs_fan(int k);
FanDesign sqs8_fan();

using Row3 = std::array<int, 3>;
std::array<std::vector<Row3>, 3> ls98_tables();

}  // namespace lsg
