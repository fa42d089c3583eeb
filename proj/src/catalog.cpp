#include "lsg/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "lsg/verifier.hpp"

namespace lsg {

namespace detail {
const std::map<std::string, std::string_view>& embedded_tables();
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string_view table_text(const std::string& name) {
  const auto& t = detail::embedded_tables();
  auto it = t.find(name);
  if (it == t.end()) throw std::invalid_argument("no embedded table " + name);
  return it->second;
}

std::vector<std::string> table_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : detail::embedded_tables()) out.push_back(k);
  return out;
}

namespace {

std::string trim(std::string s) {
  const auto a = s.find_first_not_of(" \t\r");
  const auto b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

}  // namespace

TableFile parse_table(std::string_view text, bool check_sum) {
  const auto nl = text.find('\n');
  const std::string first(text.substr(0, nl));
  const std::string prefix = "# fnv1a64 ";
  if (first.rfind(prefix, 0) == 0) {
    if (check_sum) {
      char buf[17];
      std::snprintf(buf, sizeof buf, "%016llx",
                    static_cast<unsigned long long>(fnv1a64(nl == std::string_view::npos ? "" : text.substr(nl + 1))));
      if (trim(first.substr(prefix.size())) != buf) throw std::runtime_error("table checksum mismatch");
    }
  } else if (check_sum) {
    throw std::runtime_error("table has no checksum line");
  }
  TableFile tf;
  std::pair<std::string, int> cur{"", -1};
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ws(line);
    std::string word;
    int value = 0;
    if (line.find(',') == std::string::npos && (ws >> word >> value)) {
      if (word == "member" || word == "arcs" || word == "base" || word == "table") {
        cur = {word, value};
        tf.sections[cur];
      } else {
        tf.header[word] = value;
      }
      continue;
    }
    if (cur.second < 0) throw std::runtime_error("table row outside a section: " + line);
    tf.sections[cur].push_back(split(line, ','));
  }
  return tf;
}

namespace {

// "inf1", "inf2", an integer, or an orbit template "<K>i" / "<K>i+c".
Point resolve_label(const std::string& tok, int n, int i) {
  if (tok == "inf1") return n;
  if (tok == "inf2") return n + 1;
  const auto pos = tok.find('i');
  if (pos != std::string::npos) {
    const int k = std::stoi(tok.substr(0, pos));
    int c = 0;
    if (pos + 1 < tok.size()) {
      if (tok[pos + 1] != '+') throw std::invalid_argument("bad label " + tok);
      c = std::stoi(tok.substr(pos + 2));
    }
    return ((k * i + c) % n + n) % n;
  }
  std::size_t used = 0;
  const int x = std::stoi(tok, &used);
  if (used != tok.size() || x < 0 || x >= n) throw std::invalid_argument("bad label " + tok);
  return x;
}

GoodLargeSet build_gls(const TableFile& tf) {
  const int n = tf.header.at("points");
  const int orbit = tf.header.count("orbit") ? tf.header.at("orbit") : 1;
  GoodLargeSet g;
  g.base.v = n + 2;
  g.base.lambda = tf.header.at("lambda");
  for (int r = 0; tf.sections.count({"member", r}); ++r) {
    BlockMultiset m;
    for (auto row : tf.sections.at({"member", r})) {
      int mult = 0;
      const auto star = row[0].find('*');
      if (star != std::string::npos) {
        mult = std::stoi(row[0].substr(0, star));
        row[0] = row[0].substr(star + 1);
      }
      for (int i = 0; i < (mult ? 1 : orbit); ++i) {
        Block b;
        for (const auto& t : row) b.push_back(resolve_label(t, n, i));
        add_block(m, b, mult ? mult : 1);
      }
    }
    g.base.members.push_back(std::move(m));
    ArcList arcs;
    if (tf.sections.count({"arcs", r}))
      for (const auto& row : tf.sections.at({"arcs", r})) {
        if (row.size() != 2) throw std::invalid_argument("arc row needs two labels");
        arcs.push_back({resolve_label(row[0], n, 0), resolve_label(row[1], n, 0)});
      }
    sort_arcs(arcs);
    g.digraphs.push_back(std::move(arcs));
  }
  g.base.profile = observed_profile(g.base);
  return g;
}

bool gls_ok(const TableFile& tf, bool star, GoodLargeSet* out) {
  try {
    GoodLargeSet g = build_gls(tf);
    const bool ok = verify_gls(g, star, {1, 1}).passed;
    if (out) *out = std::move(g);
    return ok;
  } catch (const std::exception&) {
    return false;
  }
}

std::vector<std::string> label_alphabet(const TableFile& tf) {
  const int n = tf.header.at("points");
  std::vector<std::string> a{"inf1", "inf2"};
  for (int x = 0; x < n; ++x) a.push_back(std::to_string(x));
  if (tf.header.count("orbit")) {
    const int k = tf.header.at("orbit");
    a.push_back(std::to_string(k) + "i");
    for (int c = 1; c < n; ++c) a.push_back(std::to_string(k) + "i+" + std::to_string(c));
  }
  return a;
}

}  // namespace

GlsLoad load_gls_table(const std::string& name, std::string_view text, bool check_sum) {
  TableFile tf = parse_table(text, check_sum);
  GlsLoad out;
  out.star = tf.header.count("star") && tf.header.at("star") != 0;
  if (gls_ok(tf, out.star, &out.gls)) {
    out.verified = true;
    return out;
  }
  // Bounded single-entry repair: first edit (in file order) that verifies wins.
  const auto alphabet = label_alphabet(tf);
  for (auto& [key, rows] : tf.sections)
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        const std::string orig = rows[i][j];
        const auto star = orig.find('*');
        const std::string head = star == std::string::npos ? "" : orig.substr(0, star + 1);
        for (const auto& alt : alphabet) {
          if (head + alt == orig) continue;
          rows[i][j] = head + alt;
          GoodLargeSet g;
          if (gls_ok(tf, out.star, &g)) {
            std::ostringstream os;
            os << key.first << " " << key.second << " row " << i + 1 << " entry " << j + 1 << ": " << orig
               << " -> " << head + alt;
            out.repairs.push_back({name, os.str()});
            out.gls = std::move(g);
            out.verified = true;
            return out;
          }
        }
        rows[i][j] = orig;
      }
  out.verified = false;
  return out;
}

namespace {

std::mutex g_repair_mu;
std::vector<CatalogRepair> g_repairs;

const GlsLoad& cached_gls(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, GlsLoad> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) {
    if (name != "v5" && name != "v6" && name != "v10" && name != "v11")
      throw std::invalid_argument("unknown base GLS " + name);
    GlsLoad l = load_gls_table(name, table_text("gls_" + name));
    if (!l.verified) throw std::runtime_error("table " + name + " fails verification and has no single-entry repair");
    {
      std::lock_guard<std::mutex> rl(g_repair_mu);
      g_repairs.insert(g_repairs.end(), l.repairs.begin(), l.repairs.end());
    }
    it = cache.emplace(name, std::move(l)).first;
  }
  return it->second;
}

}  // namespace

GoodLargeSet base_gls(const std::string& name) { return cached_gls(name).gls; }
bool base_gls_is_star(const std::string& name) { return cached_gls(name).star; }

std::vector<CatalogRepair> catalog_repairs() {
  std::lock_guard<std::mutex> rl(g_repair_mu);
  return g_repairs;
}

CyclicSeed lgdd_3_8_seed() {
  TableFile tf = parse_table(table_text("lgdd_3_8"));
  CyclicSeed s;
  s.modulus = tf.header.at("modulus");
  s.group_count = tf.header.at("groups");
  s.lambda = tf.header.at("lambda");
  for (int r = 0; tf.sections.count({"base", r}); ++r) {
    std::vector<Block> base;
    for (const auto& row : tf.sections.at({"base", r})) {
      Block b;
      for (const auto& t : row) b.push_back(std::stoi(t));
      base.push_back(normalize(b));
    }
    s.base.push_back(std::move(base));
  }
  return s;
}

LargeSet develop_cyclic(const CyclicSeed& seed) {
  const int m = seed.modulus, q = seed.group_count;
  if (m <= 0 || q <= 0 || m % q != 0) throw std::invalid_argument("bad cyclic seed");
  const int g = m / q;
  // x lies in group x mod q; canonical label puts it at (x mod q)*g + x/q
  auto relabel = [&](int x) { return (x % q) * g + x / q; };
  std::vector<BlockMultiset> members;
  for (const auto& base : seed.base) {
    BlockMultiset mem;
    for (const auto& b : base) {
      std::set<Block> orbit;
      for (int t = 0; t < m; ++t) {
        Block d;
        for (Point x : b) d.push_back((x + t) % m);
        orbit.insert(normalize(d));
      }
      if (static_cast<int>(orbit.size()) != m)
        throw std::runtime_error("short orbit for base block " + block_str(b));
      for (const auto& d : orbit) {
        Block e;
        for (Point x : d) e.push_back(relabel(x));
        add_block(mem, e);
      }
    }
    members.push_back(std::move(mem));
  }
  return make_large_set({seed.lambda, g, q}, std::move(members));
}

LargeSet lgdd_cube(int g) {
  if (g < 1) throw std::invalid_argument("lgdd_cube needs g ≥ 1");
  std::vector<BlockMultiset> members(static_cast<std::size_t>(g));
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b)
      for (int c = 0; c < g; ++c) members[(a + b + c) % g][{a, g + b, 2 * g + c}] = 1;
  return make_large_set({1, g, 3}, std::move(members));
}

LargeSet complete_lgdd(int g, int u) {
  if (g < 1 || u < 3) throw std::invalid_argument("complete_lgdd needs g ≥ 1, u ≥ 3");
  const int v = g * u;
  BlockMultiset all;
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y)
      for (int z = y + 1; z < v; ++z)
        if (x / g != y / g && y / g != z / g) all[{x, y, z}] = 1;
  return make_large_set({g * (u - 2), g, u}, {std::move(all)});
}

GoodLargeSet trivial_gls(int v) {
  if (v < 3) throw std::invalid_argument("trivial_gls needs v ≥ 3");
  GoodLargeSet g;
  g.base.v = v;
  g.base.lambda = 1;
  Block all(static_cast<std::size_t>(v));
  for (int x = 0; x < v; ++x) all[x] = x;
  g.base.profile = {{3}, {3}, {v}};
  g.base.members.assign(static_cast<std::size_t>(v - 2), BlockMultiset{{all, 1}});
  g.digraphs.assign(static_cast<std::size_t>(v - 2), {});
  return g;
}

Quasigroup quasigroup_icq(int w) {
  if (w < 1 || w % 2 == 0) throw std::invalid_argument("quasigroup_icq needs odd w");
  Quasigroup q{w, std::vector<int>(static_cast<std::size_t>(w) * w)};
  const int h = (w + 1) / 2;
  for (int a = 0; a < w; ++a)
    for (int b = 0; b < w; ++b) q.table[static_cast<std::size_t>(a) * w + b] = (h * (a + b)) % w;
  return q;
}

std::vector<std::string> quasigroup_violations(const Quasigroup& q) {
  std::vector<std::string> bad;
  const int w = q.w;
  for (int a = 0; a < w; ++a) {
    std::vector<int> row(w, 0), col(w, 0);
    for (int b = 0; b < w; ++b) {
      ++row[q.op(a, b)];
      ++col[q.op(b, a)];
      if (q.op(a, b) != q.op(b, a)) bad.push_back("commutative at " + std::to_string(a) + "," + std::to_string(b));
    }
    for (int x = 0; x < w; ++x)
      if (row[x] != 1 || col[x] != 1) bad.push_back("latin at row/column " + std::to_string(a));
    if (q.op(a, a) != a) bad.push_back("idempotent at " + std::to_string(a));
  }
  return bad;
}

FanDesign boolean_sqs_fan(int k) {
  if (k < 2 || k > 6) throw std::invalid_argument("boolean_sqs_fan needs 2 ≤ k ≤ 6");
  const int n = 1 << k;
  FanDesign f;
  f.v = n - 1;
  for (int x = 0; x < n - 1; ++x) f.groups.push_back({x});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const int d = a ^ b ^ c;
        if (d <= c) continue;
        if (d == n - 1) f.a1.push_back({a, b, c});
        else f.t.push_back({a, b, c, d});
      }
  return f;
}

FanDesign sqs8_fan() { return boolean_sqs_fan(3); }

std::array<std::vector<Row3>, 3> ls98_tables() {
  TableFile tf = parse_table(table_text("ls98_tables"));
  std::array<std::vector<Row3>, 3> out;
  for (int i = 0; i < 3; ++i)
    for (const auto& row : tf.sections.at({"table", i})) {
      if (row.size() != 3) throw std::runtime_error("ls98 row needs three entries");
      out[i].push_back({std::stoi(row[0]), std::stoi(row[1]), std::stoi(row[2])});
    }
  return out;
}

}  // namespace lsg
