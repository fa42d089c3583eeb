#include "lsg/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lsg/catalog.hpp"

namespace lsg {

namespace {

double now_seconds() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

}  // namespace

void seeded_shuffle(std::vector<int>& v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

ExactCover::ExactCover(std::vector<int> demand) : demand_(std::move(demand)), item_options_(demand_.size()) {}

int ExactCover::add_option(std::vector<int> items) {
  const int id = static_cast<int>(options_.size());
  for (int i : items) item_options_.at(static_cast<std::size_t>(i)).push_back(id);
  options_.push_back(std::move(items));
  rank_.push_back(id);
  return id;
}

void ExactCover::set_priority(std::vector<int> order) {
  for (std::size_t k = 0; k < order.size(); ++k) rank_.at(static_cast<std::size_t>(order[k])) = static_cast<int>(k);
}

void ExactCover::kill(int o) {
  if (!alive_[o]) return;
  alive_[o] = 0;
  for (int j : options_[o]) --count_[j];
  trail_.push_back(o);
}

void ExactCover::restore_to(std::size_t mark) {
  while (trail_.size() > mark) {
    const int o = trail_.back();
    trail_.pop_back();
    alive_[o] = 1;
    for (int j : options_[o]) ++count_[j];
  }
}

int ExactCover::multiplicity(int o, int j) const {
  return static_cast<int>(std::count(options_[o].begin(), options_[o].end(), j));
}

void ExactCover::prune_item(int j) {
  for (int o2 : item_options_[j])
    if (alive_[o2] && (demand_[j] == 0 || multiplicity(o2, j) > demand_[j])) kill(o2);
}

void ExactCover::select(int o) {
  kill(o);
  chosen_.push_back(o);
  for (int j : options_[o]) --demand_[j];
  for (int j : options_[o]) prune_item(j);
}

void ExactCover::unselect(int o) {
  chosen_.pop_back();
  for (int j : options_[o]) ++demand_[j];
}

bool ExactCover::recurse(int depth) {
  if (++nodes_ >= budget_.nodes || ((nodes_ & 4095) == 0 && now_seconds() - start_ > budget_.seconds)) {
    timed_out_ = true;
    stop_ = true;
    return true;
  }
  int best = -1, best_slack = 0, best_count = 0;
  for (std::size_t i = 0; i < demand_.size(); ++i) {
    if (demand_[i] <= 0) continue;
    const int slack = count_[i] - demand_[i];
    if (slack < 0) return false;
    if (best < 0 || slack < best_slack || (slack == best_slack && count_[i] < best_count)) {
      best = static_cast<int>(i);
      best_slack = slack;
      best_count = count_[i];
    }
  }
  if (best < 0) {
    stop_ = (*callback_)(chosen_);
    found_any_ = true;
    return stop_;
  }
  std::vector<int> cands;
  for (int o : item_options_[best])
    if (alive_[o]) cands.push_back(o);
  const std::size_t outer = trail_.size();
  for (int o : cands) {
    if (!alive_[o]) continue;
    if (count_[best] < demand_[best]) break;
    const std::size_t mark = trail_.size();
    select(o);
    const bool stop = recurse(depth + 1);
    unselect(o);
    restore_to(mark);
    if (stop) break;
    kill(o);
  }
  restore_to(outer);
  return stop_;
}

SearchStatus ExactCover::solve(const SearchBudget& budget, const std::vector<int>& forced,
                               const std::function<bool(const std::vector<int>&)>& on_solution, SearchStats* stats) {
  budget_ = budget;
  callback_ = &on_solution;
  nodes_ = 0;
  stop_ = timed_out_ = found_any_ = false;
  start_ = now_seconds();
  std::vector<int> saved = demand_;
  count_.assign(demand_.size(), 0);
  alive_.assign(options_.size(), 1);
  trail_.clear();
  chosen_.clear();
  for (auto& lst : item_options_)
    std::stable_sort(lst.begin(), lst.end(), [&](int a, int b) { return rank_[a] < rank_[b]; });
  for (const auto& opt : options_)
    for (int j : opt) ++count_[j];
  for (std::size_t i = 0; i < demand_.size(); ++i) prune_item(static_cast<int>(i));
  bool feasible = true;
  for (int o : forced) {
    if (!alive_[o]) {
      feasible = false;
      break;
    }
    select(o);
  }
  if (feasible) recurse(0);
  demand_ = saved;
  if (stats) {
    stats->nodes = nodes_;
    stats->seconds = now_seconds() - start_;
  }
  if (found_any_) return SearchStatus::found;
  return timed_out_ ? SearchStatus::timeout : SearchStatus::exhausted;
}

std::string to_string(SearchKind k) {
  switch (k) {
    case SearchKind::lgdd: return "lgdd";
    case SearchKind::frame: return "frame";
    case SearchKind::lr: return "lr";
    case SearchKind::simple_gdd: return "simple_gdd";
    case SearchKind::ls_plain: return "ls_plain";
  }
  return "?";
}

std::optional<SearchKind> parse_search_kind(const std::string& s) {
  for (auto k : {SearchKind::lgdd, SearchKind::frame, SearchKind::lr, SearchKind::simple_gdd, SearchKind::ls_plain})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

SearchTask lgdd_task(int g, int u, int lambda, std::uint64_t seed) {
  SearchTask t;
  t.kind = SearchKind::lgdd;
  t.g = g;
  t.u = u;
  t.lambda = lambda;
  t.seed = seed;
  return t;
}

SearchTask frame_task(int m, int k, std::uint64_t seed) {
  SearchTask t;
  t.kind = SearchKind::frame;
  t.m = m;
  t.k = k;
  t.seed = seed;
  return t;
}

SearchTask lr_task(int v, std::uint64_t seed) {
  SearchTask t;
  t.kind = SearchKind::lr;
  t.v = v;
  t.seed = seed;
  return t;
}

SearchTask simple_gdd_task(int lambda, int g, int u, std::uint64_t seed) {
  SearchTask t = lgdd_task(g, u, lambda, seed);
  t.kind = SearchKind::simple_gdd;
  return t;
}

std::string fingerprint(const SearchTask& t) {
  std::ostringstream os;
  os << to_string(t.kind);
  switch (t.kind) {
    case SearchKind::lgdd:
    case SearchKind::simple_gdd: os << "-g" << t.g << "-u" << t.u << "-l" << t.lambda; break;
    case SearchKind::ls_plain: os << "-v" << t.v << "-l" << t.lambda; break;
    case SearchKind::frame: os << "-m" << t.m << "-k" << t.k; break;
    case SearchKind::lr: os << "-v" << t.v; break;
  }
  os << "-s" << t.seed;
  return os.str();
}

namespace {

struct TransverseIndex {
  int v, g;
  std::vector<int> pair_id;
  std::vector<std::array<int, 3>> triples;
  int pairs = 0;

  TransverseIndex(int g_, int u) : v(g_ * u), g(g_), pair_id(static_cast<std::size_t>(v) * v, -1) {
    for (int x = 0; x < v; ++x)
      for (int y = x + 1; y < v; ++y)
        if (x / g != y / g) pair_id[static_cast<std::size_t>(x) * v + y] = pairs++;
    for (int x = 0; x < v; ++x)
      for (int y = x + 1; y < v; ++y)
        for (int z = y + 1; z < v; ++z)
          if (x / g != y / g && y / g != z / g && x / g != z / g) triples.push_back({x, y, z});
  }
  int pid(int x, int y) const { return pair_id[static_cast<std::size_t>(std::min(x, y)) * v + std::max(x, y)]; }
};

std::vector<int> priority_for(std::size_t n, std::uint64_t seed) {
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  if (seed != 0) seeded_shuffle(order, seed);
  return order;
}

SearchResult search_lgdd(const SearchTask& t, int g, int u) {
  SearchResult res;
  const DesignParams p{t.lambda, g, u};
  const Decision d = admissible_lgdd(p);
  if (!d.ok) {
    res.message = "inadmissible: " + d.violated.front();
    return res;
  }
  const TransverseIndex ti(g, u);
  const int R = g * (u - 2) / t.lambda, P = ti.pairs, T = static_cast<int>(ti.triples.size());
  std::vector<int> demand(static_cast<std::size_t>(R) * P + T, 1);
  for (int i = 0; i < R * P; ++i) demand[i] = t.lambda;
  ExactCover ec(demand);
  for (int r = 0; r < R; ++r)
    for (int k = 0; k < T; ++k) {
      const auto& [a, b, c] = ti.triples[k];
      ec.add_option({r * P + ti.pid(a, b), r * P + ti.pid(a, c), r * P + ti.pid(b, c), R * P + k});
    }
  ec.set_priority(priority_for(ec.option_count(), t.seed));
  // Members are interchangeable: the j-th triple through {0,g} goes to member j.
  std::vector<int> forced;
  int j = 0;
  for (int k = 0; k < T; ++k) {
    const auto& tr = ti.triples[k];
    if (tr[0] != 0 || tr[1] != g) continue;
    if (t.lambda == 1) forced.push_back(j++ * T + k);
    else if (forced.empty()) forced.push_back(k);
  }
  std::vector<int> sol;
  res.status = ec.solve(t.budget, forced, [&](const std::vector<int>& s) { sol = s; return true; }, &res.stats);
  if (res.status == SearchStatus::found) {
    std::vector<BlockMultiset> members(static_cast<std::size_t>(R));
    for (int o : sol) {
      const auto& tr = ti.triples[o % T];
      members[o / T][{tr[0], tr[1], tr[2]}] = 1;
    }
    res.object = make_large_set(p, std::move(members));
  }
  return res;
}

// Members invariant under the in-group shift (j,a) -> (j,a+1): each member is a union of
// triple orbits of length g.
std::optional<SearchResult> search_lgdd_cyclic(const SearchTask& t, int g, int u) {
  const int n = g * u;
  const DesignParams p{t.lambda, g, u};
  if (!admissible_lgdd(p).ok) return std::nullopt;
  const int R = g * (u - 2) / t.lambda;
  if (g < 2) return std::nullopt;
  auto shift = [g](int x, int k) { return (x / g) * g + (x % g + k) % g; };
  auto orbit_of = [&](const Block& b) {
    std::set<Block> orb;
    for (int k = 0; k < g; ++k) {
      Block c;
      for (Point x : b) c.push_back(shift(x, k));
      orb.insert(normalize(c));
    }
    return orb;
  };
  std::map<Block, int> pair_orbit;
  std::vector<Block> pair_rep;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (x / g == y / g || pair_orbit.count({x, y})) continue;
      for (const auto& q : orbit_of({x, y})) pair_orbit[q] = static_cast<int>(pair_rep.size());
      pair_rep.push_back({x, y});
    }
  std::vector<std::set<Block>> orbits;
  std::set<Block> seen;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (a / g == b / g || b / g == c / g || a / g == c / g || seen.count({a, b, c})) continue;
        auto orb = orbit_of({a, b, c});
        if (static_cast<int>(orb.size()) != g) return std::nullopt;
        seen.insert(orb.begin(), orb.end());
        orbits.push_back(std::move(orb));
      }
  const int Q = static_cast<int>(pair_rep.size()), O = static_cast<int>(orbits.size());
  std::vector<int> demand(static_cast<std::size_t>(R) * Q + O, 1);
  for (int i = 0; i < R * Q; ++i) demand[i] = t.lambda;
  ExactCover ec(demand);
  for (int r = 0; r < R; ++r)
    for (int o = 0; o < O; ++o) {
      std::vector<int> items;
      // one item entry per triple of the orbit through the orbit representative pair
      for (const auto& tr : orbits[o])
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j) {
            const Block pr{tr[i], tr[j]};
            const int q = pair_orbit.at(pr);
            if (pr == pair_rep[q]) items.push_back(r * Q + q);
          }
      items.push_back(R * Q + o);
      ec.add_option(items);
    }
  ec.set_priority(priority_for(ec.option_count(), t.seed));
  SearchResult res;
  std::vector<int> sol;
  SearchBudget b = t.budget;
  b.seconds = t.budget.seconds / 2;
  b.nodes = t.budget.nodes / 2;
  res.status = ec.solve(b, {0}, [&](const std::vector<int>& s) { sol = s; return true; }, &res.stats);
  if (res.status != SearchStatus::found) return res;
  std::vector<BlockMultiset> members(static_cast<std::size_t>(R));
  for (int o : sol)
    for (const auto& tr : orbits[o % O]) members[o / O][tr] = 1;
  res.object = make_large_set(p, std::move(members));
  return res;
}

SearchResult search_simple_gdd(const SearchTask& t) {
  SearchResult res;
  const DesignParams p{t.lambda, t.g, t.u};
  const Decision d = admissible_simple_gdd(p);
  if (!d.ok) {
    res.message = "inadmissible: " + d.violated.front();
    return res;
  }
  const TransverseIndex ti(t.g, t.u);
  ExactCover ec(std::vector<int>(static_cast<std::size_t>(ti.pairs), t.lambda));
  for (const auto& [a, b, c] : ti.triples) ec.add_option({ti.pid(a, b), ti.pid(a, c), ti.pid(b, c)});
  ec.set_priority(priority_for(ec.option_count(), t.seed));
  std::vector<int> sol;
  res.status = ec.solve(t.budget, {}, [&](const std::vector<int>& s) { sol = s; return true; }, &res.stats);
  if (res.status == SearchStatus::found) {
    GroupedDesign gd{ti.v, uniform_groups(t.g, t.u), {}};
    for (int o : sol) {
      const auto& tr = ti.triples[o];
      gd.blocks[{tr[0], tr[1], tr[2]}] = 1;
    }
    res.object = std::move(gd);
  }
  return res;
}

SearchResult search_frame(const SearchTask& t) {
  SearchResult res;
  const int m = t.m, k = t.k;
  if (m < 1 || k < 3 || (m * k) % 2 != 0 || (m * (k - 1) * (k - 2)) % 3 != 0) {
    res.message = "inadmissible frame parameters";
    return res;
  }
  const TransverseIndex ti(m, k);
  const int v = m * k, P = ti.pairs, T = static_cast<int>(ti.triples.size());
  std::vector<int> demand(static_cast<std::size_t>(v) * P + T, 0);
  for (int p = 0; p < v; ++p)
    for (int x = 0; x < v; ++x)
      for (int y = x + 1; y < v; ++y)
        if (x / m != y / m && x / m != p / m && y / m != p / m) demand[static_cast<std::size_t>(p) * P + ti.pid(x, y)] = 1;
  for (int i = 0; i < T; ++i) demand[static_cast<std::size_t>(v) * P + i] = 1;
  ExactCover ec(demand);
  std::vector<std::pair<int, int>> meaning;
  std::map<std::pair<int, int>, int> id;
  for (int p = 0; p < v; ++p)
    for (int i = 0; i < T; ++i) {
      const auto& [a, b, c] = ti.triples[i];
      const int h = p / m;
      if (a / m == h || b / m == h || c / m == h) continue;
      id[{p, i}] = ec.add_option({p * P + ti.pid(a, b), p * P + ti.pid(a, c), p * P + ti.pid(b, c), v * P + i});
      meaning.push_back({p, i});
    }
  ec.set_priority(priority_for(ec.option_count(), t.seed));
  // Classes of one group are interchangeable; with four groups the m triples through the
  // first pair of the complement are spread one per class.
  std::vector<int> forced;
  if (k == 4)
    for (int h = 0; h < k; ++h) {
      std::vector<int> others;
      for (int q = 0; q < k; ++q)
        if (q != h) others.push_back(q);
      const int x = others[0] * m, y = others[1] * m;
      int j = 0;
      for (int i = 0; i < T; ++i) {
        const auto& tr = ti.triples[i];
        if (tr[0] == x && tr[1] == y && tr[2] / m != h) forced.push_back(id.at({h * m + j++, i}));
      }
    }
  std::vector<int> sol;
  res.status = ec.solve(t.budget, forced, [&](const std::vector<int>& s) { sol = s; return true; }, &res.stats);
  if (res.status == SearchStatus::found) {
    Frame f{m, k, std::vector<std::vector<Block>>(static_cast<std::size_t>(v))};
    for (int o : sol) {
      const auto& [p, i] = meaning[o];
      const auto& tr = ti.triples[i];
      f.classes[p].push_back({tr[0], tr[1], tr[2]});
    }
    for (auto& c : f.classes) std::sort(c.begin(), c.end());
    res.object = std::move(f);
  }
  return res;
}

bool contains_all(const std::set<Block>& s, const std::vector<Block>& bs) {
  for (const auto& b : bs)
    if (!s.count(b)) return false;
  return true;
}

SearchResult search_lr(const SearchTask& t) {
  SearchResult res;
  const int v = t.v;
  if (v < 3 || v % 6 != 3) {
    res.message = "inadmissible LR order";
    return res;
  }
  const double start = now_seconds();
  const auto stss = all_steiner_triple_systems(v);
  std::vector<int> order = priority_for(stss.size(), t.seed);
  const int half = (v - 1) / 2;
  long long nodes = 0;
  for (int ai : order) {
    const auto& A = stss[ai];
    const auto resA = resolve_sts(v, A);
    if (!resA) continue;
    const std::set<Block> aset(A.begin(), A.end());
    // For each distinguished class: the systems that contain it and no other block of A.
    std::vector<std::vector<int>> cands(static_cast<std::size_t>(half));
    bool ok = true;
    for (int k = 0; k < half && ok; ++k) {
      const std::set<Block> cls(resA->classes[k].begin(), resA->classes[k].end());
      for (std::size_t s = 0; s < stss.size(); ++s) {
        const std::set<Block> bs(stss[s].begin(), stss[s].end());
        if (!contains_all(bs, resA->classes[k])) continue;
        bool clean = true;
        for (const auto& b : stss[s])
          if (aset.count(b) && !cls.count(b)) clean = false;
        if (clean) cands[k].push_back(static_cast<int>(s));
      }
      ok = cands[k].size() >= 2;
    }
    if (!ok) continue;
    // choose an unordered pair per class so that every triple is covered
    std::vector<std::pair<int, int>> pick(static_cast<std::size_t>(half));
    std::map<Block, int> cover;
    const long long need = static_cast<long long>(v) * (v - 1) * (v - 2) / 6;
    std::function<bool(int)> rec = [&](int k) -> bool {
      ++nodes;
      if (nodes > t.budget.nodes) return false;
      if (k == half) return static_cast<long long>(cover.size()) == need;
      for (std::size_t a = 0; a < cands[k].size(); ++a)
        for (std::size_t b = a + 1; b < cands[k].size(); ++b) {
          pick[k] = {cands[k][a], cands[k][b]};
          for (int s : {pick[k].first, pick[k].second})
            for (const auto& bl : stss[s]) ++cover[bl];
          if (rec(k + 1)) return true;
          for (int s : {pick[k].first, pick[k].second})
            for (const auto& bl : stss[s])
              if (--cover[bl] == 0) cover.erase(bl);
        }
      return false;
    };
    if (rec(0)) {
      LRDesign lr;
      lr.v = v;
      for (int k = 0; k < half; ++k) {
        std::array<Resolution, 2> pair;
        const int sel[2] = {pick[k].first, pick[k].second};
        for (int j = 0; j < 2; ++j) {
          auto r = resolve_sts(v, stss[sel[j]], resA->classes[k]);
          if (!r) throw std::logic_error("LR member lost its resolution");
          pair[j] = *r;
        }
        lr.members.push_back(pair);
      }
      res.status = SearchStatus::found;
      res.object = std::move(lr);
      break;
    }
    if (nodes > t.budget.nodes || now_seconds() - start > t.budget.seconds) {
      res.status = SearchStatus::timeout;
      break;
    }
  }
  res.stats = {nodes, now_seconds() - start};
  return res;
}

}  // namespace

std::vector<std::vector<Block>> all_steiner_triple_systems(int v) {
  std::vector<std::array<int, 3>> triples;
  std::vector<int> pid(static_cast<std::size_t>(v) * v, -1);
  int P = 0;
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y) pid[static_cast<std::size_t>(x) * v + y] = P++;
  ExactCover ec(std::vector<int>(static_cast<std::size_t>(P), 1));
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y)
      for (int z = y + 1; z < v; ++z) {
        triples.push_back({x, y, z});
        ec.add_option({pid[x * v + y], pid[x * v + z], pid[y * v + z]});
      }
  std::vector<std::vector<Block>> out;
  SearchBudget unlimited{1LL << 60, 1e18};
  ec.solve(unlimited, {}, [&](const std::vector<int>& s) {
    std::vector<Block> sys;
    for (int o : s) sys.push_back({triples[o][0], triples[o][1], triples[o][2]});
    std::sort(sys.begin(), sys.end());
    out.push_back(std::move(sys));
    return false;
  });
  return out;
}

std::optional<Resolution> resolve_sts(int v, const std::vector<Block>& blocks, const std::vector<Block>& first) {
  if (v % 3 != 0) return std::nullopt;
  const int per = v / 3;
  if (blocks.size() % static_cast<std::size_t>(per) != 0) return std::nullopt;
  const int ncls = static_cast<int>(blocks.size()) / per;
  // items: (class, point); options: (class, block)
  ExactCover ec(std::vector<int>(static_cast<std::size_t>(ncls) * v + blocks.size(), 1));
  std::vector<int> forced;
  std::set<Block> firsts(first.begin(), first.end());
  for (int c = 0; c < ncls; ++c)
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      std::vector<int> items;
      for (Point x : blocks[b]) items.push_back(c * v + x);
      items.push_back(ncls * v + static_cast<int>(b));
      const int o = ec.add_option(items);
      if (c == 0 && firsts.count(blocks[b])) forced.push_back(o);
    }
  if (!first.empty() && forced.size() != first.size()) return std::nullopt;
  // classes are interchangeable: the block holding point 0 in class c is the c-th such block
  if (first.empty()) {
    int c = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (blocks[b][0] == 0) forced.push_back(c++ * static_cast<int>(blocks.size()) + static_cast<int>(b));
  } else {
    int c = 1;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (blocks[b][0] == 0 && !firsts.count(blocks[b]))
        forced.push_back(c++ * static_cast<int>(blocks.size()) + static_cast<int>(b));
  }
  std::vector<int> sol;
  const auto st = ec.solve({10'000'000, 60.0}, forced, [&](const std::vector<int>& s) { sol = s; return true; });
  if (st != SearchStatus::found) return std::nullopt;
  Resolution r{v, std::vector<std::vector<Block>>(static_cast<std::size_t>(ncls))};
  for (int o : sol) r.classes[o / blocks.size()].push_back(blocks[o % blocks.size()]);
  for (auto& c : r.classes) std::sort(c.begin(), c.end());
  return r;
}

VerificationReport verify_search_object(const SearchTask& t, const SearchObject& obj) {
  VerificationReport rep;
  switch (t.kind) {
    case SearchKind::lgdd:
    case SearchKind::ls_plain: {
      const auto* ls = std::get_if<LargeSet>(&obj);
      if (!ls) {
        rep.fail("structure", "expected a large set");
        return rep;
      }
      const int g = t.kind == SearchKind::lgdd ? t.g : 1;
      const int u = t.kind == SearchKind::lgdd ? t.u : t.v;
      if (!(ls->params == DesignParams{t.lambda, g, u})) rep.fail("structure", "parameters differ from task");
      rep.absorb(verify_large_set(*ls));
      return rep;
    }
    case SearchKind::simple_gdd: {
      const auto* gd = std::get_if<GroupedDesign>(&obj);
      if (!gd) {
        rep.fail("structure", "expected a GDD");
        return rep;
      }
      if (gd->v != t.g * t.u || gd->groups != uniform_groups(t.g, t.u)) rep.fail("structure", "frame differs from task");
      rep.absorb(verify_gdd(*gd, t.lambda));
      rep.absorb(verify_simple(*gd));
      return rep;
    }
    case SearchKind::frame: {
      const auto* f = std::get_if<Frame>(&obj);
      if (!f) {
        rep.fail("structure", "expected a frame");
        return rep;
      }
      if (f->g != t.m || f->u != t.k) rep.fail("structure", "frame type differs from task");
      rep.absorb(verify_frame(*f));
      return rep;
    }
    case SearchKind::lr: {
      const auto* lr = std::get_if<LRDesign>(&obj);
      if (!lr) {
        rep.fail("structure", "expected an LR design");
        return rep;
      }
      if (lr->v != t.v) rep.fail("structure", "order differs from task");
      rep.absorb(verify_lr(*lr));
      return rep;
    }
  }
  return rep;
}

SearchResult search(const SearchTask& t) {
  SearchResult res;
  switch (t.kind) {
    case SearchKind::lgdd: {
      auto cyc = search_lgdd_cyclic(t, t.g, t.u);
      if (cyc && cyc->status == SearchStatus::found) {
        res = std::move(*cyc);
      } else {
        res = search_lgdd(t, t.g, t.u);
        if (cyc) res.stats.nodes += cyc->stats.nodes;
      }
      break;
    }
    case SearchKind::ls_plain: res = search_lgdd(t, 1, t.v); break;
    case SearchKind::simple_gdd: res = search_simple_gdd(t); break;
    case SearchKind::frame: res = search_frame(t); break;
    case SearchKind::lr: res = search_lr(t); break;
  }
  if (res.object) {
    const auto rep = verify_search_object(t, *res.object);
    if (!rep.passed) throw std::logic_error("search produced an unverified object: " + rep.summary());
  }
  return res;
}

std::vector<IngredientEntry> required_ingredients() {
  return {
      {"lgdd(2,3,1)", "closed-form", "lgdd_cube(2)"},
      {"lgdd(3,3,1)", "closed-form", "lgdd_cube(3)"},
      {"lgdd(2,4,1)", "searched", fingerprint(lgdd_task(2, 4, 1))},
      {"lgdd(2,6,1)", "searched", fingerprint(lgdd_task(2, 6, 1))},
      {"lgdd(3,5,1)", "searched", fingerprint(lgdd_task(3, 5, 1))},
      {"lgdd(6,3,1)", "closed-form", "lgdd_cube(6)"},
      {"lgdd(6,6,1)", "derived-by-inflation", "inflate(lgdd(2,6,1), 3)"},
      {"lgdd(1,6,2)", "closed-form", "table v6 viewed as LS(1,2;2,(3,{3}),6)"},
      {"lgdd(1,9,1)", "searched", fingerprint(lgdd_task(1, 9, 1))},
      {"lgdd(1,12,2)", "searched", fingerprint(lgdd_task(1, 12, 2))},
      {"simple_gdd(1,1,7)", "searched", fingerprint(simple_gdd_task(1, 1, 7))},
      {"simple_gdd(2,1,7)", "searched", fingerprint(simple_gdd_task(2, 1, 7))},
      {"simple_gdd(3,1,7)", "searched", fingerprint(simple_gdd_task(3, 1, 7))},
      {"simple_gdd(4,1,7)", "searched", fingerprint(simple_gdd_task(4, 1, 7))},
      {"simple_gdd(5,1,7)", "searched", fingerprint(simple_gdd_task(5, 1, 7))},
      {"frame(3,4)", "searched", fingerprint(frame_task(3, 4))},
      {"lr(9)", "searched", fingerprint(lr_task(9))},
  };
}

}  // namespace lsg
