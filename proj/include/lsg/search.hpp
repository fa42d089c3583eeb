#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lsg/core.hpp"
#include "lsg/verifier.hpp"

namespace lsg {

struct SearchBudget {
  long long nodes = 100'000'000;
  double seconds = 600.0;
};

enum class SearchStatus { found, exhausted, timeout };

struct SearchStats {
  long long nodes = 0;
  double seconds = 0.0;
};

// Exact cover with demands: choose a set of options (each at most once) so that item i
// is covered exactly demand[i] times. Branches on the item of least slack.
class ExactCover {
 public:
  explicit ExactCover(std::vector<int> demand);
  int add_option(std::vector<int> items);
  std::size_t option_count() const { return options_.size(); }

  // Options tried first within each branching item follow this order; default is index order.
  void set_priority(std::vector<int> order);

  // Callback returns true to stop. forced options are taken before the search starts.
  SearchStatus solve(const SearchBudget& budget, const std::vector<int>& forced,
                     const std::function<bool(const std::vector<int>&)>& on_solution, SearchStats* stats = nullptr);

 private:
  void kill(int o);
  int multiplicity(int o, int j) const;
  void prune_item(int j);
  void select(int o);
  void unselect(int o);
  void restore_to(std::size_t mark);
  bool recurse(int depth);

  std::vector<int> demand_;
  std::vector<std::vector<int>> options_;
  std::vector<std::vector<int>> item_options_;
  std::vector<int> rank_;
  std::vector<int> count_;
  std::vector<char> alive_;
  std::vector<int> trail_;
  std::vector<int> chosen_;
  const std::function<bool(const std::vector<int>&)>* callback_ = nullptr;
  SearchBudget budget_;
  long long nodes_ = 0;
  double start_ = 0.0;
  bool stop_ = false;
  bool timed_out_ = false;
  bool found_any_ = false;
};

// Deterministic Fisher–Yates over mt19937_64 (std::shuffle is implementation-defined).
void seeded_shuffle(std::vector<int>& v, std::uint64_t seed);

enum class SearchKind { lgdd, frame, lr, simple_gdd, ls_plain };

std::string to_string(SearchKind k);
std::optional<SearchKind> parse_search_kind(const std::string& s);

struct SearchTask {
  SearchKind kind = SearchKind::lgdd;
  int lambda = 1;
  int g = 1;
  int u = 3;
  int v = 0;  // lr order; ls_plain point count
  int m = 0;  // frame group size
  int k = 0;  // frame group count
  SearchBudget budget;
  std::uint64_t seed = 0;
};

SearchTask lgdd_task(int g, int u, int lambda, std::uint64_t seed = 0);
SearchTask frame_task(int m, int k, std::uint64_t seed = 0);
SearchTask lr_task(int v, std::uint64_t seed = 0);
SearchTask simple_gdd_task(int lambda, int g, int u, std::uint64_t seed = 0);

// Identifies a task up to its budget.
std::string fingerprint(const SearchTask& t);

using SearchObject = std::variant<LargeSet, Frame, LRDesign, GroupedDesign>;

struct SearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<SearchObject> object;
  SearchStats stats;
  std::string message;
  bool from_certificate = false;
};

VerificationReport verify_search_object(const SearchTask& t, const SearchObject& obj);

// Runs the search; a found object has already passed verification.
SearchResult search(const SearchTask& t);

// Every STS on v points, in solver order.
std::vector<std::vector<Block>> all_steiner_triple_systems(int v);
// Partition of STS blocks into parallel classes, with `first` (if non-empty) as class 0.
std::optional<Resolution> resolve_sts(int v, const std::vector<Block>& blocks, const std::vector<Block>& first = {});

struct Certificate {
  std::string fingerprint;
  std::uint64_t seed = 0;
  SearchObject object;
  std::string report_digest;
  SearchStats stats;
};

class CertificateStore {
 public:
  explicit CertificateStore(std::filesystem::path dir);
  // LSGDD_CACHE, when set.
  static std::optional<std::filesystem::path> default_dir();

  std::filesystem::path path_for(const SearchTask& t) const;
  // Absent on a missing file, a fingerprint mismatch, a parse error or a failed re-verification.
  std::optional<Certificate> load(const SearchTask& t, std::vector<std::string>* warnings = nullptr) const;
  void save(const SearchTask& t, const Certificate& c) const;

 private:
  std::filesystem::path dir_;
};

// Certificate first, then search; a fresh success is stored when a store is given.
SearchResult search_cached(const SearchTask& t, const CertificateStore* store,
                           std::vector<std::string>* warnings = nullptr);

struct IngredientEntry {
  std::string name;
  std::string provider;  // "closed-form" or "searched" or "derived-by-inflation"
  std::string source;
};

std::vector<IngredientEntry> required_ingredients();

}  // namespace lsg
