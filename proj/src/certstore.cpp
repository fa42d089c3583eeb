#include <cstdlib>
#include <map>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lsg/catalog.hpp"
#include "lsg/document.hpp"
#include "lsg/search.hpp"

namespace lsg {

namespace {

const char* kHeader = "// lsgdd-certificate";

DesignDocument doc_for(const SearchObject& obj, const SearchTask& t) {
  DesignDocument d;
  std::visit([&](const auto& x) { d.design = x; }, obj);
  if (t.kind == SearchKind::simple_gdd) {
    d.params = {t.lambda, t.g, t.u};
    d.simple = true;
  }
  if (const auto* ls = std::get_if<LargeSet>(&obj)) d.params = ls->params;
  d.provenance = "search " + fingerprint(t);
  return d;
}

std::optional<SearchObject> object_from(const DesignDocument& d) {
  return std::visit(
      [](const auto& x) -> std::optional<SearchObject> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, LargeSet> || std::is_same_v<T, Frame> || std::is_same_v<T, LRDesign> ||
                      std::is_same_v<T, GroupedDesign>)
          return SearchObject(x);
        else
          return std::nullopt;
      },
      d.design);
}

std::string report_digest(const std::string& body) { return hex64(fnv1a64(body)); }

}  // namespace

CertificateStore::CertificateStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<std::filesystem::path> CertificateStore::default_dir() {
  const char* env = std::getenv("LSGDD_CACHE");
  if (env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

std::filesystem::path CertificateStore::path_for(const SearchTask& t) const {
  return dir_ / (fingerprint(t) + ".json");
}

std::optional<Certificate> CertificateStore::load(const SearchTask& t, std::vector<std::string>* warnings) const {
  const auto path = path_for(t);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  auto warn = [&](const std::string& w) {
    if (warnings) warnings->push_back(path.string() + ": " + w);
  };
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  std::istringstream lines(text);
  std::string header;
  std::getline(lines, header);
  if (header.rfind(kHeader, 0) != 0) {
    warn("missing certificate header; ignored");
    return std::nullopt;
  }
  std::map<std::string, std::string> fields;
  std::istringstream hs(header.substr(std::string(kHeader).size()));
  std::string tok;
  while (hs >> tok) {
    const auto eq = tok.find('=');
    if (eq != std::string::npos) fields[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  if (fields["fingerprint"] != fingerprint(t)) return std::nullopt;
  try {
    const auto nl = text.find('\n');
    const std::string body = text.substr(nl + 1);
    DesignDocument doc = import_document(body);
    auto obj = object_from(doc);
    if (!obj) {
      warn("certificate holds the wrong kind; ignored");
      return std::nullopt;
    }
    const auto rep = verify_search_object(t, *obj);
    if (!rep.passed) {
      warn("certificate fails re-verification; ignored (" + rep.violations.front().law + ")");
      return std::nullopt;
    }
    Certificate c{fields["fingerprint"], std::stoull(fields["seed"]), std::move(*obj), fields["digest"], {}};
    c.stats.nodes = std::stoll(fields["nodes"]);
    return c;
  } catch (const std::exception& e) {
    warn(std::string("corrupt certificate ignored: ") + e.what());
    return std::nullopt;
  }
}

void CertificateStore::save(const SearchTask& t, const Certificate& c) const {
  std::filesystem::create_directories(dir_);
  DesignDocument doc = doc_for(c.object, t);
  stamp_report(doc);
  const std::string body = export_document(doc);
  std::ostringstream os;
  os << kHeader << " fingerprint=" << c.fingerprint << " seed=" << c.seed << " digest=" << report_digest(body)
     << " nodes=" << c.stats.nodes << "\n"
     << body;
  const auto path = path_for(t);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << os.str();
  }
  std::filesystem::rename(tmp, path);
}

SearchResult search_cached(const SearchTask& t, const CertificateStore* store, std::vector<std::string>* warnings) {
  if (store) {
    if (auto c = store->load(t, warnings)) {
      SearchResult r;
      r.status = SearchStatus::found;
      r.object = std::move(c->object);
      r.stats = c->stats;
      r.from_certificate = true;
      return r;
    }
  }
  SearchResult r = search(t);
  if (store && r.status == SearchStatus::found && r.object) {
    Certificate c{fingerprint(t), t.seed, *r.object, "", r.stats};
    store->save(t, c);
  }
  return r;
}

}  // namespace lsg
