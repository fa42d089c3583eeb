#pragma once

#include <string>
#include <variant>

#include "json.hpp"
#include "lsg/core.hpp"
#include "lsg/verifier.hpp"

namespace lsg {

using AnyDesign = std::variant<GroupedDesign, LargeSet, HoledLargeSet, GoodLargeSet, LRDesign, Frame, FanDesign>;

struct DesignDocument {
  int version = 1;
  AnyDesign design;
  DesignParams params;  // λ for a GDD; mirrors LargeSet params
  bool star = false;    // holed_ls / gls
  bool simple = false;  // gdd
  std::string provenance;
  bool recorded_pass = true;
  std::size_t recorded_violations = 0;
};

std::string kind_name(const AnyDesign& d);

nlohmann::json to_json(const DesignDocument& doc);
// Throws std::runtime_error on a structural problem.
DesignDocument from_json(const nlohmann::json& j);

// Sorted keys; scalar arrays and flat objects stay on one line.
std::string canonical_dump(const nlohmann::json& j);

std::string export_document(const DesignDocument& doc);
// Accepts // comment lines (certificate headers).
DesignDocument import_document(const std::string& text);

// Verifies with the checker matching the document kind.
VerificationReport verify_document(const DesignDocument& doc, const VerifyOptions& o = {});

// Fills recorded_* from a fresh verification and returns the report.
VerificationReport stamp_report(DesignDocument& doc, const VerifyOptions& o = {});

std::string hex64(std::uint64_t x);

}  // namespace lsg
