#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "lsg/core.hpp"

namespace lsg {

struct Violation {
  std::string law;
  std::string witness;
};

struct VerificationReport {
  bool passed = true;
  std::vector<Violation> violations;
  std::size_t total = 0;
  std::size_t cap = 10;

  void fail(std::string law, std::string witness);
  void absorb(const VerificationReport& other, const std::string& prefix = "");
  bool has_law(const std::string& law) const;
  std::string summary() const;
};

struct VerifyOptions {
  std::size_t cap = 10;
  int threads = 1;
};

std::string block_str(const Block& b);

VerificationReport verify_gdd(const GroupedDesign& d, int lambda, const VerifyOptions& o = {});
VerificationReport verify_simple(const BlockMultiset& blocks, const VerifyOptions& o = {});
VerificationReport verify_simple(const GroupedDesign& d, const VerifyOptions& o = {});
VerificationReport verify_large_set(const LargeSet& ls, const VerifyOptions& o = {});
VerificationReport verify_ls(const HoledLargeSet& h, const VerifyOptions& o = {});
VerificationReport verify_ls_star(const HoledLargeSet& h, const VerifyOptions& o = {});
VerificationReport verify_gls(const GoodLargeSet& g, bool star, const VerifyOptions& o = {});

VerificationReport verify_resolution(const Resolution& r, const VerifyOptions& o = {});
VerificationReport verify_lr(const LRDesign& lr, const VerifyOptions& o = {});
VerificationReport verify_frame(const Frame& f, const VerifyOptions& o = {});
VerificationReport verify_fan(const FanDesign& f, const VerifyOptions& o = {});

using AuxObject = std::variant<Resolution, LRDesign, Frame, FanDesign>;
VerificationReport verify_auxiliary(const AuxObject& obj, const VerifyOptions& o = {});

}  // namespace lsg
