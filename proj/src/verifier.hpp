#pragma once

#include "arm_instance.hpp"

#include <map>
#include <string>
#include <vector>

namespace armred {

// Tags of violated constraints; empty means all affine constraints hold.
std::vector<std::string> check_affine(const ArmInstance& inst, const RatMatrix& x);

struct RankReport {
  uint32_t rank = 0;
  bool ok = false;
};

RankReport check_rank(const ArmInstance& inst, const RatMatrix& x);

// Carrier entry values read off X.
std::map<std::string, Rat> decode(const ArmInstance& inst, const RatMatrix& x);

struct Verdict {
  bool accept = false;
  std::vector<std::string> violations;
  uint32_t rank = 0;
  std::map<std::string, Rat> decoded;
};

// Accept iff all affine constraints hold, rank(X) <= k, the decoded carrier
// values satisfy every gate equation exactly, and all outputs decode to 0.
// The gate re-check is redundant given gadget soundness; it is kept as an
// independent end-to-end oracle. The circuit must hash-match the instance.
Verdict verify(const ArmInstance& inst, const RatMatrix& x, const Circuit& circuit);

std::string verdict_json(const Verdict& v);

std::string decoded_json(const std::map<std::string, Rat>& decoded,
                         const ArmInstance& inst);

}  // namespace armred
