#pragma once

#include <string>
#include <vector>

namespace hatilt {

enum class ClaimStatus { pass, fail, skipped };
std::string to_string(ClaimStatus s);

struct ClaimResult {
  std::string name;
  ClaimStatus status = ClaimStatus::skipped;
  std::string value;
  long long ms = 0;
};

struct VerifyConfig {
  int d = 0;
  int n = 0;
  /// bound on resolution lengths; 0 means nd + 2
  int max_len = 0;
  /// thick-generation search depth for the generation_search claim
  int search_depth = 2;
  int effective_max_len() const { return max_len > 0 ? max_len : n * d + 2; }
};

/// Every claim name in report order.
const std::vector<std::string>& claim_names();
/// Throws PreconditionError on unknown names. "all" expands to every claim except
/// generation_search, which must be named explicitly.
std::vector<std::string> parse_claims(const std::string& list);

/// Runs one claim. Budget exhaustion yields a skipped result and any other failure a fail result.
ClaimResult run_claim(const std::string& name, const VerifyConfig& cfg);

const char* tool_version();

}  // namespace hatilt
