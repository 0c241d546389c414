#pragma once

#include <map>
#include <string>
#include <vector>

#include "hilbfan/fan.hpp"

namespace hilbfan {

enum class ClaimStatus { pass, fail, range };
std::string to_string(ClaimStatus s);

struct ClaimReport {
  std::string id;          // prop33, claim1..claim8, figure1, figure2-n, cor34-properties, figure3
  std::string parameters;  // e.g. "n=3 k=2"
  ClaimStatus status = ClaimStatus::pass;
  std::string expected;
  std::string computed;
  unsigned characteristic = 0;
  std::string note;
};

struct VerifySummary {
  long pass = 0;
  long fail = 0;
  long range = 0;
};
VerifySummary summarize(const std::vector<ClaimReport>& reports);

/// Claim checks against computed fans of (x,y^4)^n. Fans are computed once
/// per n and reused.
class Verifier {
public:
  explicit Verifier(std::string golden_dir);

  const Fan2D& fan(int n);

  std::vector<ClaimReport> quadrant_identities();
  std::vector<ClaimReport> claim(int k, int n);
  ClaimReport figure1();
  ClaimReport figure2(int n);
  ClaimReport smooth_fan_check();
  std::vector<ClaimReport> figure3();

private:
  std::string golden_;
  std::map<int, Fan2D> fans_;
};

struct VerifyOptions {
  int max_n = 6;
  std::string golden_dir;
  bool figure3 = true;
};

std::vector<ClaimReport> verify_all(const VerifyOptions& opts);

/// {"schema_version", "reports": [...], "summary": {"pass","fail","range"}}
std::string reports_json(const std::vector<ClaimReport>& reports);

/// The expected step sequence of a claim, or empty when (n, k) is outside the
/// claim's range. k is only used by claims 5 and 6.
std::vector<int> claim_steps(int claim, int n, int k = 0);

}  // namespace hilbfan
