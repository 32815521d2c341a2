#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cochain/field.hpp"
#include "cochain/tensor.hpp"

namespace cochain {

inline constexpr const char* kReportSchema = "v1";

struct Check {
  std::string name;
  bool passed = true;
  double worst_residual = 0.0;
  std::optional<MultiIndex> witness_index;
  std::optional<Point> witness_point;
  std::string detail;
};

// Ordered list of identity checks. Overall pass iff every check passes.
// Output contains no timing or addresses, so equal inputs give
// byte-identical text and JSON.
class VerificationReport {
 public:
  explicit VerificationReport(std::string subject = {}) : subject_(std::move(subject)) {}

  void add(Check check) { checks_.push_back(std::move(check)); }
  void append(const VerificationReport& other);

  const std::string& subject() const { return subject_; }
  const std::vector<Check>& checks() const { return checks_; }
  bool overall() const;
  const Check* first_failure() const;

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;

 private:
  std::string subject_;
  std::vector<Check> checks_;
};

std::string format_residual(double r);

}  // namespace cochain
