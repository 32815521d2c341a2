#include "cochain/report.hpp"

#include <cstdio>

namespace cochain {

std::string format_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", r);
  return buf;
}

void VerificationReport::append(const VerificationReport& other) {
  for (const auto& c : other.checks_) checks_.push_back(c);
}

bool VerificationReport::overall() const { return first_failure() == nullptr; }

const Check* VerificationReport::first_failure() const {
  for (const auto& c : checks_) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["subject"] = subject_;
  doc["overall"] = overall() ? "pass" : "fail";
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["status"] = c.passed ? "pass" : "fail";
    j["worst_residual"] = format_residual(c.worst_residual);
    if (c.witness_index || c.witness_point) {
      nlohmann::ordered_json w;
      if (c.witness_index) w["index"] = *c.witness_index;
      if (c.witness_point) {
        auto coords = nlohmann::ordered_json::array();
        for (const auto& x : c.witness_point->coords) coords.push_back(to_string(x));
        w["point"] = coords;
      }
      j["witness"] = w;
    } else {
      j["witness"] = nullptr;
    }
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  doc["checks"] = std::move(checks);
  return doc;
}

std::string VerificationReport::to_text() const {
  std::string out;
  if (!subject_.empty()) out += subject_ + "\n";
  for (const auto& c : checks_) {
    out += c.passed ? "  PASS  " : "  FAIL  ";
    out += c.name + "  residual=" + format_residual(c.worst_residual);
    if (c.witness_index) out += "  index=" + to_string(*c.witness_index);
    if (c.witness_point) out += "  x=" + c.witness_point->to_string();
    if (!c.detail.empty()) out += "  (" + c.detail + ")";
    out += "\n";
  }
  out += overall() ? "overall: pass\n" : "overall: fail\n";
  return out;
}

}  // namespace cochain
