// Copyright 2026 The g2mono Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "g2mono/exact/error.hpp"
#include "g2mono/exact/json_io.hpp"

namespace g2mono {

inline constexpr const char* kToolkitVersion = "0.1.0";

enum class CheckStatus { Pass, Fail, NotProvided };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotProvided: return "not-provided";
  }
  return "fail";
}

struct CheckResult {
  std::string id;
  std::string description;
  std::string anchor;  ///< the claim this check certifies
  CheckStatus status = CheckStatus::Fail;
  std::optional<Json> witness;  ///< always present on failure
};

struct Certificate {
  int family = 0;
  std::string toolkit_version = kToolkitVersion;
  std::vector<CheckResult> checks;

  bool overall() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }

  const CheckResult* find(std::string_view id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
};

enum class ReportFormat { Json, Text };

inline ReportFormat parse_report_format(std::string_view s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "text") return ReportFormat::Text;
  throw UsageError("unknown report format '" + std::string(s) + "' (expected json or text)");
}

inline Json certificate_to_json(const Certificate& cert) {
  Json j;
  j["family"] = cert.family;
  j["toolkit_version"] = cert.toolkit_version;
  j["overall"] = cert.overall();
  Json checks = Json::array();
  for (const auto& c : cert.checks) {
    Json cj;
    cj["id"] = c.id;
    cj["description"] = c.description;
    cj["anchor"] = c.anchor;
    cj["status"] = to_string(c.status);
    cj["witness"] = c.witness ? *c.witness : Json(nullptr);
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

/// Deterministic serialization; identical certificates give identical bytes.
inline std::string render_report(const Certificate& cert, ReportFormat format) {
  if (format == ReportFormat::Json) return certificate_to_json(cert).dump(2) + "\n";
  std::ostringstream os;
  std::size_t passed = 0, failed = 0, missing = 0;
  for (const auto& c : cert.checks) {
    switch (c.status) {
      case CheckStatus::Pass: ++passed; break;
      case CheckStatus::Fail: ++failed; break;
      case CheckStatus::NotProvided: ++missing; break;
    }
  }
  os << "family " << cert.family << " certificate (g2mono " << cert.toolkit_version << "): "
     << (cert.overall() ? "PASS" : "FAIL") << " [" << passed << " pass, " << failed << " fail, " << missing
     << " not-provided]\n";
  for (const auto& c : cert.checks) {
    std::string tag = to_string(c.status);
    for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << tag << "  " << c.id << "  " << c.description << "  {" << c.anchor << "}";
    if (c.status == CheckStatus::Fail && c.witness) os << "  witness=" << c.witness->dump();
    os << '\n';
  }
  return os.str();
}

inline std::string render_report(const Certificate& cert, std::string_view format) {
  return render_report(cert, parse_report_format(format));
}

}  // namespace g2mono
