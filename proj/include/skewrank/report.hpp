#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

namespace skewrank {

/// Outcome of one verification scenario.  "certified" marks claims about
/// the infinite rings B and B' that hold by a proved transfer from a
/// decidable condition on A; the witness records the certificate chain.
struct Claim {
  std::string name;
  std::string status;  // "pass" | "fail" | "certified"
  nlohmann::json witness;
};

struct Report {
  std::string scenario;
  std::vector<Claim> claims;
  long long timing_ms = 0;

  void add(const std::string& name, bool ok, nlohmann::json witness = nullptr) {
    claims.push_back({name, ok ? "pass" : "fail", std::move(witness)});
  }
  void certify(const std::string& name, nlohmann::json witness = nullptr) {
    claims.push_back({name, "certified", std::move(witness)});
  }
  void merge(const Report& other) {
    for (const auto& c : other.claims) claims.push_back(c);
  }

  bool all_ok() const {
    for (const auto& c : claims)
      if (c.status == "fail") return false;
    return true;
  }

  nlohmann::json to_json() const {
    auto sorted = claims;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Claim& a, const Claim& b) { return a.name < b.name; });
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : sorted) {
      nlohmann::json j{{"name", c.name}, {"status", c.status}};
      if (!c.witness.is_null()) j["witness"] = c.witness;
      arr.push_back(j);
    }
    return nlohmann::json{{"scenario", scenario}, {"claims", arr}, {"timing_ms", timing_ms}};
  }
};

}  // namespace skewrank
