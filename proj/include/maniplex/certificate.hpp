#pragma once

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace maniplex {

struct Check {
  std::string name;
  bool pass = false;
  nlohmann::json witness;
};

/// Ordered list of named checks with optional witnesses.
class Certificate {
public:
  void add(std::string name, bool pass, nlohmann::json witness = nullptr) {
    checks_.push_back({std::move(name), pass, std::move(witness)});
  }
  void append(const Certificate& other, const std::string& prefix = "") {
    for (const Check& c : other.checks_) checks_.push_back({prefix + c.name, c.pass, c.witness});
  }

  bool all_pass() const {
    for (const Check& c : checks_)
      if (!c.pass) return false;
    return true;
  }
  std::optional<Check> first_failure() const {
    for (const Check& c : checks_)
      if (!c.pass) return c;
    return std::nullopt;
  }
  const Check* find(const std::string& name) const {
    for (const Check& c : checks_)
      if (c.name == name) return &c;
    return nullptr;
  }
  const std::vector<Check>& checks() const { return checks_; }

  nlohmann::json to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const Check& c : checks_) {
      nlohmann::json j{{"name", c.name}, {"pass", c.pass}};
      if (!c.witness.is_null()) j["witness"] = c.witness;
      out.push_back(std::move(j));
    }
    return out;
  }

private:
  std::vector<Check> checks_;
};

/// A pipeline step whose certification failed; names the failed check.
class CertificationFailure : public std::runtime_error {
public:
  explicit CertificationFailure(const Check& c)
      : std::runtime_error("certification failed: " + c.name), check(c) {}
  Check check;
};

inline void require(const Certificate& c) {
  if (auto failure = c.first_failure()) throw CertificationFailure(*failure);
}

} // namespace maniplex
