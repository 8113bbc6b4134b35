#pragma once

#include <string>
#include <vector>

namespace orbitlie {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // witness or certificate, empty when there is nothing to say
};

/// Ordered list of named pass/fail results.
struct CheckList {
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  void append(const CheckList& other, const std::string& prefix = "") {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.detail});
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  bool passed(const std::string& name) const {
    const auto* c = find(name);
    return c && c->pass;
  }
};

}  // namespace orbitlie
