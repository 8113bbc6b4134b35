#pragma once

#include "orbitlie/checks.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orbitlie {

/// Sections of "key = value" lines in insertion order.
///
///   [section]
///   key = value
///
/// Sections are separated by one blank line. Rationals are written p/q.
class Report {
 public:
  using Section = std::pair<std::string, std::vector<std::pair<std::string, std::string>>>;

  void set(const std::string& section, const std::string& key, std::string value);
  void add_checks(const std::string& section, const CheckList& checks);
  /// Looks up "section.key".
  std::optional<std::string> get(const std::string& dotted) const;
  void merge(const Report& other);
  const std::vector<Section>& sections() const { return sections_; }
  std::string str() const;

 private:
  std::vector<Section> sections_;
};

/// "pass", "fail", with ": detail" appended when there is one.
std::string check_value(const Check& c);

}  // namespace orbitlie
