#include "orbitlie/report.hpp"

#include <sstream>

namespace orbitlie {

void Report::set(const std::string& section, const std::string& key, std::string value) {
  for (auto& s : sections_)
    if (s.first == section) {
      for (auto& kv : s.second)
        if (kv.first == key) {
          kv.second = std::move(value);
          return;
        }
      s.second.emplace_back(key, std::move(value));
      return;
    }
  sections_.push_back({section, {{key, std::move(value)}}});
}

void Report::add_checks(const std::string& section, const CheckList& checks) {
  for (const auto& c : checks.checks) set(section, c.name, check_value(c));
}

std::optional<std::string> Report::get(const std::string& dotted) const {
  const auto dot = dotted.find('.');
  if (dot == std::string::npos) return std::nullopt;
  const auto sec = dotted.substr(0, dot);
  const auto key = dotted.substr(dot + 1);
  for (const auto& s : sections_)
    if (s.first == sec)
      for (const auto& kv : s.second)
        if (kv.first == key) return kv.second;
  return std::nullopt;
}

void Report::merge(const Report& other) {
  for (const auto& s : other.sections_)
    for (const auto& kv : s.second) set(s.first, kv.first, kv.second);
}

std::string Report::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& s : sections_) {
    if (!first) os << "\n";
    first = false;
    os << "[" << s.first << "]\n";
    for (const auto& kv : s.second) os << kv.first << " = " << kv.second << "\n";
  }
  return os.str();
}

std::string check_value(const Check& c) {
  std::string out = c.pass ? "pass" : "fail";
  if (!c.detail.empty()) out += ": " + c.detail;
  return out;
}

}  // namespace orbitlie
