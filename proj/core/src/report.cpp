#include "nhb/report.hpp"

#include <algorithm>

namespace nhb {

void Report::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

void Report::append(const Report& other) {
  for (const auto& c : other.checks)
    checks.push_back({other.suite.empty() ? c.name : other.suite + "/" + c.name,
                      c.pass, c.detail});
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

nlohmann::json Report::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks)
    arr.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"suite", suite}, {"pass", passed()}, {"checks", arr}};
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& c : checks) {
    out += c.pass ? "PASS " : "FAIL ";
    if (!suite.empty()) out += suite + "/";
    out += c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += '\n';
  }
  return out;
}

}  // namespace nhb
