#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace nhb {

/// One named verification outcome.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Ordered collection of checks produced by a verification routine.
struct Report {
  std::string suite;
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail = {});
  void append(const Report& other);
  bool passed() const;
  std::size_t failures() const;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace nhb
