#pragma once

// Machine-readable verification reports shared by every CLI command.

#include <string>
#include <vector>

#include "json.hpp"

namespace autfn {

struct Check {
  std::string name;
  std::string anchor;  // the claim this check belongs to
  bool pass = false;
  nlohmann::json witness = nlohmann::json::object();

  friend bool operator==(Check const&, Check const&) = default;
};

struct Report {
  std::string command;
  nlohmann::json args = nlohmann::json::object();
  std::vector<Check> checks;

  // True iff there is at least one check and every check passes.
  bool pass() const;
  Check& add(std::string name, std::string anchor, bool pass, nlohmann::json witness = nlohmann::json::object());

  nlohmann::json to_json() const;
  // Throws ParseError on a malformed document or an inconsistent "pass" field.
  static Report from_json(nlohmann::json const& j);
  std::string pretty() const;

  friend bool operator==(Report const&, Report const&) = default;
};

}  // namespace autfn
