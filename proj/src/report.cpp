#include "autfn/report.hpp"

#include <algorithm>
#include <sstream>

#include "autfn/error.hpp"

namespace autfn {

bool Report::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](Check const& c) { return c.pass; });
}

Check& Report::add(std::string name, std::string anchor, bool ok, nlohmann::json witness) {
  checks.push_back({std::move(name), std::move(anchor), ok, std::move(witness)});
  return checks.back();
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["args"] = args;
  j["pass"] = pass();
  j["checks"] = nlohmann::json::array();
  for (auto const& c : checks) {
    j["checks"].push_back({{"name", c.name}, {"anchor", c.anchor}, {"pass", c.pass}, {"witness", c.witness}});
  }
  return j;
}

Report Report::from_json(nlohmann::json const& j) {
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.args = j.at("args");
    for (auto const& c : j.at("checks")) {
      r.checks.push_back({c.at("name").get<std::string>(), c.at("anchor").get<std::string>(),
                          c.at("pass").get<bool>(), c.at("witness")});
    }
    if (j.at("pass").get<bool>() != r.pass()) {
      throw ParseError("report \"pass\" field disagrees with its checks", 0);
    }
    return r;
  } catch (nlohmann::json::exception const& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 0);
  }
}

std::string Report::pretty() const {
  std::size_t width = 4;
  for (auto const& c : checks) width = std::max(width, c.name.size());
  std::ostringstream os;
  os << command << '\n';
  for (auto const& c : checks) {
    os << (c.pass ? "  PASS  " : "  FAIL  ") << c.name << std::string(width - c.name.size() + 2, ' ') << c.anchor
       << '\n';
    if (!c.witness.empty()) {
      os << "        " << c.witness.dump() << '\n';
    }
  }
  os << (pass() ? "overall: PASS" : "overall: FAIL") << '\n';
  return os.str();
}

}  // namespace autfn
