#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace pnchow {

// Machine-readable verification report; pass means expected == actual,
// field-exact.  Schema version 1.
struct Check {
    std::string name;
    nlohmann::json params;
    std::string expected;
    std::string actual;
    bool pass;
};

class Report {
  public:
    static constexpr int version = 1;

    void add(std::string name, nlohmann::json params, std::string expected,
             std::string actual);

    const std::vector<Check>& checks() const { return checks_; }
    int total() const { return static_cast<int>(checks_.size()); }
    int passed() const;
    int failed() const { return total() - passed(); }
    bool all_pass() const { return failed() == 0; }

    nlohmann::json to_json() const;
    std::string to_text() const;

  private:
    std::vector<Check> checks_;
};

}  // namespace pnchow
