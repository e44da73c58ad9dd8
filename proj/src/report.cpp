#include "pnchow/report.hpp"

#include <sstream>

namespace pnchow {

void Report::add(std::string name, nlohmann::json params, std::string expected,
                 std::string actual) {
    bool pass = expected == actual;
    checks_.push_back(
        {std::move(name), std::move(params), std::move(expected), std::move(actual), pass});
}

int Report::passed() const {
    int p = 0;
    for (const Check& c : checks_)
        if (c.pass) ++p;
    return p;
}

nlohmann::json Report::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const Check& c : checks_) {
        arr.push_back({{"name", c.name},
                       {"params", c.params},
                       {"expected", c.expected},
                       {"actual", c.actual},
                       {"pass", c.pass}});
    }
    return {{"version", version},
            {"checks", arr},
            {"summary",
             {{"total", total()}, {"passed", passed()}, {"failed", failed()}}}};
}

std::string Report::to_text() const {
    std::ostringstream out;
    for (const Check& c : checks_) {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.params.empty()) out << " " << c.params.dump();
        out << " expected=" << c.expected << " actual=" << c.actual << "\n";
    }
    out << "summary: " << total() << " checks, " << passed() << " passed, "
        << failed() << " failed\n";
    return out.str();
}

}  // namespace pnchow
