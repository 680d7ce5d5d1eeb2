#include "braidrep/report.hpp"

#include <algorithm>

namespace braidrep {

void CheckReport::add(std::string name, bool ok, std::string detail) {
    items.push_back({std::move(name), ok, std::move(detail)});
}

void CheckReport::append(const CheckReport& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
}

bool CheckReport::passed() const { return failures() == 0; }

std::size_t CheckReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(items.begin(), items.end(), [](const CheckItem& c) { return !c.passed; }));
}

const CheckItem* CheckReport::first_failure() const {
    for (const auto& c : items)
        if (!c.passed) return &c;
    return nullptr;
}

nlohmann::json CheckReport::to_json() const {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : items) {
        nlohmann::json j{{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        checks.push_back(std::move(j));
    }
    return {{"suite", suite},
            {"n", n},
            {"passed", passed()},
            {"total", items.size()},
            {"failed", failures()},
            {"checks", std::move(checks)}};
}

}  // namespace braidrep
