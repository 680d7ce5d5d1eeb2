#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace braidrep {

struct CheckItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Ordered pass/fail results of one verification suite.
struct CheckReport {
    std::string suite;
    int n = 0;
    std::vector<CheckItem> items;

    void add(std::string name, bool passed, std::string detail = {});
    void append(const CheckReport& other);
    bool passed() const;
    std::size_t failures() const;
    const CheckItem* first_failure() const;
    explicit operator bool() const { return passed(); }

    nlohmann::json to_json() const;
};

}  // namespace braidrep
