#pragma once

#include <string>
#include <vector>

namespace mui {

// One verification statement instance; collected into suite reports.
struct CheckRow {
    int degree = -1;
    std::string statement;
    std::string expected;
    std::string computed;
    bool pass = false;
    std::string ref; // short pointer into the write-up (section / lemma)
};

inline bool all_pass(const std::vector<CheckRow>& rows) {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

} // namespace mui
