#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace sperner {

enum class CheckMode { Fast, Full };

inline const char* to_string(CheckMode mode) {
    return mode == CheckMode::Fast ? "fast" : "full";
}

struct Violation {
    std::string kind;
    std::vector<std::size_t> ids;  // offending cell or vertex ids, kind-dependent
    std::string detail;
};

struct ValidationReport {
    CheckMode mode = CheckMode::Full;
    bool passed = true;
    std::vector<Violation> violations;

    void add(std::string kind, std::vector<std::size_t> ids, std::string detail) {
        passed = false;
        violations.push_back({std::move(kind), std::move(ids), std::move(detail)});
    }
};

}  // namespace sperner
