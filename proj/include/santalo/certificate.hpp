#pragma once

#include <string>
#include <utility>
#include <vector>

namespace santalo {

// Outcome record of an inequality or partition verification: the two sides,
// the margin, and labeled diagnostic scalars (per-cone terms, violation
// coordinates, boundary-atom counts, ...).
struct Certificate {
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0; // rhs - lhs
    bool passed = false;
    std::vector<std::pair<std::string, double>> diagnostics;

    void add(const std::string& label, double value) { diagnostics.emplace_back(label, value); }

    double diagnostic(const std::string& label) const {
        for (const auto& [k, v] : diagnostics)
            if (k == label) return v;
        return 0.0;
    }
};

inline Certificate make_certificate(double lhs, double rhs, double slack) {
    Certificate c;
    c.lhs = lhs;
    c.rhs = rhs;
    c.margin = rhs - lhs;
    c.passed = lhs <= rhs + slack;
    return c;
}

} // namespace santalo
