#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "santalo/linalg.hpp"

namespace santalo {

// Exit codes shared with CI: pass / verified-fail / non-convergence / input.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitNotConverged = 2;
inline constexpr int kExitInputError = 3;

struct CommandRequest {
    std::string subcommand;

    std::string input_path; // cloud, field or polytope (first input)
    std::string g_path;     // second field
    std::string f3_path;    // third field
    std::string tree_path;
    std::string fixture;

    std::string weight = "indicator";
    Vec center;
    Vec out_lo;
    Vec out_hi;
    std::vector<int> out_shape;

    int dim = 2;
    long count = 4096;
    long pairs = 100000;
    double lambda = 0.5;
    double mass_tol = 1e-3;
    bool even_mode = false;
    bool general_position = false;
    std::optional<std::uint64_t> seed;

    std::string out_path;
    std::string svg_path;
};

// Runs the requested pipeline, writes the JSON (and SVG) outputs, and maps
// outcomes to exit codes. SANTALO_SEED overrides the default seed when no
// --seed was given.
int dispatch(const CommandRequest& request);

} // namespace santalo
