#pragma once

#include <cstdint>

namespace freelift {

enum class Mode { exact, floating };

// Global float-mode comparison tolerance. Applied relatively: two values a, b
// compare equal when |a - b| <= eps * (1 + max(|a|, |b|)).
inline double& float_tolerance() {
    static double eps = 1e-9;
    return eps;
}

// Size caps guarding the enumerative paths. Overridable from the CLI.
struct Caps {
    std::int64_t group_order = 10000;       // close_group
    std::int64_t space_points = 10000;      // build_cube_space
    int linf_extreme_dim = 20;              // 2^dim sign vectors
    std::int64_t vertex_enum_bases = 2'000'000;  // C(rows, dim) basis subsets
    std::int64_t lp_tableau_cells = 16'000'000;  // dense simplex tableau
};

inline Caps& caps() {
    static Caps c;
    return c;
}

// Worker count for the embarrassingly parallel per-molecule / per-pair loops.
inline int& worker_count() {
    static int n = 1;
    return n;
}

}  // namespace freelift
