#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace dimerlab {

// Sparse GF(2) linear system: each row is a set of variable indices, each
// target a parity bit.
struct Gf2System {
    int nvars = 0;
    std::vector<std::vector<int>> rows;
    std::vector<std::uint8_t> targets;
};

struct Gf2Solution {
    std::vector<std::uint8_t> x;
    // Infeasibility certificate: original row indices whose GF(2) sum has
    // empty support but target 1. Empty when feasible.
    std::vector<int> certificate;
    bool feasible = false;
};

// Gaussian elimination with the fixed pivot order "lowest variable index
// first" (free variables are set to 0), so the solution is deterministic.
Gf2Solution gf2_solve(const Gf2System& sys);

}  // namespace dimerlab
