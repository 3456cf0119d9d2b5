#pragma once

#include "dimerlab/zigzag.hpp"
#include "support/fixtures.hpp"

namespace fixtures {

// Independent consistency decision: realizes the graph with the fixture's
// exact integer drawing, checks that the drawing honors the rotation system,
// lays the zig-zag strands out as polylines in the universal cover, verifies
// that lifted strands only meet at edge midpoints, and classifies crossings
// and bigons by brute-force window enumeration.
struct OracleVerdict {
    bool consistent = false;
    dimerlab::WitnessKind kind = dimerlab::WitnessKind::TrivialClass;  // when inconsistent
};

OracleVerdict geometric_consistency_oracle(const dimerlab::TorusGraph& g, const Drawing& d);

// The enumeration half of the oracle alone (no drawing needed): classifies
// crossings and bigons by sheer window enumeration of lift translates.
// Usable on any valid graph as a second opinion for check_consistency.
OracleVerdict window_consistency_oracle(const dimerlab::TorusGraph& g);

}  // namespace fixtures
