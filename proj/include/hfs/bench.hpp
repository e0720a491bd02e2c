#pragma once

#include <cstdint>
#include <vector>

#include "hfs/seq.hpp"

namespace hfs {

enum class BenchOp { add, mul, both };

struct BenchRow {
    Nat bits = 0;       // bijective base-2 digit count of each operand
    Nat nodes = 0;      // node count of the first operand tree
    double add_ms = -1; // median wall time, -1 when not measured
    double mul_ms = -1;
};

// Scaling benchmark: for digit lengths 256, 512, ... max_bits (doubling),
// build random bijective base-2 operands from a seeded generator and time
// add/mul, reporting the median of `trials` runs per size.
std::vector<BenchRow> run_bench(Nat max_bits, Nat trials, std::uint64_t seed,
                                BenchOp op);

} // namespace hfs
