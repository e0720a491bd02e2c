#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hfs/seq.hpp"

namespace hfs {

// Result of a Kraft-inequality check over the first m codes.
struct KraftReport {
    Nat m = 0;
    double sum = 0.0;
    bool holds = false; // sum <= 1
};

// Balanced-parenthesis code of a tree: 0 opens a node, 1 closes it. Every
// emitted code is a Dyck prime of length 2 * node_count.
std::vector<std::uint8_t> encode(const Seq& t);

// Exact inverse of encode. Rejects anything that is not a single complete
// Dyck prime (unbalanced input, trailing bits, empty input) with a
// ParseError naming the offending position.
Seq decode(std::span<const std::uint8_t> bits);

// Text forms: canonical "01" string on output; "01" and "()" accepted on
// input (one alphabet per code, positions reported on bad symbols).
Seq decode_text(std::string_view text);
std::string code_to_string(std::span<const std::uint8_t> bits);

// Code length of the n-th tree numeral: 2 * node_count(nat_to_hfseq(n)).
Nat parsize(Nat n);

// Kraft analytics over the code lengths l_n = parsize(n):
// kraft_term(n) = 2^-l_n, kraft_sum(m) = sum of the first m terms
// accumulated in ascending n in double precision.
double kraft_term(Nat n);
double kraft_sum(Nat m); // requires m >= 1
KraftReport kraft_check(Nat m);

// Pairwise prefix- and suffix-freeness of the first m codes (m >= 2).
// Always true for a correct encoder; false flags an encoder bug.
bool prefix_free_check(Nat m);

} // namespace hfs
