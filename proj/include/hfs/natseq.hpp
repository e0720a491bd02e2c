#pragma once

#include <vector>

#include "hfs/seq.hpp"

namespace hfs {

// Overflow-checked building blocks on machine naturals. Anything that would
// leave the representable range throws std::overflow_error.
Nat checked_add(Nat a, Nat b);
Nat checked_mul(Nat a, Nat b);
Nat checked_shl(Nat a, Nat bits);

// The pairing z = 2^x * (2y + 1) and its projections. hd_nat/tl_nat require
// z > 0 and throw std::domain_error on 0.
Nat cons_nat(Nat x, Nat y);
Nat hd_nat(Nat z);
Nat tl_nat(Nat z);
bool is_null(Nat z) noexcept;

// The bijection between naturals and finite sequences of naturals;
// 0 maps to the empty sequence.
std::vector<Nat> nat_to_list(Nat n);
Nat list_to_nat(const std::vector<Nat>& items);

// The bijection between naturals and hereditarily finite sequences, obtained
// by unranking nat_to_list recursively. hfseq_to_nat evaluates the tree by
// folding cons_nat over the children from the right.
Seq nat_to_hfseq(Nat n);
Nat hfseq_to_nat(const Seq& t);

} // namespace hfs
