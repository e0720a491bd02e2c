#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hfs/seq.hpp"

namespace hfs {

enum class Parity { zero, odd, even_pos };
enum class Ordering { lt, eq, gt };

// Successor and predecessor on tree numerals. pred throws std::domain_error
// on the empty tree. Both run in time bounded by the compressed
// representation, never by the numeric value.
Seq succ(const Seq& t);
Seq pred(const Seq& t);

// zero / odd / even_pos trichotomy, decided by the first child alone.
Parity parity(const Seq& t);

// Bijective base-2 constructors: mk_odd(t) encodes 2v+1, mk_even(t) encodes
// 2v+2. r_dtor undoes either one (maps both 2x+1 and 2x+2 to x) and throws
// std::domain_error on the empty tree.
Seq mk_odd(const Seq& t);
Seq mk_even(const Seq& t);
Seq r_dtor(const Seq& t);

// Conversion through the bijective base-2 digit view; an independent code
// path from nat_to_hfseq/hfseq_to_nat. to_nat throws std::overflow_error
// when the value exceeds Nat.
Nat to_nat(const Seq& t);
Seq from_nat(Nat n);

// Reference addition by iterated pred/succ; O(v(x)) steps.
Seq slow_add(const Seq& x, const Seq& y);

// Addition and multiplication in time proportional to operand size,
// via the four-parity-case carry recursion on bijective base-2 digits.
Seq add(const Seq& x, const Seq& y);
Seq mul(const Seq& x, const Seq& y);

// Multiplication helper with contract v(mul0(x,y)) = (v(x)+1)*(v(y)+1) - 1,
// exposed for testing.
Seq mul0(const Seq& x, const Seq& y);

// Total order agreeing with the encoded values: the shorter bijective digit
// string is smaller, equal lengths compare most-significant digit first.
Ordering cmp(const Seq& x, const Seq& y);

// v(x) - v(y); throws std::underflow_error when v(x) < v(y).
Seq sub(const Seq& x, const Seq& y);

// v(x)^k by square-and-multiply; 0^0 throws std::domain_error.
Seq pow(const Seq& x, Nat k);

// Decimal I/O for values beyond Nat. from_decimal rejects empty strings,
// non-digits and leading zeros with a ParseError.
Seq from_decimal(std::string_view s);
std::string to_decimal(const Seq& t);

// First k elements of the stream t_0 = [], t_{i+1} = succ(t_i).
std::vector<Seq> enumerate(Nat k);

// Counting conversions by iterated pred/succ; independent oracle paths for
// to_nat/from_nat. tree_to_nat_slow throws std::overflow_error past Nat.
Nat tree_to_nat_slow(const Seq& t);
Seq nat_to_tree_slow(Nat n);

// Bijective base-2 digit string of t, least significant first, digits in
// {1, 2}; the empty vector encodes 0. seq_from_digits is its inverse.
std::vector<std::uint8_t> digits_of(const Seq& t);
Seq seq_from_digits(std::span<const std::uint8_t> digits);

} // namespace hfs
