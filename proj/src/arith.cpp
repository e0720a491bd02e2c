#include "hfs/arith.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hfs/errors.hpp"
#include "hfs/natseq.hpp"

namespace hfs {

namespace {

Seq tree_one() { return Seq::cons(Seq{}, Seq{}); }

} // namespace

// The successor recursion splits on the first child: empty tree, first child
// non-empty, first child empty. The third case propagates a carry along the
// leading run of empty children; since that run is stored compressed, the
// whole carry collapses to its count's tree numeral.
Seq succ(const Seq& t) {
    if (t.empty()) return tree_one();
    const Seq& first = t.run_child();
    if (!first.empty())
        return Seq::cons(Seq{}, Seq::cons(pred(first), t.tail()));
    const Seq& rest = t.run_rest();
    Seq new_head = t.run_count().as_tree();
    Seq new_tail;
    if (!rest.empty())
        new_tail = Seq::cons(pred(rest.run_child()), rest.tail());
    return Seq::cons(new_head, new_tail);
}

// Predecessor, dual split. When the first child C is non-empty, the borrow
// unrolls to exactly v(C) leading empty children, emitted as one run whose
// count is v(C) itself.
Seq pred(const Seq& t) {
    if (t.empty()) throw std::domain_error("predecessor of zero");
    const Seq& first = t.run_child();
    if (first.empty()) {
        const Count& k = t.run_count();
        const Seq& rest = t.run_rest();
        if (k.is_one()) {
            if (rest.empty()) return Seq{};
            return Seq::cons(succ(rest.run_child()), rest.tail());
        }
        Count km1 = k.decremented();
        Seq after = km1.is_one() ? rest : Seq::run(Seq{}, km1.decremented(), rest);
        return Seq::cons(tree_one(), after);
    }
    Count borrow = Count::from_tree(first);
    Seq xs = t.tail();
    Seq inner;
    if (!xs.empty()) inner = Seq::cons(succ(xs.run_child()), xs.tail());
    return Seq::run(Seq{}, borrow, inner);
}

Parity parity(const Seq& t) {
    if (t.empty()) return Parity::zero;
    return t.run_child().empty() ? Parity::odd : Parity::even_pos;
}

Seq mk_odd(const Seq& t) { return Seq::cons(Seq{}, t); }

Seq mk_even(const Seq& t) { return succ(mk_odd(t)); }

Seq r_dtor(const Seq& t) {
    if (t.empty()) throw std::domain_error("r_dtor of zero");
    if (t.run_child().empty()) return t.tail();
    Seq p = pred(t); // starts with an empty child by construction
    return p.tail();
}

Nat to_nat(const Seq& t) {
    Nat result = 0;
    Nat shift = 0;
    for (Seq cur = t; !cur.empty(); cur = r_dtor(cur)) {
        Nat digit = cur.run_child().empty() ? 1 : 2;
        result = checked_add(result, checked_shl(digit, shift));
        ++shift;
    }
    return result;
}

Seq from_nat(Nat n) {
    std::vector<std::uint8_t> digits;
    while (n != 0) {
        if (n & 1) {
            digits.push_back(1);
            n = (n - 1) >> 1;
        } else {
            digits.push_back(2);
            n = (n - 2) >> 1;
        }
    }
    return seq_from_digits(digits);
}

std::vector<std::uint8_t> digits_of(const Seq& t) {
    std::vector<std::uint8_t> digits;
    for (Seq cur = t; !cur.empty(); cur = r_dtor(cur))
        digits.push_back(cur.run_child().empty() ? 1 : 2);
    return digits;
}

Seq seq_from_digits(std::span<const std::uint8_t> digits) {
    Seq t;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (*it == 1)
            t = mk_odd(t);
        else if (*it == 2)
            t = mk_even(t);
        else
            throw std::domain_error("bijective digit must be 1 or 2");
    }
    return t;
}

Seq slow_add(const Seq& x, const Seq& y) {
    Seq left = x;
    Seq result = y;
    while (!left.empty()) {
        left = pred(left);
        result = succ(result);
    }
    return result;
}

// Digit-wise addition over the four parity cases:
//   odd+odd       -> mk_even(sum of halves)
//   odd+even(pos) -> mk_odd(succ(sum of halves))   (either order)
//   even+even     -> mk_even(succ(sum of halves))
// The descent is a loop with an explicit case list so operand length never
// translates into call-stack depth.
Seq add(const Seq& x, const Seq& y) {
    enum : std::uint8_t { oo, mixed, ee };
    std::vector<std::uint8_t> cases;
    Seq a = x;
    Seq b = y;
    while (!a.empty() && !b.empty()) {
        bool a_odd = a.run_child().empty();
        bool b_odd = b.run_child().empty();
        cases.push_back(a_odd && b_odd ? oo : (a_odd || b_odd ? mixed : ee));
        a = r_dtor(a);
        b = r_dtor(b);
    }
    Seq z = a.empty() ? b : a;
    for (auto it = cases.rbegin(); it != cases.rend(); ++it) {
        switch (*it) {
        case oo: z = mk_even(z); break;
        case mixed: z = mk_odd(succ(z)); break;
        default: z = mk_even(succ(z)); break;
        }
    }
    return z;
}

// v(mul0(x,y)) = (v(x)+1)*(v(y)+1) - 1, by recursion on the digits of x:
//   x = 0        -> y
//   x = 2x'+1    -> mk_odd(mul0(x', y))
//   x = 2x'+2    -> succ(add(y, mk_odd(mul0(x', y))))
Seq mul0(const Seq& x, const Seq& y) {
    std::vector<std::uint8_t> digits = digits_of(x);
    Seq z = y;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (*it == 1)
            z = mk_odd(z);
        else
            z = succ(add(y, mk_odd(z)));
    }
    return z;
}

Seq mul(const Seq& x, const Seq& y) {
    if (x.empty() || y.empty()) return Seq{};
    return succ(mul0(pred(x), pred(y)));
}

Ordering cmp(const Seq& x, const Seq& y) {
    std::vector<std::uint8_t> dx = digits_of(x);
    std::vector<std::uint8_t> dy = digits_of(y);
    if (dx.size() != dy.size())
        return dx.size() < dy.size() ? Ordering::lt : Ordering::gt;
    for (std::size_t i = dx.size(); i-- > 0;) {
        if (dx[i] != dy[i])
            return dx[i] < dy[i] ? Ordering::lt : Ordering::gt;
    }
    return Ordering::eq;
}

namespace {

// Plain binary bits of sum d_i 2^i, least significant first.
std::vector<std::uint8_t> bits_from_digits(const std::vector<std::uint8_t>& ds) {
    std::vector<std::uint8_t> bits;
    Nat carry = 0;
    for (std::uint8_t d : ds) {
        Nat s = d + carry;
        bits.push_back(static_cast<std::uint8_t>(s & 1));
        carry = s >> 1;
    }
    while (carry != 0) {
        bits.push_back(static_cast<std::uint8_t>(carry & 1));
        carry >>= 1;
    }
    while (!bits.empty() && bits.back() == 0) bits.pop_back();
    return bits;
}

std::vector<std::uint8_t> bits_sub(const std::vector<std::uint8_t>& a,
                                   const std::vector<std::uint8_t>& b) {
    if (b.size() > a.size())
        throw std::underflow_error("subtraction below zero");
    std::vector<std::uint8_t> out(a.size());
    int borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int t = int(a[i]) - (i < b.size() ? int(b[i]) : 0) - borrow;
        borrow = t < 0;
        out[i] = static_cast<std::uint8_t>(t & 1);
    }
    if (borrow != 0) throw std::underflow_error("subtraction below zero");
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Bijective base-2 digits of the value held in little-endian binary `bits`.
std::vector<std::uint8_t> digits_from_bits(std::vector<std::uint8_t> bits) {
    std::vector<std::uint8_t> digits;
    std::size_t ones = 0;
    for (std::uint8_t b : bits) ones += b;
    std::size_t pos = 0;
    while (ones != 0) {
        if (bits[pos] == 1) {
            digits.push_back(1);
            bits[pos] = 0;
            --ones;
        } else {
            // subtract 2 from an even value: borrow from the next set bit
            std::size_t j = pos + 1;
            while (bits[j] == 0) {
                bits[j] = 1;
                ++ones;
                ++j;
            }
            bits[j] = 0;
            --ones;
            digits.push_back(2);
        }
        ++pos;
    }
    return digits;
}

} // namespace

Seq sub(const Seq& x, const Seq& y) {
    std::vector<std::uint8_t> diff =
        bits_sub(bits_from_digits(digits_of(x)), bits_from_digits(digits_of(y)));
    return seq_from_digits(digits_from_bits(std::move(diff)));
}

Seq pow(const Seq& x, Nat k) {
    if (x.empty() && k == 0)
        throw std::domain_error("0^0 is undefined");
    Seq result = tree_one();
    Seq base = x;
    while (k != 0) {
        if (k & 1) result = mul(result, base);
        k >>= 1;
        if (k != 0) base = mul(base, base);
    }
    return result;
}

Seq from_decimal(std::string_view s) {
    if (s.empty()) throw ParseError("empty decimal string", 0);
    if (s.size() > 1 && s[0] == '0')
        throw ParseError("leading zero in decimal string", 0);
    Seq acc;
    Seq ten = from_nat(10);
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9')
            throw ParseError(std::string("invalid decimal digit '") + c + "'",
                             i);
        // mul iterates the digits of its first operand; keep the short one
        // first so each step costs O(|acc|).
        acc = add(mul(ten, acc), from_nat(static_cast<Nat>(c - '0')));
    }
    return acc;
}

std::string to_decimal(const Seq& t) {
    // Feed the bijective digits most significant first into a base-10^9
    // accumulator: acc <- 2*acc + digit.
    std::vector<std::uint8_t> digits = digits_of(t);
    constexpr std::uint32_t kBase = 1000000000;
    std::vector<std::uint32_t> limbs; // least significant first
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        std::uint64_t carry = *it;
        for (std::uint32_t& limb : limbs) {
            std::uint64_t v = 2ull * limb + carry;
            limb = static_cast<std::uint32_t>(v % kBase);
            carry = v / kBase;
        }
        while (carry != 0) {
            limbs.push_back(static_cast<std::uint32_t>(carry % kBase));
            carry /= kBase;
        }
    }
    if (limbs.empty()) return "0";
    std::string out = std::to_string(limbs.back());
    for (std::size_t i = limbs.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

std::vector<Seq> enumerate(Nat k) {
    std::vector<Seq> out;
    out.reserve(static_cast<std::size_t>(k));
    Seq t;
    for (Nat i = 0; i < k; ++i) {
        out.push_back(t);
        t = succ(t);
    }
    return out;
}

Nat tree_to_nat_slow(const Seq& t) {
    Nat n = 0;
    for (Seq cur = t; !cur.empty(); cur = pred(cur)) n = checked_add(n, 1);
    return n;
}

Seq nat_to_tree_slow(Nat n) {
    Seq t;
    for (Nat i = 0; i < n; ++i) t = succ(t);
    return t;
}

} // namespace hfs
