#include "hfs/natseq.hpp"

#include <bit>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hfs {

Nat checked_add(Nat a, Nat b) {
    Nat r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("natural addition overflow");
    return r;
}

Nat checked_mul(Nat a, Nat b) {
    Nat r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("natural multiplication overflow");
    return r;
}

Nat checked_shl(Nat a, Nat bits) {
    if (a == 0) return 0;
    if (bits >= 64 || a > (~Nat{0} >> bits))
        throw std::overflow_error("natural shift overflow");
    return a << bits;
}

Nat cons_nat(Nat x, Nat y) {
    Nat odd = checked_add(checked_mul(2, y), 1);
    return checked_shl(odd, x);
}

Nat hd_nat(Nat z) {
    if (z == 0) throw std::domain_error("hd of 0");
    return static_cast<Nat>(std::countr_zero(z));
}

Nat tl_nat(Nat z) {
    Nat x = hd_nat(z); // throws on 0
    // Two-step shift: x can be 63, and a single shift by x+1 = 64 would be
    // undefined behavior.
    return (z >> x) >> 1;
}

bool is_null(Nat z) noexcept { return z == 0; }

std::vector<Nat> nat_to_list(Nat n) {
    std::vector<Nat> items;
    while (n != 0) {
        items.push_back(hd_nat(n));
        n = tl_nat(n);
    }
    return items;
}

Nat list_to_nat(const std::vector<Nat>& items) {
    Nat n = 0;
    for (auto it = items.rbegin(); it != items.rend(); ++it)
        n = cons_nat(*it, n);
    return n;
}

Seq nat_to_hfseq(Nat n) {
    Seq chain;
    std::vector<Nat> heads = nat_to_list(n);
    for (auto it = heads.rbegin(); it != heads.rend(); ++it)
        chain = Seq::cons(nat_to_hfseq(*it), chain);
    return chain;
}

Nat hfseq_to_nat(const Seq& t) {
    // Right fold of cons_nat over the children. A chain of c children has
    // value at least 2^c - 1, so any run count past 66 overflows outright.
    struct RunVal {
        Nat child_value;
        Nat count;
    };
    std::vector<RunVal> runs;
    for (Seq cur = t; !cur.empty(); cur = cur.run_rest()) {
        const Count& n = cur.run_count();
        if (!n.fits_nat())
            throw std::overflow_error("tree value exceeds machine range");
        runs.push_back({hfseq_to_nat(cur.run_child()), n.value()});
    }
    Nat acc = 0;
    for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
        if (it->count > 66)
            throw std::overflow_error("tree value exceeds machine range");
        for (Nat i = 0; i < it->count; ++i)
            acc = cons_nat(it->child_value, acc);
    }
    return acc;
}

} // namespace hfs
