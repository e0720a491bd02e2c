#include <stdexcept>

#include "hfs/arith.hpp"
#include "hfs/natseq.hpp"
#include "hfs/seq.hpp"

namespace hfs {

// Invariant: big_ is engaged only for values >= 2^64, so the small and big
// forms never describe the same value and equality stays structural.

Count Count::of(Nat n) {
    if (n == 0) throw std::domain_error("count must be positive");
    Count c;
    c.small_ = n;
    return c;
}

Count Count::from_tree(const Seq& t) {
    try {
        return of(hfseq_to_nat(t));
    } catch (const std::overflow_error&) {
        Count c;
        c.small_ = 0;
        c.big_ = t;
        return c;
    }
}

Nat Count::value() const {
    if (!big_.empty())
        throw std::overflow_error("count exceeds machine range");
    return small_;
}

Count Count::incremented() const {
    if (big_.empty()) {
        if (small_ == ~Nat{0}) {
            Count c;
            c.small_ = 0;
            c.big_ = succ(from_nat(small_));
            return c;
        }
        return of(small_ + 1);
    }
    Count c;
    c.small_ = 0;
    c.big_ = succ(big_);
    return c;
}

Count Count::decremented() const {
    if (big_.empty()) {
        if (small_ < 2) throw std::domain_error("count underflow");
        return of(small_ - 1);
    }
    Seq p = pred(big_);
    return from_tree(p); // demotes when the value drops back into Nat
}

Count Count::plus(const Count& other) const {
    if (big_.empty() && other.big_.empty()) {
        Nat sum = small_ + other.small_;
        if (sum >= small_) return of(sum);
        // wrapped past 2^64: the true sum only fits as a tree
    }
    Count c;
    c.small_ = 0;
    c.big_ = add(as_tree(), other.as_tree());
    return c;
}

Seq Count::as_tree() const {
    if (!big_.empty()) return big_;
    return from_nat(small_);
}

bool Count::operator==(const Count& other) const {
    if (big_.empty() != other.big_.empty()) return false;
    if (big_.empty()) return small_ == other.small_;
    return big_ == other.big_;
}

} // namespace hfs
