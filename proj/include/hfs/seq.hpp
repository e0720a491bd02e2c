#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace hfs {

using Nat = std::uint64_t;

class Count;

// A hereditarily finite sequence: the empty sequence, or a finite ordered
// sequence of hereditarily finite sequences. A Seq value doubles as the
// sibling chain of children of a node, so `head()` is the first child and
// `tail()` is the same node with the first child removed.
//
// Internally the chain is stored run-length compressed: maximal runs of
// structurally equal children are collapsed into a single cell carrying a
// repeat count. The compression is canonical (adjacent runs always have
// distinct children), so structural equality of trees coincides with cell-wise
// equality of the compressed form. Run counts are Count values and may exceed
// the machine word, which is what makes successor/predecessor on tower
// numerals like [[[[[[[[[]]]]]]]]] representable at all.
//
// Values are immutable after construction and freely shareable across threads.
class Seq {
public:
    Seq() noexcept = default; // the empty sequence, encoding 0
    ~Seq();
    Seq(const Seq&) = default;
    Seq(Seq&&) noexcept = default;
    Seq& operator=(const Seq&) = default;
    Seq& operator=(Seq&&) noexcept = default;

    bool empty() const noexcept { return !run_; }

    // First child / rest of the chain. Require !empty().
    const Seq& head() const;
    Seq tail() const;

    // Prepend one child, merging with the leading run when equal.
    static Seq cons(const Seq& child, const Seq& rest);

    // Prepend `n` copies of `child`. Merges with the leading run of `rest`
    // when its child is equal; n may be a tree-sized count.
    static Seq run(const Seq& child, const Count& n, const Seq& rest);

    // Direct access to the leading run. Require !empty().
    const Seq& run_child() const;
    const Count& run_count() const;
    const Seq& run_rest() const;

    bool operator==(const Seq& other) const;
    bool operator!=(const Seq& other) const { return !(*this == other); }

    // Total number of nodes (the root counts as one). Throws
    // std::overflow_error when the count does not fit in Nat.
    Nat node_count() const;

    // Number of children of the root node; throws when it exceeds Nat.
    Nat child_count() const;

private:
    struct Run;
    explicit Seq(std::shared_ptr<Run> r) noexcept : run_(std::move(r)) {}
    std::shared_ptr<Run> run_;
};

// A strictly positive repeat count. Small counts live in a machine word;
// counts of at least 2^64 are kept as the canonical Seq numeral of their
// value, so the two forms never overlap and equality stays structural.
class Count {
public:
    Count() noexcept : small_(1) {}
    static Count of(Nat n);                 // n >= 1
    static Count from_tree(const Seq& t);   // value(t) >= 1

    bool is_one() const noexcept { return big_.empty() && small_ == 1; }
    bool fits_nat() const noexcept { return big_.empty(); }
    Nat value() const; // throws std::overflow_error when !fits_nat()

    Count incremented() const;
    Count decremented() const; // requires value >= 2
    Count plus(const Count& other) const;

    // The canonical tree numeral of this count.
    Seq as_tree() const;

    bool operator==(const Count& other) const;
    bool operator!=(const Count& other) const { return !(*this == other); }

private:
    Nat small_ = 1;
    Seq big_; // empty unless the count exceeds Nat
};

struct Seq::Run {
    Seq child;
    Count count;
    Seq rest;
    Run(Seq c, Count n, Seq r)
        : child(std::move(c)), count(std::move(n)), rest(std::move(r)) {}
    ~Run(); // unlinks the sibling chain iteratively
};

inline Seq::~Seq() = default;

inline const Seq& Seq::head() const { return run_->child; }
inline const Seq& Seq::run_child() const { return run_->child; }
inline const Count& Seq::run_count() const { return run_->count; }
inline const Seq& Seq::run_rest() const { return run_->rest; }

// Literal grammar: tree := "[" ( tree ("," tree)* )? "]", whitespace ignored.
// The printer is canonical and emits no whitespace.
Seq parse_tree(std::string_view text);
std::string print_tree(const Seq& t);

} // namespace hfs
