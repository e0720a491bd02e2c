#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hfs/seq.hpp"

namespace hfs {

// A System-T type: the base type `e` or an arrow between two types.
// Used as a numeral: `e` encodes 0 and the arrow spine carries the digits.
class TType {
public:
    TType() noexcept = default; // the leaf `e`
    ~TType();
    TType(const TType&) = default;
    TType(TType&&) noexcept = default;
    TType& operator=(const TType&) = default;
    TType& operator=(TType&&) noexcept = default;

    static TType arrow(TType lhs, TType rhs);

    bool is_leaf() const noexcept { return !node_; }
    const TType& lhs() const; // require !is_leaf()
    const TType& rhs() const;

    bool operator==(const TType& other) const;
    bool operator!=(const TType& other) const { return !(*this == other); }

private:
    struct Node;
    explicit TType(std::shared_ptr<Node> n) noexcept : node_(std::move(n)) {}
    std::shared_ptr<Node> node_;
};

enum class Direction { up, down };

// Successor and predecessor on type numerals; pred_t throws
// std::domain_error on `e`.
TType succ_t(const TType& t);
TType pred_t(const TType& t);

// The merged bidirectional step relation: up is successor, down is
// predecessor. The recursion follows the direction-flipped clause of the
// merged form, with the recursive calls ordered per direction.
TType sp_step(Direction dir, const TType& t);

// Bidirectional inference over optional arguments: successor of x when only
// x is given, predecessor of y when only y is given, and a boolean check
// y = succ_t(x) when both are given. Throws std::invalid_argument when
// neither is given and std::domain_error on predecessor of `e`.
std::variant<TType, bool> sp_infer(const std::optional<TType>& x,
                                   const std::optional<TType>& y);

// Value of a type numeral by iterated pred_t; throws std::overflow_error
// past Nat.
Nat t2n(const TType& t);

// First k elements of the stream e, succ_t(e), ...
std::vector<TType> enumerate_t(Nat k);

// The first-child/next-sibling isomorphism with hereditarily finite
// sequences; value-preserving in both directions.
TType hfseq_to_type(const Seq& t);
Seq type_to_hfseq(const TType& t);

// Literal syntax: type := "e" | "(" type ")" | type "->" type, with "->"
// right-associative. The printer wraps a non-leaf type in one pair of
// parentheses and parenthesizes a left operand iff it is an arrow.
TType parse_type(std::string_view text);
std::string print_type(const TType& t);

} // namespace hfs
