#include "hfs/system_t.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hfs/errors.hpp"
#include "hfs/natseq.hpp"

namespace hfs {

struct TType::Node {
    TType lhs;
    TType rhs;
    Node(TType l, TType r) : lhs(std::move(l)), rhs(std::move(r)) {}
    ~Node() {
        // unlink the right spine iteratively
        auto next = std::move(rhs.node_);
        while (next && next.use_count() == 1) {
            auto following = std::move(next->rhs.node_);
            next = std::move(following);
        }
    }
};

TType::~TType() = default;

TType TType::arrow(TType lhs, TType rhs) {
    return TType(std::make_shared<Node>(std::move(lhs), std::move(rhs)));
}

const TType& TType::lhs() const { return node_->lhs; }
const TType& TType::rhs() const { return node_->rhs; }

bool TType::operator==(const TType& other) const {
    const Node* a = node_.get();
    const Node* b = other.node_.get();
    while (a && b) {
        if (a == b) return true;
        if (!(a->lhs == b->lhs)) return false;
        a = a->rhs.node_.get();
        b = b->rhs.node_.get();
    }
    return a == b;
}

// Successor: the carry walks the right spine across leading `e` operands;
// the walk is a loop, with the per-level fixup applied on the way back.
TType succ_t(const TType& t) {
    if (t.is_leaf()) return TType::arrow(TType{}, TType{});
    if (!t.lhs().is_leaf())
        return TType::arrow(TType{}, TType::arrow(pred_t(t.lhs()), t.rhs()));
    std::size_t run = 0;
    TType rest = t;
    while (!rest.is_leaf() && rest.lhs().is_leaf()) {
        ++run;
        rest = rest.rhs();
    }
    TType base = succ_t(rest); // rest is a leaf or has a non-leaf operand
    TType head = base.lhs();
    for (std::size_t i = 0; i < run; ++i) head = succ_t(head);
    return TType::arrow(head, base.rhs());
}

// Predecessor: a non-leaf left operand borrows, prepending one `e` level per
// unit of its value; the borrow loop is explicit.
TType pred_t(const TType& t) {
    if (t.is_leaf()) throw std::domain_error("predecessor of zero type");
    TType lhs = t.lhs();
    TType rhs = t.rhs();
    std::size_t wraps = 0;
    while (!lhs.is_leaf()) {
        lhs = pred_t(lhs);
        ++wraps;
    }
    TType base;
    if (!rhs.is_leaf())
        base = TType::arrow(succ_t(rhs.lhs()), rhs.rhs());
    for (std::size_t i = 0; i < wraps; ++i) base = TType::arrow(TType{}, base);
    return base;
}

TType sp_step(Direction dir, const TType& t) {
    if (dir == Direction::up) {
        if (t.is_leaf()) return TType::arrow(TType{}, TType{});
        if (!t.lhs().is_leaf()) // direction flips on the nested argument
            return TType::arrow(
                TType{}, TType::arrow(sp_step(Direction::down, t.lhs()),
                                      t.rhs()));
        // upward order: recurse on the spine first, then on its head
        TType u = sp_step(Direction::up, t.rhs());
        return TType::arrow(sp_step(Direction::up, u.lhs()), u.rhs());
    }
    if (t.is_leaf())
        throw std::domain_error("predecessor of zero type");
    if (t.lhs().is_leaf()) {
        if (t.rhs().is_leaf()) return TType{};
        // direction flips on the nested argument
        return TType::arrow(sp_step(Direction::up, t.rhs().lhs()),
                            t.rhs().rhs());
    }
    // downward order: recurse on the head first, then on the spine
    TType k = sp_step(Direction::down, t.lhs());
    return TType::arrow(TType{},
                        sp_step(Direction::down, TType::arrow(k, t.rhs())));
}

std::variant<TType, bool> sp_infer(const std::optional<TType>& x,
                                   const std::optional<TType>& y) {
    if (!x && !y)
        throw std::invalid_argument("sp_infer needs at least one argument");
    if (x && y) return sp_step(Direction::up, *x) == *y;
    if (x) return sp_step(Direction::up, *x);
    return sp_step(Direction::down, *y);
}

Nat t2n(const TType& t) {
    Nat n = 0;
    for (TType cur = t; !cur.is_leaf(); cur = pred_t(cur))
        n = checked_add(n, 1);
    return n;
}

std::vector<TType> enumerate_t(Nat k) {
    std::vector<TType> out;
    out.reserve(static_cast<std::size_t>(k));
    TType t;
    for (Nat i = 0; i < k; ++i) {
        out.push_back(t);
        t = succ_t(t);
    }
    return out;
}

TType hfseq_to_type(const Seq& t) {
    std::vector<TType> children;
    for (Seq cur = t; !cur.empty(); cur = cur.run_rest()) {
        TType converted = hfseq_to_type(cur.run_child());
        Nat n = cur.run_count().value();
        for (Nat i = 0; i < n; ++i) children.push_back(converted);
    }
    TType out;
    for (auto it = children.rbegin(); it != children.rend(); ++it)
        out = TType::arrow(*it, out);
    return out;
}

Seq type_to_hfseq(const TType& t) {
    std::vector<const TType*> spine;
    for (const TType* cur = &t; !cur->is_leaf(); cur = &cur->rhs())
        spine.push_back(cur);
    Seq out;
    for (auto it = spine.rbegin(); it != spine.rend(); ++it)
        out = Seq::cons(type_to_hfseq((*it)->lhs()), out);
    return out;
}

namespace {

class TypeParser {
public:
    explicit TypeParser(std::string_view text) : text_(text) {}

    TType parse() {
        TType t = parse_type_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("trailing input after type", pos_);
        return t;
    }

private:
    // type := atom ("->" type)?   (right-associative)
    TType parse_type_expr() {
        TType lhs = parse_atom();
        skip_ws();
        if (pos_ + 1 < text_.size() && text_[pos_] == '-' &&
            text_[pos_ + 1] == '>') {
            pos_ += 2;
            return TType::arrow(lhs, parse_type_expr());
        }
        return lhs;
    }

    TType parse_atom() {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of type", pos_);
        char c = text_[pos_];
        if (c == 'e') {
            ++pos_;
            return TType{};
        }
        if (c == '(') {
            ++pos_;
            TType inner = parse_type_expr();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        throw ParseError(std::string("unexpected character '") + c +
                             "' in type",
                         pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Right-nesting stays bare; a left operand is parenthesized iff it is an
// arrow, matching the conventional arrow-type layout.
void render(const TType& t, std::string& out) {
    if (t.is_leaf()) {
        out += 'e';
        return;
    }
    if (t.lhs().is_leaf()) {
        out += 'e';
    } else {
        out += '(';
        render(t.lhs(), out);
        out += ')';
    }
    out += "->";
    render(t.rhs(), out);
}

} // namespace

TType parse_type(std::string_view text) { return TypeParser(text).parse(); }

std::string print_type(const TType& t) {
    if (t.is_leaf()) return "e";
    std::string out = "(";
    render(t, out);
    out += ')';
    return out;
}

} // namespace hfs
