#include "hfs/seq.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hfs/errors.hpp"
#include "hfs/natseq.hpp"

namespace hfs {

Seq::Run::~Run() {
    // Unlink the sibling chain so a long chain never unwinds recursively.
    auto next = std::move(rest.run_);
    while (next && next.use_count() == 1) {
        auto following = std::move(next->rest.run_);
        next = std::move(following);
    }
}

Seq Seq::tail() const {
    const Run& r = *run_;
    if (r.count.is_one()) return r.rest;
    return Seq(std::make_shared<Run>(r.child, r.count.decremented(), r.rest));
}

Seq Seq::cons(const Seq& child, const Seq& rest) {
    if (!rest.empty() && rest.run_child() == child) {
        return Seq(std::make_shared<Run>(child, rest.run_count().incremented(),
                                         rest.run_rest()));
    }
    return Seq(std::make_shared<Run>(child, Count(), rest));
}

Seq Seq::run(const Seq& child, const Count& n, const Seq& rest) {
    if (!rest.empty() && rest.run_child() == child) {
        return Seq(std::make_shared<Run>(child, n.plus(rest.run_count()),
                                         rest.run_rest()));
    }
    return Seq(std::make_shared<Run>(child, n, rest));
}

bool Seq::operator==(const Seq& other) const {
    const Run* a = run_.get();
    const Run* b = other.run_.get();
    while (a && b) {
        if (a == b) return true; // shared structure
        if (a->count != b->count) return false;
        if (!(a->child == b->child)) return false;
        a = a->rest.run_.get();
        b = b->rest.run_.get();
    }
    return a == b;
}

Nat Seq::node_count() const {
    Nat total = 1;
    for (const Run* r = run_.get(); r; r = r->rest.run_.get()) {
        total = checked_add(
            total, checked_mul(r->count.value(), r->child.node_count()));
    }
    return total;
}

Nat Seq::child_count() const {
    Nat total = 0;
    for (const Run* r = run_.get(); r; r = r->rest.run_.get())
        total = checked_add(total, r->count.value());
    return total;
}

namespace {

Seq chain_of(const std::vector<Seq>& children) {
    Seq chain;
    for (auto it = children.rbegin(); it != children.rend(); ++it)
        chain = Seq::cons(*it, chain);
    return chain;
}

void print_into(const Seq& t, std::string& out) {
    out += '[';
    bool first = true;
    for (Seq cur = t; !cur.empty(); cur = cur.run_rest()) {
        std::string one;
        print_into(cur.run_child(), one);
        Nat n = cur.run_count().value();
        for (Nat i = 0; i < n; ++i) {
            if (!first) out += ',';
            out += one;
            first = false;
        }
    }
    out += ']';
}

} // namespace

std::string print_tree(const Seq& t) {
    std::string out;
    print_into(t, out);
    return out;
}

Seq parse_tree(std::string_view text) {
    enum class State { before_item, after_item, after_comma };
    std::vector<std::vector<Seq>> stack;
    State state = State::before_item;
    bool done = false;
    Seq result;

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (done) throw ParseError("trailing input after tree", i);
        switch (c) {
        case '[':
            if (state == State::after_item)
                throw ParseError("expected ',' or ']'", i);
            stack.emplace_back();
            state = State::before_item;
            break;
        case ']': {
            if (stack.empty()) throw ParseError("unmatched ']'", i);
            if (state == State::after_comma)
                throw ParseError("expected tree after ','", i);
            Seq node = chain_of(stack.back());
            stack.pop_back();
            if (stack.empty()) {
                result = node;
                done = true;
            } else {
                stack.back().push_back(node);
            }
            state = State::after_item;
            break;
        }
        case ',':
            if (stack.empty() || state != State::after_item)
                throw ParseError("unexpected ','", i);
            state = State::after_comma;
            break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'",
                             i);
        }
    }
    if (!done) throw ParseError("unexpected end of input", text.size());
    return result;
}

} // namespace hfs
