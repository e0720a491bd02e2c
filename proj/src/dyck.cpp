#include "hfs/dyck.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hfs/errors.hpp"
#include "hfs/natseq.hpp"

namespace hfs {

std::vector<std::uint8_t> encode(const Seq& t) {
    std::vector<std::uint8_t> bits;
    std::vector<Seq> pending; // unfinished sibling chains, innermost last
    bits.push_back(0);
    pending.push_back(t);
    while (!pending.empty()) {
        Seq cur = pending.back();
        pending.pop_back();
        if (cur.empty()) {
            bits.push_back(1);
            continue;
        }
        pending.push_back(cur.tail());
        bits.push_back(0);
        pending.push_back(cur.head());
    }
    return bits;
}

Seq decode(std::span<const std::uint8_t> bits) {
    if (bits.empty()) throw ParseError("empty code", 0);
    std::vector<std::vector<Seq>> open; // children of unclosed nodes
    for (std::size_t i = 0; i < bits.size(); ++i) {
        std::uint8_t b = bits[i];
        if (b == 0) {
            open.emplace_back();
        } else if (b == 1) {
            if (open.empty())
                throw ParseError("unbalanced close", i);
            Seq node;
            for (auto it = open.back().rbegin(); it != open.back().rend();
                 ++it)
                node = Seq::cons(*it, node);
            open.pop_back();
            if (open.empty()) {
                if (i + 1 != bits.size())
                    throw ParseError("trailing bits after complete code",
                                     i + 1);
                return node;
            }
            open.back().push_back(node);
        } else {
            throw ParseError("code symbol must be 0 or 1", i);
        }
    }
    throw ParseError("unterminated code", bits.size());
}

Seq decode_text(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case '0':
        case '(': bits.push_back(0); break;
        case '1':
        case ')': bits.push_back(1); break;
        default:
            throw ParseError(std::string("invalid code symbol '") + text[i] +
                                 "'",
                             i);
        }
    }
    return decode(bits);
}

std::string code_to_string(std::span<const std::uint8_t> bits) {
    std::string out;
    out.reserve(bits.size());
    for (std::uint8_t b : bits) out += b ? '1' : '0';
    return out;
}

Nat parsize(Nat n) {
    return checked_mul(2, nat_to_hfseq(n).node_count());
}

double kraft_term(Nat n) {
    Nat len = parsize(n);
    if (len > 2048) return 0.0; // far below double's denormal range anyway
    return std::ldexp(1.0, -static_cast<int>(len));
}

double kraft_sum(Nat m) {
    if (m < 1) throw std::domain_error("kraft_sum requires m >= 1");
    double sum = 0.0;
    for (Nat n = 0; n < m; ++n) sum += kraft_term(n);
    return sum;
}

KraftReport kraft_check(Nat m) {
    double sum = kraft_sum(m);
    return KraftReport{m, sum, sum <= 1.0};
}

bool prefix_free_check(Nat m) {
    if (m < 2) throw std::domain_error("prefix_free_check requires m >= 2");
    std::vector<std::string> codes;
    codes.reserve(static_cast<std::size_t>(m));
    for (Nat n = 0; n < m; ++n)
        codes.push_back(code_to_string(encode(nat_to_hfseq(n))));
    for (std::size_t i = 0; i < codes.size(); ++i) {
        for (std::size_t j = 0; j < codes.size(); ++j) {
            if (i == j) continue;
            const std::string& a = codes[i];
            const std::string& b = codes[j];
            if (a.size() > b.size()) continue;
            if (b.compare(0, a.size(), a) == 0) return false; // prefix
            if (b.compare(b.size() - a.size(), a.size(), a) == 0)
                return false; // suffix
        }
    }
    return true;
}

} // namespace hfs
