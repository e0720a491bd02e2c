#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hfs/arith.hpp"
#include "hfs/errors.hpp"
#include "hfs/seq.hpp"
#include "oracle.hpp"

using hfs::Count;
using hfs::Seq;

TEST_CASE("tree literal parse and print round trip") {
    for (const char* text :
         {"[]", "[[]]", "[[],[]]", "[[[[]]],[],[],[[]],[],[],[],[]]",
          "[[[]],[[]],[[]]]"}) {
        Seq t = hfs::parse_tree(text);
        CHECK(hfs::print_tree(t) == text);
        CHECK(hfs::parse_tree(hfs::print_tree(t)) == t);
    }
}

TEST_CASE("tree literal parser ignores whitespace") {
    CHECK(hfs::parse_tree(" [ [ ] , [ ] ] ") == hfs::parse_tree("[[],[]]"));
    CHECK(hfs::parse_tree("[\t[],\n[]]") == hfs::parse_tree("[[],[]]"));
}

TEST_CASE("tree literal parser reports positions") {
    CHECK_THROWS_AS(hfs::parse_tree(""), hfs::ParseError);
    CHECK_THROWS_AS(hfs::parse_tree("["), hfs::ParseError);
    CHECK_THROWS_AS(hfs::parse_tree("]"), hfs::ParseError);
    CHECK_THROWS_AS(hfs::parse_tree("[[],]"), hfs::ParseError);
    CHECK_THROWS_AS(hfs::parse_tree("[] []"), hfs::ParseError);
    CHECK_THROWS_AS(hfs::parse_tree("[x]"), hfs::ParseError);
    try {
        hfs::parse_tree("[[]");
    } catch (const hfs::ParseError& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("head, tail and cons behave as list operations") {
    Seq t = hfs::parse_tree("[[[]],[],[]]");
    CHECK(t.head() == hfs::parse_tree("[[]]"));
    CHECK(t.tail() == hfs::parse_tree("[[],[]]"));
    CHECK(Seq::cons(t.head(), t.tail()) == t);
    CHECK(Seq::cons(Seq{}, Seq{}) == hfs::parse_tree("[[]]"));
}

TEST_CASE("structural equality is value equality") {
    CHECK(Seq{} == Seq{});
    CHECK(hfs::parse_tree("[[],[]]") == hfs::parse_tree("[[],[]]"));
    CHECK(hfs::parse_tree("[[],[]]") != hfs::parse_tree("[[[]]]"));
    CHECK(hfs::parse_tree("[[]]") != Seq{});
}

TEST_CASE("equal trees compare equal regardless of construction path") {
    // One built child by child, one built as a run.
    Seq by_cons;
    for (int i = 0; i < 5; ++i) by_cons = Seq::cons(Seq{}, by_cons);
    Seq by_run = Seq::run(Seq{}, Count::of(5), Seq{});
    CHECK(by_cons == by_run);
    CHECK(by_cons.child_count() == 5);
    // Mixed runs: [x,x,y,x] with x != y.
    Seq x = hfs::parse_tree("[[]]");
    Seq y = hfs::parse_tree("[]");
    Seq mixed = Seq::cons(x, Seq::cons(x, Seq::cons(y, Seq::cons(x, Seq{}))));
    CHECK(mixed.child_count() == 4);
    CHECK(mixed.head() == x);
    CHECK(mixed.tail().tail().head() == y);
}

TEST_CASE("node and child counts") {
    CHECK(Seq{}.node_count() == 1);
    CHECK(Seq{}.child_count() == 0);
    Seq t = hfs::parse_tree("[[[[]]],[],[],[[]],[],[],[],[]]");
    CHECK(t.node_count() == 12);
    CHECK(t.child_count() == 8);
}

TEST_CASE("counts promote past the machine word") {
    CHECK(Count::of(1).is_one());
    CHECK(Count::of(7).value() == 7);
    CHECK(Count::of(7).incremented().value() == 8);
    CHECK(Count::of(7).decremented().value() == 6);
    CHECK(Count::of(3).plus(Count::of(4)) == Count::of(7));
    CHECK(hfs::to_nat(Count::of(42).as_tree()) == 42);

    // A count too large for any machine word: (2^64 - 1) + 1 = 2^64.
    Count max_small = Count::of(~hfs::Nat{0});
    Count big = max_small.incremented();
    CHECK_FALSE(big.fits_nat());
    CHECK_THROWS_AS(big.value(), std::overflow_error);
    CHECK(Count::from_tree(big.as_tree()) == big);
    CHECK(big.decremented() == max_small);
    CHECK(big.decremented().incremented() == big);
    CHECK(big != max_small);
}

TEST_CASE("long sibling chains are torn down without stack overflow") {
    // 2^17 distinct-ish children prevent run merging from collapsing the
    // chain, so destruction really walks 2^17 cells.
    Seq a = hfs::parse_tree("[]");
    Seq b = hfs::parse_tree("[[]]");
    Seq t;
    for (int i = 0; i < (1 << 17); ++i) t = Seq::cons(i % 2 ? a : b, t);
    CHECK(t.child_count() == (1 << 17));
    t = Seq{}; // must not overflow the stack
    CHECK(t.empty());
}

TEST_CASE("random trees survive the print/parse round trip") {
    std::mt19937_64 rng(oracle::kSeed);
    for (int i = 0; i < 500; ++i) {
        Seq t = oracle::random_tree(rng, 64);
        CHECK(hfs::parse_tree(hfs::print_tree(t)) == t);
    }
}
