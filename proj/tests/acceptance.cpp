// Acceptance gate: runs the seven release criteria, prints one PASS/FAIL
// line per criterion with its elapsed time against the stated budget, and
// exits nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "hfs/arith.hpp"
#include "hfs/bench.hpp"
#include "hfs/dyck.hpp"
#include "hfs/natseq.hpp"
#include "hfs/seq.hpp"
#include "hfs/system_t.hpp"
#include "oracle.hpp"

using hfs::Nat;
using hfs::Seq;
using hfs::TType;

namespace {

struct Failure {
    std::string detail;
};

std::vector<Failure> g_failures;

void require(bool ok, const std::string& detail) {
    if (!ok) g_failures.push_back({detail});
}

bool run_criterion(int number, const char* name, double budget_s,
                   const std::function<void()>& body) {
    g_failures.clear();
    auto start = std::chrono::steady_clock::now();
    try {
        body();
    } catch (const std::exception& e) {
        g_failures.push_back({std::string("unexpected exception: ") + e.what()});
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool ok = g_failures.empty() && elapsed < budget_s;
    std::printf("%s  criterion %d: %s (%.3f s, budget %.0f s)\n",
                ok ? "PASS" : "FAIL", number, name, elapsed, budget_s);
    if (!g_failures.empty())
        for (const auto& f : g_failures)
            std::printf("      %s\n", f.detail.c_str());
    else if (elapsed >= budget_s)
        std::printf("      over time budget\n");
    return ok;
}

Seq tower(int depth) {
    Seq t;
    for (int d = 0; d < depth; ++d) t = Seq::cons(t, Seq{});
    return t;
}

void criterion1_reference_values() {
    require(hfs::nat_to_list(2012) == std::vector<Nat>{2, 0, 0, 1, 0, 0, 0, 0},
            "nat_to_list(2012)");
    require(hfs::print_tree(hfs::nat_to_hfseq(2012)) ==
                "[[[[]]],[],[],[[]],[],[],[],[]]",
            "nat_to_hfseq(2012)");
    require(hfs::print_tree(hfs::from_nat(42)) == "[[[]],[[]],[[]]]",
            "from_nat(42)");
    Seq fortytwo = hfs::from_nat(42);
    require(hfs::print_tree(hfs::slow_add(fortytwo, fortytwo)) ==
                "[[[[]]],[[]],[[]]]",
            "slow_add(42,42)");

    const char* tree_stream[] = {"[]", "[[]]", "[[[]]]", "[[],[]]"};
    std::vector<Seq> ts = hfs::enumerate(4);
    for (int i = 0; i < 4; ++i)
        require(hfs::print_tree(ts[i]) == tree_stream[i],
                "tree stream prefix " + std::to_string(i));
    const char* type_stream[] = {"e", "(e->e)", "((e->e)->e)", "(e->e->e)"};
    std::vector<TType> us = hfs::enumerate_t(4);
    for (int i = 0; i < 4; ++i)
        require(hfs::print_type(us[i]) == type_stream[i],
                "type stream prefix " + std::to_string(i));

    std::vector<std::uint8_t> code{0, 0, 1, 0, 1, 1};
    require(hfs::decode(code) == hfs::parse_tree("[[],[]]"), "decode 001011");
    require(hfs::encode(hfs::parse_tree("[[],[]]")) == code, "encode [[],[]]");

    TType one = hfs::parse_type("(e->e)");
    TType two = hfs::parse_type("((e->e)->e)");
    auto pred_q = hfs::sp_infer(std::nullopt, two);
    require(std::holds_alternative<TType>(pred_q) &&
                std::get<TType>(pred_q) == one,
            "sp query: predecessor of ((e->e)->e)");
    auto succ_q = hfs::sp_infer(one, std::nullopt);
    require(std::holds_alternative<TType>(succ_q) &&
                std::get<TType>(succ_q) == two,
            "sp query: successor of (e->e)");
    auto both_q = hfs::sp_infer(one, two);
    require(std::holds_alternative<bool>(both_q) && std::get<bool>(both_q),
            "sp query: verification");
}

void criterion2_big_numbers() {
    Seq a = hfs::from_decimal("12345678901234567890");
    Seq b = hfs::from_decimal("10000000000000000000");
    require(hfs::to_decimal(hfs::add(a, b)) == "22345678901234567890",
            "big add");
    require(hfs::to_decimal(hfs::mul(a, b)) ==
                "123456789012345678900000000000000000000",
            "big mul");
    Seq googol = hfs::pow(hfs::from_nat(10), 100);
    require(hfs::to_decimal(hfs::mul(googol, googol)) ==
                "1" + std::string(200, '0'),
            "googol squared");
}

void criterion3_kraft_table() {
    const struct {
        Nat m;
        double sum;
    } table[] = {{10, 0.364258},   {100, 0.382935},  {1000, 0.390383},
                 {2000, 0.391615}, {3000, 0.392292}, {4000, 0.392598}};
    for (const auto& row : table)
        require(std::abs(hfs::kraft_sum(row.m) - row.sum) <= 1e-6,
                "kraft_sum(" + std::to_string(row.m) + ")");
}

void criterion4_oracle_equivalence() {
    std::vector<Seq> stream = hfs::enumerate(4097);
    for (Nat n = 0; n <= 4096; ++n) {
        Seq t = hfs::nat_to_hfseq(n);
        bool agree = t == hfs::from_nat(n) && t == hfs::nat_to_tree_slow(n) &&
                     t == stream[n];
        require(agree, "path agreement at n=" + std::to_string(n));
        require(oracle::value(hfs::succ(t)) == n + 1,
                "succ at n=" + std::to_string(n));
        if (n > 0) {
            require(oracle::value(hfs::pred(t)) == n - 1,
                    "pred at n=" + std::to_string(n));
            require(oracle::value(hfs::r_dtor(t)) == (n - 1) / 2,
                    "r_dtor at n=" + std::to_string(n));
        }
        hfs::Parity expected = n == 0       ? hfs::Parity::zero
                               : n % 2 == 1 ? hfs::Parity::odd
                                            : hfs::Parity::even_pos;
        require(hfs::parity(t) == expected, "parity at n=" + std::to_string(n));
    }

    std::mt19937_64 rng(oracle::kSeed);
    std::uniform_int_distribution<Nat> dist(0, (Nat{1} << 31) - 1);
    for (int i = 0; i < 10000; ++i) {
        Nat a = dist(rng);
        Nat b = dist(rng);
        Seq ta = hfs::from_nat(a);
        Seq tb = hfs::from_nat(b);
        require(oracle::value(hfs::add(ta, tb)) == a + b, "random add");
        require(oracle::value(hfs::mul(ta, tb)) == a * b, "random mul");
        Nat hi = a < b ? b : a;
        Nat lo = a < b ? a : b;
        require(oracle::value(hfs::sub(hfs::from_nat(hi), hfs::from_nat(lo))) ==
                    hi - lo,
                "random sub");
        hfs::Ordering expected = a < b   ? hfs::Ordering::lt
                                 : a > b ? hfs::Ordering::gt
                                         : hfs::Ordering::eq;
        require(hfs::cmp(ta, tb) == expected, "random cmp");
    }
}

void criterion5_property_suites() {
    std::mt19937_64 rng(oracle::kSeed);

    std::uniform_int_distribution<Nat> small(0, (Nat{1} << 20) - 1);
    Seq zero;
    Seq one = hfs::from_nat(1);
    for (int i = 0; i < 1000; ++i) {
        Seq a = hfs::from_nat(small(rng));
        Seq b = hfs::from_nat(small(rng));
        Seq c = hfs::from_nat(small(rng));
        bool laws = hfs::add(a, b) == hfs::add(b, a) &&
                    hfs::add(hfs::add(a, b), c) == hfs::add(a, hfs::add(b, c)) &&
                    hfs::mul(a, b) == hfs::mul(b, a) &&
                    hfs::mul(hfs::mul(a, b), c) == hfs::mul(a, hfs::mul(b, c)) &&
                    hfs::mul(a, hfs::add(b, c)) ==
                        hfs::add(hfs::mul(a, b), hfs::mul(a, c)) &&
                    hfs::add(a, zero) == a && hfs::mul(a, one) == a;
        require(laws, "semiring laws, triple " + std::to_string(i));
    }

    for (int i = 0; i < 1000; ++i) {
        Nat a = small(rng);
        Nat b = small(rng);
        require(oracle::value(hfs::mul0(hfs::from_nat(a), hfs::from_nat(b))) ==
                    (a + 1) * (b + 1) - 1,
                "mul0 contract");
        Nat hi = a < b ? b : a;
        Nat lo = a < b ? a : b;
        Seq thi = hfs::from_nat(hi);
        Seq tlo = hfs::from_nat(lo);
        require(hfs::add(hfs::sub(thi, tlo), tlo) == thi, "sub/add round trip");
    }

    std::uniform_int_distribution<Nat> wide;
    for (int i = 0; i < 1000; ++i) {
        Seq t = hfs::from_nat(wide(rng));
        require(hfs::from_decimal(hfs::to_decimal(t)) == t,
                "decimal round trip");
    }
    for (int i = 0; i < 1000; ++i) {
        Seq t = oracle::random_tree(rng, 128);
        require(hfs::decode(hfs::encode(t)) == t, "Dyck round trip");
    }

    require(hfs::prefix_free_check(512), "prefix_free_check(512)");

    std::uniform_int_distribution<Nat> medium(0, (Nat{1} << 31) - 1);
    for (int i = 0; i < 1000; ++i) {
        Seq t = hfs::from_nat(medium(rng));
        require(hfs::hfseq_to_type(hfs::succ(t)) ==
                    hfs::succ_t(hfs::hfseq_to_type(t)),
                "functor property");
    }
}

void criterion6_tower() {
    Seq t8 = tower(8);
    Seq up = hfs::succ(t8);
    require(up != t8, "succ(T_8) differs from T_8");
    require(hfs::pred(up) == t8, "pred(succ(T_8)) = T_8");
}

void criterion7_scaling() {
    std::vector<hfs::BenchRow> rows =
        hfs::run_bench(Nat{1} << 14, 5, oracle::kSeed, hfs::BenchOp::add);
    require(rows.size() == 7, "row count for 256..16384");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double ratio = rows[i].add_ms / rows[i - 1].add_ms;
        require(ratio <= 4.0,
                "add time ratio " + std::to_string(ratio) + " at " +
                    std::to_string(rows[i].bits) + " digits");
    }
}

} // namespace

int main() {
    bool ok = true;
    ok &= run_criterion(1, "reference-value regression", 1.0,
                        criterion1_reference_values);
    ok &= run_criterion(2, "big-number regression", 5.0,
                        criterion2_big_numbers);
    ok &= run_criterion(3, "Kraft table", 10.0, criterion3_kraft_table);
    ok &= run_criterion(4, "oracle equivalence", 30.0,
                        criterion4_oracle_equivalence);
    ok &= run_criterion(5, "property suites", 30.0,
                        criterion5_property_suites);
    ok &= run_criterion(6, "giant-number property", 1.0, criterion6_tower);
    ok &= run_criterion(7, "scaling witness", 120.0, criterion7_scaling);
    return ok ? 0 : 1;
}
