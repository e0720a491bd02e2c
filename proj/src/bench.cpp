#include "hfs/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>
#include <vector>

#include "hfs/arith.hpp"

namespace hfs {

namespace {

std::vector<std::uint8_t> random_digits(std::mt19937_64& rng, Nat bits) {
    std::uniform_int_distribution<int> digit(1, 2);
    std::vector<std::uint8_t> ds(static_cast<std::size_t>(bits));
    for (auto& d : ds) d = static_cast<std::uint8_t>(digit(rng));
    return ds;
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    std::size_t n = xs.size();
    return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

template <typename F>
double time_ms(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

} // namespace

std::vector<BenchRow> run_bench(Nat max_bits, Nat trials, std::uint64_t seed,
                                BenchOp op) {
    if (max_bits < 256)
        throw std::invalid_argument("bench requires max_bits >= 256");
    if (trials < 1) throw std::invalid_argument("bench requires trials >= 1");

    std::mt19937_64 rng(seed);
    std::vector<BenchRow> rows;
    for (Nat bits = 256; bits <= max_bits; bits *= 2) {
        std::vector<double> add_times;
        std::vector<double> mul_times;
        Nat nodes = 0;
        for (Nat t = 0; t < trials; ++t) {
            Seq x = seq_from_digits(random_digits(rng, bits));
            Seq y = seq_from_digits(random_digits(rng, bits));
            if (t == 0) nodes = x.node_count();
            if (op != BenchOp::mul) {
                Seq sum;
                add_times.push_back(time_ms([&] { sum = add(x, y); }));
            }
            if (op != BenchOp::add) {
                Seq product;
                mul_times.push_back(time_ms([&] { product = mul(x, y); }));
            }
        }
        BenchRow row;
        row.bits = bits;
        row.nodes = nodes;
        if (!add_times.empty()) row.add_ms = median(add_times);
        if (!mul_times.empty()) row.mul_ms = median(mul_times);
        rows.push_back(row);
    }
    return rows;
}

} // namespace hfs
