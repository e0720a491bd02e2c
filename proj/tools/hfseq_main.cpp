#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hfs/arith.hpp"
#include "hfs/bench.hpp"
#include "hfs/dyck.hpp"
#include "hfs/errors.hpp"
#include "hfs/natseq.hpp"
#include "hfs/seq.hpp"
#include "hfs/system_t.hpp"

namespace {

enum class Format { dec, tree, type, dyck };

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitUsage = 64;

Format format_of_name(const std::string& name) {
    if (name == "dec") return Format::dec;
    if (name == "tree") return Format::tree;
    if (name == "type") return Format::type;
    if (name == "dyck") return Format::dyck;
    throw std::invalid_argument("unknown format: " + name);
}

// Detection order: dyck (only 0/1/() symbols), type (mentions e or ->),
// tree (starts with [), otherwise decimal. A Dyck prime must open on its
// first symbol and close on its last, so strings failing that (such as the
// decimals "0" and "1010") fall through to decimal detection.
Format detect_format(const std::string& s) {
    if (s.size() >= 2 && (s.front() == '0' || s.front() == '(') &&
        (s.back() == '1' || s.back() == ')')) {
        bool dyckish = true;
        for (char c : s)
            if (c != '0' && c != '1' && c != '(' && c != ')') {
                dyckish = false;
                break;
            }
        if (dyckish) return Format::dyck;
    }
    if (s.find('e') != std::string::npos || s.find("->") != std::string::npos)
        return Format::type;
    if (!s.empty() && s[0] == '[') return Format::tree;
    return Format::dec;
}

hfs::Seq parse_item(const std::string& s, Format fmt) {
    switch (fmt) {
    case Format::dec: return hfs::from_decimal(s);
    case Format::tree: return hfs::parse_tree(s);
    case Format::type: return hfs::type_to_hfseq(hfs::parse_type(s));
    case Format::dyck: return hfs::decode_text(s);
    }
    throw std::logic_error("unreachable");
}

std::string render_item(const hfs::Seq& t, Format fmt) {
    switch (fmt) {
    case Format::dec: return hfs::to_decimal(t);
    case Format::tree: return hfs::print_tree(t);
    case Format::type: return hfs::print_type(hfs::hfseq_to_type(t));
    case Format::dyck: return hfs::code_to_string(hfs::encode(t));
    }
    throw std::logic_error("unreachable");
}

std::vector<std::string> stdin_lines() {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(std::cin, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

struct ConvertOpts {
    std::vector<std::string> inputs;
    std::string from = "auto";
    std::string to;
};

int run_convert(const ConvertOpts& opts) {
    std::vector<std::string> items =
        opts.inputs.empty() ? stdin_lines() : opts.inputs;
    Format target = format_of_name(opts.to);
    if (items.empty()) return 0;
    // One input form per invocation: autodetect from the first item only.
    Format source = opts.from == "auto" ? detect_format(items[0])
                                        : format_of_name(opts.from);
    for (const auto& item : items)
        std::cout << render_item(parse_item(item, source), target) << "\n";
    return 0;
}

struct ArithOpts {
    std::string op;
    std::vector<std::string> operands;
    std::string from = "auto";
    std::string format = "auto"; // output; defaults to first operand's format
};

int run_arith_line(const ArithOpts& opts,
                   const std::vector<std::string>& operands) {
    bool unary = opts.op == "succ" || opts.op == "pred";
    std::size_t arity = unary ? 1 : 2;
    if (operands.size() != arity)
        throw std::invalid_argument("operator '" + opts.op + "' expects " +
                                    std::to_string(arity) + " operand(s)");

    // One input form per invocation, detected from the first operand.
    Format in_fmt = opts.from == "auto" ? detect_format(operands[0])
                                        : format_of_name(opts.from);
    Format out_fmt = opts.format == "auto" ? in_fmt
                                           : format_of_name(opts.format);
    std::vector<hfs::Seq> args;
    for (const auto& s : operands) args.push_back(parse_item(s, in_fmt));

    if (opts.op == "cmp") {
        switch (hfs::cmp(args[0], args[1])) {
        case hfs::Ordering::lt: std::cout << "LT\n"; break;
        case hfs::Ordering::eq: std::cout << "EQ\n"; break;
        case hfs::Ordering::gt: std::cout << "GT\n"; break;
        }
        return 0;
    }

    hfs::Seq result;
    if (opts.op == "add") result = hfs::add(args[0], args[1]);
    else if (opts.op == "mul") result = hfs::mul(args[0], args[1]);
    else if (opts.op == "sub") result = hfs::sub(args[0], args[1]);
    else if (opts.op == "pow") result = hfs::pow(args[0], hfs::to_nat(args[1]));
    else if (opts.op == "succ") result = hfs::succ(args[0]);
    else if (opts.op == "pred") result = hfs::pred(args[0]);
    else throw std::invalid_argument("unknown operator: " + opts.op);

    std::cout << render_item(result, out_fmt) << "\n";
    return 0;
}

int run_arith(const ArithOpts& opts) {
    if (!opts.operands.empty()) return run_arith_line(opts, opts.operands);
    for (const auto& line : stdin_lines()) {
        std::istringstream in(line);
        std::vector<std::string> operands;
        std::string word;
        while (in >> word) operands.push_back(word);
        int rc = run_arith_line(opts, operands);
        if (rc != 0) return rc;
    }
    return 0;
}

struct EnumOpts {
    hfs::Nat count = 0;
    std::string format = "tree";
    bool ranks = false;
};

int run_enum(const EnumOpts& opts) {
    Format fmt = format_of_name(opts.format);
    hfs::Seq t;
    for (hfs::Nat i = 0; i < opts.count; ++i) {
        if (opts.ranks) std::cout << i << "\t";
        std::cout << render_item(t, fmt) << "\n";
        t = hfs::succ(t);
    }
    return 0;
}

int run_kraft(const std::vector<hfs::Nat>& ms) {
    for (hfs::Nat m : ms) {
        hfs::KraftReport report = hfs::kraft_check(m);
        std::printf("%llu\t%.6f\t%s\n",
                    static_cast<unsigned long long>(report.m), report.sum,
                    report.holds ? "holds" : "violated");
    }
    return 0;
}

struct BenchOpts {
    hfs::Nat max_bits = 4096;
    hfs::Nat trials = 3;
    std::uint64_t seed = 42;
    std::string op = "both";
};

int run_bench_cmd(const BenchOpts& opts) {
    hfs::BenchOp op = opts.op == "add"   ? hfs::BenchOp::add
                      : opts.op == "mul" ? hfs::BenchOp::mul
                                         : hfs::BenchOp::both;
    auto rows = hfs::run_bench(opts.max_bits, opts.trials, opts.seed, op);
    for (const auto& row : rows) {
        std::cout << row.bits << "\t" << row.nodes << "\t";
        if (row.add_ms >= 0) std::cout << row.add_ms;
        else std::cout << "na";
        std::cout << "\t";
        if (row.mul_ms >= 0) std::cout << row.mul_ms;
        else std::cout << "na";
        std::cout << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"arithmetic on hereditarily finite sequences: conversions, "
                 "tree-numeral arithmetic, enumeration, Kraft analytics and a "
                 "scaling benchmark"};
    app.require_subcommand(1);

    auto format_check = CLI::IsMember({"dec", "tree", "type", "dyck"});
    auto format_or_auto = CLI::IsMember({"auto", "dec", "tree", "type", "dyck"});

    ConvertOpts convert_opts;
    auto* convert = app.add_subcommand(
        "convert", "convert between decimal, tree, type and Dyck forms");
    // Positional items are collected through remaining() rather than a
    // vector option: CLI11 expands bracketed values like [[],[]] as
    // container syntax, which would mangle tree literals.
    convert->allow_extras();
    convert->footer("Positionals: items to convert "
                    "(stdin, one per line, when omitted)");
    convert->add_option("--from", convert_opts.from, "input format")
        ->check(format_or_auto);
    convert->add_option("--to", convert_opts.to, "output format")
        ->required()
        ->check(format_check);

    ArithOpts arith_opts;
    auto* arith =
        app.add_subcommand("arith", "apply an arithmetic operation");
    arith->add_option("op", arith_opts.op, "operation")
        ->required()
        ->check(CLI::IsMember({"add", "mul", "sub", "cmp", "pow", "succ",
                               "pred"}));
    arith->allow_extras();
    arith->footer("Positionals: operands (stdin lines when omitted)");
    arith->add_option("--from", arith_opts.from, "operand format")
        ->check(format_or_auto);
    arith->add_option("--format", arith_opts.format, "output format")
        ->check(format_or_auto);

    EnumOpts enum_opts;
    auto* enumerate =
        app.add_subcommand("enum", "list the first k numerals in order");
    enumerate->add_option("k", enum_opts.count, "how many")->required();
    enumerate->add_option("--format", enum_opts.format, "rendering")
        ->check(format_check);
    enumerate->add_flag("--ranks", enum_opts.ranks,
                        "prefix each line with its rank");

    std::vector<hfs::Nat> kraft_ms;
    auto* kraft = app.add_subcommand(
        "kraft", "Kraft sums over the first m Dyck code lengths");
    kraft->add_option("m", kraft_ms, "rank counts")->required();

    BenchOpts bench_opts;
    auto* bench = app.add_subcommand(
        "bench", "time add/mul across doubling operand sizes");
    bench->add_option("--max-bits", bench_opts.max_bits,
                      "largest operand size in bijective digits (>= 256)");
    bench->add_option("--trials", bench_opts.trials, "trials per size");
    bench->add_option("--seed", bench_opts.seed, "RNG seed");
    bench->add_option("--op", bench_opts.op, "which operations to time")
        ->check(CLI::IsMember({"add", "mul", "both"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (convert->parsed()) {
            convert_opts.inputs = convert->remaining();
            return run_convert(convert_opts);
        }
        if (arith->parsed()) {
            arith_opts.operands = arith->remaining();
            return run_arith(arith_opts);
        }
        if (enumerate->parsed()) return run_enum(enum_opts);
        if (kraft->parsed()) return run_kraft(kraft_ms);
        if (bench->parsed()) return run_bench_cmd(bench_opts);
    } catch (const hfs::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::underflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}
