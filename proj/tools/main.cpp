// sl2rep: tables and checks for SL_2(q), q an odd prime.

#include "sl2rep/io.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>

namespace {

using namespace sl2rep;

struct Options {
    std::int64_t q = 0;
    std::string format = "text";
    std::uint32_t max_enum = EnumerationBound{}.max_q;
};

void add_common(CLI::App* sub, Options& opt) {
    sub->add_option("q", opt.q, "odd prime")->required();
    sub->add_option("--format", opt.format, "text, json, csv or latex")
        ->check(CLI::IsMember({"text", "json", "csv", "latex"}));
    sub->add_option("--max-enum", opt.max_enum, "largest q for which the group is enumerated");
}

std::uint32_t checked_q(const Options& opt) {
    if (opt.q < 3 || opt.q > 1'000'000 || !is_odd_prime(static_cast<std::uint64_t>(opt.q))) {
        throw std::invalid_argument("q must be an odd prime (got " + std::to_string(opt.q) + ")");
    }
    return static_cast<std::uint32_t>(opt.q);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Character tables, indicators and fixed-point dimensions of SL_2(q)"};
    app.require_subcommand(1);
    Options opt;

    auto* classes = app.add_subcommand("classes", "conjugacy classes with representatives");
    auto* chars = app.add_subcommand("char-table", "complex character table");
    auto* real = app.add_subcommand("real-table", "real irreducible characters");
    auto* fs = app.add_subcommand("fs", "Frobenius-Schur indicators");
    auto* fixed = app.add_subcommand("fixed-points", "fixed-point dimensions on cyclic subgroups");
    auto* verify = app.add_subcommand("verify", "brute-force verification suite");
    for (auto* sub : {classes, chars, real, fs, fixed, verify}) add_common(sub, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        const std::uint32_t q = checked_q(opt);
        const OutputFormat fmt = parse_format(opt.format);
        const EnumerationBound bound{opt.max_enum};

        if (classes->parsed()) {
            std::cout << render(ClassListing{q, representatives(q)}, fmt);
        } else if (chars->parsed()) {
            std::cout << render(complex_table(q), fmt);
        } else if (real->parsed()) {
            std::cout << render(real_table(q), fmt);
        } else if (fs->parsed()) {
            const CharTable table = complex_table(q);
            FsListing listing{q, {}};
            if (q <= bound.max_q) {
                const ConjugacyPartition partition(q, bound);
                const SquareCensus census(partition);
                listing.entries = fs_listing(table, &census);
            } else {
                listing.entries = fs_listing(table);
            }
            std::cout << render(listing, fmt);
        } else if (fixed->parsed()) {
            std::cout << render(full_report(q, bound), fmt);
        } else if (verify->parsed()) {
            if (q > bound.max_q) {
                std::cerr << "refusing to verify q = " << q << ": it exceeds the enumeration bound "
                          << bound.max_q << "; raise it with --max-enum " << q << "\n";
                return 1;
            }
            const VerificationReport report = verify_all(q, bound);
            std::cout << render(report, fmt);
            return report.overall ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
