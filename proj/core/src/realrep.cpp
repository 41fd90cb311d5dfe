#include "sl2rep/realrep.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace sl2rep {

namespace {

using CK = ClassLabel::Kind;
using RK = RealCharLabel::Kind;

int to_indicator(const CycNum& total, std::uint64_t group_order, const std::string& what) {
    const auto r = total.as_rational();
    if (!r) throw ConsistencyError(what + ": indicator sum is not rational");
    const Rational v = *r / Rational(static_cast<unsigned long>(group_order));
    if (v.get_den() != 1 || v > 1 || v < -1) {
        throw ConsistencyError(what + ": indicator " + v.get_str() + " is not -1, 0 or 1");
    }
    return static_cast<int>(v.get_num().get_si());
}

// Class of x^k for x generating a cyclic group of order n in which x^(n/2) = z,
// folded into 1 <= k <= n/2 - 1 using k ~ n - k.
ClassLabel fold(std::int64_t k, std::int64_t n, CK kind) {
    k %= n;
    if (k == 0) return ClassLabel::one();
    if (2 * k == n) return ClassLabel::z();
    if (2 * k > n) k = n - k;
    return {kind, static_cast<int>(k)};
}

struct NamedLabel {
    const char* name;
    RK kind;
    bool indexed;
};

constexpr NamedLabel kNames[] = {
    {"Triv", RK::RTriv, false},          {"Psi", RK::RPsi, false},
    {"Chi", RK::RChiEven, true},         {"2Chi", RK::RTwoChiOdd, true},
    {"Theta", RK::RThetaEven, true},     {"2Theta", RK::RTwoThetaOdd, true},
    {"Xi1", RK::RXi1, false},            {"Xi2", RK::RXi2, false},
    {"2Eta1", RK::RTwoEta1, false},      {"2Eta2", RK::RTwoEta2, false},
    {"2ReXi1", RK::RTwoReXi1, false},    {"2ReEta1", RK::RTwoReEta1, false},
};

}  // namespace

std::string to_string(const RealCharLabel& label) {
    for (const auto& n : kNames) {
        if (n.kind == label.kind) {
            return n.indexed ? std::string(n.name) + "(" + std::to_string(label.index) + ")"
                             : std::string(n.name);
        }
    }
    return "?";
}

RealCharLabel parse_real_char_label(const std::string& text) {
    for (const auto& n : kNames) {
        const std::string name = n.name;
        if (!n.indexed) {
            if (text == name) return {n.kind, 0};
            continue;
        }
        if (text.rfind(name + "(", 0) != 0 || text.back() != ')') continue;
        const std::string digits = text.substr(name.size() + 1, text.size() - name.size() - 2);
        if (digits.empty() || digits.size() > 8 ||
            digits.find_first_not_of("0123456789") != std::string::npos) {
            continue;
        }
        const int idx = std::stoi(digits);
        const bool even = idx % 2 == 0;
        const bool wants_even = n.kind == RK::RChiEven || n.kind == RK::RThetaEven;
        if (idx > 0 && even == wants_even) return {n.kind, idx};
    }
    throw std::invalid_argument("malformed real character label: " + text);
}

std::ostream& operator<<(std::ostream& os, const RealCharLabel& label) {
    return os << to_string(label);
}

std::vector<RealCharLabel> real_char_labels(std::uint32_t q) {
    if (!is_odd_prime(q)) throw std::invalid_argument("q must be an odd prime");
    std::vector<RealCharLabel> out{{RK::RTriv, 0}, {RK::RPsi, 0}};
    for (int i = 2; i <= a_range(q); i += 2) out.push_back({RK::RChiEven, i});
    for (int i = 1; i <= a_range(q); i += 2) out.push_back({RK::RTwoChiOdd, i});
    for (int j = 2; j <= b_range(q); j += 2) out.push_back({RK::RThetaEven, j});
    for (int j = 1; j <= b_range(q); j += 2) out.push_back({RK::RTwoThetaOdd, j});
    if (q % 4 == 1) {
        for (auto k : {RK::RXi1, RK::RXi2, RK::RTwoEta1, RK::RTwoEta2}) out.push_back({k, 0});
    } else {
        for (auto k : {RK::RTwoReXi1, RK::RTwoReEta1}) out.push_back({k, 0});
    }
    return out;
}

std::vector<std::pair<CharLabel, int>> constituents(const RealCharLabel& label) {
    switch (label.kind) {
        case RK::RTriv: return {{CharLabel::triv(), 1}};
        case RK::RPsi: return {{CharLabel::psi(), 1}};
        case RK::RChiEven: return {{CharLabel::chi(label.index), 1}};
        case RK::RTwoChiOdd: return {{CharLabel::chi(label.index), 2}};
        case RK::RThetaEven: return {{CharLabel::theta(label.index), 1}};
        case RK::RTwoThetaOdd: return {{CharLabel::theta(label.index), 2}};
        case RK::RXi1: return {{CharLabel::xi1(), 1}};
        case RK::RXi2: return {{CharLabel::xi2(), 1}};
        case RK::RTwoEta1: return {{CharLabel::eta1(), 2}};
        case RK::RTwoEta2: return {{CharLabel::eta2(), 2}};
        case RK::RTwoReXi1: return {{CharLabel::xi1(), 1}, {CharLabel::xi2(), 1}};
        case RK::RTwoReEta1: return {{CharLabel::eta1(), 1}, {CharLabel::eta2(), 1}};
    }
    throw std::logic_error("unknown real character kind");
}

ClassMap square_class_map(std::uint32_t q) {
    const bool two_is_qr = is_quadratic_residue(FqElem(2, q));
    const ClassLabel c_image = two_is_qr ? ClassLabel::c() : ClassLabel::d();
    const ClassLabel d_image = two_is_qr ? ClassLabel::d() : ClassLabel::c();
    ClassMap out;
    for (const auto& L : class_labels(q)) {
        switch (L.kind) {
            case CK::One:
            case CK::Z: out[L] = ClassLabel::one(); break;
            case CK::C:
            case CK::ZC: out[L] = c_image; break;
            case CK::D:
            case CK::ZD: out[L] = d_image; break;
            case CK::A: out[L] = fold(2 * std::int64_t{L.index}, q - 1, CK::A); break;
            case CK::B: out[L] = fold(2 * std::int64_t{L.index}, q + 1, CK::B); break;
        }
    }
    return out;
}

ClassMap inverse_class_map(std::uint32_t q) {
    const bool swap = q % 4 == 3;
    ClassMap out;
    for (const auto& L : class_labels(q)) {
        ClassLabel image = L;
        if (swap) {
            switch (L.kind) {
                case CK::C: image = ClassLabel::d(); break;
                case CK::D: image = ClassLabel::c(); break;
                case CK::ZC: image = ClassLabel::zd(); break;
                case CK::ZD: image = ClassLabel::zc(); break;
                default: break;
            }
        }
        out[L] = image;
    }
    return out;
}

RealClassPartition real_classes(std::uint32_t q) {
    const ClassMap inv = inverse_class_map(q);
    RealClassPartition out;
    std::set<ClassLabel> seen;
    for (const auto& L : class_labels(q)) {
        if (seen.count(L)) continue;
        std::vector<ClassLabel> block;
        ClassLabel cur = L;
        while (!seen.count(cur)) {
            seen.insert(cur);
            block.push_back(cur);
            cur = inv.at(cur);
        }
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
    }
    return out;
}

int fs_indicator_brute(const CharTable& table, const CharLabel& chr) {
    const ClassMap sq = square_class_map(table.q());
    CycSum sum;
    for (const auto& cls : table.classes()) {
        sum.add(table.value(chr, sq.at(cls.label)),
                Rational(static_cast<unsigned long>(cls.size)));
    }
    return to_indicator(sum.total(), table.group_order(), "class-grouped " + to_string(chr));
}

int fs_indicator_closed(const CharTable& table, const CharLabel& chr) {
    const long q = table.q();
    const long z_coef = (q % 4 == 1) ? q * q + q : q * q - q;
    CycSum sum;
    sum.add(table.value(chr, ClassLabel::one()), 2);
    sum.add(table.value(chr, ClassLabel::z()), z_coef);
    sum.add(table.value(chr, ClassLabel::c()) + table.value(chr, ClassLabel::d()), q * q - 1);
    for (long l = 1; l <= (q - 3) / 4; ++l) {
        sum.add(table.value(chr, ClassLabel::a(static_cast<int>(2 * l))), 2 * q * (q + 1));
    }
    for (long m = 1; m <= (q - 1) / 4; ++m) {
        sum.add(table.value(chr, ClassLabel::b(static_cast<int>(2 * m))), 2 * q * (q - 1));
    }
    return to_indicator(sum.total(), table.group_order(), "closed-form " + to_string(chr));
}

SquareCensus::SquareCensus(const ConjugacyPartition& partition) {
    for (const auto& g : partition.elements()) ++counts_[partition.label_of(g * g)];
}

int fs_indicator_raw(const CharTable& table, const CharLabel& chr, const SquareCensus& census) {
    CycSum sum;
    std::uint64_t total = 0;
    for (const auto& [label, count] : census.counts()) {
        sum.add(table.value(chr, label), Rational(static_cast<unsigned long>(count)));
        total += count;
    }
    if (total != table.group_order()) {
        throw std::invalid_argument("census does not cover the whole group");
    }
    return to_indicator(sum.total(), table.group_order(), "raw " + to_string(chr));
}

std::vector<FsEntry> fs_listing(const CharTable& table, const SquareCensus* census) {
    std::vector<FsEntry> out;
    for (const auto& chr : table.characters()) {
        FsEntry e;
        e.chr = chr;
        e.closed = fs_indicator_closed(table, chr);
        e.brute = fs_indicator_brute(table, chr);
        if (census) e.raw = fs_indicator_raw(table, chr, *census);
        e.match = e.closed == *e.brute && (!e.raw || *e.raw == e.closed);
        out.push_back(e);
    }
    return out;
}

RealCharTable::RealCharTable(std::uint32_t q, std::vector<ConjClass> classes,
                             std::vector<RealCharLabel> characters,
                             std::vector<std::vector<CharCell>> cells)
    : q_(q),
      classes_(std::move(classes)),
      characters_(std::move(characters)),
      cells_(std::move(cells)) {
    if (cells_.size() != characters_.size()) throw std::invalid_argument("row count mismatch");
    for (const auto& row : cells_) {
        if (row.size() != classes_.size()) throw std::invalid_argument("column count mismatch");
    }
}

std::size_t RealCharTable::row_of(const RealCharLabel& label) const {
    for (std::size_t r = 0; r < characters_.size(); ++r) {
        if (characters_[r] == label) return r;
    }
    throw std::out_of_range("no real character " + to_string(label) + " for q = " +
                            std::to_string(q_));
}

const CharCell& RealCharTable::cell(const RealCharLabel& chr, const ClassLabel& cls) const {
    return cells_[row_of(chr)][class_index(q_, cls)];
}

std::int64_t RealCharTable::degree(const RealCharLabel& chr) const {
    const auto v = value(chr, ClassLabel::one()).as_rational();
    if (!v || v->get_den() != 1) throw std::logic_error("non-integral degree");
    return v->get_num().get_si();
}

RealCharTable real_table(const CharTable& table) {
    const std::uint32_t q = table.q();
    const auto perm = conjugation_permutation(table);
    std::map<CharLabel, int> iota;
    for (const auto& chr : table.characters()) iota[chr] = fs_indicator_brute(table, chr);

    auto labels = real_char_labels(q);
    std::vector<std::vector<CharCell>> cells;
    std::set<CharLabel> used;
    for (const auto& rl : labels) {
        const auto parts = constituents(rl);
        // Expected shape: one copy (iota 1), one doubled (iota -1), or a
        // conjugate pair (iota 0).
        if (parts.size() == 1) {
            const auto& [chr, mult] = parts.front();
            const int want = (mult == 1) ? 1 : -1;
            if (iota.at(chr) != want) {
                throw ConsistencyError(to_string(rl) + ": indicator of " + to_string(chr) + " is " +
                                       std::to_string(iota.at(chr)));
            }
        } else {
            const auto r0 = table.row_of(parts[0].first);
            const auto r1 = table.row_of(parts[1].first);
            if (iota.at(parts[0].first) != 0 || iota.at(parts[1].first) != 0 || perm[r0] != r1) {
                throw ConsistencyError(to_string(rl) + ": constituents are not a conjugate pair");
            }
        }
        std::vector<CharCell> row;
        for (const auto& cls : table.classes()) {
            CycNum value;
            Symbolic form = Symbolic::rational(0);
            for (const auto& [chr, mult] : parts) {
                const auto& c = table.cell(chr, cls.label);
                value += c.value * Rational(mult);
                form = form + c.form.scaled(mult);
            }
            row.push_back(CharCell{std::move(value), std::move(form)});
        }
        for (const auto& p : parts) {
            if (!used.insert(p.first).second) {
                throw ConsistencyError(to_string(p.first) + " used in two real rows");
            }
        }
        cells.push_back(std::move(row));
    }
    if (used.size() != table.characters().size()) {
        throw ConsistencyError("some complex characters have no real row");
    }
    return RealCharTable(q, table.classes(), std::move(labels), std::move(cells));
}

RealCharTable real_table(std::uint32_t q) { return real_table(complex_table(q)); }

}  // namespace sl2rep
