#include "sl2rep/chars.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace sl2rep {

namespace {

int parity_sign(std::int64_t n) { return (n % 2 == 0) ? 1 : -1; }

using CK = ClassLabel::Kind;
using RK = CharLabel::Kind;

// Entry at the columns One, Z, C, D and the A/B families. The zc and zd
// columns are derived from these by chi(zc) = chi(z)/chi(1) * chi(c).
Symbolic base_entry(std::uint32_t q, const CharLabel& chr, const ClassLabel& cls) {
    const std::int64_t Q = q;
    const int eps = (q % 4 == 1) ? 1 : -1;
    const Rational half(1, 2);
    auto R = [](std::int64_t v) { return Symbolic::rational(Rational(static_cast<long>(v))); };
    auto surd = [&](std::int64_t a, int sign_g) {
        return Symbolic::surd_form(Rational(static_cast<long>(a)) * half, Rational(sign_g) * half,
                                   eps * Q);
    };

    switch (chr.kind) {
        case RK::Triv: return R(1);
        case RK::Psi:
            switch (cls.kind) {
                case CK::One:
                case CK::Z: return R(Q);
                case CK::A: return R(1);
                case CK::B: return R(-1);
                default: return R(0);
            }
        case RK::Chi: {
            const int i = chr.index;
            switch (cls.kind) {
                case CK::One: return R(Q + 1);
                case CK::Z: return R(parity_sign(i) * (Q + 1));
                case CK::C:
                case CK::D: return R(1);
                case CK::A:
                    return Symbolic::nu_form(0, 1, q - 1, static_cast<std::int64_t>(i) * cls.index);
                case CK::B: return R(0);
                default: break;
            }
            break;
        }
        case RK::Theta: {
            const int j = chr.index;
            switch (cls.kind) {
                case CK::One: return R(Q - 1);
                case CK::Z: return R(parity_sign(j) * (Q - 1));
                case CK::C:
                case CK::D: return R(-1);
                case CK::A: return R(0);
                case CK::B:
                    return Symbolic::nu_form(0, -1, q + 1, static_cast<std::int64_t>(j) * cls.index);
                default: break;
            }
            break;
        }
        case RK::Xi1:
        case RK::Xi2: {
            const int s = (chr.kind == RK::Xi1) ? 1 : -1;
            switch (cls.kind) {
                case CK::One: return R((Q + 1) / 2);
                case CK::Z: return R(eps * (Q + 1) / 2);
                case CK::C: return surd(1, s);
                case CK::D: return surd(1, -s);
                case CK::A: return R(parity_sign(cls.index));
                case CK::B: return R(0);
                default: break;
            }
            break;
        }
        case RK::Eta1:
        case RK::Eta2: {
            const int s = (chr.kind == RK::Eta1) ? 1 : -1;
            switch (cls.kind) {
                case CK::One: return R((Q - 1) / 2);
                case CK::Z: return R(-eps * (Q - 1) / 2);
                case CK::C: return surd(-1, s);
                case CK::D: return surd(-1, -s);
                case CK::A: return R(0);
                case CK::B: return R(-parity_sign(cls.index));
                default: break;
            }
            break;
        }
    }
    throw std::logic_error("no table entry for " + to_string(chr) + " at " + to_string(cls));
}

Symbolic table_entry(std::uint32_t q, const CharLabel& chr, const ClassLabel& cls) {
    if (cls.kind == CK::ZC || cls.kind == CK::ZD) {
        const Rational deg = base_entry(q, chr, ClassLabel::one()).a;
        const Rational at_z = base_entry(q, chr, ClassLabel::z()).a;
        const ClassLabel unipotent = (cls.kind == CK::ZC) ? ClassLabel::c() : ClassLabel::d();
        return base_entry(q, chr, unipotent).scaled(at_z / deg);
    }
    return base_entry(q, chr, cls);
}

}  // namespace

std::string to_string(const CharLabel& label) {
    switch (label.kind) {
        case RK::Triv: return "Triv";
        case RK::Psi: return "Psi";
        case RK::Chi: return "Chi(" + std::to_string(label.index) + ")";
        case RK::Theta: return "Theta(" + std::to_string(label.index) + ")";
        case RK::Xi1: return "Xi1";
        case RK::Xi2: return "Xi2";
        case RK::Eta1: return "Eta1";
        case RK::Eta2: return "Eta2";
    }
    return "?";
}

CharLabel parse_char_label(const std::string& text) {
    if (text == "Triv") return CharLabel::triv();
    if (text == "Psi") return CharLabel::psi();
    if (text == "Xi1") return CharLabel::xi1();
    if (text == "Xi2") return CharLabel::xi2();
    if (text == "Eta1") return CharLabel::eta1();
    if (text == "Eta2") return CharLabel::eta2();
    for (const auto& [prefix, kind] : {std::pair{std::string("Chi("), RK::Chi},
                                       std::pair{std::string("Theta("), RK::Theta}}) {
        if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size() + 1 && text.back() == ')') {
            const std::string digits = text.substr(prefix.size(), text.size() - prefix.size() - 1);
            if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 9) {
                const int idx = std::stoi(digits);
                if (idx > 0) return {kind, idx};
            }
        }
    }
    throw std::invalid_argument("malformed character label: " + text);
}

std::ostream& operator<<(std::ostream& os, const CharLabel& label) {
    return os << to_string(label);
}

std::vector<CharLabel> char_labels(std::uint32_t q) {
    if (!is_odd_prime(q)) throw std::invalid_argument("q must be an odd prime");
    std::vector<CharLabel> out{CharLabel::triv(), CharLabel::psi()};
    for (int i = 1; i <= a_range(q); ++i) out.push_back(CharLabel::chi(i));
    for (int j = 1; j <= b_range(q); ++j) out.push_back(CharLabel::theta(j));
    for (auto x : {CharLabel::xi1(), CharLabel::xi2(), CharLabel::eta1(), CharLabel::eta2()}) {
        out.push_back(x);
    }
    return out;
}

CharTable::CharTable(std::uint32_t q, std::vector<ConjClass> classes,
                     std::vector<CharLabel> characters, std::vector<std::vector<CharCell>> cells)
    : q_(q),
      classes_(std::move(classes)),
      characters_(std::move(characters)),
      cells_(std::move(cells)) {
    if (cells_.size() != characters_.size()) throw std::invalid_argument("row count mismatch");
    for (const auto& row : cells_) {
        if (row.size() != classes_.size()) throw std::invalid_argument("column count mismatch");
    }
}

std::uint64_t CharTable::group_order() const noexcept {
    const std::uint64_t q = q_;
    return q * q * q - q;
}

std::size_t CharTable::row_of(const CharLabel& label) const {
    for (std::size_t r = 0; r < characters_.size(); ++r) {
        if (characters_[r] == label) return r;
    }
    throw std::out_of_range("no character " + to_string(label) + " for q = " + std::to_string(q_));
}

std::size_t CharTable::column_of(const ClassLabel& label) const {
    return class_index(q_, label);
}

const CharCell& CharTable::cell(const CharLabel& chr, const ClassLabel& cls) const {
    return cells_[row_of(chr)][column_of(cls)];
}

std::int64_t CharTable::degree(const CharLabel& chr) const {
    const auto v = value(chr, ClassLabel::one()).as_rational();
    if (!v || v->get_den() != 1) throw std::logic_error("non-integral degree");
    return v->get_num().get_si();
}

std::uint64_t CharTable::working_conductor() const noexcept {
    const std::uint64_t q = q_;
    return std::lcm(q, std::lcm(q - 1, q + 1));
}

CharTable complex_table(std::uint32_t q) {
    auto classes = representatives(q);
    auto characters = char_labels(q);
    std::vector<std::vector<CharCell>> cells;
    cells.reserve(characters.size());
    for (const auto& chr : characters) {
        std::vector<CharCell> row;
        row.reserve(classes.size());
        for (const auto& cls : classes) {
            Symbolic form = table_entry(q, chr, cls.label);
            CycNum value = form.value();
            row.push_back(CharCell{std::move(value), std::move(form)});
        }
        cells.push_back(std::move(row));
    }
    return CharTable(q, std::move(classes), std::move(characters), std::move(cells));
}

CycNum value_at(const CharTable& table, const CharLabel& chr, const GroupElem& g,
                const ClassLookup& lookup) {
    if (g.modulus() != table.q() || lookup.modulus() != table.q()) {
        throw std::domain_error("element, lookup and table disagree on q");
    }
    return table.value(chr, lookup.label_of(g));
}

CycNum inner_product(const CharTable& table, std::size_t row1, std::size_t row2) {
    CycSum sum;
    const auto& r1 = table.cells().at(row1);
    const auto& r2 = table.cells().at(row2);
    for (std::size_t c = 0; c < table.classes().size(); ++c) {
        const Rational size(static_cast<unsigned long>(table.classes()[c].size));
        sum.add(r1[c].value * r2[c].value.conjugate(), size);
    }
    return sum.total();
}

CycNum column_product(const CharTable& table, std::size_t col1, std::size_t col2) {
    CycSum sum;
    for (const auto& row : table.cells()) {
        sum.add(row.at(col1).value * row.at(col2).value.conjugate());
    }
    return sum.total();
}

std::vector<std::size_t> conjugation_permutation(const CharTable& table) {
    const auto& cells = table.cells();
    std::vector<std::size_t> perm(cells.size());
    for (std::size_t r = 0; r < cells.size(); ++r) {
        bool found = false;
        for (std::size_t s = 0; s < cells.size() && !found; ++s) {
            bool equal = true;
            for (std::size_t c = 0; c < cells[r].size() && equal; ++c) {
                equal = cells[r][c].value.conjugate() == cells[s][c].value;
            }
            if (equal) {
                perm[r] = s;
                found = true;
            }
        }
        if (!found) throw std::logic_error("conjugate of " + to_string(table.characters()[r]) +
                                           " is not a row of the table");
    }
    return perm;
}

std::size_t conjugation_trace(const CharTable& table) {
    const auto perm = conjugation_permutation(table);
    std::size_t trace = 0;
    for (std::size_t r = 0; r < perm.size(); ++r) trace += (perm[r] == r) ? 1 : 0;
    return trace;
}

}  // namespace sl2rep
