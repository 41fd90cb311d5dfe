#include "sl2rep/fixdim.hpp"

#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sl2rep {

namespace {

using RK = RealCharLabel::Kind;

struct CyclicData {
    std::int64_t g;  // gcd(q -+ 1, index)
    std::int64_t n;  // subgroup order (q -+ 1)/g
    bool even;       // n even
};

CyclicData cyclic_data(std::int64_t group, std::int64_t index) {
    const std::int64_t g = std::gcd(group, index);
    const std::int64_t n = group / g;
    return {g, n, n % 2 == 0};
}

void require_row(std::uint32_t q, const RealCharLabel& chr) {
    for (const auto& r : real_char_labels(q)) {
        if (r == chr) return;
    }
    throw std::invalid_argument("no real character " + to_string(chr) + " when q = " +
                                std::to_string(q));
}

void require_key(std::uint32_t q, const SubgroupKey& key) {
    if (key.kind == SubgroupKind::A && (key.index < 1 || key.index > a_range(q))) {
        throw std::invalid_argument("A(l) needs 1 <= l <= (q-3)/2");
    }
    if (key.kind == SubgroupKind::B && (key.index < 1 || key.index > b_range(q))) {
        throw std::invalid_argument("B(m) needs 1 <= m <= (q-1)/2");
    }
    if (key.kind != SubgroupKind::A && key.kind != SubgroupKind::B && key.index != 0) {
        throw std::invalid_argument("only A and B subgroups carry an index");
    }
}

std::int64_t degree_of(std::int64_t q, RK kind) {
    switch (kind) {
        case RK::RTriv: return 1;
        case RK::RPsi: return q;
        case RK::RChiEven: return q + 1;
        case RK::RTwoChiOdd: return 2 * q + 2;
        case RK::RThetaEven: return q - 1;
        case RK::RTwoThetaOdd: return 2 * q - 2;
        case RK::RXi1:
        case RK::RXi2: return (q + 1) / 2;
        case RK::RTwoEta1:
        case RK::RTwoEta2: return q - 1;
        case RK::RTwoReXi1: return q + 1;
        case RK::RTwoReEta1: return q - 1;
    }
    return 0;
}

// Columns <z>, <c>, <zc>.
std::int64_t small_column(std::int64_t q, RK kind, SubgroupKind col) {
    const int c = (col == SubgroupKind::Z) ? 0 : (col == SubgroupKind::C) ? 1 : 2;
    switch (kind) {
        case RK::RTriv: return 1;
        case RK::RPsi: return std::array<std::int64_t, 3>{q, 1, 1}[c];
        case RK::RChiEven: return std::array<std::int64_t, 3>{q + 1, 2, 2}[c];
        case RK::RTwoChiOdd: return std::array<std::int64_t, 3>{0, 4, 0}[c];
        case RK::RThetaEven: return std::array<std::int64_t, 3>{q - 1, 0, 0}[c];
        case RK::RTwoThetaOdd: return 0;
        case RK::RXi1:
        case RK::RXi2: return std::array<std::int64_t, 3>{(q + 1) / 2, 1, 1}[c];
        case RK::RTwoEta1:
        case RK::RTwoEta2: return 0;
        case RK::RTwoReXi1: return std::array<std::int64_t, 3>{0, 2, 0}[c];
        case RK::RTwoReEta1: return std::array<std::int64_t, 3>{q - 1, 0, 0}[c];
    }
    return 0;
}

// <a^l>; `exact` adds the terms for n | i.
std::int64_t a_column(std::int64_t q, const RealCharLabel& chr, int l, bool exact) {
    const auto [g, n, even] = cyclic_data(q - 1, l);
    const std::int64_t hit = (exact && chr.index % n == 0) ? 1 : 0;
    switch (chr.kind) {
        case RK::RTriv: return 1;
        case RK::RPsi: return even ? 2 * g + 1 : g + 1;
        case RK::RChiEven: return (even ? 2 * g : g) + 2 * hit;
        case RK::RTwoChiOdd: return even ? 0 : 2 * g + 4 * hit;
        case RK::RThetaEven: return even ? 2 * g : g;
        case RK::RTwoThetaOdd: return even ? 0 : 2 * g;
        case RK::RXi1:
        case RK::RXi2:
            if (!even) return g / 2 + 1;
            return (l % 2 == 0) ? g + 1 : g;
        case RK::RTwoEta1:
        case RK::RTwoEta2: return even ? 0 : g;
        case RK::RTwoReXi1: return even ? 0 : g + 2;
        case RK::RTwoReEta1: return even ? 2 * g : g;
    }
    return 0;
}

// <b^m>; `exact` adds the terms for n | j.
std::int64_t b_column(std::int64_t q, const RealCharLabel& chr, int m, bool exact) {
    const auto [g, n, even] = cyclic_data(q + 1, m);
    const std::int64_t hit = (exact && chr.index % n == 0) ? 1 : 0;
    switch (chr.kind) {
        case RK::RTriv: return 1;
        case RK::RPsi: return even ? 2 * g - 1 : g - 1;
        case RK::RChiEven: return even ? 2 * g : g;
        case RK::RTwoChiOdd: return even ? 0 : 2 * g;
        case RK::RThetaEven: return (even ? 2 * g : g) - 2 * hit;
        case RK::RTwoThetaOdd: return even ? 0 : 2 * g - 4 * hit;
        case RK::RXi1:
        case RK::RXi2: return even ? g : g / 2;
        case RK::RTwoEta1:
        case RK::RTwoEta2: return even ? 0 : g - 2;
        case RK::RTwoReXi1: return even ? 0 : g;
        case RK::RTwoReEta1:
            if (!even) return g - 2;
            return (m % 2 == 0) ? 2 * g - 2 : 2 * g;
    }
    return 0;
}

std::int64_t evaluate(std::uint32_t q, const RealCharLabel& chr, const SubgroupKey& key, bool exact) {
    require_row(q, chr);
    require_key(q, key);
    const std::int64_t Q = q;
    switch (key.kind) {
        case SubgroupKind::Trivial: return degree_of(Q, chr.kind);
        case SubgroupKind::Z:
        case SubgroupKind::C:
        case SubgroupKind::ZC: return small_column(Q, chr.kind, key.kind);
        case SubgroupKind::A: return a_column(Q, chr, key.index, exact);
        case SubgroupKind::B: return b_column(Q, chr, key.index, exact);
    }
    throw std::logic_error("unknown subgroup kind");
}

}  // namespace

std::string to_string(const SubgroupKey& key) {
    switch (key.kind) {
        case SubgroupKind::Trivial: return "Trivial";
        case SubgroupKind::Z: return "Z";
        case SubgroupKind::C: return "C";
        case SubgroupKind::ZC: return "ZC";
        case SubgroupKind::A: return "A(" + std::to_string(key.index) + ")";
        case SubgroupKind::B: return "B(" + std::to_string(key.index) + ")";
    }
    return "?";
}

SubgroupKey parse_subgroup_key(const std::string& text) {
    if (text == "Trivial") return {SubgroupKind::Trivial, 0};
    if (text == "Z") return {SubgroupKind::Z, 0};
    if (text == "C") return {SubgroupKind::C, 0};
    if (text == "ZC") return {SubgroupKind::ZC, 0};
    const ClassLabel cl = parse_class_label(text);  // A(l) / B(m) share the syntax
    if (cl.kind == ClassLabel::Kind::A) return {SubgroupKind::A, cl.index};
    if (cl.kind == ClassLabel::Kind::B) return {SubgroupKind::B, cl.index};
    throw std::invalid_argument("malformed subgroup key: " + text);
}

std::string to_string(QuotientCase qc) {
    switch (qc) {
        case QuotientCase::None: return "none";
        case QuotientCase::Odd: return "odd";
        case QuotientCase::EvenIndexEven: return "even/index-even";
        case QuotientCase::EvenIndexOdd: return "even/index-odd";
    }
    return "?";
}

QuotientCase quotient_case(std::uint32_t q, const SubgroupKey& key) {
    if (key.kind != SubgroupKind::A && key.kind != SubgroupKind::B) return QuotientCase::None;
    const std::int64_t group = (key.kind == SubgroupKind::A) ? q - 1 : q + 1;
    const auto d = cyclic_data(group, key.index);
    if (!d.even) return QuotientCase::Odd;
    return (key.index % 2 == 0) ? QuotientCase::EvenIndexEven : QuotientCase::EvenIndexOdd;
}

std::vector<GroupElem> cyclic_closure(const GroupElem& g) {
    std::vector<GroupElem> out{GroupElem::identity(g.modulus())};
    for (GroupElem h = g; !h.is_identity(); h = h * g) out.push_back(h);
    return out;
}

SubgroupDesc subgroup(std::uint32_t q, SubgroupKind kind, int index) {
    const SubgroupKey key{kind, index};
    if ((kind == SubgroupKind::A && (index < 1 || index > a_range(q))) ||
        (kind == SubgroupKind::B && (index < 1 || index > b_range(q)))) {
        throw std::out_of_range("subgroup index " + std::to_string(index) +
                                " out of range at q = " + std::to_string(q));
    }
    ClassLabel label = ClassLabel::one();
    switch (kind) {
        case SubgroupKind::Trivial: break;
        case SubgroupKind::Z: label = ClassLabel::z(); break;
        case SubgroupKind::C: label = ClassLabel::c(); break;
        case SubgroupKind::ZC: label = ClassLabel::zc(); break;
        case SubgroupKind::A: label = ClassLabel::a(index); break;
        case SubgroupKind::B: label = ClassLabel::b(index); break;
    }
    const GroupElem gen = representative(q, label);
    auto elements = cyclic_closure(gen);
    const std::uint64_t order = elements.size();
    return SubgroupDesc{key, order, gen, std::move(elements), quotient_case(q, key)};
}

std::vector<SubgroupKey> subgroup_keys(std::uint32_t q) {
    std::vector<SubgroupKey> out{{SubgroupKind::Trivial, 0},
                                 {SubgroupKind::Z, 0},
                                 {SubgroupKind::C, 0},
                                 {SubgroupKind::ZC, 0}};
    for (int l = 1; l <= a_range(q); ++l) out.push_back({SubgroupKind::A, l});
    for (int m = 1; m <= b_range(q); ++m) out.push_back({SubgroupKind::B, m});
    return out;
}

SubgroupKey classify_cyclic(const GroupElem& g, const ClassLookup& lookup) {
    const std::uint64_t q = g.modulus();
    const std::uint64_t order = element_order(g);
    if (order == 1) return {SubgroupKind::Trivial, 0};
    if (order == 2) return {SubgroupKind::Z, 0};
    if (order == q) return {SubgroupKind::C, 0};
    if (order == 2 * q) return {SubgroupKind::ZC, 0};
    const ClassLabel label = lookup.label_of(g);
    if (label.kind == ClassLabel::Kind::A) {
        return {SubgroupKind::A, static_cast<int>(std::gcd<std::uint64_t>(label.index, q - 1))};
    }
    if (label.kind == ClassLabel::Kind::B) {
        return {SubgroupKind::B, static_cast<int>(std::gcd<std::uint64_t>(label.index, q + 1))};
    }
    throw std::logic_error("element of order " + std::to_string(order) + " in class " +
                           to_string(label));
}

std::int64_t fixed_dim_average(const RealCharTable& rt, const RealCharLabel& chr,
                               const std::vector<GroupElem>& elements, const ClassLookup& lookup) {
    if (elements.empty()) throw std::invalid_argument("empty subgroup");
    std::map<ClassLabel, unsigned long> census;
    for (const auto& h : elements) ++census[lookup.label_of(h)];
    CycSum sum;
    for (const auto& [label, count] : census) sum.add(rt.value(chr, label), Rational(count));
    const auto total = sum.total().as_rational();
    if (!total) throw ConsistencyError("character sum over a subgroup is not rational");
    const Rational avg = *total / Rational(static_cast<unsigned long>(elements.size()));
    if (avg.get_den() != 1 || avg < 0) {
        throw ConsistencyError("average of " + to_string(chr) + " over a subgroup is " +
                               avg.get_str());
    }
    return avg.get_num().get_si();
}

std::int64_t fixed_dim_average(const RealCharTable& rt, const RealCharLabel& chr,
                               const SubgroupDesc& H, const ClassLookup& lookup) {
    return fixed_dim_average(rt, chr, H.elements, lookup);
}

std::int64_t fixed_dim_closed(std::uint32_t q, const RealCharLabel& chr, const SubgroupKey& key) {
    return evaluate(q, chr, key, true);
}

std::int64_t fixed_dim_summary_formula(std::uint32_t q, const RealCharLabel& chr,
                                       const SubgroupKey& key) {
    return evaluate(q, chr, key, false);
}

const FixedDimEntry& FixedDimTable::at(const RealCharLabel& chr, const SubgroupKey& key) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!(rows[r] == chr)) continue;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].key == key) return entries[r][c];
        }
    }
    throw std::out_of_range("no entry for " + to_string(chr) + " on " + to_string(key));
}

FixedDimTable full_report(std::uint32_t q, EnumerationBound bound) {
    if (!is_odd_prime(q)) throw std::invalid_argument("q must be an odd prime");
    FixedDimTable out;
    out.q = q;
    out.rows = real_char_labels(q);
    std::vector<SubgroupDesc> subgroups;
    for (const auto& key : subgroup_keys(q)) {
        auto H = subgroup(q, key.kind, key.index);
        out.columns.push_back({key, H.order, H.quotient});
        subgroups.push_back(std::move(H));
    }

    std::optional<RealCharTable> rt;
    std::optional<Classifier> classifier;
    if (q <= bound.max_q) {
        rt.emplace(real_table(q));
        classifier.emplace(q, bound);
    }

    for (const auto& chr : out.rows) {
        std::vector<FixedDimEntry> row;
        for (const auto& H : subgroups) {
            FixedDimEntry e;
            e.closed = fixed_dim_closed(q, chr, H.key);
            e.summary = fixed_dim_summary_formula(q, chr, H.key);
            if (rt) e.oracle = fixed_dim_average(*rt, chr, H, *classifier);
            e.match = !e.oracle || *e.oracle == e.closed;
            if (e.summary != e.closed) {
                e.note = "note: gcd-only formula gives " + std::to_string(e.summary);
            }
            row.push_back(std::move(e));
        }
        out.entries.push_back(std::move(row));
    }
    return out;
}

}  // namespace sl2rep
