#include "sl2rep/verify.hpp"

#include "sl2rep/chars.hpp"
#include "sl2rep/fixdim.hpp"
#include "sl2rep/realrep.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace sl2rep {

namespace {

using CK = ClassLabel::Kind;

std::uint64_t expected_order(std::uint64_t q, const ClassLabel& L) {
    switch (L.kind) {
        case CK::One: return 1;
        case CK::Z: return 2;
        case CK::C:
        case CK::D: return q;
        case CK::ZC:
        case CK::ZD: return 2 * q;
        case CK::A: return (q - 1) / std::gcd<std::uint64_t>(q - 1, L.index);
        case CK::B: return (q + 1) / std::gcd<std::uint64_t>(q + 1, L.index);
    }
    return 0;
}

// Indicator each complex character should have, by type alone.
int expected_indicator(std::uint32_t q, const CharLabel& chr) {
    using K = CharLabel::Kind;
    switch (chr.kind) {
        case K::Triv:
        case K::Psi: return 1;
        case K::Chi:
        case K::Theta: return (chr.index % 2 == 0) ? 1 : -1;
        case K::Xi1:
        case K::Xi2: return (q % 4 == 1) ? 1 : 0;
        case K::Eta1:
        case K::Eta2: return (q % 4 == 1) ? -1 : 0;
    }
    return 2;
}

std::vector<std::uint64_t> key_set(const std::vector<GroupElem>& elems) {
    std::vector<std::uint64_t> out;
    out.reserve(elems.size());
    for (const auto& e : elems) out.push_back(e.key());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> conjugated_key_set(const GroupElem& h, const std::vector<GroupElem>& elems) {
    const GroupElem hinv = h.inverse();
    std::vector<std::uint64_t> out;
    out.reserve(elems.size());
    for (const auto& e : elems) out.push_back((h * e * hinv).key());
    std::sort(out.begin(), out.end());
    return out;
}

// Shared, lazily built inputs. A failure while building one is reported by
// every check that needs it.
class Context {
public:
    Context(std::uint32_t q, EnumerationBound bound) : q_(q), bound_(bound) {}

    std::uint32_t q() const { return q_; }
    std::uint64_t order() const { return std::uint64_t{q_} * q_ * q_ - q_; }

    const ConjugacyPartition& partition() {
        if (!partition_) partition_ = std::make_unique<ConjugacyPartition>(q_, bound_);
        return *partition_;
    }
    const std::vector<GroupElem>& elements() { return partition().elements(); }
    const Classifier& classifier() {
        if (!classifier_) classifier_ = std::make_unique<Classifier>(q_, bound_);
        return *classifier_;
    }
    const CharTable& table() {
        if (!table_) table_ = std::make_unique<CharTable>(complex_table(q_));
        return *table_;
    }
    const RealCharTable& real() {
        if (!real_) real_ = std::make_unique<RealCharTable>(real_table(table()));
        return *real_;
    }

private:
    std::uint32_t q_;
    EnumerationBound bound_;
    std::unique_ptr<ConjugacyPartition> partition_;
    std::unique_ptr<Classifier> classifier_;
    std::unique_ptr<CharTable> table_;
    std::unique_ptr<RealCharTable> real_;
};

struct Outcome {
    bool pass = true;
    std::ostringstream details;

    void fail(const std::string& why) {
        if (!pass) details << "; ";
        else details.str("");
        pass = false;
        details << why;
    }
};

void check_group_order(Context& ctx, Outcome& out) {
    const auto& elems = ctx.elements();
    std::set<std::uint64_t> distinct;
    for (const auto& g : elems) distinct.insert(g.key());
    out.details << elems.size() << " elements, " << distinct.size() << " distinct; expected "
                << ctx.order();
    if (elems.size() != ctx.order() || distinct.size() != ctx.order()) out.fail(out.details.str());
}

void check_conjugacy_classes(Context& ctx, Outcome& out) {
    const std::uint32_t q = ctx.q();
    const auto& part = ctx.partition();
    const auto& classes = part.classes();
    std::ostringstream sizes;
    bool ok = classes.size() == q + 4;
    std::size_t n = 0;
    for (const auto& L : class_labels(q)) {
        const auto it = classes.find(L);
        if (it == classes.end()) {
            out.fail("missing class " + to_string(L));
            return;
        }
        sizes << (n++ ? "," : "") << it->second.size();
        if (it->second.size() != class_size(q, L)) {
            out.fail(to_string(L) + " has size " + std::to_string(it->second.size()));
            ok = false;
        }
        const std::uint64_t want = expected_order(q, L);
        for (const auto& g : it->second) {
            if (element_order(g) != want) {
                out.fail(to_string(L) + " contains an element of order " +
                         std::to_string(element_order(g)));
                ok = false;
                break;
            }
        }
    }
    std::size_t disagreements = 0;
    for (const auto& g : part.elements()) {
        if (!(ctx.classifier().label_of(g) == part.label_of(g))) ++disagreements;
    }
    if (disagreements) {
        out.fail("class_of disagrees with the orbit partition on " + std::to_string(disagreements) +
                 " elements");
        ok = false;
    }
    if (ok) {
        out.details << classes.size() << " classes; sizes {" << sizes.str()
                    << "}; orders match; class_of agrees on all elements";
    }
}

void check_unique_involution(Context& ctx, Outcome& out) {
    const std::uint32_t q = ctx.q();
    const GroupElem z = GroupElem::central_involution(q);
    std::size_t involutions = 0;
    bool only_z = true;
    for (const auto& g : ctx.elements()) {
        if (!g.is_identity() && (g * g).is_identity()) {
            ++involutions;
            only_z = only_z && g == z;
        }
    }
    const FqElem nu = primitive_root(q);
    const GroupElem a(nu, FqElem(0, q), FqElem(0, q), inverse(nu));
    const GroupElem b = find_b(q);
    const bool a_half = a.pow((q - 1) / 2) == z;
    const bool b_half = b.pow((q + 1) / 2) == z;
    out.details << involutions << " element(s) of order 2" << (only_z ? " (z)" : "")
                << "; a^((q-1)/2) = z: " << (a_half ? "yes" : "no")
                << "; b^((q+1)/2) = z: " << (b_half ? "yes" : "no");
    if (involutions != 1 || !only_z || !a_half || !b_half) out.fail(out.details.str());
}

void check_square_inverse(Context& ctx, Outcome& out) {
    const std::uint32_t q = ctx.q();
    const auto sq = square_class_map(q);
    const auto inv = inverse_class_map(q);
    const auto& cls = ctx.classifier();
    std::size_t bad_sq = 0;
    std::size_t bad_inv = 0;
    for (const auto& g : ctx.elements()) {
        const ClassLabel L = cls.label_of(g);
        if (!(cls.label_of(g * g) == sq.at(L))) ++bad_sq;
        if (!(cls.label_of(g.inverse()) == inv.at(L))) ++bad_inv;
    }
    const GroupElem c = representative(q, ClassLabel::c());
    out.details << "c^2 in (" << to_string(cls.label_of(c * c)) << "), 2 is "
                << (is_quadratic_residue(FqElem(2, q)) ? "" : "not ") << "a square; c^-1 in ("
                << to_string(cls.label_of(c.inverse())) << "); mismatches: squares " << bad_sq
                << ", inverses " << bad_inv;
    if (bad_sq || bad_inv) out.fail(out.details.str());
}

void check_orthogonality(Context& ctx, Outcome& out) {
    const auto& t = ctx.table();
    const std::size_t n = t.characters().size();
    const CycNum order(Rational(static_cast<unsigned long>(t.group_order())));
    std::size_t bad_rows = 0;
    std::size_t bad_cols = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const CycNum want = (i == j) ? order : CycNum(0L);
            if (inner_product(t, i, j) != want) ++bad_rows;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const CycNum want =
                (i == j) ? CycNum(Rational(static_cast<unsigned long>(t.group_order())) /
                                  Rational(static_cast<unsigned long>(t.classes()[i].size)))
                         : CycNum(0L);
            if (column_product(t, i, j) != want) ++bad_cols;
        }
    }
    out.details << n << "x" << n << " table; row pairs failing: " << bad_rows
                << ", column pairs failing: " << bad_cols;
    if (bad_rows || bad_cols) out.fail(out.details.str());
}

void check_degree_sum(Context& ctx, Outcome& out) {
    const auto& t = ctx.table();
    std::int64_t sum = 0;
    for (const auto& chr : t.characters()) {
        const std::int64_t d = t.degree(chr);
        sum += d * d;
    }
    out.details << "sum of squared degrees " << sum << ", group order " << t.group_order();
    if (sum != static_cast<std::int64_t>(t.group_order())) out.fail(out.details.str());
}

void check_fs(Context& ctx, Outcome& out) {
    const auto& t = ctx.table();
    const SquareCensus census(ctx.partition());
    const auto listing = fs_listing(t, &census);
    std::ostringstream values;
    bool ok = true;
    for (const auto& e : listing) {
        values << (values.tellp() > 0 ? ", " : "") << to_string(e.chr) << "=" << e.closed;
        if (!e.match) {
            out.fail(to_string(e.chr) + ": closed " + std::to_string(e.closed) + ", class-grouped " +
                     std::to_string(*e.brute) + ", raw " + std::to_string(*e.raw));
            ok = false;
        }
        if (e.closed != expected_indicator(t.q(), e.chr)) {
            out.fail(to_string(e.chr) + " has indicator " + std::to_string(e.closed) +
                     ", outside the expected trichotomy");
            ok = false;
        }
    }
    if (ok) out.details << "closed = class-grouped = raw for all; " << values.str();
}

void check_conjugation_trace(Context& ctx, Outcome& out) {
    const auto& t = ctx.table();
    const std::size_t trace = conjugation_trace(t);
    const std::size_t want = (t.q() % 4 == 1) ? t.q() + 4 : t.q();
    out.details << "trace " << trace << ", expected " << want;
    if (trace != want) out.fail(out.details.str());
}

void check_real_table(Context& ctx, Outcome& out) {
    const auto& rt = ctx.real();
    const auto blocks = real_classes(ctx.q()).blocks;
    std::size_t non_real = 0;
    std::size_t not_constant = 0;
    for (const auto& row : rt.cells()) {
        for (const auto& cell : row) {
            if (cell.value.conjugate() != cell.value) ++non_real;
        }
    }
    for (const auto& chr : rt.characters()) {
        for (const auto& block : blocks) {
            for (const auto& L : block) {
                if (rt.value(chr, L) != rt.value(chr, block.front())) ++not_constant;
            }
        }
    }
    out.details << rt.characters().size() << " real rows, " << blocks.size()
                << " real classes; non-real entries " << non_real
                << "; entries not constant on a real class " << not_constant;
    bool has_theta_even = false;
    for (const auto& chr : rt.characters()) {
        if (chr.kind == RealCharLabel::Kind::RThetaEven) {
            has_theta_even = true;
            if (rt.value(chr, ClassLabel::z()) != CycNum(static_cast<long>(ctx.q()) - 1)) {
                out.fail("Theta(" + std::to_string(chr.index) + ") at z is not q-1");
            }
        }
    }
    if (has_theta_even) out.details << "; note: Theta(2j) takes q-1 at z";
    if (rt.characters().size() != blocks.size() || non_real || not_constant) {
        out.fail(out.details.str());
    }
}

void check_fixed_dims(Context& ctx, Outcome& out) {
    const std::uint32_t q = ctx.q();
    const auto& rt = ctx.real();
    const auto& cls = ctx.classifier();

    std::map<std::vector<std::uint64_t>, SubgroupKey> seen;
    std::map<std::vector<std::pair<ClassLabel, std::uint64_t>>, std::vector<std::int64_t>> cache;
    std::size_t comparisons = 0;
    std::size_t key_conflicts = 0;
    std::size_t bad = 0;
    std::string first_bad;

    for (const auto& g : ctx.elements()) {
        const auto elems = cyclic_closure(g);
        const SubgroupKey key = classify_cyclic(g, cls);
        auto [it, fresh] = seen.emplace(key_set(elems), key);
        if (!fresh) {
            if (!(it->second == key)) ++key_conflicts;
            continue;
        }
        std::map<ClassLabel, std::uint64_t> census;
        for (const auto& h : elems) ++census[cls.label_of(h)];
        std::vector<std::pair<ClassLabel, std::uint64_t>> signature(census.begin(), census.end());
        auto cached = cache.find(signature);
        if (cached == cache.end()) {
            std::vector<std::int64_t> dims;
            for (const auto& chr : rt.characters()) dims.push_back(fixed_dim_average(rt, chr, elems, cls));
            cached = cache.emplace(std::move(signature), std::move(dims)).first;
        }
        for (std::size_t r = 0; r < rt.characters().size(); ++r) {
            const auto& chr = rt.characters()[r];
            const std::int64_t avg = cached->second[r];
            const std::int64_t closed = fixed_dim_closed(q, chr, key);
            ++comparisons;
            if (avg != closed || avg < 0 || avg > rt.degree(chr)) {
                if (!bad++) {
                    first_bad = to_string(chr) + " on " + to_string(key) + ": average " +
                                std::to_string(avg) + ", closed " + std::to_string(closed);
                }
            }
        }
    }

    // <z> is inside <zc>, so no real character can have more fixed vectors on <zc>.
    std::size_t monotone_bad = 0;
    for (const auto& chr : rt.characters()) {
        if (fixed_dim_closed(q, chr, {SubgroupKind::ZC, 0}) >
            fixed_dim_closed(q, chr, {SubgroupKind::Z, 0})) {
            ++monotone_bad;
        }
    }
    // Half the nontrivial powers of c lie in (c), half in (d).
    const GroupElem c = representative(q, ClassLabel::c());
    std::size_t in_c = 0;
    std::size_t in_d = 0;
    for (const auto& h : cyclic_closure(c)) {
        const auto L = cls.label_of(h);
        in_c += L == ClassLabel::c();
        in_d += L == ClassLabel::d();
    }

    std::size_t summary_diffs = 0;
    for (const auto& chr : rt.characters()) {
        for (const auto& key : subgroup_keys(q)) {
            summary_diffs += fixed_dim_closed(q, chr, key) != fixed_dim_summary_formula(q, chr, key);
        }
    }

    out.details << seen.size() << " cyclic subgroups, " << comparisons
                << " comparisons, mismatches " << bad << ", kind conflicts " << key_conflicts
                << "; powers of c in (c)/(d): " << in_c << "/" << in_d;
    if (summary_diffs) {
        out.details << "; note: gcd-only formula differs from the exact value in " << summary_diffs
                      << " table cells";
    }
    if (bad) out.fail(first_bad + " (" + std::to_string(bad) + " mismatches)");
    if (key_conflicts) out.fail("generators of one subgroup classified differently");
    if (monotone_bad) out.fail("dim on <zc> exceeds dim on <z>");
    if (in_c != (q - 1) / 2 || in_d != (q - 1) / 2) out.fail("powers of c not split evenly");
}

void check_order_2q(Context& ctx, Outcome& out) {
    const std::uint32_t q = ctx.q();
    const auto& elems = ctx.elements();
    const auto zc = cyclic_closure(representative(q, ClassLabel::zc()));
    const auto zd = cyclic_closure(representative(q, ClassLabel::zd()));
    const auto c_sub = cyclic_closure(representative(q, ClassLabel::c()));
    const auto d_keys = key_set(cyclic_closure(representative(q, ClassLabel::d())));

    auto conjugate_exists = [&](const std::vector<GroupElem>& from,
                                const std::vector<std::uint64_t>& target) {
        for (const auto& h : elems) {
            const GroupElem hinv = h.inverse();
            if (!std::binary_search(target.begin(), target.end(), (h * from[1] * hinv).key())) {
                continue;
            }
            if (conjugated_key_set(h, from) == target) return true;
        }
        return false;
    };

    std::set<std::vector<std::uint64_t>> subgroups;
    for (const auto& g : elems) {
        if (element_order(g) == 2 * std::uint64_t{q}) subgroups.insert(key_set(cyclic_closure(g)));
    }
    std::size_t unmatched = 0;
    for (const auto& target : subgroups) {
        if (!conjugate_exists(zc, target) && !conjugate_exists(zd, target)) ++unmatched;
    }
    const bool c_d = conjugate_exists(c_sub, d_keys);
    out.details << subgroups.size() << " cyclic subgroups of order 2q, " << unmatched
                << " not conjugate to <zc> or <zd>; <c> conjugate to <d>: " << (c_d ? "yes" : "no");
    if (unmatched || !c_d || subgroups.empty()) out.fail(out.details.str());
}

using CheckFn = void (*)(Context&, Outcome&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> checks{
        {"group_order", check_group_order},
        {"conjugacy_classes", check_conjugacy_classes},
        {"unique_involution", check_unique_involution},
        {"square_inverse_maps", check_square_inverse},
        {"orthogonality", check_orthogonality},
        {"degree_sum", check_degree_sum},
        {"fs_indicators", check_fs},
        {"conjugation_trace", check_conjugation_trace},
        {"real_table", check_real_table},
        {"fixed_dims", check_fixed_dims},
        {"order_2q_subgroups", check_order_2q},
    };
    return checks;
}

}  // namespace

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

VerificationReport verify_all(std::uint32_t q, EnumerationBound bound) {
    if (!is_odd_prime(q)) throw std::invalid_argument("q must be an odd prime");
    if (q > bound.max_q) {
        throw std::length_error("q = " + std::to_string(q) + " exceeds the enumeration bound " +
                                std::to_string(bound.max_q) + " (raise it with --max-enum)");
    }
    Context ctx(q, bound);
    VerificationReport report;
    report.q = q;
    report.overall = true;
    for (const auto& [name, fn] : registry()) {
        Outcome out;
        try {
            fn(ctx, out);
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        report.checks.push_back({name, out.pass, out.details.str()});
        report.overall = report.overall && out.pass;
    }
    return report;
}

}  // namespace sl2rep
