#include "sl2rep/group.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace sl2rep {

namespace {

void require_odd_prime(std::uint32_t q) {
    if (!is_odd_prime(q)) {
        throw std::invalid_argument("q must be an odd prime (got " + std::to_string(q) + ")");
    }
}

void require_within_bound(std::uint32_t q, EnumerationBound bound) {
    if (q > bound.max_q) {
        throw std::length_error("q = " + std::to_string(q) + " exceeds the enumeration bound " +
                                std::to_string(bound.max_q) + " (raise it with --max-enum)");
    }
}

}  // namespace

GroupElem::GroupElem(FqElem a, FqElem b, FqElem c, FqElem d)
    : q_(a.modulus()), e_{a.value(), b.value(), c.value(), d.value()} {
    if (b.modulus() != q_ || c.modulus() != q_ || d.modulus() != q_) {
        throw std::invalid_argument("matrix entries from different fields");
    }
    if (a * d - b * c != FqElem(1, q_)) {
        throw std::invalid_argument("matrix does not have determinant 1");
    }
}

GroupElem GroupElem::from_ints(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                               std::uint32_t q) {
    return GroupElem(FqElem(a, q), FqElem(b, q), FqElem(c, q), FqElem(d, q));
}

GroupElem GroupElem::identity(std::uint32_t q) {
    require_odd_prime(q);
    return GroupElem(q, 1, 0, 0, 1);
}

GroupElem GroupElem::central_involution(std::uint32_t q) {
    require_odd_prime(q);
    return GroupElem(q, q - 1, 0, 0, q - 1);
}

FqElem GroupElem::trace() const noexcept {
    return FqElem(FqElem::Trusted{}, (e_[0] + e_[3]) % q_, q_);
}

GroupElem GroupElem::operator*(const GroupElem& rhs) const {
    if (q_ != rhs.q_) throw std::domain_error("group elements over different fields");
    const std::uint64_t q = q_;
    const std::uint64_t a = (std::uint64_t{e_[0]} * rhs.e_[0] + std::uint64_t{e_[1]} * rhs.e_[2]) % q;
    const std::uint64_t b = (std::uint64_t{e_[0]} * rhs.e_[1] + std::uint64_t{e_[1]} * rhs.e_[3]) % q;
    const std::uint64_t c = (std::uint64_t{e_[2]} * rhs.e_[0] + std::uint64_t{e_[3]} * rhs.e_[2]) % q;
    const std::uint64_t d = (std::uint64_t{e_[2]} * rhs.e_[1] + std::uint64_t{e_[3]} * rhs.e_[3]) % q;
    return GroupElem(q_, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                     static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(d));
}

GroupElem GroupElem::inverse() const noexcept {
    // (a b; c d)^-1 = (d -b; -c a) for determinant one.
    return GroupElem(q_, e_[3], e_[1] == 0 ? 0 : q_ - e_[1], e_[2] == 0 ? 0 : q_ - e_[2], e_[0]);
}

GroupElem GroupElem::pow(std::uint64_t n) const {
    GroupElem result(q_, 1, 0, 0, 1);
    GroupElem base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

bool GroupElem::is_identity() const noexcept {
    return e_[0] == 1 && e_[1] == 0 && e_[2] == 0 && e_[3] == 1;
}

std::uint64_t GroupElem::key() const noexcept {
    const std::uint64_t q = q_;
    return ((e_[0] * q + e_[1]) * q + e_[2]) * q + e_[3];
}

std::ostream& operator<<(std::ostream& os, const GroupElem& g) {
    return os << "(" << g.a().value() << " " << g.b().value() << "; " << g.c().value() << " "
              << g.d().value() << ")";
}

std::uint64_t element_order(const GroupElem& g) {
    std::uint64_t n = 1;
    GroupElem h = g;
    while (!h.is_identity()) {
        h = h * g;
        ++n;
    }
    return n;
}

std::string to_string(const ClassLabel& label) {
    using K = ClassLabel::Kind;
    switch (label.kind) {
        case K::One: return "One";
        case K::Z: return "Z";
        case K::C: return "C";
        case K::D: return "D";
        case K::ZC: return "ZC";
        case K::ZD: return "ZD";
        case K::A: return "A(" + std::to_string(label.index) + ")";
        case K::B: return "B(" + std::to_string(label.index) + ")";
    }
    return "?";
}

ClassLabel parse_class_label(const std::string& text) {
    using K = ClassLabel::Kind;
    if (text == "One") return ClassLabel::one();
    if (text == "Z") return ClassLabel::z();
    if (text == "C") return ClassLabel::c();
    if (text == "D") return ClassLabel::d();
    if (text == "ZC") return ClassLabel::zc();
    if (text == "ZD") return ClassLabel::zd();
    if (text.size() >= 4 && (text[0] == 'A' || text[0] == 'B') && text[1] == '(' &&
        text.back() == ')') {
        const std::string digits = text.substr(2, text.size() - 3);
        std::size_t used = 0;
        int idx = 0;
        try {
            idx = std::stoi(digits, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == digits.size() && idx > 0) {
            return {text[0] == 'A' ? K::A : K::B, idx};
        }
    }
    throw std::invalid_argument("malformed class label: " + text);
}

std::ostream& operator<<(std::ostream& os, const ClassLabel& label) {
    return os << to_string(label);
}

int a_range(std::uint32_t q) { return static_cast<int>((q - 3) / 2); }
int b_range(std::uint32_t q) { return static_cast<int>((q - 1) / 2); }

std::size_t class_index(std::uint32_t q, const ClassLabel& label) {
    using K = ClassLabel::Kind;
    const int na = a_range(q);
    const int nb = b_range(q);
    switch (label.kind) {
        case K::One: return 0;
        case K::Z: return 1;
        case K::C: return 2;
        case K::D: return 3;
        case K::ZC: return 4;
        case K::ZD: return 5;
        case K::A:
            if (label.index < 1 || label.index > na) break;
            return static_cast<std::size_t>(5 + label.index);
        case K::B:
            if (label.index < 1 || label.index > nb) break;
            return static_cast<std::size_t>(5 + na + label.index);
    }
    throw std::out_of_range("no class " + to_string(label) + " for q = " + std::to_string(q));
}

std::vector<ClassLabel> class_labels(std::uint32_t q) {
    require_odd_prime(q);
    std::vector<ClassLabel> out{ClassLabel::one(), ClassLabel::z(),  ClassLabel::c(),
                                ClassLabel::d(),   ClassLabel::zc(), ClassLabel::zd()};
    for (int l = 1; l <= a_range(q); ++l) out.push_back(ClassLabel::a(l));
    for (int m = 1; m <= b_range(q); ++m) out.push_back(ClassLabel::b(m));
    return out;
}

std::vector<GroupElem> enumerate_group(std::uint32_t q, EnumerationBound bound) {
    require_odd_prime(q);
    require_within_bound(q, bound);
    std::vector<GroupElem> out;
    out.reserve(static_cast<std::size_t>(q) * q * q - q);
    for (std::uint32_t a = 0; a < q; ++a) {
        for (std::uint32_t b = 0; b < q; ++b) {
            for (std::uint32_t c = 0; c < q; ++c) {
                for (std::uint32_t d = 0; d < q; ++d) {
                    const std::uint64_t det =
                        (std::uint64_t{a} * d + std::uint64_t{q - b} * c) % q;
                    if (det == 1) out.push_back(GroupElem(q, a, b, c, d));
                }
            }
        }
    }
    return out;
}

GroupElem find_b(std::uint32_t q) {
    require_odd_prime(q);
    // Scan lexicographically without materialising the group. For a given
    // (a, b, c) there is at most one d with ad - bc = 1 when a != 0; when
    // a = 0 every d works provided bc = -1.
    for (std::uint32_t a = 0; a < q; ++a) {
        const FqElem fa(a, q);
        for (std::uint32_t b = 0; b < q; ++b) {
            for (std::uint32_t c = 0; c < q; ++c) {
                const FqElem bc = FqElem(b, q) * FqElem(c, q);
                for (std::uint32_t d = 0; d < q; ++d) {
                    if (fa * FqElem(d, q) - bc != FqElem(1, q)) continue;
                    const GroupElem g(q, a, b, c, d);
                    // Order q+1 needs an irreducible characteristic polynomial.
                    const FqElem t = g.trace();
                    const FqElem disc = t * t - FqElem(4, q);
                    if (disc.is_zero() || is_quadratic_residue(disc)) continue;
                    if (element_order(g) == q + 1) return g;
                }
            }
        }
    }
    throw std::logic_error("no element of order q+1 found");
}

GroupElem representative(std::uint32_t q, const ClassLabel& label) {
    using K = ClassLabel::Kind;
    const FqElem nu = primitive_root(q);
    const GroupElem z = GroupElem::central_involution(q);
    const GroupElem c = GroupElem::from_ints(1, 0, 1, 1, q);
    const GroupElem d = GroupElem(FqElem(1, q), FqElem(0, q), nu, FqElem(1, q));
    switch (label.kind) {
        case K::One: return GroupElem::identity(q);
        case K::Z: return z;
        case K::C: return c;
        case K::D: return d;
        case K::ZC: return z * c;
        case K::ZD: return z * d;
        case K::A: {
            if (label.index < 1 || label.index > a_range(q)) {
                throw std::out_of_range("A(l) requires 1 <= l <= (q-3)/2");
            }
            const GroupElem a(nu, FqElem(0, q), FqElem(0, q), inverse(nu));
            return a.pow(static_cast<std::uint64_t>(label.index));
        }
        case K::B: {
            if (label.index < 1 || label.index > b_range(q)) {
                throw std::out_of_range("B(m) requires 1 <= m <= (q-1)/2");
            }
            return find_b(q).pow(static_cast<std::uint64_t>(label.index));
        }
    }
    throw std::logic_error("unknown class label");
}

std::uint64_t class_size(std::uint32_t q, const ClassLabel& label) {
    using K = ClassLabel::Kind;
    const std::uint64_t qq = q;
    switch (label.kind) {
        case K::One:
        case K::Z: return 1;
        case K::C:
        case K::D:
        case K::ZC:
        case K::ZD: return (qq * qq - 1) / 2;
        case K::A: return qq * (qq + 1);
        case K::B: return qq * (qq - 1);
    }
    return 0;
}

std::vector<ConjClass> representatives(std::uint32_t q) {
    require_odd_prime(q);
    const FqElem nu = primitive_root(q);
    const GroupElem z = GroupElem::central_involution(q);
    const GroupElem c = GroupElem::from_ints(1, 0, 1, 1, q);
    const GroupElem d(FqElem(1, q), FqElem(0, q), nu, FqElem(1, q));
    const GroupElem a(nu, FqElem(0, q), FqElem(0, q), inverse(nu));
    const GroupElem b = find_b(q);

    std::vector<ConjClass> out;
    auto push = [&](ClassLabel label, GroupElem rep) {
        const std::uint64_t order = element_order(rep);
        out.push_back(ConjClass{label, rep, class_size(q, label), order});
    };
    push(ClassLabel::one(), GroupElem::identity(q));
    push(ClassLabel::z(), z);
    push(ClassLabel::c(), c);
    push(ClassLabel::d(), d);
    push(ClassLabel::zc(), z * c);
    push(ClassLabel::zd(), z * d);
    GroupElem al = a;
    for (int l = 1; l <= a_range(q); ++l, al = al * a) push(ClassLabel::a(l), al);
    GroupElem bm = b;
    for (int m = 1; m <= b_range(q); ++m, bm = bm * b) push(ClassLabel::b(m), bm);
    return out;
}

Classifier::Classifier(std::uint32_t q, EnumerationBound bound) : q_(q) {
    require_odd_prime(q);
    require_within_bound(q, bound);
    const auto reps = representatives(q);

    by_trace_.assign(q, ClassLabel::one());
    for (const auto& cls : reps) {
        if (cls.label.kind == ClassLabel::Kind::A || cls.label.kind == ClassLabel::Kind::B) {
            by_trace_[cls.representative.trace().value()] = cls.label;
        }
    }

    const auto group = enumerate_group(q, bound);
    const std::uint64_t keyspace = std::uint64_t{q} * q * q * q;
    in_c_orbit_.assign(keyspace, false);
    in_zc_orbit_.assign(keyspace, false);
    const GroupElem c = representative(q, ClassLabel::c());
    const GroupElem zc = representative(q, ClassLabel::zc());
    for (const auto& h : group) {
        const GroupElem hinv = h.inverse();
        in_c_orbit_[(h * c * hinv).key()] = true;
        in_zc_orbit_[(h * zc * hinv).key()] = true;
    }
}

ClassLabel Classifier::label_of(const GroupElem& g) const {
    if (g.modulus() != q_) throw std::domain_error("element is not in SL_2(" + std::to_string(q_) + ")");
    if (g.is_identity()) return ClassLabel::one();
    if (g == GroupElem::central_involution(q_)) return ClassLabel::z();
    const std::uint32_t t = g.trace().value();
    if (t == 2) return in_c_orbit_[g.key()] ? ClassLabel::c() : ClassLabel::d();
    if (t == q_ - 2) return in_zc_orbit_[g.key()] ? ClassLabel::zc() : ClassLabel::zd();
    const ClassLabel label = by_trace_[t];
    if (label.kind == ClassLabel::Kind::One) {
        throw std::logic_error("trace " + std::to_string(t) + " matches no class representative");
    }
    return label;
}

ClassLabel class_of(const GroupElem& g, const Classifier& classifier) {
    return classifier.label_of(g);
}

ConjugacyPartition::ConjugacyPartition(std::uint32_t q, EnumerationBound bound)
    : q_(q), elements_(enumerate_group(q, bound)) {
    const std::uint64_t keyspace = std::uint64_t{q} * q * q * q;
    slot_.assign(keyspace, -1);

    // Orbits under conjugation, grown breadth-first from each unassigned
    // element using the generators (1 1; 0 1) and (1 0; 1 1) and their inverses.
    const GroupElem u = GroupElem::from_ints(1, 1, 0, 1, q);
    const GroupElem l = GroupElem::from_ints(1, 0, 1, 1, q);
    const GroupElem gens[] = {u, u.inverse(), l, l.inverse()};
    std::vector<std::vector<GroupElem>> orbits;
    for (const auto& x : elements_) {
        if (slot_[x.key()] != -1) continue;
        const auto id = static_cast<std::int16_t>(orbits.size());
        std::vector<GroupElem> orbit{x};
        slot_[x.key()] = id;
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            for (const auto& s : gens) {
                const GroupElem y = s * orbit[i] * s.inverse();
                if (slot_[y.key()] == -1) {
                    slot_[y.key()] = id;
                    orbit.push_back(y);
                }
            }
        }
        orbits.push_back(std::move(orbit));
    }

    // Name each orbit by the standard representative it contains.
    label_index_.assign(orbits.size(), ClassLabel::one());
    std::vector<bool> named(orbits.size(), false);
    for (const auto& cls : representatives(q)) {
        const auto id = static_cast<std::size_t>(slot_[cls.representative.key()]);
        if (named[id]) {
            throw std::logic_error("two representatives fall in one conjugacy class");
        }
        named[id] = true;
        label_index_[id] = cls.label;
    }
    for (std::size_t id = 0; id < orbits.size(); ++id) {
        if (!named[id]) throw std::logic_error("conjugacy class without a representative");
        auto& dst = classes_[label_index_[id]];
        dst = std::move(orbits[id]);
        std::sort(dst.begin(), dst.end());
    }
}

ClassLabel ConjugacyPartition::label_of(const GroupElem& g) const {
    if (g.modulus() != q_) throw std::domain_error("element is not in SL_2(" + std::to_string(q_) + ")");
    const std::int16_t id = slot_[g.key()];
    if (id < 0) throw std::invalid_argument("matrix is not in the group");
    return label_index_[static_cast<std::size_t>(id)];
}

std::map<ClassLabel, std::vector<GroupElem>> conjugacy_partition(std::uint32_t q,
                                                                 EnumerationBound bound) {
    return ConjugacyPartition(q, bound).classes();
}

}  // namespace sl2rep
