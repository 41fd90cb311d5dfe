#pragma once

// SL_2(q) as concrete 2x2 matrices over F_q: arithmetic, enumeration,
// conjugacy classes and the standard class representatives
//   1, z, c, d, zc, zd, a^l (1 <= l <= (q-3)/2), b^m (1 <= m <= (q-1)/2)
// with c = (1 0; 1 1), d = (1 0; nu 1), a = diag(nu, nu^-1) for the primitive
// root nu, and b the first element of order q+1 in lexicographic order.

#include "sl2rep/fq.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace sl2rep {

/// Largest q for which the full group may be materialised.
struct EnumerationBound {
    std::uint32_t max_q = 50;
};

class GroupElem {
public:
    /// Throws std::invalid_argument unless ad - bc == 1.
    GroupElem(FqElem a, FqElem b, FqElem c, FqElem d);
    static GroupElem from_ints(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                               std::uint32_t q);
    static GroupElem identity(std::uint32_t q);
    /// z = -1.
    static GroupElem central_involution(std::uint32_t q);

    std::uint32_t modulus() const noexcept { return q_; }
    FqElem a() const noexcept { return {FqElem::Trusted{}, e_[0], q_}; }
    FqElem b() const noexcept { return {FqElem::Trusted{}, e_[1], q_}; }
    FqElem c() const noexcept { return {FqElem::Trusted{}, e_[2], q_}; }
    FqElem d() const noexcept { return {FqElem::Trusted{}, e_[3], q_}; }
    FqElem trace() const noexcept;

    GroupElem operator*(const GroupElem& rhs) const;
    GroupElem inverse() const noexcept;
    GroupElem pow(std::uint64_t n) const;
    bool is_identity() const noexcept;

    /// Dense index in [0, q^4), row-major over the entries.
    std::uint64_t key() const noexcept;

    friend bool operator==(const GroupElem&, const GroupElem&) = default;
    friend auto operator<=>(const GroupElem&, const GroupElem&) = default;

private:
    GroupElem(std::uint32_t q, std::uint32_t a, std::uint32_t b, std::uint32_t c,
              std::uint32_t d) noexcept
        : q_(q), e_{a, b, c, d} {}

    std::uint32_t q_;
    std::uint32_t e_[4];

    friend std::vector<GroupElem> enumerate_group(std::uint32_t, EnumerationBound);
    friend GroupElem find_b(std::uint32_t);
};

std::ostream& operator<<(std::ostream& os, const GroupElem& g);

inline GroupElem multiply(const GroupElem& g, const GroupElem& h) { return g * h; }
inline GroupElem invert(const GroupElem& g) { return g.inverse(); }

/// Least n >= 1 with g^n = 1.
std::uint64_t element_order(const GroupElem& g);

struct ClassLabel {
    enum class Kind : std::uint8_t { One, Z, C, D, ZC, ZD, A, B };
    Kind kind = Kind::One;
    int index = 0;  // l for A(l), m for B(m); 0 otherwise

    static ClassLabel one() { return {Kind::One, 0}; }
    static ClassLabel z() { return {Kind::Z, 0}; }
    static ClassLabel c() { return {Kind::C, 0}; }
    static ClassLabel d() { return {Kind::D, 0}; }
    static ClassLabel zc() { return {Kind::ZC, 0}; }
    static ClassLabel zd() { return {Kind::ZD, 0}; }
    static ClassLabel a(int l) { return {Kind::A, l}; }
    static ClassLabel b(int m) { return {Kind::B, m}; }

    friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
    friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
};

/// "One", "Z", "C", "D", "ZC", "ZD", "A(l)", "B(m)".
std::string to_string(const ClassLabel& label);
/// Inverse of to_string; throws std::invalid_argument on malformed input.
ClassLabel parse_class_label(const std::string& text);
std::ostream& operator<<(std::ostream& os, const ClassLabel& label);

/// All q+4 labels in standard order: One, Z, C, D, ZC, ZD, A(1..), B(1..).
std::vector<ClassLabel> class_labels(std::uint32_t q);

/// Position of a label in the standard order. Throws std::out_of_range for
/// an index outside the family's range.
std::size_t class_index(std::uint32_t q, const ClassLabel& label);

/// Number of A labels, (q-3)/2.
int a_range(std::uint32_t q);
/// Number of B labels, (q-1)/2.
int b_range(std::uint32_t q);

struct ConjClass {
    ClassLabel label;
    GroupElem representative;
    std::uint64_t size = 0;
    std::uint64_t element_order = 0;

    friend bool operator==(const ConjClass&, const ConjClass&) = default;
};

/// Every determinant-one matrix, lexicographic order, q^3 - q entries.
/// Throws std::length_error when q exceeds the bound.
std::vector<GroupElem> enumerate_group(std::uint32_t q, EnumerationBound bound = {});

/// First element of order q+1 in a lexicographic scan of (a, b, c, d).
GroupElem find_b(std::uint32_t q);

/// Representative of a class label.
GroupElem representative(std::uint32_t q, const ClassLabel& label);

/// The q+4 classes with representatives, closed-form sizes and computed
/// element orders. No enumeration bound applies.
std::vector<ConjClass> representatives(std::uint32_t q);

/// Closed-form class size.
std::uint64_t class_size(std::uint32_t q, const ClassLabel& label);

/// Anything that can name the conjugacy class of a group element.
class ClassLookup {
public:
    virtual ~ClassLookup() = default;
    virtual std::uint32_t modulus() const = 0;
    virtual ClassLabel label_of(const GroupElem& g) const = 0;
};

/// class_of decision procedure. Central elements are compared directly,
/// traces other than +-2 identify A/B labels, and trace +-2 elements are
/// split between C/D (ZC/ZD) by membership in the brute-force conjugation
/// orbit of c (zc).
class Classifier final : public ClassLookup {
public:
    explicit Classifier(std::uint32_t q, EnumerationBound bound = {});

    std::uint32_t modulus() const override { return q_; }
    ClassLabel label_of(const GroupElem& g) const override;

private:
    std::uint32_t q_;
    std::vector<ClassLabel> by_trace_;  // indexed by trace value; One marks "unused"
    std::vector<bool> in_c_orbit_;
    std::vector<bool> in_zc_orbit_;
};

ClassLabel class_of(const GroupElem& g, const Classifier& classifier);

/// Orbit partition of the whole group under conjugation, computed by direct
/// orbit expansion and labelled by which standard representative each orbit
/// contains. Independent of Classifier.
class ConjugacyPartition final : public ClassLookup {
public:
    explicit ConjugacyPartition(std::uint32_t q, EnumerationBound bound = {});

    std::uint32_t modulus() const override { return q_; }
    ClassLabel label_of(const GroupElem& g) const override;

    const std::vector<GroupElem>& elements() const noexcept { return elements_; }
    const std::map<ClassLabel, std::vector<GroupElem>>& classes() const noexcept {
        return classes_;
    }

private:
    std::uint32_t q_;
    std::vector<GroupElem> elements_;
    std::map<ClassLabel, std::vector<GroupElem>> classes_;
    std::vector<ClassLabel> label_index_;
    std::vector<std::int16_t> slot_;  // key -> index into label_index_, -1 when absent
};

std::map<ClassLabel, std::vector<GroupElem>> conjugacy_partition(std::uint32_t q,
                                                                 EnumerationBound bound = {});

}  // namespace sl2rep
