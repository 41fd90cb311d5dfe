#pragma once

// Dimensions of fixed subspaces dim V^H for the real irreducible characters V
// and the cyclic subgroups H of SL_2(q).

#include "sl2rep/group.hpp"
#include "sl2rep/realrep.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sl2rep {

enum class SubgroupKind : std::uint8_t { Trivial, Z, C, ZC, A, B };

/// Parity split of <a^l> and <b^m>: the quotient (q-+1)/gcd is odd, or it is
/// even and the index l (m) is even or odd.
enum class QuotientCase : std::uint8_t { None, Odd, EvenIndexEven, EvenIndexOdd };

struct SubgroupKey {
    SubgroupKind kind = SubgroupKind::Trivial;
    int index = 0;  // l or m for A, B; 0 otherwise

    friend bool operator==(const SubgroupKey&, const SubgroupKey&) = default;
    friend auto operator<=>(const SubgroupKey&, const SubgroupKey&) = default;
};

/// "Trivial", "Z", "C", "ZC", "A(l)", "B(m)".
std::string to_string(const SubgroupKey& key);
SubgroupKey parse_subgroup_key(const std::string& text);
std::string to_string(QuotientCase qc);

struct SubgroupDesc {
    SubgroupKey key;
    std::uint64_t order = 0;
    GroupElem generator;
    std::vector<GroupElem> elements;  // generator^0 .. generator^(order-1)
    QuotientCase quotient = QuotientCase::None;
};

/// The subgroup generated by the standard representative 1, z, c, zc, a^l or
/// b^m. <c> stands for <d> too and <zc> for <zd>. Throws std::out_of_range
/// for an index outside 1..(q-3)/2 (A) or 1..(q-1)/2 (B).
SubgroupDesc subgroup(std::uint32_t q, SubgroupKind kind, int index = 0);

/// Columns in report order: Trivial, Z, C, ZC, A(1..), B(1..).
std::vector<SubgroupKey> subgroup_keys(std::uint32_t q);

QuotientCase quotient_case(std::uint32_t q, const SubgroupKey& key);

/// Kind and reduced index of <g> for an arbitrary element: by order for the
/// first four kinds, and through the class of g (A(l) -> A(gcd(l, q-1)),
/// B(m) -> B(gcd(m, q+1))) otherwise.
SubgroupKey classify_cyclic(const GroupElem& g, const ClassLookup& lookup);

/// Elements of <g>.
std::vector<GroupElem> cyclic_closure(const GroupElem& g);

/// (1/|H|) sum over h in H of chi(h), exactly. Throws ConsistencyError if the
/// average is not a nonnegative integer.
std::int64_t fixed_dim_average(const RealCharTable& rt, const RealCharLabel& chr,
                               const std::vector<GroupElem>& elements, const ClassLookup& lookup);
std::int64_t fixed_dim_average(const RealCharTable& rt, const RealCharLabel& chr,
                               const SubgroupDesc& H, const ClassLookup& lookup);

/// Closed form, valid for every q. Throws std::invalid_argument for a row that
/// does not exist at this q or an out-of-range index.
std::int64_t fixed_dim_closed(std::uint32_t q, const RealCharLabel& chr, const SubgroupKey& key);

/// Closed form in terms of gcd and parities only. Differs from
/// fixed_dim_closed for Chi rows on <a^l> and Theta rows on <b^m> when the
/// subgroup order divides the character index.
std::int64_t fixed_dim_summary_formula(std::uint32_t q, const RealCharLabel& chr,
                                       const SubgroupKey& key);

struct FixedDimEntry {
    std::int64_t closed = 0;
    std::optional<std::int64_t> oracle;
    std::int64_t summary = 0;
    bool match = true;
    std::string note;

    friend bool operator==(const FixedDimEntry&, const FixedDimEntry&) = default;
};

struct SubgroupColumn {
    SubgroupKey key;
    std::uint64_t order = 0;
    QuotientCase quotient = QuotientCase::None;

    friend bool operator==(const SubgroupColumn&, const SubgroupColumn&) = default;
};

struct FixedDimTable {
    std::uint32_t q = 0;
    std::vector<RealCharLabel> rows;
    std::vector<SubgroupColumn> columns;
    std::vector<std::vector<FixedDimEntry>> entries;  // [row][column]

    const FixedDimEntry& at(const RealCharLabel& chr, const SubgroupKey& key) const;

    friend bool operator==(const FixedDimTable&, const FixedDimTable&) = default;
};

/// Every real character against every subgroup column. Oracle values are
/// attached when q is within the bound.
FixedDimTable full_report(std::uint32_t q, EnumerationBound bound = {});

}  // namespace sl2rep
