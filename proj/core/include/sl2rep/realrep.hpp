#pragma once

// Real structure of SL_2(q): squares and inverses of classes, real classes,
// Frobenius-Schur indicators and the real irreducible characters.

#include "sl2rep/chars.hpp"
#include "sl2rep/errors.hpp"
#include "sl2rep/group.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sl2rep {

struct RealCharLabel {
    enum class Kind : std::uint8_t {
        RTriv,
        RPsi,
        RChiEven,
        RTwoChiOdd,
        RThetaEven,
        RTwoThetaOdd,
        RXi1,
        RXi2,
        RTwoEta1,
        RTwoEta2,
        RTwoReXi1,
        RTwoReEta1,
    };
    Kind kind = Kind::RTriv;
    int index = 0;

    friend bool operator==(const RealCharLabel&, const RealCharLabel&) = default;
    friend auto operator<=>(const RealCharLabel&, const RealCharLabel&) = default;
};

/// "Triv", "Psi", "Chi(2)", "2Chi(1)", "Theta(2)", "2Theta(1)", "Xi1", "Xi2",
/// "2Eta1", "2Eta2", "2ReXi1", "2ReEta1".
std::string to_string(const RealCharLabel& label);
RealCharLabel parse_real_char_label(const std::string& text);
std::ostream& operator<<(std::ostream& os, const RealCharLabel& label);

/// Real rows for q in table order: Triv, Psi, Chi(even), 2Chi(odd),
/// Theta(even), 2Theta(odd), then Xi1, Xi2, 2Eta1, 2Eta2 (q = 1 mod 4) or
/// 2ReXi1, 2ReEta1 (q = 3 mod 4).
std::vector<RealCharLabel> real_char_labels(std::uint32_t q);

/// Complex constituents with multiplicities, e.g. 2ReXi1 = Xi1 + Xi2.
std::vector<std::pair<CharLabel, int>> constituents(const RealCharLabel& label);

using ClassMap = std::map<ClassLabel, ClassLabel>;

/// L -> class of rep(L)^2, from the closed rules.
ClassMap square_class_map(std::uint32_t q);
/// L -> class of rep(L)^-1, from the closed rules.
ClassMap inverse_class_map(std::uint32_t q);

struct RealClassPartition {
    std::vector<std::vector<ClassLabel>> blocks;

    friend bool operator==(const RealClassPartition&, const RealClassPartition&) = default;
};

/// Orbits of inverse_class_map, in standard order of their first member.
RealClassPartition real_classes(std::uint32_t q);

/// sum_L |L| chi(L^2) / |G| over classes. Throws ConsistencyError unless the
/// result is -1, 0 or 1.
int fs_indicator_brute(const CharTable& table, const CharLabel& chr);

/// The closed formula in chi(1), chi(z), chi(c) + chi(d), chi(a^2l), chi(b^2m).
int fs_indicator_closed(const CharTable& table, const CharLabel& chr);

/// Label of g^2 for every g of the group, tallied once and reused.
class SquareCensus {
public:
    explicit SquareCensus(const ConjugacyPartition& partition);
    const std::map<ClassLabel, std::uint64_t>& counts() const noexcept { return counts_; }

private:
    std::map<ClassLabel, std::uint64_t> counts_;
};

/// (1/|G|) sum over every g in G of chi(g^2).
int fs_indicator_raw(const CharTable& table, const CharLabel& chr, const SquareCensus& census);

struct FsEntry {
    CharLabel chr;
    int closed = 0;
    std::optional<int> brute;  // class-grouped sum
    std::optional<int> raw;    // whole-group sum; needs enumeration
    bool match = true;

    friend bool operator==(const FsEntry&, const FsEntry&) = default;
};

/// One entry per complex character; the raw column is filled when a census
/// is supplied.
std::vector<FsEntry> fs_listing(const CharTable& table, const SquareCensus* census = nullptr);

class RealCharTable {
public:
    RealCharTable(std::uint32_t q, std::vector<ConjClass> classes,
                  std::vector<RealCharLabel> characters, std::vector<std::vector<CharCell>> cells);

    std::uint32_t q() const noexcept { return q_; }
    const std::vector<ConjClass>& classes() const noexcept { return classes_; }
    const std::vector<RealCharLabel>& characters() const noexcept { return characters_; }
    const std::vector<std::vector<CharCell>>& cells() const noexcept { return cells_; }

    std::size_t row_of(const RealCharLabel& label) const;
    const CharCell& cell(const RealCharLabel& chr, const ClassLabel& cls) const;
    const CycNum& value(const RealCharLabel& chr, const ClassLabel& cls) const {
        return cell(chr, cls).value;
    }
    std::int64_t degree(const RealCharLabel& chr) const;

    friend bool operator==(const RealCharTable&, const RealCharTable&) = default;

private:
    std::uint32_t q_;
    std::vector<ConjClass> classes_;
    std::vector<RealCharLabel> characters_;
    std::vector<std::vector<CharCell>> cells_;
};

/// Rows assembled by the indicator: iota = 1 copies, iota = -1 doubles,
/// iota = 0 adds the conjugate partner. Throws ConsistencyError when an
/// indicator disagrees with the row's expected type.
RealCharTable real_table(const CharTable& table);
RealCharTable real_table(std::uint32_t q);

}  // namespace sl2rep
