#pragma once

// Complex irreducible characters of SL_2(q) as exact cyclotomic values.

#include "sl2rep/cyclo.hpp"
#include "sl2rep/group.hpp"
#include "sl2rep/symbolic.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sl2rep {

struct CharLabel {
    enum class Kind : std::uint8_t { Triv, Psi, Chi, Theta, Xi1, Xi2, Eta1, Eta2 };
    Kind kind = Kind::Triv;
    int index = 0;  // i for Chi(i), j for Theta(j)

    static CharLabel triv() { return {Kind::Triv, 0}; }
    static CharLabel psi() { return {Kind::Psi, 0}; }
    static CharLabel chi(int i) { return {Kind::Chi, i}; }
    static CharLabel theta(int j) { return {Kind::Theta, j}; }
    static CharLabel xi1() { return {Kind::Xi1, 0}; }
    static CharLabel xi2() { return {Kind::Xi2, 0}; }
    static CharLabel eta1() { return {Kind::Eta1, 0}; }
    static CharLabel eta2() { return {Kind::Eta2, 0}; }

    friend bool operator==(const CharLabel&, const CharLabel&) = default;
    friend auto operator<=>(const CharLabel&, const CharLabel&) = default;
};

/// "Triv", "Psi", "Chi(i)", "Theta(j)", "Xi1", "Xi2", "Eta1", "Eta2".
std::string to_string(const CharLabel& label);
CharLabel parse_char_label(const std::string& text);
std::ostream& operator<<(std::ostream& os, const CharLabel& label);

/// Rows in table order: Triv, Psi, Chi(1..), Theta(1..), Xi1, Xi2, Eta1, Eta2.
std::vector<CharLabel> char_labels(std::uint32_t q);

struct CharCell {
    CycNum value;
    Symbolic form;

    friend bool operator==(const CharCell& x, const CharCell& y) {
        return x.value == y.value && x.form == y.form;
    }
};

class CharTable {
public:
    CharTable(std::uint32_t q, std::vector<ConjClass> classes, std::vector<CharLabel> characters,
              std::vector<std::vector<CharCell>> cells);

    std::uint32_t q() const noexcept { return q_; }
    /// (-1)^((q-1)/2).
    int epsilon() const noexcept { return (q_ % 4 == 1) ? 1 : -1; }
    std::uint64_t group_order() const noexcept;

    const std::vector<ConjClass>& classes() const noexcept { return classes_; }
    const std::vector<CharLabel>& characters() const noexcept { return characters_; }
    const std::vector<std::vector<CharCell>>& cells() const noexcept { return cells_; }

    std::size_t row_of(const CharLabel& label) const;
    std::size_t column_of(const ClassLabel& label) const;

    const CharCell& cell(const CharLabel& chr, const ClassLabel& cls) const;
    const CycNum& value(const CharLabel& chr, const ClassLabel& cls) const {
        return cell(chr, cls).value;
    }
    /// Value at the identity, as an integer.
    std::int64_t degree(const CharLabel& chr) const;

    /// lcm(q, q-1, q+1): a field containing every entry. Informational.
    std::uint64_t working_conductor() const noexcept;

    friend bool operator==(const CharTable&, const CharTable&) = default;

private:
    std::uint32_t q_;
    std::vector<ConjClass> classes_;
    std::vector<CharLabel> characters_;
    std::vector<std::vector<CharCell>> cells_;
};

/// The full (q+4) x (q+4) table. xi1 is the row taking (1 + g)/2 at c, where
/// g is the Gauss sum; eta1 the row taking (-1 + g)/2 at c.
CharTable complex_table(std::uint32_t q);

/// chi(g) via the class of g. Throws std::domain_error on a modulus mismatch.
CycNum value_at(const CharTable& table, const CharLabel& chr, const GroupElem& g,
                const ClassLookup& lookup);

/// sum over classes of |C| chi(C) conj(chi'(C)).
CycNum inner_product(const CharTable& table, std::size_t row1, std::size_t row2);
/// sum over characters of chi(C1) conj(chi(C2)).
CycNum column_product(const CharTable& table, std::size_t col1, std::size_t col2);

/// perm[r] is the row equal to the complex conjugate of row r.
std::vector<std::size_t> conjugation_permutation(const CharTable& table);
/// Number of self-conjugate rows, the trace of the permutation matrix.
std::size_t conjugation_trace(const CharTable& table);

}  // namespace sl2rep
