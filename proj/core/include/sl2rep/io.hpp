#pragma once

// JSON serialization and text/CSV/LaTeX rendering of every table type.

#include "sl2rep/chars.hpp"
#include "sl2rep/fixdim.hpp"
#include "sl2rep/group.hpp"
#include "sl2rep/realrep.hpp"
#include "sl2rep/verify.hpp"

#include <string>
#include <vector>

namespace sl2rep {

enum class OutputFormat { Text, Json, Csv, Latex };

/// "text", "json", "csv", "latex"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

struct ClassListing {
    std::uint32_t q = 0;
    std::vector<ConjClass> classes;

    friend bool operator==(const ClassListing&, const ClassListing&) = default;
};

struct FsListing {
    std::uint32_t q = 0;
    std::vector<FsEntry> entries;

    friend bool operator==(const FsListing&, const FsListing&) = default;
};

// JSON. Every from_json inverts the matching to_json exactly and throws
// std::invalid_argument on malformed input.
std::string to_json(const CycNum& x);
std::string to_json(const ClassListing& x);
std::string to_json(const CharTable& x);
std::string to_json(const RealCharTable& x);
std::string to_json(const FsListing& x);
std::string to_json(const FixedDimTable& x);
std::string to_json(const VerificationReport& x);

CycNum cycnum_from_json(const std::string& text);
ClassListing class_listing_from_json(const std::string& text);
CharTable char_table_from_json(const std::string& text);
RealCharTable real_table_from_json(const std::string& text);
FsListing fs_listing_from_json(const std::string& text);
FixedDimTable fixed_dim_table_from_json(const std::string& text);
VerificationReport report_from_json(const std::string& text);

/// "(a b; c d)".
std::string format_matrix(const GroupElem& g);
/// Symbolic form, followed by " [~x]" for irrational values.
std::string format_cell(const CharCell& cell);
/// LaTeX math for a symbolic value, without surrounding $.
std::string latex_form(const Symbolic& form);

std::string render(const ClassListing& x, OutputFormat fmt);
std::string render(const CharTable& x, OutputFormat fmt);
std::string render(const RealCharTable& x, OutputFormat fmt);
std::string render(const FsListing& x, OutputFormat fmt);
std::string render(const FixedDimTable& x, OutputFormat fmt);
std::string render(const VerificationReport& x, OutputFormat fmt);

}  // namespace sl2rep
